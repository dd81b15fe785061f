#pragma once
// Schur polynomials in finitely many variables, expanded monomial by
// monomial over semistandard tableaux. This is oracle support for checking
// Schur-basis products against an independent computation path; it is not
// part of the ring API.

#include <cstdint>
#include <map>
#include <vector>

#include "lr.hpp"
#include "partition.hpp"

namespace fockforge::oracle {

// exponent vector in a fixed number of variables -> integer coefficient
using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, std::int64_t>;

// s_lam(x_1..x_vars) as a sum over semistandard tableaux.
inline Polynomial schur_polynomial(const Partition& lam, int vars) {
    Polynomial out;
    if (lam.empty()) {
        out.emplace(Monomial(static_cast<std::size_t>(vars), 0), 1);
        return out;
    }
    if (lam.length() > vars) return out;  // no fillings

    std::vector<std::vector<int>> tableau(static_cast<std::size_t>(lam.length()));
    for (int r = 0; r < lam.length(); ++r)
        tableau[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lam.part(r + 1)), 0);
    Monomial expo(static_cast<std::size_t>(vars), 0);

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == lam.length()) {
            auto [it, inserted] = out.emplace(expo, 1);
            if (!inserted) ++it->second;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lam.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = tableau[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1];
        if (r > 0 && c < lam.part(r))
            lo = std::max(lo, tableau[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= vars; ++v) {
            tableau[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++expo[static_cast<std::size_t>(v) - 1];
            self(self, nr, nc);
            --expo[static_cast<std::size_t>(v) - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = out.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

// Whether s_mu * s_nu, restricted to |mu|+|nu| variables, matches the
// LR-expanded right-hand side monomial by monomial.
inline bool product_matches_monomials(const Partition& mu, const Partition& nu) {
    int vars = mu.size() + nu.size();
    if (vars == 0) return true;
    Polynomial lhs = poly_mul(schur_polynomial(mu, vars), schur_polynomial(nu, vars));
    Polynomial rhs;
    for (const auto& [lam, c] : schur_product(mu, nu)) {
        for (const auto& [m, k] : schur_polynomial(lam, vars)) {
            auto [it, inserted] = rhs.emplace(m, c * k);
            if (!inserted) {
                it->second += c * k;
                if (it->second == 0) rhs.erase(it);
            }
        }
    }
    return lhs == rhs;
}

}  // namespace fockforge::oracle
