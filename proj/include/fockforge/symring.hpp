#pragma once
// The operator algebra on symmetric functions: multiplication operators,
// their Hall adjoints (skew operators), power-sum operators via ribbon
// moves, and conversions between the Schur and power-sum bases.
//
// Index conventions at the boundary: h_0 = e_0 = 1 (identity operator),
// h_n = e_n = 0 for n < 0; p_n is defined for n >= 1 only.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linop.hpp"
#include "lr.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "ribbon.hpp"
#include "symfunc.hpp"

namespace fockforge {

namespace detail {

inline SymFunc from_expansion(const SchurExpansion& e) {
    SymFunc out;
    for (const auto& [lam, c] : e) out.add_term(lam, Rational(static_cast<long>(c)));
    return out;
}

}  // namespace detail

// Multiplication by s_nu: s_lam -> sum_mu N^mu_{nu,lam} s_mu.
inline LinOp mul_schur(const Partition& nu) {
    if (nu.empty()) return LinOp::identity();
    return LinOp(
        [nu](const Partition& lam) { return detail::from_expansion(schur_product(nu, lam)); },
        nu.size());
}

// Hall adjoint of mul_schur(nu): s_lam -> sum_mu N^lam_{nu,mu} s_mu.
inline LinOp skew_schur(const Partition& nu) {
    if (nu.empty()) return LinOp::identity();
    return LinOp([nu](const Partition& lam) { return detail::from_expansion(schur_skew(nu, lam)); },
                 -nu.size());
}

inline LinOp mul_h(int n) {
    if (n < 0) return LinOp::zero();
    if (n == 0) return LinOp::identity();
    return LinOp(
        [n](const Partition& lam) {
            SymFunc out;
            for (const Partition& mu : pieri_h(lam, n)) out.add_term(mu, 1);
            return out;
        },
        n);
}

inline LinOp mul_e(int n) {
    if (n < 0) return LinOp::zero();
    if (n == 0) return LinOp::identity();
    return LinOp(
        [n](const Partition& lam) {
            SymFunc out;
            for (const Partition& mu : pieri_e(lam, n)) out.add_term(mu, 1);
            return out;
        },
        n);
}

inline LinOp skew_h(int n) {
    if (n < 0) return LinOp::zero();
    if (n == 0) return LinOp::identity();
    return LinOp(
        [n](const Partition& lam) {
            SymFunc out;
            for (const Partition& mu : strip_h(lam, n)) out.add_term(mu, 1);
            return out;
        },
        -n);
}

inline LinOp skew_e(int n) {
    if (n < 0) return LinOp::zero();
    if (n == 0) return LinOp::identity();
    return LinOp(
        [n](const Partition& lam) {
            SymFunc out;
            for (const Partition& mu : strip_e(lam, n)) out.add_term(mu, 1);
            return out;
        },
        -n);
}

// Multiplication by the power sum p_n (Murnaghan-Nakayama):
// s_lam -> sum over ribbon additions of (-1)^height s_mu.
inline LinOp mul_p(int n) {
    if (n < 1) throw std::invalid_argument("power sum index must be positive");
    return LinOp(
        [n](const Partition& lam) {
            SymFunc out;
            for (const auto& [mu, h] : add_ribbons(lam, n)) out.add_term(mu, h % 2 ? -1 : 1);
            return out;
        },
        n);
}

// Hall adjoint of mul_p(n), via ribbon removals.
inline LinOp skew_p(int n) {
    if (n < 1) throw std::invalid_argument("power sum index must be positive");
    return LinOp(
        [n](const Partition& lam) {
            SymFunc out;
            for (const auto& [mu, h] : remove_ribbons(lam, n)) out.add_term(mu, h % 2 ? -1 : 1);
            return out;
        },
        -n);
}

// ---------------------------------------------------------------------------
// Power-sum basis. A p-monomial p_{rho_1} p_{rho_2} ... is keyed by the
// partition rho of its indices.

using PowerExpansion = std::map<Partition, Rational>;

namespace detail {

inline std::mutex character_mutex;
inline std::map<std::pair<Partition, Partition>, std::int64_t> character_cache;

}  // namespace detail

// Symmetric group character chi^lam_rho via the Murnaghan-Nakayama recursion.
inline std::int64_t character_value(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size()) return 0;
    if (lam.empty()) return 1;
    return detail::memoized(detail::character_cache, detail::character_mutex, {lam, rho}, [&] {
        int first = rho.part(1);
        std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
        Partition tail(std::move(rest));
        std::int64_t acc = 0;
        for (const auto& [mu, h] : remove_ribbons(lam, first))
            acc += (h % 2 ? -1 : 1) * character_value(mu, tail);
        return acc;
    });
}

// z_rho = prod_i i^{m_i} m_i! for rho with m_i parts equal to i.
inline Rational z_factor(const Partition& rho) {
    Rational z(1);
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    for (auto [i, m] : mult)
        for (int j = 1; j <= m; ++j) z *= Rational(i) * Rational(j);
    return z;
}

// Exact expansion in power-sum monomials: s_lam = sum_rho (chi^lam_rho / z_rho) p_rho.
inline PowerExpansion to_p_basis(const SymFunc& f) {
    PowerExpansion out;
    for (const auto& [lam, c] : f.terms()) {
        for (const Partition& rho : partitions_of(lam.size())) {
            std::int64_t chi = character_value(lam, rho);
            if (chi == 0) continue;
            Rational v = c * Rational(static_cast<long>(chi)) / z_factor(rho);
            auto [it, inserted] = out.emplace(rho, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

inline SymFunc from_p_basis(const PowerExpansion& e) {
    SymFunc out;
    for (const auto& [rho, c] : e) {
        SymFunc cur = SymFunc::one();
        for (int part : rho.parts()) cur = mul_p(part).apply(cur);
        cur *= c;
        out += cur;
    }
    return out;
}

namespace detail {

// product of truncated z-series with PowerExpansion coefficients
inline std::vector<PowerExpansion> series_mul(const std::vector<PowerExpansion>& a,
                                              const std::vector<PowerExpansion>& b, int order) {
    std::vector<PowerExpansion> out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            for (const auto& [ra, ca] : a[static_cast<std::size_t>(i)])
                for (const auto& [rb, cb] : b[static_cast<std::size_t>(j)]) {
                    std::vector<int> parts = ra.parts();
                    parts.insert(parts.end(), rb.parts().begin(), rb.parts().end());
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    Partition key(std::move(parts));
                    auto& slot = out[static_cast<std::size_t>(i + j)];
                    auto [it, inserted] = slot.emplace(key, ca * cb);
                    if (!inserted) {
                        it->second += ca * cb;
                        if (it->second == 0) slot.erase(it);
                    }
                }
    return out;
}

// degree-n coefficient of exp(sum_k weight(k) p_k z^k), expanded as a series
inline SymFunc exp_series_coefficient(int n, const std::function<Rational(int)>& weight) {
    // S = sum_{k=1..n} weight(k) p_k z^k
    std::vector<PowerExpansion> s(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) s[static_cast<std::size_t>(k)].emplace(Partition({k}), weight(k));
    std::vector<PowerExpansion> acc(static_cast<std::size_t>(n) + 1);
    acc[0].emplace(Partition(), Rational(1));  // running term S^j / j!
    std::vector<PowerExpansion> total = acc;
    for (int j = 1; j <= n; ++j) {
        acc = series_mul(acc, s, n);
        for (auto& level : acc)
            for (auto& [rho, c] : level) c /= j;
        for (int d = 0; d <= n; ++d)
            for (const auto& [rho, c] : acc[static_cast<std::size_t>(d)]) {
                auto& slot = total[static_cast<std::size_t>(d)];
                auto [it, inserted] = slot.emplace(rho, c);
                if (!inserted) it->second += c;
            }
    }
    return from_p_basis(total[static_cast<std::size_t>(n)]);
}

}  // namespace detail

// h_n rebuilt from its generating function H(z) = exp(sum p_k z^k / k).
inline SymFunc gf_h(int n) {
    if (n < 0) throw std::invalid_argument("generating function order must be nonnegative");
    if (n == 0) return SymFunc::one();
    return detail::exp_series_coefficient(n, [](int k) { return rat(1, k); });
}

// e_n from E(z) = exp(sum (-1)^{k-1} p_k z^k / k).
inline SymFunc gf_e(int n) {
    if (n < 0) throw std::invalid_argument("generating function order must be nonnegative");
    if (n == 0) return SymFunc::one();
    return detail::exp_series_coefficient(n, [](int k) { return rat(k % 2 ? 1 : -1, k); });
}

}  // namespace fockforge
