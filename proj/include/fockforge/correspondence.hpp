#pragma once
// The boson-fermion dictionary. Each charge sector of the Fock space is
// identified with the ring of symmetric functions via (m, lam) <-> s_lam;
// under this identification the fermionic power sums become the ribbon
// operators mul_p / skew_p with matching signs.
//
// The vertex operator coefficients act on symmetric functions:
//   X_a  = sum_{p-q=a} (-1)^q h_p e*_q,   X*_a = sum_{p-q=a} (-1)^p e_p h*_q,
// with the sum over q ending at the degree of the argument. Clifford
// generators rebuilt from them use the charge shift:
//   psi(i)      on the charge-m sector is  shift   o X_{i-m},
//   psi_star(i) on the charge-m sector is  unshift o X*_{(m-1)-i}.
// The star index is reflected so that psi(i) psi_star(j) + psi_star(j) psi(i)
// comes out as delta_{ij}; see the conventions appendix in the README.
//
// These generators annihilate the charge-0 vacuum for i < 0 — the mirror
// of the direct Maya convention. The two families agree under the index
// reflection i <-> -1-i, with no sign correction.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fock.hpp"
#include "linop.hpp"
#include "partition.hpp"
#include "symfunc.hpp"
#include "symring.hpp"

namespace fockforge {

// Tags a symmetric function as living in one charge sector of the Fock space.
struct ChargeSector {
    int m = 0;
};

// Basis map (m, lam) -> s_lam on a single charge sector.
inline SymFunc to_boson(const FockVector& v, int charge) {
    SymFunc out;
    std::vector<int> offending;
    for (const auto& [b, c] : v.terms()) {
        if (b.charge != charge) {
            offending.push_back(b.charge);
            continue;
        }
        out.add_term(b.shape, c);
    }
    if (!offending.empty()) {
        std::string msg = "vector is not supported on charge " + std::to_string(charge) +
                          "; found charges:";
        for (int m : offending) msg += " " + std::to_string(m);
        throw std::invalid_argument(msg);
    }
    return out;
}

inline FockVector from_boson(const SymFunc& f, int charge) {
    FockVector out;
    for (const auto& [lam, c] : f.terms()) out.add_term({charge, lam}, c);
    return out;
}

inline SymFunc to_boson(const FockVector& v, ChargeSector s) { return to_boson(v, s.m); }
inline FockVector from_boson(const SymFunc& f, ChargeSector s) { return from_boson(f, s.m); }

// Coefficient X_a of the vertex operator X(z) = H(z) E*(-z).
inline LinOp vertex_X(int a) {
    return LinOp(
        [a](const Partition& lam) {
            SymFunc out;
            for (int q = std::max(0, -a); q <= lam.size(); ++q) {
                SymFunc term = mul_h(a + q).apply(skew_e(q).apply(SymFunc::schur(lam)));
                if (q % 2) term *= Rational(-1);
                out += term;
            }
            return out;
        },
        a);
}

// Coefficient X*_a of X*(z) = E(-z) H*(z).
inline LinOp vertex_Xstar(int a) {
    return LinOp(
        [a](const Partition& lam) {
            SymFunc out;
            for (int q = std::max(0, -a); q <= lam.size(); ++q) {
                SymFunc term = mul_e(a + q).apply(skew_h(q).apply(SymFunc::schur(lam)));
                if ((a + q) % 2) term *= Rational(-1);
                out += term;
            }
            return out;
        },
        a);
}

namespace detail {

template <typename VertexFn>
FockVector clifford_from_vertex(const FockVector& v, VertexFn&& op_for_charge, int charge_step) {
    // split into charge components, act, and reassemble
    std::map<int, SymFunc> components;
    for (const auto& [b, c] : v.terms()) components[b.charge].add_term(b.shape, c);
    FockVector out;
    for (const auto& [m, f] : components)
        out += from_boson(op_for_charge(m).apply(f), m + charge_step);
    return out;
}

}  // namespace detail

// Clifford generator rebuilt from the vertex operators via the charge shift.
inline FockVector clifford_psi(int i, const FockVector& v) {
    return detail::clifford_from_vertex(v, [i](int m) { return vertex_X(i - m); }, +1);
}

inline FockVector clifford_psi_star(int i, const FockVector& v) {
    return detail::clifford_from_vertex(v, [i](int m) { return vertex_Xstar(m - 1 - i); }, -1);
}

// ---------------------------------------------------------------------------
// Anticommutation relations of the vertex coefficients, as exact operator
// identities on a degree window.

struct RelationCheck {
    std::string relation;  // "v1", "v2" or "v3"
    int a = 0;
    int b = 0;
    bool pass = false;
    std::optional<std::tuple<Partition, SymFunc, SymFunc>> mismatch;  // lam, lhs, rhs
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = true;
    long long checked = 0;
};

// v1: X_a X_b + X_{b-1} X_{a+1} = 0
// v2: X*_a X*_b + X*_{b-1} X*_{a+1} = 0
// v3: X_a X*_b + X*_{b+1} X_{a-1} = delta_{a+b,0} Id
inline RelationReport verify_vertex_relations(int window, int index_bound) {
    if (window < 0 || index_bound < 0) throw std::invalid_argument("bounds must be nonnegative");
    RelationReport report;
    for (int a = -index_bound; a <= index_bound; ++a)
        for (int b = -index_bound; b <= index_bound; ++b) {
            auto run = [&](const std::string& name, const LinOp& lhs, const LinOp& rhs) {
                RelationCheck chk{name, a, b, true, std::nullopt};
                if (auto bad = find_op_mismatch(lhs, rhs, window)) {
                    chk.pass = false;
                    chk.mismatch = std::move(bad);
                    report.all_pass = false;
                }
                report.checked += 1;
                report.checks.push_back(std::move(chk));
            };
            run("v1", vertex_X(a) * vertex_X(b) + vertex_X(b - 1) * vertex_X(a + 1),
                LinOp::zero());
            run("v2",
                vertex_Xstar(a) * vertex_Xstar(b) + vertex_Xstar(b - 1) * vertex_Xstar(a + 1),
                LinOp::zero());
            run("v3", vertex_X(a) * vertex_Xstar(b) + vertex_Xstar(b + 1) * vertex_X(a - 1),
                a + b == 0 ? LinOp::identity() : LinOp::zero());
        }
    return report;
}

}  // namespace fockforge
