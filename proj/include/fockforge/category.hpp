#pragma once
// Grothendieck-group model of the tensor category: simple classes are
// labeled by pairs of partitions, injective hulls decompose through
// Littlewood-Richardson products of the two labels, and functor classes
// act on symmetric functions as mul/skew compositions.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linop.hpp"
#include "lr.hpp"
#include "partition.hpp"
#include "symfunc.hpp"
#include "symring.hpp"

namespace fockforge {

struct SimpleLabel {
    Partition lam;
    Partition mu;

    std::string str() const { return lam.str() + ";" + mu.str(); }

    static SimpleLabel parse(const std::string& text) {
        auto sep = text.find(';');
        if (sep == std::string::npos)
            throw std::invalid_argument("simple label must look like 'lam;mu': '" + text + "'");
        return SimpleLabel{Partition::parse(text.substr(0, sep)),
                           Partition::parse(text.substr(sep + 1))};
    }

    friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) {
        return a.lam == b.lam && a.mu == b.mu;
    }
    friend bool operator!=(const SimpleLabel& a, const SimpleLabel& b) { return !(a == b); }
    friend bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
        int asz = a.lam.size() + a.mu.size();
        int bsz = b.lam.size() + b.mu.size();
        if (asz != bsz) return asz < bsz;
        if (a.lam != b.lam) return a.lam < b.lam;
        return a.mu < b.mu;
    }
};

class KClass {
public:
    KClass() = default;

    static KClass simple(const SimpleLabel& l) {
        KClass k;
        k.terms_.emplace(l, 1);
        return k;
    }
    static KClass simple(const Partition& lam, const Partition& mu) {
        return simple(SimpleLabel{lam, mu});
    }
    static KClass zero() { return KClass(); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<SimpleLabel, std::int64_t>& terms() const { return terms_; }

    std::int64_t coeff(const SimpleLabel& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const SimpleLabel& l, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    KClass& operator+=(const KClass& o) {
        for (const auto& [l, c] : o.terms_) add_term(l, c);
        return *this;
    }
    KClass& operator-=(const KClass& o) {
        for (const auto& [l, c] : o.terms_) add_term(l, -c);
        return *this;
    }
    KClass& operator*=(std::int64_t c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [l, v] : terms_) v *= c;
        return *this;
    }

    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(std::int64_t c, KClass a) { return a *= c; }
    friend bool operator==(const KClass& a, const KClass& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [l, c] : terms_) {
            std::int64_t v = c;
            if (!first) {
                out += c < 0 ? " - " : " + ";
                v = c < 0 ? -c : c;
            } else if (c < 0) {
                out += "-";
                v = -c;
            }
            if (v != 1) out += std::to_string(v) + " ";
            out += "[" + l.str() + "]";
            first = false;
        }
        return out;
    }

private:
    std::map<SimpleLabel, std::int64_t> terms_;
};

// Layer k of the socle filtration of the injective hull V_lam x (V_mu)_*:
// multiplicities sum_{|gamma|=k} N^lam_{lam',gamma} N^mu_{mu',gamma}.
inline KClass socle_layer(const Partition& lam, const Partition& mu, int k) {
    KClass out;
    if (k < 0 || k > std::min(lam.size(), mu.size())) return out;
    for (const Partition& gamma : partitions_of(k)) {
        std::vector<std::pair<Partition, std::int64_t>> left, right;
        for (const Partition& lp : partitions_of(lam.size() - k)) {
            auto c = lr_coefficient(lam, lp, gamma);
            if (c) left.emplace_back(lp, c);
        }
        for (const Partition& mp : partitions_of(mu.size() - k)) {
            auto c = lr_coefficient(mu, mp, gamma);
            if (c) right.emplace_back(mp, c);
        }
        for (const auto& [lp, cl] : left)
            for (const auto& [mp, cr] : right) out.add_term({lp, mp}, cl * cr);
    }
    return out;
}

// Class of the injective hull: the sum of all socle layers.
inline KClass injective_class(const Partition& lam, const Partition& mu) {
    KClass out;
    for (int k = 0; k <= std::min(lam.size(), mu.size()); ++k) out += socle_layer(lam, mu, k);
    return out;
}

// dim Hom(V_lam x (V_mu)_*, V_lam' x (V_mu')_*) = socle multiplicity of the
// target inside the source.
inline std::int64_t hom_dim(const Partition& lam, const Partition& mu, const Partition& lam_p,
                            const Partition& mu_p) {
    int k = lam.size() - lam_p.size();
    if (k < 0 || k != mu.size() - mu_p.size()) return 0;
    std::int64_t acc = 0;
    for (const Partition& gamma : partitions_of(k))
        acc += lr_coefficient(lam, lam_p, gamma) * lr_coefficient(mu, mu_p, gamma);
    return acc;
}

namespace detail {

inline std::mutex simple_expansion_mutex;
inline std::map<SimpleLabel, std::map<SimpleLabel, std::int64_t>> simple_expansion_cache;

}  // namespace detail

// Coefficients of [V_{lam,mu}] in the basis of injective classes, by
// inverting the unitriangular socle decomposition.
inline const std::map<SimpleLabel, std::int64_t>& simple_in_injectives(const Partition& lam,
                                                                       const Partition& mu) {
    SimpleLabel key{lam, mu};
    return detail::memoized(
        detail::simple_expansion_cache, detail::simple_expansion_mutex, key,
        [&]() -> std::map<SimpleLabel, std::int64_t> {
            std::map<SimpleLabel, std::int64_t> out{{key, 1}};
            KClass inj = injective_class(lam, mu);
            for (const auto& [l, c] : inj.terms()) {
                if (l == key) continue;
                for (const auto& [il, ic] : simple_in_injectives(l.lam, l.mu)) {
                    auto [it, inserted] = out.emplace(il, -c * ic);
                    if (!inserted) {
                        it->second -= c * ic;
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
            return out;
        });
}

// K-level projection onto the polynomial part: kills every simple with mu
// nonempty, sends [V_{lam,-}] to s_lam.
inline SymFunc plus_projection(const KClass& c) {
    SymFunc out;
    for (const auto& [l, v] : c.terms())
        if (l.mu.empty()) out.add_term(l.lam, Rational(static_cast<long>(v)));
    return out;
}

// Operator class of a K-class: [V_{nu,mu}] acts as mul_schur(nu) o skew_schur(mu).
inline LinOp functor_class(const KClass& c) {
    LinOp out = LinOp::zero();
    for (const auto& [l, v] : c.terms())
        out = out + Rational(static_cast<long>(v)) * (mul_schur(l.lam) * skew_schur(l.mu));
    return out;
}

// Swap the two labels everywhere (the duality involution).
inline KClass dual_class(const KClass& c) {
    KClass out;
    for (const auto& [l, v] : c.terms()) out.add_term({l.mu, l.lam}, v);
    return out;
}

// ---------------------------------------------------------------------------
// Exact-sequence identities between the elementary creation and
// annihilation operators, checked on a degree window.

struct ExSequenceCheck {
    std::string family;  // "ex1".."ex4"
    int m = 0;
    int n = 0;
    bool pass = false;
    std::optional<std::tuple<Partition, SymFunc, SymFunc>> mismatch;
};

struct ExSequenceReport {
    std::vector<ExSequenceCheck> checks;
    bool all_pass = true;
    long long checked = 0;
};

// ex1: h*_m h_n = h_n h*_m + h*_{m-1} h_{n-1}
// ex2: e*_m e_n = e_n e*_m + e*_{m-1} e_{n-1}
// ex3: e*_m h_n = h_n e*_m + h_{n-1} e*_{m-1}
// ex4: h*_m e_n = e_n h*_m + e_{n-1} h*_{m-1}
inline ExSequenceReport verify_ex_sequences(int window, int bound) {
    if (window < 0 || bound < 0) throw std::invalid_argument("bounds must be nonnegative");
    ExSequenceReport report;
    auto run = [&](const std::string& family, int m, int n, const LinOp& lhs, const LinOp& rhs) {
        ExSequenceCheck chk{family, m, n, true, std::nullopt};
        if (auto bad = find_op_mismatch(lhs, rhs, window)) {
            chk.pass = false;
            chk.mismatch = std::move(bad);
            report.all_pass = false;
        }
        report.checked += 1;
        report.checks.push_back(std::move(chk));
    };
    for (int m = 0; m <= bound; ++m)
        for (int n = 0; n <= bound; ++n) {
            run("ex1", m, n, skew_h(m) * mul_h(n),
                mul_h(n) * skew_h(m) + skew_h(m - 1) * mul_h(n - 1));
            run("ex2", m, n, skew_e(m) * mul_e(n),
                mul_e(n) * skew_e(m) + skew_e(m - 1) * mul_e(n - 1));
            run("ex3", m, n, skew_e(m) * mul_h(n),
                mul_h(n) * skew_e(m) + mul_h(n - 1) * skew_e(m - 1));
            run("ex4", m, n, skew_h(m) * mul_e(n),
                mul_e(n) * skew_h(m) + mul_e(n - 1) * skew_h(m - 1));
        }
    return report;
}

// ---------------------------------------------------------------------------
// Euler characteristic of the four-factor complexes Z_{a,b}(n,q) =
// H_{a+n} o E_{b+q} o E*_n o H*_q. Terms alternate in the h- and h*-indices,
// (-1)^{(a+n)+q}; this is the signing under which the diagonal sums below
// collapse to delta Id, and it matches the two one-sided Koszul sums.

inline LinOp euler_Z(int a, int b) {
    return LinOp(
        [a, b](const Partition& lam) {
            SymFunc out;
            for (int q = std::max(0, -b); q <= lam.size(); ++q) {
                SymFunc g1 = skew_h(q).apply(SymFunc::schur(lam));
                if (g1.is_zero()) continue;
                int inner_deg = lam.size() - q;
                for (int n = std::max(0, -a); n <= inner_deg; ++n) {
                    SymFunc g2 = mul_h(a + n).apply(mul_e(b + q).apply(skew_e(n).apply(g1)));
                    if (((a + n) + q) % 2) g2 *= Rational(-1);
                    out += g2;
                }
            }
            return out;
        },
        a + b);
}

// sum_i euler_Z(a+i, b-i) truncated where the terms vanish on the window;
// equals delta_{a+b,0} Id there.
inline LinOp euler_Z_diagonal_sum(int a, int b, int window) {
    LinOp acc = LinOp::zero();
    for (int i = -a - window; i <= b + window; ++i) acc = acc + euler_Z(a + i, b - i);
    return acc;
}

// ---------------------------------------------------------------------------
// Alternating hook sums realizing the power sums at the class level.

inline LinOp hook_P(int k) {
    if (k < 1) throw std::invalid_argument("hook operator index must be positive");
    LinOp out = LinOp::zero();
    auto hs = hooks(k);
    for (int i = 0; i < k; ++i)
        out = out + Rational(i % 2 ? -1 : 1) * mul_schur(hs[static_cast<std::size_t>(i)]);
    return out;
}

inline LinOp hook_P_star(int k) {
    if (k < 1) throw std::invalid_argument("hook operator index must be positive");
    LinOp out = LinOp::zero();
    auto hs = hooks(k);
    for (int i = 0; i < k; ++i)
        out = out + Rational(i % 2 ? -1 : 1) * skew_schur(hs[static_cast<std::size_t>(i)]);
    return out;
}

// sum_{j=0}^{m-1} (-1)^j N^{(m-j,1^j)}_{nu,gamma}; vanishes unless nu is
// empty and gamma is a hook of size m, where it equals (-1)^leg.
inline std::int64_t auxp_sum(int m, const Partition& nu, const Partition& gamma) {
    if (m < 1) throw std::invalid_argument("auxp index must be positive");
    if (nu.size() >= m) throw std::invalid_argument("auxp requires |nu| < m");
    std::int64_t acc = 0;
    auto hs = hooks(m);
    for (int j = 0; j < m; ++j) {
        std::int64_t c = lr_coefficient(hs[static_cast<std::size_t>(j)], nu, gamma);
        acc += (j % 2 ? -1 : 1) * c;
    }
    return acc;
}

// Alternating double sum of reduced injective hook classes; equals
// k delta_{k,m} [V_{-, -}].
inline KClass hook_identity_check(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("hook identity indices must be positive");
    KClass acc;
    auto hk = hooks(k);
    auto hm = hooks(m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            const Partition& a = hk[static_cast<std::size_t>(i)];
            const Partition& b = hm[static_cast<std::size_t>(j)];
            KClass reduced = injective_class(a, b) - KClass::simple(a, b);
            if ((i + j) % 2) reduced *= -1;
            acc += reduced;
        }
    return acc;
}

}  // namespace fockforge
