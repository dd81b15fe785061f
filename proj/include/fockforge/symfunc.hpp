#pragma once
// Symmetric functions over exact rationals, stored in the Schur basis.
// Zero coefficients are never stored; keys follow the graded order, which
// fixes the serialization order as well.

#include <climits>
#include <map>
#include <string>
#include <utility>

#include "lr.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace fockforge {

class SymFunc {
public:
    static constexpr int kDegreeOfZero = INT_MIN;  // degree(0) sentinel

    SymFunc() = default;

    static SymFunc schur(const Partition& lam) {
        SymFunc f;
        f.terms_.emplace(lam, 1);
        return f;
    }
    static SymFunc zero() { return SymFunc(); }
    static SymFunc one() { return schur(Partition()); }

    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& lam, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int degree() const {
        if (terms_.empty()) return kDegreeOfZero;
        return terms_.rbegin()->first.size();
    }

    // restriction to the degree-d graded component
    SymFunc component(int d) const {
        SymFunc out;
        for (const auto& [lam, c] : terms_)
            if (lam.size() == d) out.terms_.emplace(lam, c);
        return out;
    }

    std::size_t support_size() const { return terms_.size(); }

    const std::map<Partition, Rational>& terms() const { return terms_; }

    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [lam, c] : o.terms_) add_term(lam, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
        return *this;
    }
    SymFunc& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [lam, v] : terms_) v *= c;
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    friend SymFunc operator-(SymFunc a) {
        for (auto& [lam, v] : a.terms_) v = -v;
        return a;
    }

    // ring product, expanded through the Littlewood-Richardson constants
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc out;
        for (const auto& [mu, cm] : a.terms_)
            for (const auto& [nu, cn] : b.terms_) {
                Rational c = cm * cn;
                for (const auto& [lam, k] : schur_product(mu, nu))
                    out.add_term(lam, c * static_cast<long>(k));
            }
        return out;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    // human-readable: "s[2,1] + 1/2 s[-]", zero prints "0"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [lam, c] : terms_) {
            std::string cs = rational_str(c);
            if (!first) {
                out += c < 0 ? " - " : " + ";
                if (c < 0) cs = rational_str(-c);
            }
            if (cs != "1") out += cs + " ";
            out += "s[" + lam.str() + "]";
            first = false;
        }
        return out;
    }

private:
    std::map<Partition, Rational> terms_;
};

// Hall inner product: the Schur functions form an orthonormal basis.
inline Rational hall_inner(const SymFunc& f, const SymFunc& g) {
    Rational acc(0);
    const auto& a = f.terms();
    const auto& b = g.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            acc += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

}  // namespace fockforge
