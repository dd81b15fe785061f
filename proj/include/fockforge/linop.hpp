#pragma once
// Linear operators on the graded ring of symmetric functions, given by
// their action on Schur basis elements. Operators are values: sums,
// scalar multiples and compositions share no mutable state except a
// per-operator memo cache, which is lock-protected.
//
// Operator equality is only decidable degree window by degree window.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>

#include "partition.hpp"
#include "symfunc.hpp"

namespace fockforge {

// degree shift of an operator; nullopt means inhomogeneous ("mixed")
using DegreeShift = std::optional<int>;

class LinOp {
public:
    using Rule = std::function<SymFunc(const Partition&)>;

    LinOp() : LinOp([](const Partition&) { return SymFunc::zero(); }, 0) {}

    LinOp(Rule rule, DegreeShift shift) : state_(std::make_shared<State>()) {
        state_->rule = std::move(rule);
        state_->shift = shift;
    }

    static LinOp identity() {
        return LinOp([](const Partition& lam) { return SymFunc::schur(lam); }, 0);
    }
    static LinOp zero() { return LinOp(); }

    DegreeShift degree_shift() const { return state_->shift; }

    SymFunc apply(const Partition& lam) const {
        {
            std::lock_guard lock(state_->mutex);
            auto it = state_->cache.find(lam);
            if (it != state_->cache.end()) return it->second;
        }
        SymFunc out = state_->rule(lam);
        std::lock_guard lock(state_->mutex);
        return state_->cache.emplace(lam, std::move(out)).first->second;
    }

    SymFunc apply(const SymFunc& f) const {
        SymFunc out;
        for (const auto& [lam, c] : f.terms()) {
            SymFunc piece = apply(lam);
            piece *= c;
            out += piece;
        }
        return out;
    }

    SymFunc operator()(const SymFunc& f) const { return apply(f); }
    SymFunc operator()(const Partition& lam) const { return apply(lam); }

    friend LinOp operator+(const LinOp& a, const LinOp& b) {
        DegreeShift s = a.degree_shift() == b.degree_shift() ? a.degree_shift() : std::nullopt;
        return LinOp([a, b](const Partition& lam) { return a.apply(lam) + b.apply(lam); }, s);
    }
    friend LinOp operator-(const LinOp& a, const LinOp& b) {
        DegreeShift s = a.degree_shift() == b.degree_shift() ? a.degree_shift() : std::nullopt;
        return LinOp([a, b](const Partition& lam) { return a.apply(lam) - b.apply(lam); }, s);
    }
    friend LinOp operator*(const Rational& c, const LinOp& a) {
        return LinOp([c, a](const Partition& lam) { return c * a.apply(lam); }, a.degree_shift());
    }

    // composition: (a * b) f = a(b(f))
    friend LinOp operator*(const LinOp& a, const LinOp& b) {
        DegreeShift s;
        if (a.degree_shift() && b.degree_shift()) s = *a.degree_shift() + *b.degree_shift();
        return LinOp([a, b](const Partition& lam) { return a.apply(b.apply(lam)); }, s);
    }

private:
    struct State {
        Rule rule;
        DegreeShift shift;
        std::mutex mutex;
        std::map<Partition, SymFunc> cache;
    };
    std::shared_ptr<State> state_;
};

// First basis element of degree <= window where the two operators differ.
inline std::optional<std::tuple<Partition, SymFunc, SymFunc>> find_op_mismatch(const LinOp& a,
                                                                               const LinOp& b,
                                                                               int window) {
    for (int d = 0; d <= window; ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymFunc fa = a.apply(lam);
            SymFunc fb = b.apply(lam);
            if (fa != fb) return std::tuple{lam, std::move(fa), std::move(fb)};
        }
    return std::nullopt;
}

// Exact agreement on every Schur basis element of degree <= window.
inline bool op_equal_on_window(const LinOp& a, const LinOp& b, int window) {
    return !find_op_mismatch(a, b, window).has_value();
}

}  // namespace fockforge
