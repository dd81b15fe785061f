#pragma once
// The charged fermionic Fock space on pairs (charge, partition).
//
// A basis vector (m, lam) is encoded by its Maya diagram: the occupied
// set O(m, lam) = { lam_k - k + m : k >= 1 }, which agrees with
// { j : j < m } outside a finite window. The generator psi(i) creates a
// particle at position -1-i and raises the charge; psi_star(i) removes
// at the same position and lowers the charge. Signs count occupied
// positions strictly above the target. With these conventions psi(i)
// for i >= 0 and psi_star(i) for i < 0 annihilate the charge-0 vacuum.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "ribbon.hpp"

namespace fockforge {

struct ChargedPartition {
    int charge = 0;
    Partition shape;

    int energy() const { return shape.size(); }
    // q-weight |shape| + charge^2/2, counted in integer half-steps
    int weight_halves() const { return 2 * shape.size() + charge * charge; }

    std::string str() const { return std::to_string(charge) + "|" + shape.str(); }

    static ChargedPartition parse(const std::string& text) {
        auto bar = text.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("charged partition must look like 'm|parts': '" + text + "'");
        std::size_t used = 0;
        int m = 0;
        try {
            m = std::stoi(text.substr(0, bar), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad charge in '" + text + "'");
        }
        return ChargedPartition{m, Partition::parse(text.substr(bar + 1))};
    }

    friend bool operator==(const ChargedPartition& a, const ChargedPartition& b) {
        return a.charge == b.charge && a.shape == b.shape;
    }
    friend bool operator!=(const ChargedPartition& a, const ChargedPartition& b) { return !(a == b); }
    friend bool operator<(const ChargedPartition& a, const ChargedPartition& b) {
        if (a.charge != b.charge) return a.charge < b.charge;
        return a.shape < b.shape;
    }
};

class FockVector {
public:
    FockVector() = default;

    static FockVector basis(const ChargedPartition& b) {
        FockVector v;
        v.terms_.emplace(b, 1);
        return v;
    }
    static FockVector zero() { return FockVector(); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<ChargedPartition, Rational>& terms() const { return terms_; }

    Rational coeff(const ChargedPartition& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ChargedPartition& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    FockVector& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, v] : terms_) v *= c;
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Rational& c, FockVector a) { return a *= c; }
    friend FockVector operator-(FockVector a) {
        for (auto& [b, v] : a.terms_) v = -v;
        return a;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            std::string cs = rational_str(c);
            if (!first) {
                out += c < 0 ? " - " : " + ";
                if (c < 0) cs = rational_str(-c);
            }
            if (cs != "1") out += cs + " ";
            out += "|" + b.str() + ">";
            first = false;
        }
        return out;
    }

private:
    std::map<ChargedPartition, Rational> terms_;
};

inline FockVector vacuum(int charge) { return FockVector::basis({charge, Partition()}); }

// ---------------------------------------------------------------------------
// Maya diagram view of a single basis vector.

namespace maya {

// Topmost occupied positions, descending; below the last entry every
// position is occupied (the sea). rows >= length(shape) + margin.
inline std::vector<long> occupied_window(const ChargedPartition& b, int rows) {
    std::vector<long> o;
    o.reserve(static_cast<std::size_t>(rows));
    for (int k = 1; k <= rows; ++k) o.push_back(b.shape.part(k) - k + b.charge);
    return o;
}

// Rebuild (charge, shape) from a descending occupied window whose tail is
// consecutive with the sea.
inline ChargedPartition from_window(const std::vector<long>& o, int charge) {
    std::vector<int> parts;
    for (std::size_t k = 0; k < o.size(); ++k) {
        long part = o[k] + static_cast<long>(k) + 1 - charge;
        if (part < 0) throw std::logic_error("occupied window does not encode a partition");
        parts.push_back(static_cast<int>(part));
    }
    return ChargedPartition{charge, Partition(std::move(parts))};
}

inline bool occupied(const ChargedPartition& b, long pos) {
    if (pos <= b.charge - b.shape.length() - 1) return true;  // inside the sea
    for (int k = 1; k <= b.shape.length(); ++k)
        if (b.shape.part(k) - k + b.charge == pos) return true;
    return false;
}

// (sign, new basis vector) for creating a particle at pos; nullopt if occupied.
inline std::optional<std::pair<int, ChargedPartition>> create(const ChargedPartition& b, long pos) {
    if (occupied(b, pos)) return std::nullopt;
    int rows = b.shape.length() + static_cast<int>(std::max<long>(0, b.charge - pos)) + 2;
    std::vector<long> o = occupied_window(b, rows);
    auto it = std::upper_bound(o.begin(), o.end(), pos, std::greater<long>());
    int above = static_cast<int>(it - o.begin());
    o.insert(it, pos);
    return std::pair{above % 2 ? -1 : 1, from_window(o, b.charge + 1)};
}

// (sign, new basis vector) for removing the particle at pos; nullopt if vacant.
inline std::optional<std::pair<int, ChargedPartition>> remove(const ChargedPartition& b, long pos) {
    if (!occupied(b, pos)) return std::nullopt;
    int rows = b.shape.length() + static_cast<int>(std::max<long>(0, b.charge - pos)) + 2;
    std::vector<long> o = occupied_window(b, rows);
    auto it = std::find(o.begin(), o.end(), pos);
    if (it == o.end()) throw std::logic_error("occupied position missing from window");
    int above = static_cast<int>(it - o.begin());
    o.erase(it);
    return std::pair{above % 2 ? -1 : 1, from_window(o, b.charge - 1)};
}

}  // namespace maya

// ---------------------------------------------------------------------------
// Clifford generators.

inline long fermion_position(int i) { return -1L - i; }

inline FockVector psi(int i, const FockVector& v) {
    FockVector out;
    for (const auto& [b, c] : v.terms()) {
        if (auto r = maya::create(b, fermion_position(i)))
            out.add_term(r->second, c * Rational(r->first));
    }
    return out;
}

inline FockVector psi_star(int i, const FockVector& v) {
    FockVector out;
    for (const auto& [b, c] : v.terms()) {
        if (auto r = maya::remove(b, fermion_position(i)))
            out.add_term(r->second, c * Rational(r->first));
    }
    return out;
}

// p_n = sum_i psi_i psi*_{i+n}: every particle move up by n steps.
inline FockVector fermion_p(int n, const FockVector& v) {
    if (n < 1) throw std::invalid_argument("power sum index must be positive");
    FockVector out;
    for (const auto& [b, c] : v.terms()) {
        int rows = b.shape.length() + n + 2;
        for (long pos : maya::occupied_window(b, rows)) {
            if (maya::occupied(b, pos + n)) continue;
            auto rem = maya::remove(b, pos);
            auto cre = maya::create(rem->second, pos + n);
            out.add_term(cre->second, c * Rational(rem->first * cre->first));
        }
    }
    return out;
}

// p*_n = sum_i psi_i psi*_{i-n}: every particle move down by n steps.
inline FockVector fermion_p_star(int n, const FockVector& v) {
    if (n < 1) throw std::invalid_argument("power sum index must be positive");
    FockVector out;
    for (const auto& [b, c] : v.terms()) {
        int rows = b.shape.length() + n + 2;
        for (long pos : maya::occupied_window(b, rows)) {
            if (maya::occupied(b, pos - n)) continue;
            auto rem = maya::remove(b, pos);
            auto cre = maya::create(rem->second, pos - n);
            out.add_term(cre->second, c * Rational(rem->first * cre->first));
        }
    }
    return out;
}

// The automorphism shifting every charge sector up by one.
inline FockVector charge_shift(const FockVector& v) {
    FockVector out;
    for (const auto& [b, c] : v.terms()) out.add_term({b.charge + 1, b.shape}, c);
    return out;
}

inline FockVector charge_unshift(const FockVector& v) {
    FockVector out;
    for (const auto& [b, c] : v.terms()) out.add_term({b.charge - 1, b.shape}, c);
    return out;
}

// Number of basis vectors of the given charge and q-weight (in half-steps).
inline std::int64_t count_basis(int charge, int energy_halves) {
    long long rem = static_cast<long long>(energy_halves) - static_cast<long long>(charge) * charge;
    if (rem < 0 || rem % 2 != 0) return 0;
    return partition_count(static_cast<int>(rem / 2));
}

// All basis vectors of one charge sector up to the given energy.
inline std::vector<ChargedPartition> sector_basis(int charge, int max_energy) {
    std::vector<ChargedPartition> out;
    for (int d = 0; d <= max_energy; ++d)
        for (const Partition& lam : partitions_of(d)) out.push_back({charge, lam});
    return out;
}

}  // namespace fockforge
