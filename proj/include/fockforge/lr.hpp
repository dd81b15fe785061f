#pragma once
// Littlewood-Richardson structure constants N^lam_{mu,nu}.
//
// Production path: expand one factor through its Jacobi-Trudi determinant
// (a signed sum of complete homogeneous products) and fold the resulting
// h-chains through the Pieri rule. An independent tableau-counting
// enumerator is kept alongside as a correctness oracle.

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace fockforge {

using SchurExpansion = std::map<Partition, std::int64_t>;

namespace detail {

template <typename Cache, typename Fn>
const typename Cache::mapped_type& memoized(Cache& cache, std::mutex& m,
                                            const typename Cache::key_type& key, Fn&& compute) {
    {
        std::lock_guard lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = compute();
    std::lock_guard lock(m);
    return cache.emplace(key, std::move(value)).first->second;
}

inline std::mutex strip_mutex;
inline std::map<std::pair<Partition, int>, std::vector<Partition>> pieri_h_cache;
inline std::map<std::pair<Partition, int>, std::vector<Partition>> pieri_e_cache;
inline std::map<std::pair<Partition, int>, std::vector<Partition>> strip_h_cache;
inline std::map<std::pair<Partition, int>, std::vector<Partition>> strip_e_cache;

}  // namespace detail

// Horizontal r-strip additions: mu >= lam with mu_{i+1} <= lam_i.
inline const std::vector<Partition>& pieri_h(const Partition& lam, int r) {
    return detail::memoized(detail::pieri_h_cache, detail::strip_mutex, {lam, r}, [&] {
        std::vector<Partition> out;
        if (r < 0) return out;
        if (r == 0) return std::vector<Partition>{lam};
        const int rows = lam.length() + 1;
        std::vector<int> mu(static_cast<std::size_t>(rows), 0);
        auto rec = [&](auto&& self, int row, int remaining) -> void {
            if (row > rows) {
                if (remaining == 0) {
                    std::vector<int> parts(mu.begin(), mu.begin() + rows);
                    out.emplace_back(std::move(parts));
                }
                return;
            }
            int lo = lam.part(row);
            int hi = row == 1 ? lam.part(1) + remaining : std::min(lam.part(row - 1), lam.part(row) + remaining);
            for (int v = lo; v <= hi; ++v) {
                mu[static_cast<std::size_t>(row) - 1] = v;
                self(self, row + 1, remaining - (v - lo));
            }
        };
        rec(rec, 1, r);
        return out;
    });
}

// Vertical r-strip additions: at most one new box per row; leftover boxes
// extend the diagram with new length-1 rows.
inline const std::vector<Partition>& pieri_e(const Partition& lam, int r) {
    return detail::memoized(detail::pieri_e_cache, detail::strip_mutex, {lam, r}, [&] {
        std::vector<Partition> out;
        if (r < 0) return out;
        if (r == 0) return std::vector<Partition>{lam};
        const int len = lam.length();
        std::vector<int> pick(static_cast<std::size_t>(len), 0);
        auto rec = [&](auto&& self, int row, int remaining) -> void {
            if (row > len) {
                std::vector<int> parts;
                for (int i = 0; i < len; ++i)
                    parts.push_back(lam.part(i + 1) + pick[static_cast<std::size_t>(i)]);
                for (int t = 0; t < remaining; ++t) parts.push_back(1);
                out.emplace_back(std::move(parts));
                return;
            }
            for (int x = 0; x <= std::min(1, remaining); ++x) {
                int v = lam.part(row) + x;
                if (row > 1 && v > lam.part(row - 1) + pick[static_cast<std::size_t>(row) - 2]) continue;
                pick[static_cast<std::size_t>(row) - 1] = x;
                self(self, row + 1, remaining - x);
            }
        };
        rec(rec, 1, r);
        return out;
    });
}

// Horizontal r-strip removals: lam_{i+1} <= mu_i <= lam_i.
inline const std::vector<Partition>& strip_h(const Partition& lam, int r) {
    return detail::memoized(detail::strip_h_cache, detail::strip_mutex, {lam, r}, [&] {
        std::vector<Partition> out;
        if (r < 0 || r > lam.size()) return out;
        if (r == 0) return std::vector<Partition>{lam};
        const int rows = lam.length();
        std::vector<int> mu(static_cast<std::size_t>(rows), 0);
        auto rec = [&](auto&& self, int row, int remaining) -> void {
            if (row > rows) {
                if (remaining == 0) {
                    std::vector<int> parts(mu.begin(), mu.begin() + rows);
                    out.emplace_back(std::move(parts));
                }
                return;
            }
            int lo = std::max(lam.part(row + 1), lam.part(row) - remaining);
            int hi = lam.part(row);
            for (int v = lo; v <= hi; ++v) {
                mu[static_cast<std::size_t>(row) - 1] = v;
                self(self, row + 1, remaining - (hi - v));
            }
        };
        rec(rec, 1, r);
        return out;
    });
}

// Vertical r-strip removals: at most one box removed per row.
inline const std::vector<Partition>& strip_e(const Partition& lam, int r) {
    return detail::memoized(detail::strip_e_cache, detail::strip_mutex, {lam, r}, [&] {
        std::vector<Partition> out;
        if (r < 0 || r > lam.size()) return out;
        if (r == 0) return std::vector<Partition>{lam};
        const int len = lam.length();
        std::vector<int> pick(static_cast<std::size_t>(len), 0);
        auto rec = [&](auto&& self, int row, int remaining) -> void {
            if (row > len) {
                if (remaining == 0) {
                    std::vector<int> parts;
                    for (int i = 0; i < len; ++i)
                        parts.push_back(lam.part(i + 1) - pick[static_cast<std::size_t>(i)]);
                    out.emplace_back(std::move(parts));
                }
                return;
            }
            for (int x = 0; x <= std::min(1, remaining); ++x) {
                int v = lam.part(row) - x;
                if (v < 0) continue;
                if (row > 1 && v > lam.part(row - 1) - pick[static_cast<std::size_t>(row) - 2]) continue;
                pick[static_cast<std::size_t>(row) - 1] = x;
                self(self, row + 1, remaining - x);
            }
        };
        rec(rec, 1, r);
        return out;
    });
}

// A product of h_k generators, indices sorted descending; h_0 factors are dropped.
using HMonomial = std::vector<int>;
using HExpansion = std::map<HMonomial, std::int64_t>;

namespace detail {

inline std::mutex jt_mutex;
inline std::map<Partition, HExpansion> jt_cache;

}  // namespace detail

// Signed h-products of the Jacobi-Trudi determinant det(h_{nu_i - i + j}).
inline const HExpansion& jacobi_trudi_h(const Partition& nu) {
    return detail::memoized(detail::jt_cache, detail::jt_mutex, nu, [&] {
        const int n = nu.length();
        std::vector<HExpansion> memo(static_cast<std::size_t>(1) << n);
        std::vector<bool> done(static_cast<std::size_t>(1) << n, false);
        auto rec = [&](auto&& self, unsigned mask) -> const HExpansion& {
            if (done[mask]) return memo[mask];
            HExpansion res;
            int row = __builtin_popcount(mask) + 1;
            if (row > n) {
                res[{}] = 1;
            } else {
                for (int col = 1; col <= n; ++col) {
                    unsigned bit = 1u << (col - 1);
                    if (mask & bit) continue;
                    int a = nu.part(row) - row + col;
                    if (a < 0) continue;
                    int inversions = 0;
                    for (int c = 1; c < col; ++c)
                        if (!(mask & (1u << (c - 1)))) ++inversions;
                    std::int64_t sign = (inversions % 2) ? -1 : 1;
                    for (const auto& [mono, coeff] : self(self, mask | bit)) {
                        HMonomial m = mono;
                        if (a > 0) {
                            m.insert(std::upper_bound(m.begin(), m.end(), a, std::greater<int>()), a);
                        }
                        res[m] += sign * coeff;
                    }
                }
                for (auto it = res.begin(); it != res.end();)
                    it = it->second == 0 ? res.erase(it) : std::next(it);
            }
            memo[mask] = std::move(res);
            done[mask] = true;
            return memo[mask];
        };
        return rec(rec, 0);
    });
}

namespace detail {

inline std::mutex product_mutex;
inline std::map<std::pair<Partition, Partition>, SchurExpansion> product_cache;
inline std::mutex skew_mutex;
inline std::map<std::pair<Partition, Partition>, SchurExpansion> skew_cache;

inline SchurExpansion fold_h_chain(const Partition& start, const HExpansion& terms,
                                   const std::vector<Partition>& (*step)(const Partition&, int)) {
    SchurExpansion res;
    for (const auto& [mono, coeff] : terms) {
        std::map<Partition, std::int64_t> cur{{start, 1}};
        for (int r : mono) {
            std::map<Partition, std::int64_t> next;
            for (const auto& [p, k] : cur)
                for (const Partition& q : step(p, r)) next[q] += k;
            cur = std::move(next);
        }
        for (const auto& [p, k] : cur) res[p] += coeff * k;
    }
    for (auto it = res.begin(); it != res.end();)
        it = it->second == 0 ? res.erase(it) : std::next(it);
    return res;
}

}  // namespace detail

// Expansion of the product s_mu * s_nu in the Schur basis.
inline const SchurExpansion& schur_product(const Partition& mu, const Partition& nu) {
    const Partition& a = mu < nu ? mu : nu;
    const Partition& b = mu < nu ? nu : mu;
    return detail::memoized(detail::product_cache, detail::product_mutex, {a, b}, [&] {
        // run the determinant on the factor with fewer rows
        const Partition& chain = a.length() <= b.length() ? a : b;
        const Partition& start = a.length() <= b.length() ? b : a;
        return detail::fold_h_chain(start, jacobi_trudi_h(chain), &pieri_h);
    });
}

// N^lam_{mu,nu}; zero whenever the sizes do not match or mu is not inside lam.
inline std::int64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size()) return 0;
    if (!lam.contains(mu) || !lam.contains(nu)) return 0;
    const auto& prod = schur_product(mu, nu);
    auto it = prod.find(lam);
    return it == prod.end() ? 0 : it->second;
}

// Expansion of the skew function s_{lam/nu}: coefficients N^lam_{nu,mu} by mu.
inline const SchurExpansion& schur_skew(const Partition& nu, const Partition& lam) {
    return detail::memoized(detail::skew_cache, detail::skew_mutex, {nu, lam}, [&] {
        return detail::fold_h_chain(lam, jacobi_trudi_h(nu), &strip_h);
    });
}

// ---------------------------------------------------------------------------
// Oracle: count Littlewood-Richardson skew tableaux of shape lam/mu and
// content nu directly (semistandard, reverse reading word a lattice word).
inline std::int64_t lr_tableau_count(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size()) return 0;
    if (!lam.contains(mu)) return 0;
    if (nu.empty()) return lam == mu ? 1 : 0;

    // cells in reverse reading order: rows top to bottom, right to left
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = lam.part(r) - 1; c >= mu.part(r); --c) cells.emplace_back(r, c);

    const int values = nu.length();
    std::vector<int> counts(static_cast<std::size_t>(values) + 1, 0);
    std::map<std::pair<int, int>, int> filled;
    std::int64_t total = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= values; ++v) {
            if (counts[static_cast<std::size_t>(v)] >= nu.part(v)) continue;
            if (v > 1 && counts[static_cast<std::size_t>(v)] >= counts[static_cast<std::size_t>(v) - 1])
                continue;  // lattice word prefix condition
            auto right = filled.find({r, c + 1});
            if (right != filled.end() && v > right->second) continue;  // weak rows
            if (r > 1 && c >= mu.part(r - 1)) {
                auto above = filled.find({r - 1, c});
                if (above != filled.end() && v <= above->second) continue;  // strict columns
            }
            counts[static_cast<std::size_t>(v)]++;
            filled[{r, c}] = v;
            self(self, idx + 1);
            filled.erase({r, c});
            counts[static_cast<std::size_t>(v)]--;
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace fockforge
