#pragma once
// Ribbons (border strips): connected skew shapes containing no 2x2 block.
// Enumeration is done over candidate outer/inner shapes with a direct
// cell-level check, so the combinatorics stay self-evidently correct.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace fockforge {

struct Ribbon {
    Partition outer;
    Partition inner;
    int height = 0;  // rows spanned minus one
};

namespace detail {

inline std::vector<std::pair<int, int>> skew_cells(const Partition& outer, const Partition& inner) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.part(r); c < outer.part(r); ++c)
            cells.emplace_back(r, c);
    return cells;
}

}  // namespace detail

// Height of outer/inner when it is a ribbon, otherwise nullopt.
inline std::optional<int> ribbon_height(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return std::nullopt;
    auto cells = detail::skew_cells(outer, inner);
    if (cells.empty()) return std::nullopt;
    std::set<std::pair<int, int>> cellset(cells.begin(), cells.end());
    for (auto [r, c] : cells) {
        if (cellset.count({r, c + 1}) && cellset.count({r + 1, c}) && cellset.count({r + 1, c + 1}))
            return std::nullopt;  // 2x2 block
    }
    // connectivity over edge-adjacent cells
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{cells.front()};
    seen.insert(cells.front());
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            std::pair<int, int> nb{r + dr, c + dc};
            if (cellset.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
        }
    }
    if (seen.size() != cells.size()) return std::nullopt;
    int rmin = cells.front().first, rmax = cells.front().first;
    for (auto [r, c] : cells) {
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    return rmax - rmin;
}

inline bool is_ribbon(const Ribbon& rb) {
    auto h = ribbon_height(rb.outer, rb.inner);
    return h && *h == rb.height;
}

using RibbonList = std::vector<std::pair<Partition, int>>;

namespace detail {

inline std::mutex ribbon_mutex;
inline std::map<std::pair<Partition, int>, RibbonList> add_ribbon_cache;
inline std::map<std::pair<Partition, int>, RibbonList> remove_ribbon_cache;

}  // namespace detail

// All (mu, height) with mu obtained from base by adding a ribbon of n cells.
inline const RibbonList& add_ribbons(const Partition& base, int n) {
    if (n < 1) throw std::invalid_argument("ribbon size must be positive");
    std::lock_guard lock(detail::ribbon_mutex);
    auto key = std::pair{base, n};
    auto it = detail::add_ribbon_cache.find(key);
    if (it != detail::add_ribbon_cache.end()) return it->second;
    RibbonList out;
    for (const Partition& mu : partitions_of(base.size() + n)) {
        if (!mu.contains(base)) continue;
        if (auto h = ribbon_height(mu, base)) out.emplace_back(mu, *h);
    }
    return detail::add_ribbon_cache.emplace(std::move(key), std::move(out)).first->second;
}

// All (mu, height) with base/mu a ribbon of n cells; adjoint to add_ribbons.
inline const RibbonList& remove_ribbons(const Partition& base, int n) {
    if (n < 1) throw std::invalid_argument("ribbon size must be positive");
    std::lock_guard lock(detail::ribbon_mutex);
    auto key = std::pair{base, n};
    auto it = detail::remove_ribbon_cache.find(key);
    if (it != detail::remove_ribbon_cache.end()) return it->second;
    RibbonList out;
    if (base.size() >= n) {
        for (const Partition& mu : partitions_of(base.size() - n)) {
            if (!base.contains(mu)) continue;
            if (auto h = ribbon_height(base, mu)) out.emplace_back(mu, *h);
        }
    }
    return detail::remove_ribbon_cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace fockforge
