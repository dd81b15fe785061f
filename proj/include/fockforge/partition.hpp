#pragma once
// Integer partitions (Young diagrams): weakly decreasing positive parts.
// The empty partition is written "-" in machine formats.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockforge {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }  // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Row lengths are 1-indexed; rows past the last have length 0.
    int part(int k) const {
        if (k < 1) throw std::out_of_range("partition rows are 1-indexed");
        return k <= length() ? parts_[static_cast<std::size_t>(k) - 1] : 0;
    }

    // Cell-wise containment: inner fits inside this diagram.
    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner.parts_[static_cast<std::size_t>(i)] > parts_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> t;
        if (!parts_.empty()) {
            t.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(t));
    }

    // Hooks are the shapes (p, 1, ..., 1).
    bool is_hook() const { return !parts_.empty() && (length() == 1 || parts_[1] == 1); }
    int hook_leg() const {
        if (!is_hook()) throw std::logic_error("not a hook shape");
        return length() - 1;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    // Graded order: by box count, then lexicographically on the part vector.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.parts_ < b.parts_;
    }

    std::string str() const {
        if (parts_.empty()) return "-";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    // Accepts "3,1,1"; the empty diagram is "-", "" or the UTF-8 empty-set sign.
    static Partition parse(const std::string& text) {
        std::string s = text;
        auto issp = [](char c) { return c == ' ' || c == '\t'; };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        if (s.empty() || s == "-" || s == "\xE2\x88\x85") return Partition();
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            while (!tok.empty() && issp(tok.front())) tok.erase(tok.begin());
            while (!tok.empty() && issp(tok.back())) tok.pop_back();
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("partition parse error at position " +
                                            std::to_string(pos) + " in '" + text + "'");
            }
            if (used != tok.size())
                throw std::invalid_argument("partition parse error at position " +
                                            std::to_string(pos + used) + " in '" + text + "'");
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// The k hooks of size k, leg growing: [(k), (k-1,1), ..., (1,1,...,1)].
inline std::vector<Partition> hooks(int k) {
    if (k <= 0) throw std::invalid_argument("hook size must be positive");
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<int> parts{k - i};
        parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

namespace detail {

inline void gen_partitions(int remaining, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::mutex partitions_mutex;
inline std::map<int, std::vector<Partition>> partitions_cache;

}  // namespace detail

// All partitions of n, in graded-lexicographic order.
inline const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative number");
    std::lock_guard lock(detail::partitions_mutex);
    auto it = detail::partitions_cache.find(n);
    if (it != detail::partitions_cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return detail::partitions_cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Partition> partitions_up_to(int degree) {
    std::vector<Partition> out;
    for (int n = 0; n <= degree; ++n) {
        const auto& level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// p(n), computed by enumeration.
inline std::int64_t partition_count(int n) {
    if (n < 0) return 0;
    return static_cast<std::int64_t>(partitions_of(n).size());
}

}  // namespace fockforge
