#pragma once

// Integer partitions, conjugation, concatenation, majorization and the
// Gale-Ryser realizability test.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

/// A nonincreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is nonincreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be nonincreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros; useful for degree sequences.
    static Partition from_unsorted(std::vector<int> values) {
        std::erase(values, 0);
        std::sort(values.begin(), values.end(), std::greater<>());
        return Partition(std::move(values));
    }

    /// Parses "5,5,4,2,2,1". The empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            auto token = text.substr(pos, comma - pos);
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
                throw std::invalid_argument("bad partition token '" + std::string(token) + "'");
            parts.push_back(value);
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    long long sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// a*_i = #{j : a_j >= i} for 1 <= i <= a_1.
inline Partition conjugate(const Partition& a) {
    std::vector<int> out(static_cast<std::size_t>(a.largest()), 0);
    for (int part : a)
        for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

/// a ⊕ b as a plain sequence; not necessarily nonincreasing.
inline std::vector<int> concat(const Partition& a, const Partition& b) {
    std::vector<int> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

namespace detail {

template <typename T>
std::vector<T> sorted_padded(std::span<const T> values, std::size_t len) {
    std::vector<T> out(values.begin(), values.end());
    out.resize(len, T{});
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace detail

/// Absolute prefix-sum tolerance for real majorization.
inline constexpr double kMajorizationTolerance = 1e-9;

/// a ≺ b: the shorter sequence is zero-padded, both are sorted descending,
/// prefix sums of a never exceed those of b and the totals agree. Exact.
inline bool majorizes(std::span<const long long> a, std::span<const long long> b) {
    const std::size_t len = std::max(a.size(), b.size());
    auto sa = detail::sorted_padded(a, len);
    auto sb = detail::sorted_padded(b, len);
    long long pa = 0, pb = 0;
    for (std::size_t k = 0; k < len; ++k) {
        pa += sa[k];
        pb += sb[k];
        if (pa > pb) return false;
    }
    return pa == pb;
}

inline bool majorizes(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<long long> la(a.begin(), a.end()), lb(b.begin(), b.end());
    return majorizes(std::span<const long long>(la), std::span<const long long>(lb));
}

/// Real-valued a ≺ b with an absolute prefix-sum tolerance.
inline bool majorizes(std::span<const double> a, std::span<const double> b,
                      double tol = kMajorizationTolerance) {
    const std::size_t len = std::max(a.size(), b.size());
    auto sa = detail::sorted_padded(a, len);
    auto sb = detail::sorted_padded(b, len);
    double pa = 0, pb = 0;
    for (std::size_t k = 0; k < len; ++k) {
        pa += sa[k];
        pb += sb[k];
        if (pa > pb + tol) return false;
    }
    return std::abs(pa - pb) <= tol;
}

/// Largest violation of the prefix inequalities (positive means a ⊀ b),
/// including the total-sum mismatch.
inline double majorization_slack(std::span<const double> a, std::span<const double> b) {
    const std::size_t len = std::max(a.size(), b.size());
    auto sa = detail::sorted_padded(a, len);
    auto sb = detail::sorted_padded(b, len);
    double pa = 0, pb = 0, worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < len; ++k) {
        pa += sa[k];
        pb += sb[k];
        worst = std::max(worst, pa - pb);
    }
    return std::max(worst, std::abs(pa - pb));
}

/// A bipartite graph with one side's degrees `a` and the other's `b` exists
/// iff |a| = |b| and a ≺ b*.
inline bool gale_ryser(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum()) return false;
    return majorizes(a.parts(), conjugate(b).parts());
}

/// All partitions of `total` with at most `max_len` parts and parts at most
/// `max_part`, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int total, int max_part, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, max_part);
    return out;
}

}  // namespace ferrers
