#pragma once

/**
 * @file tuples.hpp
 * @brief Tuple enumeration and multiset ranking.
 *
 * Commutative tables store one entry per sorted tuple. A sorted tuple
 * a_0 <= a_1 <= ... <= a_{k-1} is mapped to b_i = a_i + i, which is strictly
 * increasing, and ranked in colex order as sum_i C(b_i, i+1). The ranks are
 * dense in [0, C(s+k-1, k)).
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperprime/error.hpp"

namespace hyperprime {

inline constexpr std::size_t kMaxArity = 8;

using Tuple = std::vector<std::size_t>;

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

class MultisetIndexer {
public:
    MultisetIndexer() = default;
    MultisetIndexer(std::size_t arity, std::size_t carrier_size) : arity_(arity), size_(carrier_size) {
        if (arity == 0 || arity > kMaxArity)
            throw Error(ErrorKind::ArityMismatch, "arity must be in [1, " + std::to_string(kMaxArity) + "]");
        const std::size_t rows = carrier_size + arity;
        binom_.assign((rows + 1) * (arity + 1), 0);
        for (std::size_t n = 0; n <= rows; ++n)
            for (std::size_t k = 0; k <= arity; ++k) binom_[n * (arity + 1) + k] = detail::binomial(n, k);
        count_ = static_cast<std::size_t>(detail::binomial(carrier_size + arity - 1, arity));
    }

    std::size_t arity() const { return arity_; }
    std::size_t carrier_size() const { return size_; }
    /// Number of sorted tuples.
    std::size_t count() const { return count_; }

    /// Rank of an already sorted tuple.
    std::size_t rank_sorted(std::span<const std::size_t> sorted) const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < arity_; ++i) r += binom_[(sorted[i] + i) * (arity_ + 1) + (i + 1)];
        return r;
    }

    /// Rank of a tuple in any order.
    std::size_t rank(std::span<const std::size_t> tuple) const {
        std::array<std::size_t, kMaxArity> buf{};
        std::copy(tuple.begin(), tuple.end(), buf.begin());
        std::sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(arity_));
        return rank_sorted(std::span<const std::size_t>(buf.data(), arity_));
    }

private:
    std::size_t arity_ = 0;
    std::size_t size_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> binom_;
};

/// Calls fn(tuple) for every tuple in [0,size)^arity, in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t arity, std::size_t size, Fn&& fn) {
    if (size == 0) return;
    Tuple t(arity, 0);
    for (;;) {
        fn(std::as_const(t));
        std::size_t i = arity;
        while (i > 0) {
            --i;
            if (++t[i] < size) break;
            t[i] = 0;
            if (i == 0) return;
        }
        if (arity == 0) return;
    }
}

/// Calls fn(tuple) for every nondecreasing tuple in [0,size)^arity, in lexicographic order.
template <class Fn>
void for_each_sorted_tuple(std::size_t arity, std::size_t size, Fn&& fn) {
    if (size == 0) return;
    Tuple t(arity, 0);
    for (;;) {
        fn(std::as_const(t));
        std::size_t i = arity;
        while (i > 0 && t[i - 1] == size - 1) --i;
        if (i == 0) return;
        const std::size_t v = t[i - 1] + 1;
        for (std::size_t j = i - 1; j < arity; ++j) t[j] = v;
    }
}

/// Calls fn(tuple) for every tuple in the cartesian product of the given sets.
template <class Set, class Fn>
void for_each_in_product(std::span<const Set> sets, Fn&& fn) {
    const std::size_t k = sets.size();
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < k; ++i) {
        members[i].assign(sets[i].begin(), sets[i].end());
        if (members[i].empty()) return;
    }
    std::vector<std::size_t> pos(k, 0);
    Tuple t(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) t[i] = members[i][pos[i]];
        fn(std::as_const(t));
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++pos[i] < members[i].size()) break;
            pos[i] = 0;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace hyperprime
