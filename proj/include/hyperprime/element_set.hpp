#pragma once

/**
 * @file element_set.hpp
 * @brief Bitmask subsets of a finite carrier.
 *
 * Every carrier in this library has at most 64 elements, so a subset is a
 * single machine word. Element i of the carrier is bit i.
 */

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace hyperprime {

inline constexpr std::size_t kMaxCarrier = 64;

class ElementSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr std::size_t operator*() const {
            return static_cast<std::size_t>(std::countr_zero(rest_));
        }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ElementSet() = default;

    static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }
    static constexpr ElementSet single(std::size_t i) { return ElementSet(std::uint64_t{1} << i); }
    /// The whole carrier {0, ..., size-1}.
    static constexpr ElementSet full(std::size_t size) {
        return ElementSet(size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
    }
    template <class Range>
    static ElementSet of(const Range& indices) {
        ElementSet s;
        for (auto i : indices) s.insert(static_cast<std::size_t>(i));
        return s;
    }
    static ElementSet of(std::initializer_list<std::size_t> indices) {
        ElementSet s;
        for (auto i : indices) s.insert(i);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }
    constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return a &= b; }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return a -= b; }
    friend constexpr bool operator==(ElementSet, ElementSet) = default;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<std::size_t> elements() const { return {begin(), end()}; }

private:
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on the sorted member lists.
constexpr std::strong_ordering canonical_order(ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    if (a == b) return std::strong_ordering::equal;
    const auto diff = ElementSet::from_bits(a.bits() ^ b.bits());
    return a.contains(diff.front()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

struct CanonicalLess {
    constexpr bool operator()(ElementSet a, ElementSet b) const { return canonical_order(a, b) < 0; }
};

}  // namespace hyperprime
