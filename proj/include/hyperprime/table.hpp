#pragma once

/**
 * @file table.hpp
 * @brief Commutative hyperoperation tables.
 *
 * HyperOpTable holds an m-ary (hyper)operation over one carrier; ActionTable
 * holds an external action R^{k} x M -> P*(M) whose scalar slots commute.
 * Both store one entry per sorted tuple, so commutativity holds by
 * construction and is never re-verified.
 */

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/tuples.hpp"

namespace hyperprime {

class HyperOpTable {
public:
    HyperOpTable() = default;

    /// entries[i] is the result for the sorted tuple of rank i.
    HyperOpTable(std::size_t arity, std::size_t carrier_size, std::vector<ElementSet> entries)
        : index_(arity, carrier_size), entries_(std::move(entries)) {
        if (carrier_size == 0 || carrier_size > kMaxCarrier)
            throw Error(ErrorKind::InvalidStructure, "carrier size out of range");
        if (entries_.size() != index_.count())
            throw Error(ErrorKind::InvalidStructure, "table is not total over sorted tuples");
        const auto carrier = ElementSet::full(carrier_size);
        for (auto e : entries_) {
            if (e.empty()) throw Error(ErrorKind::InvalidStructure, "empty hyperproduct");
            if (!e.subset_of(carrier)) throw Error(ErrorKind::OutOfCarrier, "result outside carrier");
        }
    }

    /// Builds a table by calling fn on every sorted tuple.
    static HyperOpTable from_function(std::size_t arity, std::size_t carrier_size,
                                      const std::function<ElementSet(const Tuple&)>& fn) {
        MultisetIndexer idx(arity, carrier_size);
        std::vector<ElementSet> entries(idx.count());
        for_each_sorted_tuple(arity, carrier_size,
                              [&](const Tuple& t) { entries[idx.rank_sorted(t)] = fn(t); });
        return HyperOpTable(arity, carrier_size, std::move(entries));
    }

    std::size_t arity() const { return index_.arity(); }
    std::size_t carrier_size() const { return index_.carrier_size(); }
    static constexpr bool commutative() { return true; }

    ElementSet at(std::span<const std::size_t> tuple) const { return entries_[index_.rank(tuple)]; }
    ElementSet at(std::initializer_list<std::size_t> tuple) const {
        return at(std::span<const std::size_t>(tuple.begin(), tuple.size()));
    }
    ElementSet at_sorted(std::span<const std::size_t> sorted) const {
        return entries_[index_.rank_sorted(sorted)];
    }

    /// Union of the entries over the cartesian product of the argument subsets.
    ElementSet eval(std::span<const ElementSet> args) const {
        if (args.size() != arity()) throw Error(ErrorKind::ArityMismatch, "argument count differs from arity");
        const auto carrier = ElementSet::full(carrier_size());
        for (auto a : args) {
            if (a.empty()) throw Error(ErrorKind::EmptyArgument, "empty argument subset");
            if (!a.subset_of(carrier)) throw Error(ErrorKind::OutOfCarrier, "argument outside carrier");
        }
        return eval_unchecked(args);
    }
    ElementSet eval(std::initializer_list<ElementSet> args) const {
        return eval(std::span<const ElementSet>(args.begin(), args.size()));
    }

    ElementSet eval_unchecked(std::span<const ElementSet> args) const {
        ElementSet out;
        std::array<std::size_t, kMaxArity> buf{};
        eval_rec(args, 0, buf, out);
        return out;
    }

    /// fn(sorted tuple, result) for each stored entry, lexicographic order.
    template <class Fn>
    void for_each_entry(Fn&& fn) const {
        for_each_sorted_tuple(arity(), carrier_size(),
                              [&](const Tuple& t) { fn(t, entries_[index_.rank_sorted(t)]); });
    }

    /// Copy with the entry for one tuple replaced.
    HyperOpTable with_entry(std::span<const std::size_t> tuple, ElementSet value) const {
        auto entries = entries_;
        entries[index_.rank(tuple)] = value;
        return HyperOpTable(arity(), carrier_size(), std::move(entries));
    }

    friend bool operator==(const HyperOpTable& a, const HyperOpTable& b) {
        return a.arity() == b.arity() && a.carrier_size() == b.carrier_size() && a.entries_ == b.entries_;
    }

private:
    void eval_rec(std::span<const ElementSet> args, std::size_t slot, std::array<std::size_t, kMaxArity>& buf,
                  ElementSet& out) const {
        if (slot == args.size()) {
            out |= at(std::span<const std::size_t>(buf.data(), args.size()));
            return;
        }
        for (auto x : args[slot]) {
            buf[slot] = x;
            eval_rec(args, slot + 1, buf, out);
        }
    }

    MultisetIndexer index_;
    std::vector<ElementSet> entries_;
};

class ActionTable {
public:
    ActionTable() = default;

    /// entries[rank(scalars) * module_size + a].
    ActionTable(std::size_t scalar_arity, std::size_t ring_size, std::size_t module_size,
                std::vector<ElementSet> entries)
        : index_(scalar_arity, ring_size), module_size_(module_size), entries_(std::move(entries)) {
        if (module_size == 0 || module_size > kMaxCarrier)
            throw Error(ErrorKind::InvalidStructure, "module carrier size out of range");
        if (entries_.size() != index_.count() * module_size)
            throw Error(ErrorKind::InvalidStructure, "action table is not total");
        const auto carrier = ElementSet::full(module_size);
        for (auto e : entries_) {
            if (e.empty()) throw Error(ErrorKind::InvalidStructure, "empty hyperproduct");
            if (!e.subset_of(carrier)) throw Error(ErrorKind::OutOfCarrier, "result outside carrier");
        }
    }

    static ActionTable from_function(std::size_t scalar_arity, std::size_t ring_size, std::size_t module_size,
                                     const std::function<ElementSet(const Tuple&, std::size_t)>& fn) {
        MultisetIndexer idx(scalar_arity, ring_size);
        std::vector<ElementSet> entries(idx.count() * module_size);
        for_each_sorted_tuple(scalar_arity, ring_size, [&](const Tuple& t) {
            const auto base = idx.rank_sorted(t) * module_size;
            for (std::size_t a = 0; a < module_size; ++a) entries[base + a] = fn(t, a);
        });
        return ActionTable(scalar_arity, ring_size, module_size, std::move(entries));
    }

    std::size_t scalar_arity() const { return index_.arity(); }
    std::size_t ring_size() const { return index_.carrier_size(); }
    std::size_t module_size() const { return module_size_; }

    ElementSet at(std::span<const std::size_t> scalars, std::size_t a) const {
        return entries_[index_.rank(scalars) * module_size_ + a];
    }

    /// Union over scalar_sets[0] x ... x scalar_sets[k-1] x elems.
    ElementSet eval(std::span<const ElementSet> scalar_sets, ElementSet elems) const {
        if (scalar_sets.size() != scalar_arity())
            throw Error(ErrorKind::ArityMismatch, "scalar count differs from arity");
        const auto ring = ElementSet::full(ring_size());
        for (auto s : scalar_sets) {
            if (s.empty()) throw Error(ErrorKind::EmptyArgument, "empty scalar subset");
            if (!s.subset_of(ring)) throw Error(ErrorKind::OutOfCarrier, "scalar outside ring");
        }
        if (elems.empty()) throw Error(ErrorKind::EmptyArgument, "empty argument subset");
        if (!elems.subset_of(ElementSet::full(module_size_)))
            throw Error(ErrorKind::OutOfCarrier, "argument outside carrier");
        return eval_unchecked(scalar_sets, elems);
    }

    ElementSet eval_unchecked(std::span<const ElementSet> scalar_sets, ElementSet elems) const {
        ElementSet out;
        std::array<std::size_t, kMaxArity> buf{};
        eval_rec(scalar_sets, elems, 0, buf, out);
        return out;
    }

    template <class Fn>
    void for_each_entry(Fn&& fn) const {
        for_each_sorted_tuple(scalar_arity(), ring_size(), [&](const Tuple& t) {
            const auto base = index_.rank_sorted(t) * module_size_;
            for (std::size_t a = 0; a < module_size_; ++a) fn(t, a, entries_[base + a]);
        });
    }

    ActionTable with_entry(std::span<const std::size_t> scalars, std::size_t a, ElementSet value) const {
        auto entries = entries_;
        entries[index_.rank(scalars) * module_size_ + a] = value;
        return ActionTable(scalar_arity(), ring_size(), module_size_, std::move(entries));
    }

    friend bool operator==(const ActionTable& a, const ActionTable& b) {
        return a.scalar_arity() == b.scalar_arity() && a.ring_size() == b.ring_size() &&
               a.module_size_ == b.module_size_ && a.entries_ == b.entries_;
    }

private:
    void eval_rec(std::span<const ElementSet> scalar_sets, ElementSet elems, std::size_t slot,
                  std::array<std::size_t, kMaxArity>& buf, ElementSet& out) const {
        if (slot == scalar_sets.size()) {
            const auto base = index_.rank(std::span<const std::size_t>(buf.data(), slot)) * module_size_;
            for (auto a : elems) out |= entries_[base + a];
            return;
        }
        for (auto r : scalar_sets[slot]) {
            buf[slot] = r;
            eval_rec(scalar_sets, elems, slot + 1, buf, out);
        }
    }

    MultisetIndexer index_;
    std::size_t module_size_ = 0;
    std::vector<ElementSet> entries_;
};

}  // namespace hyperprime
