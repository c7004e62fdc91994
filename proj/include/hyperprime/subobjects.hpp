#pragma once

/**
 * @file subobjects.hpp
 * @brief Hyperideals, subhypermodules, colon sets and torsion sets.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "hyperprime/axioms.hpp"
#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/structures.hpp"

namespace hyperprime {

enum class SubsetRole { Subset, Hyperideal, Subhypermodule };

constexpr std::string_view to_string(SubsetRole r) {
    switch (r) {
        case SubsetRole::Subset: return "subset";
        case SubsetRole::Hyperideal: return "hyperideal";
        case SubsetRole::Subhypermodule: return "subhypermodule";
    }
    return "subset";
}

/// A subset of a carrier. The carrier is the one of the structure it was computed from.
struct SubsetHandle {
    ElementSet members;
    SubsetRole role = SubsetRole::Subset;
    std::size_t parent_size = 0;

    bool proper() const { return members != ElementSet::full(parent_size); }
    friend bool operator==(const SubsetHandle&, const SubsetHandle&) = default;
};

namespace detail {

inline void require_nonempty(ElementSet s) {
    if (s.empty()) throw Error(ErrorKind::EmptySubset, "subset is empty");
}

inline void require_within(ElementSet s, std::size_t size) {
    if (!s.subset_of(ElementSet::full(size))) throw Error(ErrorKind::OutOfCarrier, "subset outside carrier");
}

/// f(S, ..., S).
inline ElementSet power_sum(const HyperOpTable& f, ElementSet s) {
    std::array<ElementSet, kMaxArity> args{};
    args.fill(s);
    return f.eval_unchecked(std::span<const ElementSet>(args.data(), f.arity()));
}

/// 0 in I, f(I^m) within I, and every x in I has an inverse in I.
inline bool is_subhypergroup(const HyperOpTable& f, std::size_t zero, const std::vector<ElementSet>& inv, ElementSet s) {
    if (!s.contains(zero)) return false;
    if (!power_sum(f, s).subset_of(s)) return false;
    for (auto x : s)
        if (!inv[x].intersects(s)) return false;
    return true;
}

/// g'(R, ..., R, x) for each x. Slots coincide because g' is commutative.
inline std::vector<ElementSet> ring_multiples(const Hyperring& R) {
    std::vector<ElementSet> out(R.size());
    R.mul().for_each_entry([&](const Tuple& t, ElementSet r) {
        for (auto x : t) out[x] |= r;
    });
    return out;
}

/// g(R^{n-1}, a) for each a.
inline std::vector<ElementSet> module_multiples(const Hypermodule& M) {
    std::vector<ElementSet> out(M.size());
    M.action().for_each_entry([&](const Tuple&, std::size_t a, ElementSet r) { out[a] |= r; });
    return out;
}

inline ElementSet union_over(const std::vector<ElementSet>& per_element, ElementSet s) {
    ElementSet out;
    for (auto x : s) out |= per_element[x];
    return out;
}

/// Least superset of seed containing zero and closed under f and the given multiples.
inline ElementSet close_under(const HyperOpTable& f, const std::vector<ElementSet>& multiples, std::size_t zero,
                              ElementSet seed) {
    ElementSet s = seed | ElementSet::single(zero);
    for (;;) {
        const ElementSet next = s | power_sum(f, s) | union_over(multiples, s);
        if (next == s) return s;
        s = next;
    }
}

/// Every set containing zero closed under f and multiples, reached by adding one element at a time.
inline std::vector<ElementSet> closed_sets(const HyperOpTable& f, const std::vector<ElementSet>& multiples,
                                           std::size_t zero, std::size_t size) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<ElementSet> out;
    std::deque<ElementSet> queue;
    const ElementSet base = close_under(f, multiples, zero, ElementSet());
    seen.insert(base.bits());
    queue.push_back(base);
    const ElementSet all = ElementSet::full(size);
    while (!queue.empty()) {
        const ElementSet c = queue.front();
        queue.pop_front();
        out.push_back(c);
        for (auto x : all - c) {
            const ElementSet next = close_under(f, multiples, zero, c | ElementSet::single(x));
            if (seen.insert(next.bits()).second) queue.push_back(next);
        }
    }
    return out;
}

inline std::vector<SubsetHandle> to_handles(std::vector<ElementSet> sets, SubsetRole role, std::size_t size) {
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    std::vector<SubsetHandle> out;
    out.reserve(sets.size());
    for (auto s : sets) out.push_back({s, role, size});
    return out;
}

}  // namespace detail

inline bool is_hyperideal(const Hyperring& R, ElementSet I) {
    detail::require_nonempty(I);
    detail::require_within(I, R.size());
    if (!detail::is_subhypergroup(R.add(), R.zero(), inverse_sets(R.add(), R.zero()), I)) return false;
    return detail::union_over(detail::ring_multiples(R), I).subset_of(I);
}

inline bool is_subhypermodule(const Hypermodule& M, ElementSet N) {
    detail::require_nonempty(N);
    detail::require_within(N, M.size());
    if (!detail::is_subhypergroup(M.add(), M.zero(), inverse_sets(M.add(), M.zero()), N)) return false;
    return detail::union_over(detail::module_multiples(M), N).subset_of(N);
}

/// Handle with role Subhypermodule; throws NotSub otherwise.
inline SubsetHandle as_subhypermodule(const Hypermodule& M, ElementSet N) {
    if (!is_subhypermodule(M, N))
        throw Error(ErrorKind::NotSub, M.carrier().format(N) + " is not a subhypermodule of " + M.name());
    return {N, SubsetRole::Subhypermodule, M.size()};
}

inline SubsetHandle as_hyperideal(const Hyperring& R, ElementSet I) {
    if (!is_hyperideal(R, I))
        throw Error(ErrorKind::NotSub, R.carrier().format(I) + " is not a hyperideal of " + R.name());
    return {I, SubsetRole::Hyperideal, R.size()};
}

/// All subhypermodules in canonical order (size, then lexicographic).
inline std::vector<SubsetHandle> enumerate_subhypermodules(const Hypermodule& M) {
    const auto inv = inverse_sets(M.add(), M.zero());
    auto closed = detail::closed_sets(M.add(), detail::module_multiples(M), M.zero(), M.size());
    std::erase_if(closed, [&](ElementSet s) { return !detail::is_subhypergroup(M.add(), M.zero(), inv, s); });
    return detail::to_handles(std::move(closed), SubsetRole::Subhypermodule, M.size());
}

inline std::vector<SubsetHandle> enumerate_hyperideals(const Hyperring& R) {
    const auto inv = inverse_sets(R.add(), R.zero());
    auto closed = detail::closed_sets(R.add(), detail::ring_multiples(R), R.zero(), R.size());
    std::erase_if(closed, [&](ElementSet s) { return !detail::is_subhypergroup(R.add(), R.zero(), inv, s); });
    return detail::to_handles(std::move(closed), SubsetRole::Hyperideal, R.size());
}

/// {g'(r, x, 1^{(n-2)}) | r in R}.
inline SubsetHandle generated_hyperideal(const Hyperring& R, std::size_t x) {
    if (x >= R.size()) throw Error(ErrorKind::OutOfCarrier, "element outside ring");
    ElementSet out;
    for (std::size_t r = 0; r < R.size(); ++r) out.insert(R.product_with_ones(r, x));
    if (!is_hyperideal(R, out))
        throw Error(ErrorKind::GeneratedNotIdeal,
                    "<" + R.carrier().label(x) + "> = " + R.carrier().format(out) + " is not a hyperideal");
    return {out, SubsetRole::Hyperideal, R.size()};
}

/// N_a = {r | g(r, 1^{(n-2)}, a) within N}.
inline SubsetHandle colon_Na(const Hypermodule& M, ElementSet N, std::size_t a) {
    detail::require_within(N, M.size());
    if (a >= M.size()) throw Error(ErrorKind::OutOfCarrier, "element outside module");
    ElementSet out;
    for (std::size_t r = 0; r < M.ring().size(); ++r)
        if (M.act_single(r, a).subset_of(N)) out.insert(r);
    return {out, SubsetRole::Subset, M.ring().size()};
}

/// S_N = {r | g(r, 1^{(n-2)}, M) within N}, by a direct scan over r and a.
inline SubsetHandle colon_SN(const Hypermodule& M, ElementSet N) {
    detail::require_within(N, M.size());
    ElementSet out;
    for (std::size_t r = 0; r < M.ring().size(); ++r) {
        bool inside = true;
        for (std::size_t a = 0; a < M.size() && inside; ++a) inside = M.act_single(r, a).subset_of(N);
        if (inside) out.insert(r);
    }
    return {out, SubsetRole::Subset, M.ring().size()};
}

/// Q_X = {r | g(r, 1^{(n-2)}, X) within Q}; equals the intersection of Q_x over x in X.
inline ElementSet colon_of_set(const Hypermodule& M, ElementSet Q, ElementSet X) {
    ElementSet out = M.ring().all();
    for (auto x : X) out &= colon_Na(M, Q, x).members;
    return out;
}

/// F_a = {0} together with every nonzero r having 0 in g(r, 1^{(n-2)}, a).
inline SubsetHandle torsion_Fm(const Hypermodule& M, std::size_t a) {
    if (a >= M.size()) throw Error(ErrorKind::OutOfCarrier, "element outside module");
    if (a == M.zero()) throw Error(ErrorKind::ZeroElement, "torsion set of the zero element");
    ElementSet out = ElementSet::single(M.ring().zero());
    for (std::size_t r = 0; r < M.ring().size(); ++r)
        if (M.act_single(r, a).contains(M.zero())) out.insert(r);
    return {out, SubsetRole::Subset, M.ring().size()};
}

/// F_X = {r | 0 in g(r, 1^{(n-2)}, X)}: some member of X is sent to a set containing 0.
inline ElementSet torsion_of_set(const Hypermodule& M, ElementSet X) {
    ElementSet out;
    for (std::size_t r = 0; r < M.ring().size(); ++r)
        if (M.act_single(ElementSet::single(r), X).contains(M.zero())) out.insert(r);
    return out;
}

inline bool is_faithful(const Hypermodule& M) {
    const auto zero = ElementSet::single(M.ring().zero());
    for (std::size_t a = 0; a < M.size(); ++a)
        if (a != M.zero() && torsion_Fm(M, a).members != zero) return false;
    return true;
}

/// Proper subhypermodules maximal under inclusion among proper ones.
inline std::vector<SubsetHandle> maximal_subhypermodules(const std::vector<SubsetHandle>& subs, std::size_t size) {
    const auto all = ElementSet::full(size);
    std::vector<SubsetHandle> out;
    for (const auto& s : subs) {
        if (s.members == all) continue;
        const bool maximal = std::none_of(subs.begin(), subs.end(), [&](const SubsetHandle& t) {
            return t.members != all && t.members != s.members && s.members.subset_of(t.members);
        });
        if (maximal) out.push_back(s);
    }
    return out;
}

inline std::vector<SubsetHandle> maximal_subhypermodules(const Hypermodule& M) {
    return maximal_subhypermodules(enumerate_subhypermodules(M), M.size());
}

}  // namespace hyperprime
