#pragma once

/**
 * @file classify.hpp
 * @brief Prime, classical prime, weakly classical prime and phi-classical prime tests.
 *
 * All scans walk sorted scalar tuples in lexicographic order and module
 * elements in carrier order, so the first counterexample returned is the
 * canonically smallest one.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/subobjects.hpp"
#include "hyperprime/tuples.hpp"

namespace hyperprime {

/// A scalar tuple and element violating a classification.
struct Counterexample {
    Tuple scalars;
    std::size_t element = 0;
};

struct Verdict {
    bool holds = true;
    std::optional<Counterexample> witness;
    /// Non-empty when two equivalent formulations disagreed.
    std::string diagnostic;

    explicit operator bool() const { return holds; }
};

/// Maps each subhypermodule of a module to a subhypermodule or to the empty set (an empty ElementSet).
struct PhiFunction {
    std::string name;
    std::function<ElementSet(const Hypermodule&, ElementSet)> rule;

    ElementSet operator()(const Hypermodule& M, ElementSet Q) const { return rule(M, Q); }
};

inline PhiFunction phi_empty() {
    return {"empty", [](const Hypermodule&, ElementSet) { return ElementSet(); }};
}
inline PhiFunction phi_zero() {
    return {"zero", [](const Hypermodule& M, ElementSet) { return M.zero_set(); }};
}
/// phi(N) = g(S_N, 1^{(n-2)}, N).
inline PhiFunction phi_ideal() {
    return {"ideal", [](const Hypermodule& M, ElementSet N) { return M.act_single(colon_SN(M, N).members, N); }};
}
inline PhiFunction phi_id() {
    return {"id", [](const Hypermodule&, ElementSet Q) { return Q; }};
}

inline std::vector<PhiFunction> phi_registry() { return {phi_empty(), phi_zero(), phi_ideal(), phi_id()}; }

inline PhiFunction phi_by_name(std::string_view name) {
    for (auto& p : phi_registry())
        if (p.name == name) return p;
    throw Error(ErrorKind::Parse, "unknown phi '" + std::string(name) + "' (expected empty|zero|ideal|id)");
}

/// phi(Q), verified to be empty or a subhypermodule.
inline ElementSet evaluate_phi(const Hypermodule& M, ElementSet Q, const PhiFunction& phi) {
    const ElementSet v = phi(M, Q);
    if (!v.empty() && !is_subhypermodule(M, v))
        throw Error(ErrorKind::PhiNotSub,
                    "phi_" + phi.name + "(" + M.carrier().format(Q) + ") = " + M.carrier().format(v) +
                        " is not a subhypermodule");
    return v;
}

namespace detail {

inline void require_proper_sub(const Hypermodule& M, ElementSet Q) {
    if (Q == M.all()) throw Error(ErrorKind::NotProper, "subhypermodule must be proper");
    if (!is_subhypermodule(M, Q))
        throw Error(ErrorKind::NotSub, M.carrier().format(Q) + " is not a subhypermodule of " + M.name());
}

/// single_ok[r] = {a | g(r, 1^{(n-2)}, a) within Q}.
inline std::vector<ElementSet> single_colons(const Hypermodule& M, ElementSet Q) {
    std::vector<ElementSet> out(M.ring().size());
    for (std::size_t r = 0; r < M.ring().size(); ++r)
        for (std::size_t a = 0; a < M.size(); ++a)
            if (M.act_single(r, a).subset_of(Q)) out[r].insert(a);
    return out;
}

/// Premise: g(r, a) within Q and disjoint from excluded (and 0 not in g(r, a) when require_nonzero).
/// Conclusion: some g(r_i, 1^{(n-2)}, a) within Q.
inline Verdict classical_scan(const Hypermodule& M, ElementSet Q, ElementSet excluded, bool require_nonzero) {
    const auto ok = single_colons(M, Q);
    Verdict v;
    for_each_sorted_tuple(M.n() - 1, M.ring().size(), [&](const Tuple& r) {
        if (!v.holds) return;
        for (std::size_t a = 0; a < M.size(); ++a) {
            const ElementSet X = M.act(r, a);
            if (!X.subset_of(Q) || X.intersects(excluded)) continue;
            if (require_nonzero && X.contains(M.zero())) continue;
            bool concl = false;
            for (auto ri : r) concl = concl || ok[ri].contains(a);
            if (!concl) {
                v.holds = false;
                v.witness = Counterexample{r, a};
                return;
            }
        }
    });
    return v;
}

}  // namespace detail

/// g(r, a) within Q implies some g(r_i, 1^{(n-2)}, a) within Q.
inline Verdict classical_prime(const Hypermodule& M, ElementSet Q) {
    detail::require_proper_sub(M, Q);
    return detail::classical_scan(M, Q, ElementSet(), false);
}

/// As classical_prime, but only when 0 is not in g(r, a).
inline Verdict weakly_classical_prime(const Hypermodule& M, ElementSet Q) {
    detail::require_proper_sub(M, Q);
    return detail::classical_scan(M, Q, ElementSet(), true);
}

/// As classical_prime, but only when g(r, a) avoids phi(Q).
inline Verdict phi_classical_prime(const Hypermodule& M, ElementSet Q, const PhiFunction& phi) {
    detail::require_proper_sub(M, Q);
    return detail::classical_scan(M, Q, evaluate_phi(M, Q, phi), false);
}

/// phi-classical test with phi(Q) already evaluated.
inline Verdict phi_classical_prime_given(const Hypermodule& M, ElementSet Q, ElementSet phi_q) {
    detail::require_proper_sub(M, Q);
    return detail::classical_scan(M, Q, phi_q, false);
}

inline bool is_classical_prime(const Hypermodule& M, ElementSet Q) { return classical_prime(M, Q).holds; }
inline bool is_weakly_classical_prime(const Hypermodule& M, ElementSet Q) {
    return weakly_classical_prime(M, Q).holds;
}
inline bool is_phi_classical_prime(const Hypermodule& M, ElementSet Q, const PhiFunction& phi) {
    return phi_classical_prime(M, Q, phi).holds;
}

/// n-ary prime: g(r, a) within N with a outside N implies g(r, M) within N.
/// The S_N form (a in N or some r_i in S_N) is evaluated alongside; disagreement sets the diagnostic.
inline Verdict prime(const Hypermodule& M, ElementSet N) {
    detail::require_proper_sub(M, N);
    const ElementSet SN = colon_SN(M, N).members;
    Verdict first;
    Verdict second;
    for_each_sorted_tuple(M.n() - 1, M.ring().size(), [&](const Tuple& r) {
        ElementSet whole;
        for (std::size_t a = 0; a < M.size(); ++a) whole |= M.act(r, a);
        bool some_in_S = false;
        for (auto ri : r) some_in_S = some_in_S || SN.contains(ri);
        for (std::size_t a = 0; a < M.size(); ++a) {
            if (!M.act(r, a).subset_of(N)) continue;
            if (first.holds && !N.contains(a) && !whole.subset_of(N)) {
                first.holds = false;
                first.witness = Counterexample{r, a};
            }
            if (second.holds && !N.contains(a) && !some_in_S) {
                second.holds = false;
                second.witness = Counterexample{r, a};
            }
        }
    });
    if (first.holds != second.holds)
        first.diagnostic = std::string("prime forms disagree: definition says ") + (first.holds ? "true" : "false") +
                           ", S_N form says " + (second.holds ? "true" : "false");
    return first;
}

/// The S_N form of primality alone.
inline Verdict prime_by_colon(const Hypermodule& M, ElementSet N) {
    detail::require_proper_sub(M, N);
    const ElementSet SN = colon_SN(M, N).members;
    Verdict v;
    for_each_sorted_tuple(M.n() - 1, M.ring().size(), [&](const Tuple& r) {
        if (!v.holds) return;
        bool some_in_S = false;
        for (auto ri : r) some_in_S = some_in_S || SN.contains(ri);
        for (std::size_t a = 0; a < M.size(); ++a) {
            if (M.act(r, a).subset_of(N) && !N.contains(a) && !some_in_S) {
                v.holds = false;
                v.witness = Counterexample{r, a};
                return;
            }
        }
    });
    return v;
}

inline bool is_prime(const Hypermodule& M, ElementSet N) { return prime(M, N).holds; }

/// A scalar tuple r and nonempty X with 0 in g(r, X) within Q and g(r_i, 1^{(n-2)}, X) outside Q for every i.
struct ClassicalZeroWitness {
    Tuple scalars;
    ElementSet subset;
};

inline constexpr std::size_t kDefaultZeroCap = 12;

inline bool is_classical_zero(const Hypermodule& M, ElementSet Q, const Tuple& r, ElementSet X) {
    if (X.empty()) return false;
    std::array<ElementSet, kMaxArity> scal{};
    for (std::size_t i = 0; i < r.size(); ++i) scal[i] = ElementSet::single(r[i]);
    const ElementSet img = M.act_sets(std::span<const ElementSet>(scal.data(), r.size()), X);
    if (!img.contains(M.zero()) || !img.subset_of(Q)) return false;
    for (auto ri : r)
        if (M.act_single(ElementSet::single(ri), X).subset_of(Q)) return false;
    return true;
}

namespace detail {

/// Calls fn(X) for every nonempty X within base, in increasing bitmask order.
template <class Fn>
void for_each_nonempty_subset(ElementSet base, Fn&& fn) {
    const auto b = base.bits();
    for (std::uint64_t s = (b & (~b + 1)); s != 0; s = (s - b) & b) fn(ElementSet::from_bits(s));
}

inline void require_zero_cap(ElementSet P, std::size_t cap) {
    if (P.size() > cap)
        throw Error(ErrorKind::CapExceeded,
                    "subset search over " + std::to_string(P.size()) + " elements exceeds cap " + std::to_string(cap));
}

}  // namespace detail

struct ClassicalZeroSearch {
    std::vector<ClassicalZeroWitness> witnesses;
    std::string warning;
};

/// Every classical zero of Q over sorted scalar tuples and nonempty X within M.
inline ClassicalZeroSearch find_classical_zeros(const Hypermodule& M, ElementSet Q, std::size_t cap = kDefaultZeroCap) {
    detail::require_proper_sub(M, Q);
    detail::require_zero_cap(M.all(), cap);
    ClassicalZeroSearch out;
    if (!detail::classical_scan(M, Q, ElementSet(), true).holds)
        out.warning = M.carrier().format(Q) + " is not weakly classical prime";
    for_each_sorted_tuple(M.n() - 1, M.ring().size(), [&](const Tuple& r) {
        detail::for_each_nonempty_subset(M.all(), [&](ElementSet X) {
            if (is_classical_zero(M, Q, r, X)) out.witnesses.push_back({r, X});
        });
    });
    return out;
}

/// Q is free of classical zeros over I_1 x ... x I_{n-1} and nonempty X within P.
inline bool is_free_classical_zero(const Hypermodule& M, ElementSet Q, const std::vector<ElementSet>& ideals,
                                   ElementSet P, std::size_t cap = kDefaultZeroCap) {
    detail::require_proper_sub(M, Q);
    if (ideals.size() != M.n() - 1) throw Error(ErrorKind::ArityMismatch, "expected n-1 hyperideals");
    if (!M.act_sets(ideals, P).subset_of(Q))
        throw Error(ErrorKind::PremiseFails, "g(I_1^{n-1}, P) is not contained in Q");
    detail::require_zero_cap(P, cap);
    bool free = true;
    for_each_in_product(std::span<const ElementSet>(ideals), [&](const Tuple& r) {
        if (!free) return;
        detail::for_each_nonempty_subset(P, [&](ElementSet X) {
            if (free && is_classical_zero(M, Q, r, X)) free = false;
        });
    });
    return free;
}

/// a is torsion free: g(r, a) = {0} (strict) or 0 in g(r, a) (loose) forces some r_i = 0.
inline bool is_torsion_free_element(const Hypermodule& M, std::size_t a, bool strict = true) {
    const auto z = M.ring().zero();
    bool ok = true;
    for_each_sorted_tuple(M.n() - 1, M.ring().size(), [&](const Tuple& r) {
        if (!ok || std::find(r.begin(), r.end(), z) != r.end()) return;
        const auto X = M.act(r, a);
        const bool hit = strict ? X == M.zero_set() : X.contains(M.zero());
        if (hit) ok = false;
    });
    return ok;
}

/// Every nonzero element is torsion free.
inline bool is_torsion_free(const Hypermodule& M, bool strict = true) {
    for (std::size_t a = 0; a < M.size(); ++a)
        if (a != M.zero() && !is_torsion_free_element(M, a, strict)) return false;
    return true;
}

/// S_K, which presents K whenever any hyperideal does.
inline SubsetHandle presentation_ideal(const Hypermodule& M, ElementSet K) {
    auto s = colon_SN(M, K);
    s.role = is_hyperideal(M.ring(), s.members) ? SubsetRole::Hyperideal : SubsetRole::Subset;
    return s;
}

inline bool presents(const Hypermodule& M, ElementSet I, ElementSet K) { return M.act_single(I, M.all()) == K; }

inline bool is_multiplication_module(const Hypermodule& M, const std::vector<SubsetHandle>& subs) {
    for (const auto& K : subs)
        if (!presents(M, colon_SN(M, K.members).members, K.members)) return false;
    return true;
}

inline bool is_multiplication_module(const Hypermodule& M) {
    return is_multiplication_module(M, enumerate_subhypermodules(M));
}

/// With n parts: g(g'(I_1^n), 1^{(n-2)}, M). With n-1 parts and a: g(I_1^{n-1}, a).
inline ElementSet submodule_product(const Hypermodule& M, const std::vector<ElementSet>& parts,
                                    std::optional<std::size_t> a = std::nullopt) {
    if (!is_multiplication_module(M)) throw Error(ErrorKind::NotMultiplication, M.name() + " is not a multiplication module");
    std::vector<ElementSet> ideals;
    for (auto K : parts) {
        if (!is_subhypermodule(M, K)) throw Error(ErrorKind::NotSub, M.carrier().format(K) + " is not a subhypermodule");
        ideals.push_back(colon_SN(M, K).members);
    }
    if (a) {
        if (ideals.size() != M.n() - 1) throw Error(ErrorKind::ArityMismatch, "expected n-1 parts with an element");
        return M.act_sets(ideals, ElementSet::single(*a));
    }
    if (ideals.size() != M.n()) throw Error(ErrorKind::ArityMismatch, "expected n parts");
    return M.act_single(M.ring().product_sets(ideals), M.all());
}

}  // namespace hyperprime
