#pragma once

/**
 * @file harness.hpp
 * @brief The theorems on classical, weakly classical and phi-classical prime
 * subhypermodules, run as falsifiable properties over a corpus.
 *
 * Every property yields one PropertyResult per corpus structure it applies to.
 * An instance is one choice of subhypermodules, scalars and elements. It is
 * non-vacuous when the premise of the implication holds; for a biconditional,
 * when either side holds.
 *
 * Readings used throughout:
 *  - "g(...) within Q - phi(Q)" means contained in Q and disjoint from phi(Q).
 *  - Q_X for a set X is the intersection of Q_x over x in X; F_X is
 *    {r | 0 in g(r, 1^{(n-2)}, X)}.
 *  - For the classical-zero properties, X ranges over nonempty subsets of P.
 *    Given g(r, P) within Q, every condition on X grows with X, so a classical
 *    zero inside P exists iff P itself is one, and only P is tested.
 *  - The product-factor property for Q_1 x Q_2 is checked with both factors
 *    proper, since its conclusion names them as proper subhypermodules.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperprime/classify.hpp"
#include "hyperprime/construct.hpp"
#include "hyperprime/corpus.hpp"
#include "hyperprime/element_set.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/subobjects.hpp"

namespace hyperprime {

enum class Status { Pass, Vacuous, Fail, Skipped };

constexpr std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Vacuous: return "vacuous";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "skipped";
}

struct PropertyResult {
    std::string theorem;
    std::string structure;
    Status status = Status::Skipped;
    std::size_t instances = 0;
    std::size_t nonvacuous = 0;
    std::size_t failures = 0;
    /// First failing instance, in element labels of the structure.
    std::string witness;
    /// Why the check or some of its instances were skipped.
    std::string reason;
};

struct TheoremInfo {
    std::string_view id;
    std::string_view statement;
};

inline const std::vector<TheoremInfo>& theorem_catalog() {
    static const std::vector<TheoremInfo> catalog = {
        {"phi-empty-reduction", "phi_empty-classical prime iff classical prime"},
        {"phi-zero-reduction", "phi_zero-classical prime iff weakly classical prime"},
        {"prime-forms", "n-ary prime by definition iff by the S_N form"},
        {"ideal-form-classical", "classical prime iff g(I_1^{n-1},N) within Q forces some g(I_i,1,N) within Q"},
        {"saturation-classical", "classical prime iff the saturation condition on S = M - Q holds"},
        {"maximal-avoider", "Q maximal among subhypermodules avoiding a saturated S is classical prime"},
        {"intersection-of-maximals", "classical primes of N are intersections of maximals (M/N torsion free, g = {0})"},
        {"intersection-of-maximals-loose", "as intersection-of-maximals with torsion free read as 0 in g"},
        {"torsion-free-colon", "weakly classical Q, a outside Q with F_a = {0}: 0 != g'(r) in Q_a forces some r_i in Q_a"},
        {"weakly-lift", "P weakly classical and Q/P weakly classical in M/P give Q weakly classical"},
        {"weakly-hom-image", "epimorphism with kernel inside Q_1 sends weakly classical Q_1 to weakly classical"},
        {"weakly-hom-preimage", "monomorphism pulls weakly classical Q_2 back to weakly classical when proper"},
        {"weakly-quotient", "Q weakly classical and P strictly inside Q give Q/P weakly classical"},
        {"projection-kernel", "the kernel of M -> M/P is P"},
        {"zero-free-3ary", "no classical zero (r, X) with X within P forces some g(r_i,1,P) within Q"},
        {"free-zero-ideals-3ary", "Q free of classical zeros over g(I_1^2,P) forces some g(I_i,1,P) within Q"},
        {"weakly-colon-cover", "Q_X within F_X union the Q_{g(r_i,1,a)}, X = g(r,a), for weakly classical Q"},
        {"weakly-product-factor", "Q_1 x M_2 weakly classical iff Q_1 weakly classical and the F_{a_2} condition"},
        {"classical-product-ring", "over R_1 x R_2: Q_1 classical, Q_1 x M_2 classical, Q_1 x M_2 weakly are equivalent"},
        {"phi-quotient", "Q phi-classical and N within Q give Q/N phi_N-classical"},
        {"phi-quotient-1", "Q phi-classical with phi(Q) within N gives Q/N weakly classical"},
        {"phi-quotient-2", "Q/N phi_N-classical with N within phi(Q) gives Q phi-classical"},
        {"phi-quotient-3", "N phi-classical, phi(N) within phi(Q), Q/N weakly classical give Q phi-classical"},
        {"phi-by-quotient", "Q phi-classical iff Q/phi(Q) weakly classical in M/phi(Q)"},
        {"phi-ring-colon-1", "Q phi-classical: g'(r) in Q_a - phi'(Q_a) forces some r_i in Q_a"},
        {"phi-ring-colon-2", "the ring-colon condition for every a outside Q gives Q phi-classical"},
        {"phi-hom-preimage", "epimorphism pulls phi_2-classical back to phi_1-classical when phi is compatible"},
        {"phi-hom-image", "epimorphism with kernel inside Q_1 pushes phi_1-classical to phi_2-classical"},
        {"phi-colon-cover", "Q_X within phi(Q)_X union the Q_{g(r_i,1,a)}, X = g(r,a), for phi-classical Q"},
        {"phi-ideal-form", "phi-classical iff the condition holds for all hyperideal tuples"},
        {"phi-multiplication", "on multiplication modules: phi-classical iff the condition holds for subhypermodule tuples"},
        {"phi-product-weakly", "Q_1 weakly classical and {0} x M_2 within phi(Q_1 x M_2) give phi-classical"},
        {"phi-product-full", "with phi_2(M_2) = M_2: Q_1 x M_2 phi_1 x phi_2-classical iff Q_1 phi_1-classical"},
        {"phi-product-factors", "Q_1 x Q_2 phi_1 x phi_2-classical gives both factors phi_i-classical"},
    };
    return catalog;
}

inline bool is_theorem_id(std::string_view id) {
    const auto& c = theorem_catalog();
    return std::any_of(c.begin(), c.end(), [&](const TheoremInfo& t) { return t.id == id; });
}

/// The classification predicates the harness relies on; replaceable to test the harness itself.
/// Each is only called with a proper subhypermodule.
struct Classifiers {
    std::function<bool(const Hypermodule&, ElementSet)> classical = [](const Hypermodule& M, ElementSet Q) {
        return classical_prime(M, Q).holds;
    };
    std::function<bool(const Hypermodule&, ElementSet)> weakly = [](const Hypermodule& M, ElementSet Q) {
        return weakly_classical_prime(M, Q).holds;
    };
    /// phi-classical with phi(Q) supplied.
    std::function<bool(const Hypermodule&, ElementSet, ElementSet)> phi = [](const Hypermodule& M, ElementSet Q,
                                                                             ElementSet phi_q) {
        return phi_classical_prime_given(M, Q, phi_q).holds;
    };
    std::function<bool(const Hypermodule&, ElementSet)> prime = [](const Hypermodule& M, ElementSet Q) {
        return hyperprime::prime(M, Q).holds;
    };
};

struct HarnessOptions {
    /// Theorem ids to run; empty runs all.
    std::vector<std::string> theorems;
    Classifiers classifiers;
};

/// Accumulates the instances of one property on one structure.
class Tally {
public:
    Tally(std::string_view theorem, std::string structure) {
        r_.theorem = std::string(theorem);
        r_.structure = std::move(structure);
    }

    /// holds() is only evaluated when the premise is true; witness() only on the first failure.
    template <class Holds, class Witness>
    void check(bool premise, Holds&& holds, Witness&& witness) {
        ++r_.instances;
        if (!premise) return;
        ++r_.nonvacuous;
        if (holds()) return;
        if (r_.failures++ == 0) r_.witness = witness();
    }

    template <class Witness>
    void biconditional(bool lhs, bool rhs, Witness&& witness) {
        check(lhs || rhs, [&] { return lhs == rhs; }, witness);
    }

    void skip(std::string reason) {
        if (r_.reason.empty()) r_.reason = std::move(reason);
    }

    PropertyResult finish() && {
        if (r_.failures > 0)
            r_.status = Status::Fail;
        else if (r_.instances == 0)
            r_.status = Status::Skipped;
        else if (r_.nonvacuous == 0)
            r_.status = Status::Vacuous;
        else
            r_.status = Status::Pass;
        if (r_.status == Status::Skipped && r_.reason.empty()) r_.reason = "no instances";
        return std::move(r_);
    }

private:
    PropertyResult r_;
};

namespace detail {

inline std::uint64_t pair_key(ElementSet a, ElementSet b) { return a.bits() * 0x9E3779B97F4A7C15ull ^ b.bits(); }

struct ModuleFacts {
    ModulePtr module;
    std::vector<ElementSet> subs;
    std::vector<ElementSet> proper;
    std::unordered_set<std::uint64_t> sub_bits;
    std::vector<ElementSet> ideals;
    std::unordered_map<std::uint64_t, bool> classical;
    std::unordered_map<std::uint64_t, bool> weakly;
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> phi_given;
    std::vector<std::unordered_map<std::uint64_t, std::optional<ElementSet>>> phi_value;
};

/// (g(I_1^{n-1}, X), g(I_i, 1^{(n-2)}, X) for each i), deduplicated, with the first inputs that produced it.
struct ImagePattern {
    ElementSet joint;
    std::vector<ElementSet> singles;
    std::string origin;
};

inline bool pattern_holds(const ImagePattern& p, ElementSet Q, ElementSet avoid) {
    if (!p.joint.subset_of(Q) || p.joint.intersects(avoid)) return true;
    return std::any_of(p.singles.begin(), p.singles.end(), [&](ElementSet y) { return y.subset_of(Q); });
}

}  // namespace detail

class Harness {
public:
    Harness(const Corpus& corpus, HarnessOptions opts) : corpus_(corpus), opts_(std::move(opts)) {}

    std::vector<PropertyResult> run() {
        out_.clear();
        for (const auto& e : corpus_.entries) run_entry(e);
        return std::move(out_);
    }

private:
    using Phi = PhiFunction;

    const Corpus& corpus_;
    HarnessOptions opts_;
    std::vector<Phi> phis_ = phi_registry();
    std::unordered_map<const Hypermodule*, std::unique_ptr<detail::ModuleFacts>> facts_;
    std::map<std::pair<const Hypermodule*, std::uint64_t>, std::shared_ptr<const Quotient>> quotients_;
    std::vector<PropertyResult> out_;

    bool wants(std::string_view id) const {
        if (opts_.theorems.empty()) return true;
        return std::find(opts_.theorems.begin(), opts_.theorems.end(), id) != opts_.theorems.end();
    }

    void emit(Tally&& t) { out_.push_back(std::move(t).finish()); }

    // ------------------------------------------------------------ cached facts

    detail::ModuleFacts& facts(const ModulePtr& M) {
        auto& slot = facts_[M.get()];
        if (!slot) {
            slot = std::make_unique<detail::ModuleFacts>();
            slot->module = M;
            for (const auto& s : enumerate_subhypermodules(*M)) {
                slot->subs.push_back(s.members);
                slot->sub_bits.insert(s.members.bits());
                if (s.proper()) slot->proper.push_back(s.members);
            }
            for (const auto& i : enumerate_hyperideals(M->ring())) slot->ideals.push_back(i.members);
            slot->phi_value.resize(phis_.size());
        }
        return *slot;
    }

    bool is_sub(const ModulePtr& M, ElementSet Q) { return facts(M).sub_bits.count(Q.bits()) != 0; }
    bool is_proper_sub(const ModulePtr& M, ElementSet Q) { return Q != M->all() && is_sub(M, Q); }

    bool classical(const ModulePtr& M, ElementSet Q) {
        if (!is_proper_sub(M, Q)) return false;
        auto& c = facts(M).classical;
        auto it = c.find(Q.bits());
        if (it == c.end()) it = c.emplace(Q.bits(), opts_.classifiers.classical(*M, Q)).first;
        return it->second;
    }

    bool weakly(const ModulePtr& M, ElementSet Q) {
        if (!is_proper_sub(M, Q)) return false;
        auto& c = facts(M).weakly;
        auto it = c.find(Q.bits());
        if (it == c.end()) it = c.emplace(Q.bits(), opts_.classifiers.weakly(*M, Q)).first;
        return it->second;
    }

    /// phi-classical with a given phi(Q); false unless Q is a proper subhypermodule and phi(Q) is empty or one.
    bool phi_given(const ModulePtr& M, ElementSet Q, ElementSet v) {
        if (!is_proper_sub(M, Q) || (!v.empty() && !is_sub(M, v))) return false;
        auto& c = facts(M).phi_given;
        const auto key = std::make_pair(Q.bits(), v.bits());
        auto it = c.find(key);
        if (it == c.end()) it = c.emplace(key, opts_.classifiers.phi(*M, Q, v)).first;
        return it->second;
    }

    /// Registry phi at Q; nullopt when the value is neither empty nor a subhypermodule.
    std::optional<ElementSet> phi_value(const ModulePtr& M, std::size_t idx, ElementSet Q) {
        auto& c = facts(M).phi_value[idx];
        auto it = c.find(Q.bits());
        if (it == c.end()) {
            const ElementSet v = phis_[idx](*M, Q);
            std::optional<ElementSet> r;
            if (v.empty() || is_sub(M, v)) r = v;
            it = c.emplace(Q.bits(), r).first;
        }
        return it->second;
    }

    bool phi_cp(const ModulePtr& M, std::size_t idx, ElementSet Q) {
        const auto v = phi_value(M, idx, Q);
        return v && phi_given(M, Q, *v);
    }

    std::shared_ptr<const Quotient> quotient_of(const ModulePtr& M, ElementSet P) {
        const auto key = std::make_pair(M.get(), P.bits());
        auto it = quotients_.find(key);
        if (it == quotients_.end()) {
            std::shared_ptr<const Quotient> q;
            auto made = std::make_shared<Quotient>(quotient(M, P, {.allow_axiom_failure = true}));
            if (made->report.ok()) q = made;
            it = quotients_.emplace(key, q).first;
        }
        return it->second;
    }

    // ------------------------------------------------------------ formatting

    static std::string fmt(const Hypermodule& M, ElementSet S) { return M.carrier().format(S); }
    static std::string fmt_ring(const Hypermodule& M, ElementSet S) { return M.ring().carrier().format(S); }
    static std::string fmt_scalars(const Hypermodule& M, const Tuple& r) { return M.ring().carrier().format_tuple(r); }
    std::string phi_name(std::size_t idx) const { return "phi_" + phis_[idx].name; }

    // ------------------------------------------------------------ shared scans

    /// Patterns over all sorted (n-1)-tuples of the given scalar sets and each set X in xs.
    std::vector<detail::ImagePattern> image_patterns(const Hypermodule& M, const std::vector<ElementSet>& scalar_sets,
                                                     const std::vector<ElementSet>& xs,
                                                     const std::function<std::string(std::size_t)>& name_set,
                                                     const std::function<std::string(ElementSet)>& name_x) {
        std::vector<detail::ImagePattern> out;
        std::set<std::vector<std::uint64_t>> seen;
        const std::size_t k = M.n() - 1;
        for_each_sorted_tuple(k, scalar_sets.size(), [&](const Tuple& t) {
            std::vector<ElementSet> I(k);
            for (std::size_t i = 0; i < k; ++i) I[i] = scalar_sets[t[i]];
            for (auto X : xs) {
                detail::ImagePattern p;
                p.joint = M.act_sets(I, X);
                std::vector<std::uint64_t> key{p.joint.bits()};
                for (auto Ii : I) {
                    p.singles.push_back(M.act_single(Ii, X));
                    key.push_back(p.singles.back().bits());
                }
                if (!seen.insert(key).second) continue;
                std::string o = "(";
                for (std::size_t i = 0; i < k; ++i) o += (i ? "," : "") + name_set(t[i]);
                p.origin = o + ") on " + name_x(X);
                out.push_back(std::move(p));
            }
        });
        return out;
    }

    static std::vector<ElementSet> singletons(const Hypermodule& M) {
        std::vector<ElementSet> out;
        for (std::size_t a = 0; a < M.size(); ++a) out.push_back(ElementSet::single(a));
        return out;
    }

    // ------------------------------------------------------------ dispatch

    void run_entry(const CorpusEntry& e) {
        const auto& M = e.module;
        facts(M);
        reductions(e);
        if (wants("prime-forms")) prime_forms(e);
        if (wants("ideal-form-classical")) ideal_form_classical(e);
        if (wants("saturation-classical") || wants("maximal-avoider")) saturation(e);
        if (wants("intersection-of-maximals") || wants("intersection-of-maximals-loose")) intersection_of_maximals(e);
        if (wants("torsion-free-colon")) torsion_free_colon(e);
        if (wants("weakly-lift") || wants("weakly-quotient") || wants("projection-kernel")) quotient_weakly(e);
        if (wants("weakly-hom-image") || wants("weakly-hom-preimage") || wants("phi-hom-preimage") ||
            wants("phi-hom-image"))
            homomorphisms(e);
        if (wants("zero-free-3ary") || wants("free-zero-ideals-3ary")) zero_theorems(e);
        if (wants("weakly-colon-cover") || wants("phi-colon-cover")) colon_covers(e);
        if (wants("phi-quotient") || wants("phi-quotient-1") || wants("phi-quotient-2") || wants("phi-quotient-3"))
            phi_quotients(e);
        if (wants("phi-by-quotient")) phi_by_quotient(e);
        if (wants("phi-ring-colon-1") || wants("phi-ring-colon-2")) phi_ring_colon(e);
        if (wants("phi-ideal-form")) phi_ideal_form(e);
        if (wants("phi-multiplication")) phi_multiplication(e);
        if (e.product && !e.product->over_product_ring && wants("weakly-product-factor")) weakly_product_factor(e);
        if (e.product && e.product->over_product_ring) product_ring_theorems(e);
    }

    // ------------------------------------------------------------ classifier identities

    void reductions(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        if (wants("phi-empty-reduction")) {
            Tally t("phi-empty-reduction", e.id);
            for (auto Q : F.proper)
                t.biconditional(phi_given(M, Q, ElementSet()), classical(M, Q), [&] { return "Q=" + fmt(*M, Q); });
            emit(std::move(t));
        }
        if (wants("phi-zero-reduction")) {
            Tally t("phi-zero-reduction", e.id);
            for (auto Q : F.proper)
                t.biconditional(phi_given(M, Q, M->zero_set()), weakly(M, Q), [&] { return "Q=" + fmt(*M, Q); });
            emit(std::move(t));
        }
    }

    void prime_forms(const CorpusEntry& e) {
        const auto& M = e.module;
        Tally t("prime-forms", e.id);
        for (auto N : facts(M).proper) {
            const bool def = opts_.classifiers.prime(*M, N);
            const bool colon = prime_by_colon(*M, N).holds;
            t.biconditional(def, colon, [&] {
                return "N=" + fmt(*M, N) + " definition=" + (def ? "true" : "false") +
                       " S_N form=" + (colon ? "true" : "false");
            });
        }
        emit(std::move(t));
    }

    void ideal_form_classical(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        const auto pats = image_patterns(
            *M, F.ideals, F.subs, [&](std::size_t i) { return fmt_ring(*M, F.ideals[i]); },
            [&](ElementSet N) { return fmt(*M, N); });
        Tally t("ideal-form-classical", e.id);
        for (auto Q : F.proper) {
            const detail::ImagePattern* bad = nullptr;
            for (const auto& p : pats)
                if (!detail::pattern_holds(p, Q, ElementSet())) {
                    bad = &p;
                    break;
                }
            const bool lhs = classical(M, Q);
            t.biconditional(lhs, bad == nullptr, [&] {
                return "Q=" + fmt(*M, Q) + " classical=" + (lhs ? "true" : "false") +
                       (bad ? " ideal form fails at " + bad->origin : " ideal form holds");
            });
        }
        emit(std::move(t));
    }

    /// Saturation triples f(N_1, g(I_i,1,N_2), 0) and f(N_1, g(I,N_2), 0).
    void saturation(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        const auto pats = image_patterns(
            *M, F.ideals, F.subs, [&](std::size_t i) { return fmt_ring(*M, F.ideals[i]); },
            [&](ElementSet N) { return fmt(*M, N); });
        struct Triple {
            std::vector<ElementSet> parts;
            ElementSet whole;
            std::string origin;
        };
        std::vector<Triple> triples;
        std::set<std::vector<std::uint64_t>> seen;
        std::unordered_map<std::uint64_t, ElementSet> sums;
        auto sum = [&](ElementSet N1, ElementSet X) {
            const auto key = detail::pair_key(N1, X);
            auto it = sums.find(key);
            if (it == sums.end()) it = sums.emplace(key, M->sum_with(N1, X)).first;
            return it->second;
        };
        for (auto N1 : F.subs) {
            for (const auto& p : pats) {
                Triple tr;
                tr.whole = sum(N1, p.joint);
                std::vector<std::uint64_t> key{tr.whole.bits()};
                for (auto y : p.singles) {
                    tr.parts.push_back(sum(N1, y));
                    key.push_back(tr.parts.back().bits());
                }
                if (!seen.insert(key).second) continue;
                tr.origin = "N_1=" + fmt(*M, N1) + " I=" + p.origin;
                triples.push_back(std::move(tr));
            }
        }
        // First triple violating the saturation condition for S, or null.
        auto violation = [&](ElementSet S) -> const Triple* {
            for (const auto& tr : triples) {
                const bool all_meet =
                    std::all_of(tr.parts.begin(), tr.parts.end(), [&](ElementSet x) { return x.intersects(S); });
                if (all_meet && !tr.whole.intersects(S)) return &tr;
            }
            return nullptr;
        };
        const ElementSet all = M->all();
        if (wants("saturation-classical")) {
            Tally t("saturation-classical", e.id);
            for (auto Q : F.proper) {
                const auto* bad = violation(all - Q);
                const bool lhs = classical(M, Q);
                t.biconditional(lhs, bad == nullptr, [&] {
                    return "Q=" + fmt(*M, Q) + " classical=" + (lhs ? "true" : "false") +
                           (bad ? " saturation fails at " + bad->origin : " saturation holds");
                });
            }
            emit(std::move(t));
        }
        if (wants("maximal-avoider")) {
            Tally t("maximal-avoider", e.id);
            for (auto Qc : F.proper) {
                const ElementSet S = all - Qc;
                const bool saturated = violation(S) == nullptr;
                for (auto Q : F.subs) {
                    if (Q.intersects(S)) continue;
                    const bool maximal = std::none_of(F.subs.begin(), F.subs.end(), [&](ElementSet B) {
                        return B != Q && Q.subset_of(B) && !B.intersects(S);
                    });
                    if (!maximal) continue;
                    t.check(
                        saturated, [&] { return classical(M, Q); },
                        [&] { return "S=" + fmt(*M, S) + " Q=" + fmt(*M, Q); });
                }
            }
            emit(std::move(t));
        }
    }

    /// Q equals the intersection of the maximal subhypermodules containing it.
    static bool is_intersection_of_maximals(ElementSet Q, const std::vector<ElementSet>& maximals, ElementSet all) {
        ElementSet meet = all;
        bool any = false;
        for (auto K : maximals)
            if (Q.subset_of(K)) {
                meet &= K;
                any = true;
            }
        return any && meet == Q;
    }

    std::vector<ElementSet> maximals_of(const ModulePtr& M) {
        std::vector<SubsetHandle> handles;
        for (auto s : facts(M).subs) handles.push_back({s, SubsetRole::Subhypermodule, M->size()});
        std::vector<ElementSet> out;
        for (const auto& h : maximal_subhypermodules(handles, M->size())) out.push_back(h.members);
        return out;
    }

    /// First classical prime of M that is not an intersection of maximals, or nullopt.
    std::optional<ElementSet> classical_not_intersection(const ModulePtr& M) {
        const auto maxs = maximals_of(M);
        for (auto Q : facts(M).proper)
            if (classical(M, Q) && !is_intersection_of_maximals(Q, maxs, M->all())) return Q;
        return std::nullopt;
    }

    void intersection_of_maximals(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        Tally strict("intersection-of-maximals", e.id);
        Tally loose("intersection-of-maximals-loose", e.id);
        const bool premise_m = !classical_not_intersection(M).has_value();
        for (auto N : F.subs) {
            const auto q = quotient_of(M, N);
            if (!q) {
                strict.skip("quotient by " + fmt(*M, N) + " fails its axioms");
                loose.skip("quotient by " + fmt(*M, N) + " fails its axioms");
                continue;
            }
            const bool tf_strict = is_torsion_free(*q->module, true);
            const bool tf_loose = is_torsion_free(*q->module, false);
            std::optional<std::optional<ElementSet>> bad;
            std::shared_ptr<const Restriction> res;
            auto conclusion = [&] {
                if (!bad) {
                    res = std::make_shared<Restriction>(restrict_to(M, N));
                    bad = classical_not_intersection(res->module);
                }
                return !bad->has_value();
            };
            auto witness = [&] {
                return "N=" + fmt(*M, N) + " Q=" + fmt(*M, res->to_parent(**bad)) +
                       " is classical prime in N but not an intersection of maximals of N";
            };
            if (wants("intersection-of-maximals")) strict.check(premise_m && tf_strict, conclusion, witness);
            if (wants("intersection-of-maximals-loose")) loose.check(premise_m && tf_loose, conclusion, witness);
        }
        if (wants("intersection-of-maximals")) emit(std::move(strict));
        if (wants("intersection-of-maximals-loose")) emit(std::move(loose));
    }

    // ------------------------------------------------------------ weakly classical transport

    void torsion_free_colon(const CorpusEntry& e) {
        const auto& M = e.module;
        const auto& R = M->ring();
        const ElementSet zero_r = ElementSet::single(R.zero());
        Tally t("torsion-free-colon", e.id);
        for (auto Q : facts(M).proper) {
            if (!weakly(M, Q)) continue;
            for (std::size_t a = 0; a < M->size(); ++a) {
                if (Q.contains(a) || torsion_Fm(*M, a).members != zero_r) continue;
                const ElementSet Qa = colon_Na(*M, Q, a).members;
                for_each_sorted_tuple(M->n(), R.size(), [&](const Tuple& r) {
                    const std::size_t p = R.product(r);
                    t.check(
                        p != R.zero() && Qa.contains(p),
                        [&] { return std::any_of(r.begin(), r.end(), [&](std::size_t x) { return Qa.contains(x); }); },
                        [&] {
                            return "Q=" + fmt(*M, Q) + " a=" + M->carrier().label(a) + " r=" + fmt_scalars(*M, r) +
                                   " Q_a=" + fmt_ring(*M, Qa);
                        });
                });
            }
        }
        emit(std::move(t));
    }

    void quotient_weakly(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        Tally kernel("projection-kernel", e.id);
        Tally lift("weakly-lift", e.id);
        Tally down("weakly-quotient", e.id);
        for (auto P : F.subs) {
            const auto q = quotient_of(M, P);
            if (!q) {
                for (auto* t : {&kernel, &lift, &down}) t->skip("quotient by " + fmt(*M, P) + " fails its axioms");
                continue;
            }
            const auto pi = q->projection_hom();
            kernel.check(
                true, [&] { return pi.kernel() == P; },
                [&] { return "P=" + fmt(*M, P) + " kernel=" + fmt(*M, pi.kernel()); });
            if (P == M->all()) continue;
            for (auto Q : F.proper) {
                if (Q == P || !P.subset_of(Q)) continue;
                const ElementSet QP = q->lift(Q);
                auto w = [&] { return "P=" + fmt(*M, P) + " Q=" + fmt(*M, Q) + " Q/P=" + fmt(*q->module, QP); };
                lift.check(
                    weakly(M, P) && weakly(q->module, QP), [&] { return weakly(M, Q); }, w);
                down.check(
                    weakly(M, Q), [&] { return weakly(q->module, QP); }, w);
            }
        }
        if (wants("projection-kernel")) emit(std::move(kernel));
        if (wants("weakly-lift")) emit(std::move(lift));
        if (wants("weakly-quotient")) emit(std::move(down));
    }

    struct NamedHom {
        std::string name;
        Homomorphism h;
    };

    /// Identity, projections onto quotients, and for products over one ring the coordinate maps.
    std::vector<NamedHom> homs_from(const CorpusEntry& e, Tally& skips) {
        const auto& M = e.module;
        std::vector<NamedHom> out;
        out.push_back({"identity", identity_hom(M)});
        for (auto P : facts(M).proper) {
            const auto q = quotient_of(M, P);
            if (!q) {
                skips.skip("quotient by " + fmt(*M, P) + " fails its axioms");
                continue;
            }
            out.push_back({"projection onto M/" + fmt(*M, P), q->projection_hom()});
        }
        if (e.product && !e.product->over_product_ring) {
            const auto& p = *e.product;
            auto add = [&](std::string name, ElementMap map, ModulePtr from, ModulePtr to) {
                try {
                    out.push_back({std::move(name), check_homomorphism(std::move(map), from, to)});
                } catch (const Error& err) {
                    skips.skip(name + " is not a homomorphism: " + err.what());
                }
            };
            add("first projection", p.projection_left(), p.module, p.left);
            add("second projection", p.projection_right(), p.module, p.right);
            add("first injection", p.injection_left(), p.left, p.module);
            add("second injection", p.injection_right(), p.right, p.module);
        }
        return out;
    }

    void homomorphisms(const CorpusEntry& e) {
        Tally image("weakly-hom-image", e.id);
        Tally pre("weakly-hom-preimage", e.id);
        Tally phi_pre("phi-hom-preimage", e.id);
        Tally phi_img("phi-hom-image", e.id);
        const auto homs = homs_from(e, image);
        for (const auto& [name, h] : homs) {
            const auto& M1 = h.source;
            const auto& M2 = h.target;
            const ElementSet ker = h.kernel();
            if (h.is_epi()) {
                for (auto Q1 : facts(M1).proper) {
                    const ElementSet img = h.image(Q1);
                    image.check(
                        weakly(M1, Q1) && ker.subset_of(Q1), [&] { return weakly(M2, img); },
                        [&] { return name + ": Q_1=" + fmt(*M1, Q1) + " h(Q_1)=" + fmt(*M2, img); });
                }
                for (std::size_t i = 0; i < phis_.size(); ++i) {
                    for (std::size_t j = 0; j < phis_.size(); ++j) {
                        for (auto Q2 : facts(M2).proper) {
                            const ElementSet P = h.preimage(Q2);
                            const auto v1 = phi_value(M1, i, P);
                            const auto v2 = phi_value(M2, j, Q2);
                            if (!v1 || !v2) {
                                phi_pre.skip("phi value is not a subhypermodule");
                                continue;
                            }
                            phi_pre.check(
                                phi_cp(M2, j, Q2) && *v1 == h.preimage(*v2), [&] { return phi_cp(M1, i, P); },
                                [&] {
                                    return name + ": " + phi_name(i) + "/" + phi_name(j) + " Q_2=" + fmt(*M2, Q2) +
                                           " preimage=" + fmt(*M1, P);
                                });
                        }
                        for (auto Q1 : facts(M1).proper) {
                            const ElementSet img = h.image(Q1);
                            const auto v1 = phi_value(M1, i, Q1);
                            const auto v2 = phi_value(M2, j, img);
                            if (!v1 || !v2) {
                                phi_img.skip("phi value is not a subhypermodule");
                                continue;
                            }
                            phi_img.check(
                                phi_cp(M1, i, Q1) && ker.subset_of(Q1) && *v2 == h.image(*v1),
                                [&] { return phi_cp(M2, j, img); },
                                [&] {
                                    return name + ": " + phi_name(i) + "/" + phi_name(j) + " Q_1=" + fmt(*M1, Q1) +
                                           " h(Q_1)=" + fmt(*M2, img);
                                });
                        }
                    }
                }
            }
            if (h.is_mono()) {
                for (auto Q2 : facts(M2).proper) {
                    const ElementSet P = h.preimage(Q2);
                    pre.check(
                        weakly(M2, Q2) && P != M1->all(), [&] { return weakly(M1, P); },
                        [&] { return name + ": Q_2=" + fmt(*M2, Q2) + " preimage=" + fmt(*M1, P); });
                }
            }
        }
        if (wants("weakly-hom-image")) emit(std::move(image));
        if (wants("weakly-hom-preimage")) emit(std::move(pre));
        if (wants("phi-hom-preimage")) emit(std::move(phi_pre));
        if (wants("phi-hom-image")) emit(std::move(phi_img));
    }

    // ------------------------------------------------------------ classical zeros

    void zero_theorems(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        Tally single("zero-free-3ary", e.id);
        Tally ideal("free-zero-ideals-3ary", e.id);
        if (M->m() != 3 || M->n() != 3) {
            single.skip("3-ary only");
            ideal.skip("3-ary only");
        } else {
            const std::size_t rs = M->ring().size();
            for (auto Q : F.proper) {
                const bool wq = weakly(M, Q);
                for_each_sorted_tuple(2, rs, [&](const Tuple& r) {
                    const std::array<ElementSet, 2> rset{ElementSet::single(r[0]), ElementSet::single(r[1])};
                    for (auto P : F.subs) {
                        if (!M->act_sets(rset, P).subset_of(Q)) continue;
                        single.check(
                            wq && !is_classical_zero(*M, Q, r, P),
                            [&] {
                                return M->act_single(rset[0], P).subset_of(Q) || M->act_single(rset[1], P).subset_of(Q);
                            },
                            [&] { return "Q=" + fmt(*M, Q) + " r=" + fmt_scalars(*M, r) + " P=" + fmt(*M, P); });
                    }
                });
                for_each_sorted_tuple(2, F.ideals.size(), [&](const Tuple& t) {
                    const std::array<ElementSet, 2> I{F.ideals[t[0]], F.ideals[t[1]]};
                    for (auto P : F.subs) {
                        if (!M->act_sets(I, P).subset_of(Q)) continue;
                        auto free = [&] {
                            bool ok = true;
                            for_each_in_product(std::span<const ElementSet>(I), [&](const Tuple& r) {
                                ok = ok && !is_classical_zero(*M, Q, r, P);
                            });
                            return ok;
                        };
                        ideal.check(
                            wq && free(),
                            [&] { return M->act_single(I[0], P).subset_of(Q) || M->act_single(I[1], P).subset_of(Q); },
                            [&] {
                                return "Q=" + fmt(*M, Q) + " I=(" + fmt_ring(*M, I[0]) + "," + fmt_ring(*M, I[1]) +
                                       ") P=" + fmt(*M, P);
                            });
                    }
                });
            }
        }
        if (wants("zero-free-3ary")) emit(std::move(single));
        if (wants("free-zero-ideals-3ary")) emit(std::move(ideal));
    }

    // ------------------------------------------------------------ colon covers

    void colon_covers(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        const std::size_t k = M->n() - 1;
        const std::size_t rs = M->ring().size();
        struct Image {
            Tuple r;
            std::size_t a;
            ElementSet X;
            std::vector<ElementSet> singles;
            ElementSet torsion;
        };
        std::vector<Image> images;
        for_each_sorted_tuple(k, rs, [&](const Tuple& r) {
            for (std::size_t a = 0; a < M->size(); ++a) {
                Image im{r, a, M->act(r, a), {}, ElementSet()};
                for (auto ri : r) im.singles.push_back(M->act_single(ri, a));
                im.torsion = torsion_of_set(*M, im.X);
                images.push_back(std::move(im));
            }
        });
        // colon[x] = N_x for a fixed N.
        auto colons = [&](ElementSet N) {
            std::vector<ElementSet> c(M->size());
            if (N.empty()) return c;
            for (std::size_t x = 0; x < M->size(); ++x) c[x] = colon_Na(*M, N, x).members;
            return c;
        };
        auto colon_set = [&](const std::vector<ElementSet>& c, ElementSet X) {
            ElementSet out = M->ring().all();
            for (auto x : X) out &= c[x];
            return out;
        };
        Tally weak("weakly-colon-cover", e.id);
        Tally phi("phi-colon-cover", e.id);
        for (auto Q : F.proper) {
            const auto cq = colons(Q);
            auto cover_lhs = [&](const Image& im) { return colon_set(cq, im.X); };
            auto cover_rest = [&](const Image& im) {
                ElementSet u;
                for (auto y : im.singles) u |= colon_set(cq, y);
                return u;
            };
            if (wants("weakly-colon-cover") && weakly(M, Q)) {
                for (const auto& im : images)
                    weak.check(
                        true, [&] { return cover_lhs(im).subset_of(im.torsion | cover_rest(im)); },
                        [&] {
                            return "Q=" + fmt(*M, Q) + " r=" + fmt_scalars(*M, im.r) + " a=" + M->carrier().label(im.a) +
                                   " Q_X=" + fmt_ring(*M, cover_lhs(im)) + " F_X=" + fmt_ring(*M, im.torsion);
                        });
            }
            if (!wants("phi-colon-cover")) continue;
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                const auto v = phi_value(M, i, Q);
                if (!v) {
                    phi.skip("phi value is not a subhypermodule");
                    continue;
                }
                if (!phi_cp(M, i, Q)) continue;
                const auto cv = colons(*v);
                for (const auto& im : images) {
                    const ElementSet pv = v->empty() ? ElementSet() : colon_set(cv, im.X);
                    phi.check(
                        true, [&] { return cover_lhs(im).subset_of(pv | cover_rest(im)); },
                        [&] {
                            return phi_name(i) + " Q=" + fmt(*M, Q) + " r=" + fmt_scalars(*M, im.r) +
                                   " a=" + M->carrier().label(im.a) + " Q_X=" + fmt_ring(*M, cover_lhs(im)) +
                                   " phi(Q)_X=" + fmt_ring(*M, pv);
                        });
                }
            }
        }
        if (wants("weakly-colon-cover")) emit(std::move(weak));
        if (wants("phi-colon-cover")) emit(std::move(phi));
    }

    // ------------------------------------------------------------ phi and quotients

    void phi_quotients(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        Tally t0("phi-quotient", e.id);
        Tally t1("phi-quotient-1", e.id);
        Tally t2("phi-quotient-2", e.id);
        Tally t3("phi-quotient-3", e.id);
        for (auto N : F.proper) {
            const auto q = quotient_of(M, N);
            if (!q) {
                for (auto* t : {&t0, &t1, &t2, &t3}) t->skip("quotient by " + fmt(*M, N) + " fails its axioms");
                continue;
            }
            const auto& MN = q->module;
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                const auto lifted = lifted_phi(phis_[i], q);
                const auto phN = phi_value(M, i, N);
                for (auto Q : F.proper) {
                    if (!N.subset_of(Q)) continue;
                    const auto phQ = phi_value(M, i, Q);
                    if (!phQ || !phN) {
                        for (auto* t : {&t0, &t1, &t2, &t3}) t->skip("phi value is not a subhypermodule");
                        continue;
                    }
                    const ElementSet QN = q->lift(Q);
                    const ElementSet lv = lifted(*MN, QN);
                    auto w = [&] {
                        return phi_name(i) + " N=" + fmt(*M, N) + " Q=" + fmt(*M, Q) + " Q/N=" + fmt(*MN, QN) +
                               " phi_N(Q/N)=" + fmt(*MN, lv);
                    };
                    const bool qcp = phi_cp(M, i, Q);
                    t0.check(
                        qcp, [&] { return phi_given(MN, QN, lv); }, w);
                    t1.check(
                        qcp && phQ->subset_of(N), [&] { return weakly(MN, QN); }, w);
                    t2.check(
                        !phQ->empty() && N.subset_of(*phQ) && phi_given(MN, QN, lv), [&] { return qcp; }, w);
                    t3.check(
                        phi_cp(M, i, N) && phN->subset_of(*phQ) && weakly(MN, QN), [&] { return qcp; }, w);
                }
            }
        }
        if (wants("phi-quotient")) emit(std::move(t0));
        if (wants("phi-quotient-1")) emit(std::move(t1));
        if (wants("phi-quotient-2")) emit(std::move(t2));
        if (wants("phi-quotient-3")) emit(std::move(t3));
    }

    void phi_by_quotient(const CorpusEntry& e) {
        const auto& M = e.module;
        Tally t("phi-by-quotient", e.id);
        for (auto Q : facts(M).proper) {
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                const auto v = phi_value(M, i, Q);
                if (!v || v->empty() || !v->subset_of(Q)) {
                    t.skip("phi(Q) empty, not a subhypermodule, or not inside Q");
                    continue;
                }
                const auto q = quotient_of(M, *v);
                if (!q) {
                    t.skip("quotient by phi(Q) fails its axioms");
                    continue;
                }
                const bool lhs = phi_cp(M, i, Q);
                const bool rhs = weakly(q->module, q->lift(Q));
                t.biconditional(lhs, rhs, [&] {
                    return phi_name(i) + " Q=" + fmt(*M, Q) + " phi(Q)=" + fmt(*M, *v) +
                           " phi-classical=" + (lhs ? "true" : "false") + " quotient weakly=" + (rhs ? "true" : "false");
                });
            }
        }
        emit(std::move(t));
    }

    /// phi' on hyperideals: the empty set or {0}.
    void phi_ring_colon(const CorpusEntry& e) {
        const auto& M = e.module;
        const auto& R = M->ring();
        Tally t1("phi-ring-colon-1", e.id);
        Tally t2("phi-ring-colon-2", e.id);
        const std::array<std::pair<std::string, ElementSet>, 2> primes{
            std::pair{std::string("phi'_empty"), ElementSet()},
            std::pair{std::string("phi'_zero"), ElementSet::single(R.zero())}};
        std::vector<Tuple> tuples;
        for_each_sorted_tuple(M->n(), R.size(), [&](const Tuple& r) { tuples.push_back(r); });
        for (auto Q : facts(M).proper) {
            std::vector<ElementSet> Qa(M->size());
            for (std::size_t a = 0; a < M->size(); ++a) Qa[a] = colon_Na(*M, Q, a).members;
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                const auto v = phi_value(M, i, Q);
                if (!v) {
                    t1.skip("phi value is not a subhypermodule");
                    t2.skip("phi value is not a subhypermodule");
                    continue;
                }
                const bool qcp = phi_cp(M, i, Q);
                for (const auto& [pname, pval] : primes) {
                    // First (a, r) where the ring-colon condition fails, if any.
                    std::optional<std::pair<std::size_t, Tuple>> cond_fail;
                    bool side_all = true;
                    for (std::size_t a = 0; a < M->size(); ++a) {
                        if (Q.contains(a)) continue;
                        const ElementSet phi_a = v->empty() ? ElementSet() : colon_Na(*M, *v, a).members;
                        const ElementSet phi_prime = Qa[a].contains(R.zero()) ? pval : ElementSet();
                        side_all = side_all && phi_prime.subset_of(phi_a);
                        for (const auto& r : tuples) {
                            const std::size_t p = R.product(r);
                            const bool premise = Qa[a].contains(p) && !phi_prime.contains(p);
                            const bool concl =
                                std::any_of(r.begin(), r.end(), [&](std::size_t x) { return Qa[a].contains(x); });
                            if (wants("phi-ring-colon-1") && qcp && phi_a.subset_of(phi_prime))
                                t1.check(
                                    premise, [&] { return concl; },
                                    [&] {
                                        return phi_name(i) + " " + pname + " Q=" + fmt(*M, Q) +
                                               " a=" + M->carrier().label(a) + " r=" + fmt_scalars(*M, r);
                                    });
                            if (premise && !concl && !cond_fail) cond_fail = std::pair{a, r};
                        }
                    }
                    t2.check(
                        side_all && !cond_fail, [&] { return qcp; },
                        [&] { return phi_name(i) + " " + pname + " Q=" + fmt(*M, Q); });
                }
            }
        }
        if (wants("phi-ring-colon-1")) emit(std::move(t1));
        if (wants("phi-ring-colon-2")) emit(std::move(t2));
    }

    void phi_ideal_form(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        const auto pats = image_patterns(
            *M, F.ideals, singletons(*M), [&](std::size_t i) { return fmt_ring(*M, F.ideals[i]); },
            [&](ElementSet a) { return M->carrier().label(a.front()); });
        Tally t("phi-ideal-form", e.id);
        for (auto Q : F.proper) {
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                const auto v = phi_value(M, i, Q);
                if (!v) {
                    t.skip("phi value is not a subhypermodule");
                    continue;
                }
                const detail::ImagePattern* bad = nullptr;
                for (const auto& p : pats)
                    if (!detail::pattern_holds(p, Q, *v)) {
                        bad = &p;
                        break;
                    }
                const bool lhs = phi_cp(M, i, Q);
                t.biconditional(lhs, bad == nullptr, [&] {
                    return phi_name(i) + " Q=" + fmt(*M, Q) + " phi(Q)=" + fmt(*M, *v) +
                           " phi-classical=" + (lhs ? "true" : "false") +
                           (bad ? " ideal form fails at " + bad->origin : " ideal form holds");
                });
            }
        }
        emit(std::move(t));
    }

    void phi_multiplication(const CorpusEntry& e) {
        const auto& M = e.module;
        auto& F = facts(M);
        Tally t("phi-multiplication", e.id);
        std::vector<ElementSet> presenting;
        bool multiplication = true;
        for (auto K : F.subs) {
            presenting.push_back(colon_SN(*M, K).members);
            multiplication = multiplication && presents(*M, presenting.back(), K);
        }
        if (!multiplication) {
            t.skip("not a multiplication module");
        } else {
            const auto pats = image_patterns(
                *M, presenting, singletons(*M), [&](std::size_t i) { return fmt(*M, F.subs[i]); },
                [&](ElementSet a) { return M->carrier().label(a.front()); });
            for (auto Q : F.proper) {
                for (std::size_t i = 0; i < phis_.size(); ++i) {
                    const auto v = phi_value(M, i, Q);
                    if (!v) {
                        t.skip("phi value is not a subhypermodule");
                        continue;
                    }
                    const detail::ImagePattern* bad = nullptr;
                    for (const auto& p : pats)
                        if (!detail::pattern_holds(p, Q, *v)) {
                            bad = &p;
                            break;
                        }
                    const bool lhs = phi_cp(M, i, Q);
                    t.biconditional(lhs, bad == nullptr, [&] {
                        return phi_name(i) + " Q=" + fmt(*M, Q) + " phi(Q)=" + fmt(*M, *v) +
                               " phi-classical=" + (lhs ? "true" : "false") +
                               (bad ? " product form fails at " + bad->origin : " product form holds");
                    });
                }
            }
        }
        emit(std::move(t));
    }

    // ------------------------------------------------------------ products

    void weakly_product_factor(const CorpusEntry& e) {
        const auto& p = *e.product;
        const auto& M1 = p.left;
        const auto& M2 = p.right;
        const auto& R = M1->ring();
        const std::size_t k = M1->n() - 1;
        Tally t("weakly-product-factor", e.id);
        for (auto Q1 : facts(M1).proper) {
            const ElementSet Q = p.rectangle(Q1, M2->all());
            std::string cond_witness;
            bool cond = true;
            for_each_sorted_tuple(k, R.size(), [&](const Tuple& r) {
                if (!cond) return;
                Tuple padded = r;
                padded.push_back(R.one());
                const std::size_t x = R.product(padded);
                for (std::size_t a1 = 0; a1 < M1->size() && cond; ++a1) {
                    if (!M1->act(r, a1).contains(M1->zero())) continue;
                    const bool escapes =
                        std::all_of(r.begin(), r.end(), [&](std::size_t ri) { return !M1->act_single(ri, a1).subset_of(Q1); });
                    if (!escapes) continue;
                    for (std::size_t a2 = 0; a2 < M2->size(); ++a2) {
                        if (a2 == M2->zero() || x == R.zero() || M2->act_single(x, a2).contains(M2->zero())) continue;
                        cond = false;
                        cond_witness = " r=" + fmt_scalars(*M1, r) + " a_1=" + M1->carrier().label(a1) +
                                       " a_2=" + M2->carrier().label(a2);
                        break;
                    }
                }
            });
            const bool lhs = weakly(e.module, Q);
            const bool w1 = weakly(M1, Q1);
            t.biconditional(lhs, w1 && cond, [&] {
                return "Q_1=" + fmt(*M1, Q1) + " product weakly=" + (lhs ? "true" : "false") +
                       " factor weakly=" + (w1 ? "true" : "false") + " condition " +
                       (cond ? "holds" : "fails at" + cond_witness);
            });
        }
        emit(std::move(t));
    }

    void product_ring_theorems(const CorpusEntry& e) {
        const auto& p = e.product;
        const auto& P = e.module;
        const auto& M1 = p->left;
        const auto& M2 = p->right;
        Tally t413("classical-product-ring", e.id);
        Tally t511("phi-product-weakly", e.id);
        Tally t512("phi-product-full", e.id);
        Tally t513("phi-product-factors", e.id);
        const ElementSet zero_by_m2 = p->rectangle(M1->zero_set(), M2->all());
        for (auto Q1 : facts(M1).proper) {
            const ElementSet Q = p->rectangle(Q1, M2->all());
            const bool c1 = classical(M1, Q1);
            const bool c2 = classical(P, Q);
            const bool c3 = weakly(P, Q);
            t413.check(
                c1 || c2 || c3, [&] { return c1 == c2 && c2 == c3; },
                [&] {
                    return "Q_1=" + fmt(*M1, Q1) + " (1)=" + (c1 ? "true" : "false") + " (2)=" + (c2 ? "true" : "false") +
                           " (3)=" + (c3 ? "true" : "false");
                });
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                const auto v = phi_value(P, i, Q);
                if (!v) {
                    t511.skip("phi value is not a subhypermodule");
                    continue;
                }
                t511.check(
                    weakly(M1, Q1) && zero_by_m2.subset_of(*v), [&] { return phi_cp(P, i, Q); },
                    [&] { return phi_name(i) + " Q_1=" + fmt(*M1, Q1) + " phi=" + fmt(*P, *v); });
            }
            for (std::size_t i = 0; i < phis_.size(); ++i) {
                for (std::size_t j = 0; j < phis_.size(); ++j) {
                    if (phis_[j](*M2, M2->all()) != M2->all()) continue;
                    const ElementSet v = product_phi(phis_[i], phis_[j], p)(*P, Q);
                    const bool lhs = phi_given(P, Q, v);
                    const bool rhs = phi_cp(M1, i, Q1);
                    t512.biconditional(lhs, rhs, [&] {
                        return phi_name(i) + " x " + phi_name(j) + " Q_1=" + fmt(*M1, Q1) +
                               " product=" + (lhs ? "true" : "false") + " factor=" + (rhs ? "true" : "false");
                    });
                }
            }
            for (auto Q2 : facts(M2).proper) {
                const ElementSet K = p->rectangle(Q1, Q2);
                for (std::size_t i = 0; i < phis_.size(); ++i) {
                    for (std::size_t j = 0; j < phis_.size(); ++j) {
                        const ElementSet v = product_phi(phis_[i], phis_[j], p)(*P, K);
                        t513.check(
                            phi_given(P, K, v), [&] { return phi_cp(M1, i, Q1) && phi_cp(M2, j, Q2); },
                            [&] {
                                return phi_name(i) + " x " + phi_name(j) + " Q_1=" + fmt(*M1, Q1) +
                                       " Q_2=" + fmt(*M2, Q2);
                            });
                    }
                }
            }
        }
        if (wants("classical-product-ring")) emit(std::move(t413));
        if (wants("phi-product-weakly")) emit(std::move(t511));
        if (wants("phi-product-full")) emit(std::move(t512));
        if (wants("phi-product-factors")) emit(std::move(t513));
    }
};

inline std::vector<PropertyResult> run_harness(const Corpus& corpus, HarnessOptions opts = {}) {
    for (const auto& id : opts.theorems)
        if (!is_theorem_id(id)) throw Error(ErrorKind::Parse, "unknown theorem id '" + id + "'");
    return Harness(corpus, std::move(opts)).run();
}

struct TheoremSummary {
    std::string theorem;
    std::size_t pass = 0, vacuous = 0, fail = 0, skipped = 0;
    std::size_t instances = 0, nonvacuous = 0;
};

/// Per-theorem totals in catalog order.
inline std::vector<TheoremSummary> summarize(const std::vector<PropertyResult>& results) {
    std::vector<TheoremSummary> out;
    for (const auto& t : theorem_catalog()) {
        TheoremSummary s{std::string(t.id)};
        bool seen = false;
        for (const auto& r : results) {
            if (r.theorem != t.id) continue;
            seen = true;
            s.instances += r.instances;
            s.nonvacuous += r.nonvacuous;
            switch (r.status) {
                case Status::Pass: ++s.pass; break;
                case Status::Vacuous: ++s.vacuous; break;
                case Status::Fail: ++s.fail; break;
                case Status::Skipped: ++s.skipped; break;
            }
        }
        if (seen) out.push_back(s);
    }
    return out;
}

inline bool any_failure(const std::vector<PropertyResult>& results) {
    return std::any_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.status == Status::Fail; });
}

}  // namespace hyperprime
