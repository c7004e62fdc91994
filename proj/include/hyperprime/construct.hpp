#pragma once

/**
 * @file construct.hpp
 * @brief Quotients, cartesian products, restrictions and homomorphisms.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperprime/axioms.hpp"
#include "hyperprime/classify.hpp"
#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/format.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/subobjects.hpp"

namespace hyperprime {

using ElementMap = std::vector<std::size_t>;

struct Homomorphism {
    ModulePtr source;
    ModulePtr target;
    ElementMap map;

    ElementSet image(ElementSet S) const {
        ElementSet out;
        for (auto a : S) out.insert(map[a]);
        return out;
    }
    ElementSet preimage(ElementSet T) const {
        ElementSet out;
        for (std::size_t a = 0; a < map.size(); ++a)
            if (T.contains(map[a])) out.insert(a);
        return out;
    }
    ElementSet kernel() const { return preimage(target->zero_set()); }
    bool is_epi() const { return image(source->all()) == target->all(); }
    bool is_mono() const { return image(source->all()).size() == source->size(); }
};

/// Checks both homomorphism identities over all tuples; throws NotHom with the first violation.
inline Homomorphism check_homomorphism(ElementMap map, ModulePtr M1, ModulePtr M2) {
    if (!same_ring(M1->ring(), M2->ring()))
        throw Error(ErrorKind::RingMismatch, M1->name() + " and " + M2->name() + " are over different rings");
    if (map.size() != M1->size()) throw Error(ErrorKind::NotHom, "map is not total on " + M1->name());
    for (auto b : map)
        if (b >= M2->size()) throw Error(ErrorKind::OutOfCarrier, "map sends outside " + M2->name());
    Homomorphism h{M1, M2, std::move(map)};
    const auto& c1 = M1->carrier();
    const auto& rc = M1->ring().carrier();
    const std::size_t m = M1->m();
    M1->add().for_each_entry([&](const Tuple& t, ElementSet r) {
        Tuple ht(m);
        for (std::size_t i = 0; i < m; ++i) ht[i] = h.map[t[i]];
        const auto lhs = h.image(r);
        const auto rhs = M2->add().at(ht);
        if (lhs != rhs)
            throw Error(ErrorKind::NotHom, "h(f" + c1.format_tuple(t) + ") = " + M2->carrier().format(lhs) +
                                               " but f" + M2->carrier().format_tuple(ht) + " = " +
                                               M2->carrier().format(rhs));
    });
    M1->action().for_each_entry([&](const Tuple& t, std::size_t a, ElementSet r) {
        const auto lhs = h.image(r);
        const auto rhs = M2->act(t, h.map[a]);
        if (lhs != rhs)
            throw Error(ErrorKind::NotHom, "h(g" + rc.format_tuple(t) + " at " + c1.label(a) + ") = " +
                                               M2->carrier().format(lhs) + " but g at " +
                                               M2->carrier().label(h.map[a]) + " = " + M2->carrier().format(rhs));
    });
    return h;
}

inline Homomorphism identity_hom(ModulePtr M) {
    ElementMap id(M->size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return check_homomorphism(std::move(id), M, M);
}

/// Parses "a:b,c:d" with labels of source and target.
inline ElementMap parse_map(const std::string& text, const Hypermodule& M1, const Hypermodule& M2) {
    ElementMap map(M1.size(), M1.size() + M2.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const auto pair = text.substr(pos, comma - pos);
        const auto colon = pair.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::Parse, "map entry '" + pair + "' lacks ':'");
        const auto a = M1.carrier().index_of(pair.substr(0, colon));
        const auto b = M2.carrier().index_of(pair.substr(colon + 1));
        if (map[a] != M1.size() + M2.size()) throw Error(ErrorKind::Parse, "element mapped twice");
        map[a] = b;
        pos = comma + 1;
    }
    for (std::size_t a = 0; a < map.size(); ++a)
        if (map[a] >= M2.size()) throw Error(ErrorKind::NotHom, "map is not total: " + M1.carrier().label(a) + " unmapped");
    return map;
}

// ---------------------------------------------------------------- quotient

struct QuotientOptions {
    /// Return the quotient even when it fails its module axioms.
    bool allow_axiom_failure = false;
};

struct Quotient {
    ModulePtr source;
    ElementSet N;
    ModulePtr module;
    /// cosets[c] is the member set f(a, N, 0^{(m-2)}) of coset c.
    std::vector<ElementSet> cosets;
    /// projection[a] is the coset of a.
    ElementMap projection;
    AxiomReport report;

    /// Q/N = {coset(q) | q in Q}.
    ElementSet lift(ElementSet Q) const {
        ElementSet out;
        for (auto q : Q) out.insert(projection[q]);
        return out;
    }
    /// {a | coset(a) in K}.
    ElementSet pull(ElementSet K) const {
        ElementSet out;
        for (std::size_t a = 0; a < projection.size(); ++a)
            if (K.contains(projection[a])) out.insert(a);
        return out;
    }
    Homomorphism projection_hom() const { return check_homomorphism(projection, source, module); }
};

inline std::string coset_label(const Carrier& c, ElementSet members) {
    std::string out = "{";
    bool first = true;
    for (auto i : members) {
        if (!first) out += ';';
        out += c.label(i);
        first = false;
    }
    return out + "}";
}

/// M/N on the cosets f(a, N, 0^{(m-2)}). F and G take the union over every representative of each coset.
inline Quotient quotient(ModulePtr M, ElementSet N, QuotientOptions opts = {}) {
    if (N.empty() || !is_subhypermodule(*M, N))
        throw Error(ErrorKind::NotSub, M->carrier().format(N) + " is not a subhypermodule of " + M->name());
    Quotient q;
    q.source = M;
    q.N = N;
    const std::size_t s = M->size();
    q.projection.resize(s);
    for (std::size_t a = 0; a < s; ++a) {
        const ElementSet C = M->sum_with(ElementSet::single(a), N);
        auto it = std::find(q.cosets.begin(), q.cosets.end(), C);
        q.projection[a] = static_cast<std::size_t>(it - q.cosets.begin());
        if (it == q.cosets.end()) q.cosets.push_back(C);
    }
    const std::size_t k = q.cosets.size();
    std::vector<ElementSet> reps(k);
    for (std::size_t a = 0; a < s; ++a) reps[q.projection[a]].insert(a);

    std::vector<std::string> labels;
    for (auto C : q.cosets) labels.push_back(coset_label(M->carrier(), C));

    const std::size_t m = M->m();
    auto add = HyperOpTable::from_function(m, k, [&](const Tuple& t) {
        std::array<ElementSet, kMaxArity> args{};
        for (std::size_t i = 0; i < m; ++i) args[i] = reps[t[i]];
        return q.lift(M->add().eval_unchecked(std::span<const ElementSet>(args.data(), m)));
    });
    const auto& R = M->ring();
    auto act = ActionTable::from_function(R.n() - 1, R.size(), k, [&](const Tuple& r, std::size_t c) {
        ElementSet out;
        for (auto a : reps[c]) out |= q.lift(M->act(r, a));
        return out;
    });
    q.module = std::make_shared<const Hypermodule>(M->name() + "/" + coset_label(M->carrier(), N), M->ring_ptr(),
                                                   Carrier(std::move(labels)), std::move(add), std::move(act),
                                                   q.projection[M->zero()], M->unital());
    q.report = verify_module_axioms(*q.module, {.require_valid_ring = false});
    if (!q.report.ok() && !opts.allow_axiom_failure) {
        for (const auto& r : q.report.results)
            if (!r.pass())
                throw Error(ErrorKind::QuotientAxiomFailure,
                            q.module->name() + " fails " + r.id + ": " + r.detail);
    }
    return q;
}

// ---------------------------------------------------------------- restriction

struct Restriction {
    ModulePtr module;
    /// embedding[i] is the element of the parent that element i of the restriction stands for.
    ElementMap embedding;

    ElementSet to_parent(ElementSet S) const {
        ElementSet out;
        for (auto i : S) out.insert(embedding[i]);
        return out;
    }
    ElementSet from_parent(ElementSet S) const {
        ElementSet out;
        for (std::size_t i = 0; i < embedding.size(); ++i)
            if (S.contains(embedding[i])) out.insert(i);
        return out;
    }
};

/// The subhypermodule N as a hypermodule in its own right, labels preserved.
inline Restriction restrict_to(ModulePtr M, ElementSet N) {
    if (N.empty() || !is_subhypermodule(*M, N))
        throw Error(ErrorKind::NotSub, M->carrier().format(N) + " is not a subhypermodule of " + M->name());
    Restriction out;
    out.embedding = N.elements();
    std::vector<std::size_t> local(M->size(), 0);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.embedding.size(); ++i) {
        local[out.embedding[i]] = i;
        labels.push_back(M->carrier().label(out.embedding[i]));
    }
    auto to_local = [&](ElementSet S) {
        ElementSet r;
        for (auto a : S) r.insert(local[a]);
        return r;
    };
    const std::size_t k = out.embedding.size();
    auto add = HyperOpTable::from_function(M->m(), k, [&](const Tuple& t) {
        Tuple p(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) p[i] = out.embedding[t[i]];
        return to_local(M->add().at(p));
    });
    const auto& R = M->ring();
    auto act = ActionTable::from_function(R.n() - 1, R.size(), k, [&](const Tuple& r, std::size_t a) {
        return to_local(M->act(r, out.embedding[a]));
    });
    out.module = std::make_shared<const Hypermodule>(M->name() + "|" + coset_label(M->carrier(), N), M->ring_ptr(),
                                                     Carrier(std::move(labels)), std::move(add), std::move(act),
                                                     local[M->zero()], M->unital());
    return out;
}

// ---------------------------------------------------------------- products

inline std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + ";" + b + ")"; }

inline std::vector<std::string> pair_labels(const Carrier& a, const Carrier& b) {
    std::vector<std::string> out;
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) out.push_back(pair_label(x, y));
    return out;
}

/// A x B as indices i1 * |B| + i2.
inline ElementSet pair_set(ElementSet A, ElementSet B, std::size_t size_b) {
    ElementSet out;
    for (auto a : A)
        for (auto b : B) out.insert(a * size_b + b);
    return out;
}

namespace detail {

inline HyperOpTable product_table(const HyperOpTable& t1, const HyperOpTable& t2) {
    const std::size_t s2 = t2.carrier_size();
    const std::size_t k = t1.arity();
    return HyperOpTable::from_function(k, t1.carrier_size() * s2, [&](const Tuple& t) {
        Tuple a(k), b(k);
        for (std::size_t i = 0; i < k; ++i) {
            a[i] = t[i] / s2;
            b[i] = t[i] % s2;
        }
        return pair_set(t1.at(a), t2.at(b), s2);
    });
}

}  // namespace detail

struct Product {
    ModulePtr module;
    ModulePtr left;
    ModulePtr right;
    bool over_product_ring = false;
    AxiomReport report;

    std::size_t pair(std::size_t a, std::size_t b) const { return a * right->size() + b; }
    ElementSet rectangle(ElementSet A, ElementSet B) const { return pair_set(A, B, right->size()); }
    ElementSet project_left(ElementSet K) const {
        ElementSet out;
        for (auto x : K) out.insert(x / right->size());
        return out;
    }
    ElementSet project_right(ElementSet K) const {
        ElementSet out;
        for (auto x : K) out.insert(x % right->size());
        return out;
    }
    /// K equals the product of its projections.
    bool is_rectangle(ElementSet K) const { return rectangle(project_left(K), project_right(K)) == K; }

    /// a -> (a, 0) and b -> (0, b). Only meaningful over a shared ring.
    ElementMap injection_left() const {
        ElementMap m(left->size());
        for (std::size_t a = 0; a < m.size(); ++a) m[a] = pair(a, right->zero());
        return m;
    }
    ElementMap injection_right() const {
        ElementMap m(right->size());
        for (std::size_t b = 0; b < m.size(); ++b) m[b] = pair(left->zero(), b);
        return m;
    }
    ElementMap projection_left() const {
        ElementMap m(module->size());
        for (std::size_t x = 0; x < m.size(); ++x) m[x] = x / right->size();
        return m;
    }
    ElementMap projection_right() const {
        ElementMap m(module->size());
        for (std::size_t x = 0; x < m.size(); ++x) m[x] = x % right->size();
        return m;
    }
};

/// (M1 x M2, f1 x f2, g1 x g2) over the common ring.
inline Product product_same_ring(ModulePtr M1, ModulePtr M2) {
    if (!same_ring(M1->ring(), M2->ring()))
        throw Error(ErrorKind::RingMismatch, M1->name() + " and " + M2->name() + " are over different rings");
    if (M1->size() * M2->size() > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "product carrier too large");
    const std::size_t s2 = M2->size();
    auto act = ActionTable::from_function(M1->n() - 1, M1->ring().size(), M1->size() * s2,
                                          [&](const Tuple& r, std::size_t x) {
                                              return pair_set(M1->act(r, x / s2), M2->act(r, x % s2), s2);
                                          });
    Product p;
    p.left = M1;
    p.right = M2;
    p.module = std::make_shared<const Hypermodule>(
        M1->name() + "x" + M2->name(), M1->ring_ptr(), Carrier(pair_labels(M1->carrier(), M2->carrier())),
        detail::product_table(M1->add(), M2->add()), std::move(act), M1->zero() * s2 + M2->zero(),
        M1->unital() && M2->unital());
    p.report = verify_module_axioms(*p.module, {.require_valid_ring = false});
    return p;
}

/// (R1 x R2, f'1 x f'2, g'1 x g'2) with zero (0,0) and identity (1,1).
inline RingPtr product_rings(const Hyperring& R1, const Hyperring& R2) {
    if (R1.m() != R2.m() || R1.n() != R2.n())
        throw Error(ErrorKind::ArityMismatch, R1.name() + " and " + R2.name() + " have different arities");
    if (R1.size() * R2.size() > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "product ring too large");
    const std::size_t s2 = R2.size();
    return std::make_shared<const Hyperring>(R1.name() + "x" + R2.name(), R1.m(), R1.n(),
                                             Carrier(pair_labels(R1.carrier(), R2.carrier())),
                                             detail::product_table(R1.add(), R2.add()),
                                             detail::product_table(R1.mul(), R2.mul()), R1.zero() * s2 + R2.zero(),
                                             R1.one() * s2 + R2.one());
}

/// M1 x M2 over R1 x R2 with g((r_1,s_1), ..., (a,b)) = g1(r, a) x g2(s, b).
inline Product product_module_over_product_ring(ModulePtr M1, ModulePtr M2, RingPtr ring = nullptr) {
    if (!ring) ring = product_rings(M1->ring(), M2->ring());
    if (M1->size() * M2->size() > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "product carrier too large");
    const std::size_t s2 = M2->size();
    const std::size_t rs2 = M2->ring().size();
    const std::size_t k = M1->n() - 1;
    auto act = ActionTable::from_function(k, ring->size(), M1->size() * s2, [&](const Tuple& rs, std::size_t x) {
        Tuple r(k), s(k);
        for (std::size_t i = 0; i < k; ++i) {
            r[i] = rs[i] / rs2;
            s[i] = rs[i] % rs2;
        }
        return pair_set(M1->act(r, x / s2), M2->act(s, x % s2), s2);
    });
    Product p;
    p.left = M1;
    p.right = M2;
    p.over_product_ring = true;
    p.module = std::make_shared<const Hypermodule>(
        M1->name() + "x" + M2->name(), ring, Carrier(pair_labels(M1->carrier(), M2->carrier())),
        detail::product_table(M1->add(), M2->add()), std::move(act), M1->zero() * s2 + M2->zero(),
        M1->unital() && M2->unital());
    p.report = verify_module_axioms(*p.module, {.require_valid_ring = false});
    return p;
}

// ---------------------------------------------------------------- derived phi

/// phi_N(K/N) = f(phi(K), N, 0^{(m-2)})/N, where K is the full preimage of K/N; empty stays empty.
inline PhiFunction lifted_phi(const PhiFunction& phi, std::shared_ptr<const Quotient> q) {
    return {phi.name + "_N", [phi, q](const Hypermodule&, ElementSet Kq) {
                const ElementSet K = q->pull(Kq);
                const ElementSet v = phi(*q->source, K);
                if (v.empty()) return ElementSet();
                return q->lift(q->source->sum_with(v, q->N));
            }};
}

/// (phi1 x phi2)(K) = phi1(pi_1 K) x phi2(pi_2 K); empty when either factor is empty.
inline PhiFunction product_phi(const PhiFunction& phi1, const PhiFunction& phi2, std::shared_ptr<const Product> p) {
    return {phi1.name + "x" + phi2.name, [phi1, phi2, p](const Hypermodule&, ElementSet K) {
                const ElementSet a = phi1(*p->left, p->project_left(K));
                const ElementSet b = phi2(*p->right, p->project_right(K));
                if (a.empty() || b.empty()) return ElementSet();
                return p->rectangle(a, b);
            }};
}

}  // namespace hyperprime
