#pragma once

/**
 * @file axioms.hpp
 * @brief Axiom verification for hyperrings and hypermodules.
 *
 * Every clause is checked separately and reports how many instances failed
 * together with the first failing instance in scan order. Witness layout per
 * clause id:
 *
 *   *.associativity    x_1..x_{2k-1}, slot i: inner product at positions i..i+k-1
 *   *.neutral          x
 *   *.inverse          x
 *   *.reversibility    x_1..x_m, x
 *   ring.distributivity    x_1..x_n (x_slot unused), y_1..y_m, slot
 *   ring.zero          x_1..x_n (x_slot = 0), slot
 *   ring.identity      x
 *   module.action-sum  r_1..r_{n-1}, x_1..x_m
 *   module.scalar-sum  r_1..r_{n-1} (r_slot unused), s_1..s_m, x, slot
 *   module.scalar-product  r_1..r_{2n-2}, x, slot
 *   module.zero-scalar r_1..r_{n-1}, x
 *   module.unital      a
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/table.hpp"
#include "hyperprime/tuples.hpp"

namespace hyperprime {

struct AxiomResult {
    std::string id;
    std::string group;
    bool by_construction = false;
    std::size_t checked = 0;
    std::size_t failures = 0;
    Tuple witness;
    std::size_t slot = 0;
    std::string detail;

    bool pass() const { return failures == 0; }
};

struct AxiomReport {
    std::string structure;
    std::string kind;  // "ring" or "module"
    std::vector<AxiomResult> results;

    bool ok() const {
        return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass(); });
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& r : results) n += r.failures;
        return n;
    }
    const AxiomResult* find(std::string_view id) const {
        for (const auto& r : results)
            if (r.id == id) return &r;
        return nullptr;
    }
    /// Group names in first-appearance order.
    std::vector<std::string> groups() const {
        std::vector<std::string> out;
        for (const auto& r : results)
            if (std::find(out.begin(), out.end(), r.group) == out.end()) out.push_back(r.group);
        return out;
    }
    bool group_passes(std::string_view group) const {
        for (const auto& r : results)
            if (r.group == group && !r.pass()) return false;
        return true;
    }
    std::size_t groups_passing() const {
        std::size_t n = 0;
        for (const auto& g : groups()) n += group_passes(g) ? 1 : 0;
        return n;
    }
};

namespace detail {

class ClauseRecorder {
public:
    ClauseRecorder(std::string id, std::string group) {
        result_.id = std::move(id);
        result_.group = std::move(group);
    }
    void tick() { ++result_.checked; }
    void fail(Tuple witness, std::size_t slot, std::string detail) {
        if (result_.failures++ == 0) {
            result_.witness = std::move(witness);
            result_.slot = slot;
            result_.detail = std::move(detail);
        }
    }
    bool failed() const { return result_.failures != 0; }
    AxiomResult take() { return std::move(result_); }

private:
    AxiomResult result_;
};

inline AxiomResult by_construction(std::string id, std::string group) {
    AxiomResult r;
    r.id = std::move(id);
    r.group = std::move(group);
    r.by_construction = true;
    return r;
}

inline std::string format_args(const Carrier& c, std::span<const std::size_t> xs) { return c.format_tuple(xs); }

/// f(x_0..x_{i-1}, f(x_i..x_{i+k-1}), x_{i+k}..x_{2k-2}) for a k-ary table.
inline ElementSet nested_eval(const HyperOpTable& t, std::span<const std::size_t> x, std::size_t i) {
    const std::size_t k = t.arity();
    std::array<ElementSet, kMaxArity> args{};
    for (std::size_t j = 0; j < i; ++j) args[j] = ElementSet::single(x[j]);
    args[i] = t.at(x.subspan(i, k));
    for (std::size_t j = i + 1; j < k; ++j) args[j] = ElementSet::single(x[j + k - 1]);
    return t.eval_unchecked(std::span<const ElementSet>(args.data(), k));
}

/// Associativity of a commutative k-ary table. With commutative entries the
/// positional law holds iff every split of each (2k-1)-multiset into an inner
/// k-multiset and an outer remainder agrees; on a failing multiset the
/// positional witness is recovered by permuting.
inline void check_associativity(const HyperOpTable& t, const Carrier& c, const std::string& name,
                                ClauseRecorder& rec) {
    const std::size_t k = t.arity();
    const std::size_t w = 2 * k - 1;
    std::vector<bool> choose(w);
    for_each_sorted_tuple(w, t.carrier_size(), [&](const Tuple& ms) {
        rec.tick();
        const ElementSet ref = nested_eval(t, ms, 0);
        bool bad = false;
        std::fill(choose.begin(), choose.end(), false);
        std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
        Tuple arranged(w);
        while (!bad && std::prev_permutation(choose.begin(), choose.end())) {
            std::size_t a = 0, b = k;
            for (std::size_t j = 0; j < w; ++j) (choose[j] ? arranged[a++] : arranged[b++]) = ms[j];
            bad = nested_eval(t, arranged, 0) != ref;
        }
        if (!bad) return;
        Tuple x = ms;
        do {
            for (std::size_t i = 1; i < k; ++i) {
                const ElementSet lhs = nested_eval(t, x, i);
                const ElementSet rhs = nested_eval(t, x, 0);
                if (lhs != rhs) {
                    std::string d = "grouping at " + std::to_string(i + 1) + " of " + c.format_tuple(x) + " gives " +
                                    c.format(lhs) + ", leading grouping gives " + c.format(rhs) + " (" + name + ")";
                    rec.fail(x, i, std::move(d));
                    return;
                }
            }
        } while (std::next_permutation(x.begin(), x.end()));
    });
}

inline std::vector<ElementSet> inverse_sets(const HyperOpTable& f, std::size_t zero) {
    const std::size_t s = f.carrier_size();
    const std::size_t m = f.arity();
    std::vector<ElementSet> inv(s);
    std::array<std::size_t, kMaxArity> buf{};
    for (std::size_t x = 0; x < s; ++x) {
        for (std::size_t y = 0; y < s; ++y) {
            buf.fill(zero);
            buf[0] = x;
            buf[1] = y;
            if (f.at(std::span<const std::size_t>(buf.data(), m)).contains(zero)) inv[x].insert(y);
        }
    }
    return inv;
}

/// Canonical m-ary hypergroup clauses for (carrier, f) with neutral zero.
inline void check_hypergroup(const HyperOpTable& f, const Carrier& c, std::size_t zero, const std::string& prefix,
                             const std::string& name, std::vector<AxiomResult>& out) {
    const std::size_t m = f.arity();
    const std::size_t s = c.size();
    const std::string group = "hypergroup";

    out.push_back(by_construction(prefix + ".commutativity", group));

    ClauseRecorder assoc(prefix + ".associativity", group);
    check_associativity(f, c, name, assoc);
    out.push_back(assoc.take());

    ClauseRecorder neutral(prefix + ".neutral", group);
    std::array<std::size_t, kMaxArity> buf{};
    for (std::size_t x = 0; x < s; ++x) {
        neutral.tick();
        buf.fill(zero);
        buf[0] = x;
        const auto r = f.at(std::span<const std::size_t>(buf.data(), m));
        if (r != ElementSet::single(x))
            neutral.fail({x}, 0, name + c.format_tuple(std::span<const std::size_t>(buf.data(), m)) + " = " + c.format(r));
    }
    out.push_back(neutral.take());

    const auto inv = inverse_sets(f, zero);
    ClauseRecorder inverse(prefix + ".inverse", group);
    for (std::size_t x = 0; x < s; ++x) {
        inverse.tick();
        if (inv[x].size() != 1)
            inverse.fail({x}, 0, "inverses of " + c.label(x) + " are " + c.format(inv[x]));
    }
    out.push_back(inverse.take());

    // x in f(x_1^m) implies x_1 in f(x, -x_2, ..., -x_m); -y is the smallest
    // inverse of y, and tuples with an element lacking inverses are skipped.
    ClauseRecorder rev(prefix + ".reversibility", group);
    for_each_tuple(m, s, [&](const Tuple& xs) {
        for (std::size_t j = 1; j < m; ++j)
            if (inv[xs[j]].empty()) return;
        const auto r = f.at(xs);
        for (auto x : r) {
            rev.tick();
            Tuple back(m);
            back[0] = x;
            for (std::size_t j = 1; j < m; ++j) back[j] = inv[xs[j]].front();
            const auto br = f.at(back);
            if (!br.contains(xs[0])) {
                Tuple w = xs;
                w.push_back(x);
                rev.fail(std::move(w), 0,
                         c.label(x) + " in " + name + c.format_tuple(xs) + " but " + c.label(xs[0]) + " not in " + name +
                             c.format_tuple(back) + " = " + c.format(br));
            }
        }
    });
    out.push_back(rev.take());
}

}  // namespace detail

/// Inverse candidates {y | 0 in f(x, y, 0^{m-2})} per element.
inline std::vector<ElementSet> inverse_sets(const HyperOpTable& f, std::size_t zero) {
    return detail::inverse_sets(f, zero);
}

inline AxiomReport verify_ring_axioms(const Hyperring& R) {
    AxiomReport rep{R.name(), "ring", {}};
    const auto& c = R.carrier();
    const std::size_t s = R.size();
    const std::size_t m = R.m();
    const std::size_t n = R.n();
    const auto& mul = R.mul();

    detail::check_hypergroup(R.add(), c, R.zero(), "add", "f'", rep.results);

    rep.results.push_back(detail::by_construction("mul.commutativity", "semigroup"));
    rep.results.push_back(detail::by_construction("mul.single-valued", "semigroup"));
    detail::ClauseRecorder assoc("mul.associativity", "semigroup");
    detail::check_associativity(mul, c, "g'", assoc);
    rep.results.push_back(assoc.take());

    // g'(x_1^{i-1}, f'(y_1^m), x_{i+1}^n) = f'(g'(.., y_1, ..), ..., g'(.., y_m, ..))
    detail::ClauseRecorder dist("mul.distributivity", "distributivity");
    for (std::size_t slot = 0; slot < n; ++slot) {
        for_each_tuple(n - 1, s, [&](const Tuple& others) {
            Tuple x(n);
            for (std::size_t j = 0, k = 0; j < n; ++j) x[j] = (j == slot) ? R.zero() : others[k++];
            for_each_sorted_tuple(m, s, [&](const Tuple& ys) {
                dist.tick();
                std::array<ElementSet, kMaxArity> args{};
                for (std::size_t j = 0; j < n; ++j) args[j] = ElementSet::single(x[j]);
                args[slot] = R.add().at_sorted(ys);
                const ElementSet lhs = mul.eval_unchecked(std::span<const ElementSet>(args.data(), n));
                std::array<ElementSet, kMaxArity> terms{};
                Tuple xi = x;
                for (std::size_t k = 0; k < m; ++k) {
                    xi[slot] = ys[k];
                    terms[k] = mul.at(xi);
                }
                const ElementSet rhs = R.add().eval_unchecked(std::span<const ElementSet>(terms.data(), m));
                if (lhs != rhs) {
                    Tuple w = x;
                    w.insert(w.end(), ys.begin(), ys.end());
                    dist.fail(std::move(w), slot,
                              "slot " + std::to_string(slot + 1) + " of " + c.format_tuple(x) + " over f'" +
                                  c.format_tuple(ys) + ": " + c.format(lhs) + " vs " + c.format(rhs));
                }
            });
        });
    }
    rep.results.push_back(dist.take());

    detail::ClauseRecorder zero("mul.zero", "zero");
    for (std::size_t slot = 0; slot < n; ++slot) {
        for_each_tuple(n - 1, s, [&](const Tuple& others) {
            zero.tick();
            Tuple x(n);
            for (std::size_t j = 0, k = 0; j < n; ++j) x[j] = (j == slot) ? R.zero() : others[k++];
            const auto r = mul.at(x);
            if (r != ElementSet::single(R.zero()))
                zero.fail(x, slot, "g'" + c.format_tuple(x) + " = " + c.format(r));
        });
    }
    rep.results.push_back(zero.take());

    detail::ClauseRecorder ident("mul.identity", "identity");
    for (std::size_t x = 0; x < s; ++x) {
        ident.tick();
        Tuple t(n, R.one());
        t[0] = x;
        const auto r = mul.at(t);
        if (r != ElementSet::single(x)) ident.fail({x}, 0, "g'" + c.format_tuple(t) + " = " + c.format(r));
    }
    rep.results.push_back(ident.take());
    return rep;
}

struct ModuleVerifyOptions {
    /// Throw RingInvalid when the ring fails its own axioms.
    bool require_valid_ring = true;
};

inline AxiomReport verify_module_axioms(const Hypermodule& M, ModuleVerifyOptions opts = {}) {
    if (opts.require_valid_ring) {
        const auto ring_rep = verify_ring_axioms(M.ring());
        if (!ring_rep.ok())
            throw Error(ErrorKind::RingInvalid, "ring " + M.ring().name() + " fails " +
                                                    std::to_string(ring_rep.failure_count()) + " axiom instances");
    }
    AxiomReport rep{M.name(), "module", {}};
    const auto& R = M.ring();
    const auto& c = M.carrier();
    const auto& rc = R.carrier();
    const std::size_t m = M.m();
    const std::size_t n = M.n();
    const std::size_t k = n - 1;
    const std::size_t rs = R.size();
    const std::size_t ms = M.size();

    detail::check_hypergroup(M.add(), c, M.zero(), "add", "f", rep.results);

    // (i) g(r, f(x_1^m)) = f(g(r, x_1), ..., g(r, x_m))
    detail::ClauseRecorder i1("module.action-sum", "action-sum");
    for_each_sorted_tuple(k, rs, [&](const Tuple& r) {
        for_each_sorted_tuple(m, ms, [&](const Tuple& xs) {
            i1.tick();
            ElementSet left;
            for (auto y : M.add().at_sorted(xs)) left |= M.act(r, y);
            std::array<ElementSet, kMaxArity> terms{};
            for (std::size_t j = 0; j < m; ++j) terms[j] = M.act(r, xs[j]);
            const ElementSet right = M.add().eval_unchecked(std::span<const ElementSet>(terms.data(), m));
            if (left != right) {
                Tuple w = r;
                w.insert(w.end(), xs.begin(), xs.end());
                i1.fail(std::move(w), 0,
                        "g" + rc.format_tuple(r) + " on f" + c.format_tuple(xs) + ": " + c.format(left) + " vs " +
                            c.format(right));
            }
        });
    });
    rep.results.push_back(i1.take());

    // (ii) g(r_1^{i-1}, f'(s_1^m), r_{i+1}^{n-1}, x) = f(g(.., s_1, .., x), ..., g(.., s_m, .., x))
    detail::ClauseRecorder i2("module.scalar-sum", "scalar-sum");
    for (std::size_t slot = 0; slot < k; ++slot) {
        for_each_tuple(k - 1, rs, [&](const Tuple& others) {
            Tuple r(k);
            for (std::size_t j = 0, q = 0; j < k; ++j) r[j] = (j == slot) ? R.zero() : others[q++];
            for_each_sorted_tuple(m, rs, [&](const Tuple& ss) {
                for (std::size_t x = 0; x < ms; ++x) {
                    i2.tick();
                    ElementSet left;
                    Tuple ri = r;
                    for (auto t : R.add().at_sorted(ss)) {
                        ri[slot] = t;
                        left |= M.act(ri, x);
                    }
                    std::array<ElementSet, kMaxArity> terms{};
                    for (std::size_t j = 0; j < m; ++j) {
                        ri[slot] = ss[j];
                        terms[j] = M.act(ri, x);
                    }
                    const ElementSet right = M.add().eval_unchecked(std::span<const ElementSet>(terms.data(), m));
                    if (left != right) {
                        Tuple w = r;
                        w.insert(w.end(), ss.begin(), ss.end());
                        w.push_back(x);
                        i2.fail(std::move(w), slot,
                                "slot " + std::to_string(slot + 1) + " of " + rc.format_tuple(r) + " over f'" +
                                    rc.format_tuple(ss) + " at " + c.label(x) + ": " + c.format(left) + " vs " +
                                    c.format(right));
                    }
                }
            });
        });
    }
    rep.results.push_back(i2.take());

    // (iii) g(r_1^{i-1}, g'(r_i^{i+n-1}), r_{i+n}^{2n-2}, x) = g(r_1^{n-1}, g(r_n^{2n-2}, x))
    detail::ClauseRecorder i3("module.scalar-product", "scalar-product");
    const std::size_t w2 = 2 * n - 2;
    for_each_tuple(w2, rs, [&](const Tuple& r) {
        for (std::size_t x = 0; x < ms; ++x) {
            std::span<const std::size_t> rv(r);
            const ElementSet inner = M.act(rv.subspan(k, k), x);
            ElementSet right;
            for (auto y : inner) right |= M.act(rv.subspan(0, k), y);
            for (std::size_t i = 0; i < k; ++i) {
                i3.tick();
                Tuple scal;
                scal.reserve(k);
                for (std::size_t j = 0; j < i; ++j) scal.push_back(r[j]);
                scal.push_back(R.product(rv.subspan(i, n)));
                for (std::size_t j = i + n; j < w2; ++j) scal.push_back(r[j]);
                const ElementSet left = M.act(scal, x);
                if (left != right) {
                    Tuple w = r;
                    w.push_back(x);
                    i3.fail(std::move(w), i,
                            "position " + std::to_string(i + 1) + " of " + rc.format_tuple(r) + " at " + c.label(x) +
                                ": " + c.format(left) + " vs " + c.format(right));
                }
            }
        }
    });
    rep.results.push_back(i3.take());

    // (iv) a zero scalar anywhere gives {0}
    detail::ClauseRecorder i4("module.zero-scalar", "zero-scalar");
    for_each_sorted_tuple(k, rs, [&](const Tuple& r) {
        if (std::find(r.begin(), r.end(), R.zero()) == r.end()) return;
        for (std::size_t x = 0; x < ms; ++x) {
            i4.tick();
            const auto v = M.act(r, x);
            if (v != M.zero_set()) {
                Tuple w = r;
                w.push_back(x);
                i4.fail(std::move(w), 0, "g" + rc.format_tuple(r) + " at " + c.label(x) + " = " + c.format(v));
            }
        }
    });
    rep.results.push_back(i4.take());

    if (M.unital()) {
        detail::ClauseRecorder u("module.unital", "unital");
        const Tuple ones(k, R.one());
        for (std::size_t a = 0; a < ms; ++a) {
            u.tick();
            const auto v = M.act(ones, a);
            if (v != ElementSet::single(a)) u.fail({a}, 0, "g" + rc.format_tuple(ones) + " at " + c.label(a) + " = " + c.format(v));
        }
        rep.results.push_back(u.take());
    }
    return rep;
}

/// Ring and module clauses together; the module part is computed even when the ring fails.
inline std::pair<AxiomReport, AxiomReport> verify_all(const Hypermodule& M) {
    return {verify_ring_axioms(M.ring()), verify_module_axioms(M, {.require_valid_ring = false})};
}

/// "ring R: 5/5 axiom groups pass" or "module M: pass (unital=false)".
inline std::string summary_line(const AxiomReport& rep, bool unital = false) {
    if (rep.kind == "ring") {
        const auto groups = rep.groups();
        return "ring " + rep.structure + ": " + std::to_string(rep.groups_passing()) + "/" +
               std::to_string(groups.size()) + " axiom groups pass";
    }
    std::string out = "module " + rep.structure + ": ";
    if (rep.ok())
        out += "pass";
    else {
        const auto bad = rep.groups().size() - rep.groups_passing();
        out += "FAIL (" + std::to_string(bad) + (bad == 1 ? " group)" : " groups)");
    }
    return out + " (unital=" + (unital ? "true" : "false") + ")";
}

}  // namespace hyperprime
