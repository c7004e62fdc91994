#pragma once

/**
 * @file structures.hpp
 * @brief Finite commutative Krasner (m,n)-hyperrings and (m,n)-hypermodules.
 *
 * Both are immutable once constructed. A Hypermodule shares ownership of
 * its ring so that quotients, products and homomorphisms can be passed
 * around freely.
 */

#include <array>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/table.hpp"

namespace hyperprime {

struct Element {
    std::size_t index;
    std::string label;
};

/// Ordered list of element labels. Index i is element i.
class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw Error(ErrorKind::InvalidStructure, "empty carrier");
        if (labels_.size() > kMaxCarrier)
            throw Error(ErrorKind::CapExceeded, "carrier larger than " + std::to_string(kMaxCarrier));
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!lookup_.emplace(labels_[i], i).second)
                throw Error(ErrorKind::InvalidStructure, "duplicate element label '" + labels_[i] + "'");
        }
    }

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    Element element(std::size_t i) const { return {i, labels_.at(i)}; }
    ElementSet all() const { return ElementSet::full(size()); }

    std::optional<std::size_t> find(std::string_view label) const {
        auto it = lookup_.find(std::string(label));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(std::string_view label) const {
        if (auto i = find(label)) return *i;
        throw Error(ErrorKind::OutOfCarrier, "unknown element label '" + std::string(label) + "'");
    }

    /// "{a,b,c}" in carrier order.
    std::string format(ElementSet s) const {
        std::string out = "{";
        bool first = true;
        for (auto i : s) {
            if (!first) out += ',';
            out += labels_.at(i);
            first = false;
        }
        return out + "}";
    }
    std::string format_tuple(std::span<const std::size_t> t) const {
        std::string out = "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out += ',';
            out += labels_.at(t[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Carrier& a, const Carrier& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

class Hyperring {
public:
    Hyperring(std::string name, std::size_t m, std::size_t n, Carrier carrier, HyperOpTable add,
              HyperOpTable mul, std::size_t zero, std::size_t one)
        : name_(std::move(name)),
          m_(m),
          n_(n),
          carrier_(std::move(carrier)),
          add_(std::move(add)),
          mul_(std::move(mul)),
          zero_(zero),
          one_(one) {
        if (m_ < 2 || n_ < 2) throw Error(ErrorKind::InvalidStructure, "ring " + name_ + ": arities must be >= 2");
        if (carrier_.size() < 2)
            throw Error(ErrorKind::InvalidStructure, "ring " + name_ + ": single-element rings are not supported");
        if (add_.arity() != m_ || mul_.arity() != n_)
            throw Error(ErrorKind::ArityMismatch, "ring " + name_ + ": table arity mismatch");
        if (add_.carrier_size() != carrier_.size() || mul_.carrier_size() != carrier_.size())
            throw Error(ErrorKind::InvalidStructure, "ring " + name_ + ": table carrier mismatch");
        if (zero_ >= carrier_.size() || one_ >= carrier_.size())
            throw Error(ErrorKind::OutOfCarrier, "ring " + name_ + ": zero/one outside carrier");
        if (zero_ == one_) throw Error(ErrorKind::InvalidStructure, "ring " + name_ + ": zero equals one");
        mul_.for_each_entry([&](const Tuple& t, ElementSet r) {
            if (r.size() != 1)
                throw Error(ErrorKind::InvalidStructure,
                            "ring " + name_ + ": multiplicative operation must be single-valued at " +
                                carrier_.format_tuple(t));
        });
    }

    const std::string& name() const { return name_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    const Carrier& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    const HyperOpTable& add() const { return add_; }
    const HyperOpTable& mul() const { return mul_; }
    std::size_t zero() const { return zero_; }
    std::size_t one() const { return one_; }
    ElementSet all() const { return carrier_.all(); }

    ElementSet sum(std::span<const std::size_t> xs) const { return add_.at(xs); }
    std::size_t product(std::span<const std::size_t> xs) const { return mul_.at(xs).front(); }
    std::size_t product(std::initializer_list<std::size_t> xs) const { return mul_.at(xs).front(); }

    /// product of x and y padded with ones up to arity n.
    std::size_t product_with_ones(std::size_t x, std::size_t y) const {
        std::array<std::size_t, kMaxArity> buf{};
        buf.fill(one_);
        buf[0] = x;
        buf[1] = y;
        return product(std::span<const std::size_t>(buf.data(), n_));
    }

    /// Subset extension of the multiplicative operation.
    ElementSet product_sets(std::span<const ElementSet> xs) const { return mul_.eval_unchecked(xs); }

private:
    std::string name_;
    std::size_t m_;
    std::size_t n_;
    Carrier carrier_;
    HyperOpTable add_;
    HyperOpTable mul_;
    std::size_t zero_;
    std::size_t one_;
};

using RingPtr = std::shared_ptr<const Hyperring>;

class Hypermodule {
public:
    Hypermodule(std::string name, RingPtr ring, Carrier carrier, HyperOpTable add, ActionTable action,
                std::size_t zero, bool unital)
        : name_(std::move(name)),
          ring_(std::move(ring)),
          carrier_(std::move(carrier)),
          add_(std::move(add)),
          action_(std::move(action)),
          zero_(zero),
          unital_(unital) {
        if (!ring_) throw Error(ErrorKind::InvalidStructure, "module " + name_ + ": missing ring");
        if (add_.arity() != ring_->m() || add_.carrier_size() != carrier_.size())
            throw Error(ErrorKind::ArityMismatch, "module " + name_ + ": additive table shape mismatch");
        if (action_.scalar_arity() != ring_->n() - 1 || action_.ring_size() != ring_->size() ||
            action_.module_size() != carrier_.size())
            throw Error(ErrorKind::ArityMismatch, "module " + name_ + ": action table shape mismatch");
        if (zero_ >= carrier_.size()) throw Error(ErrorKind::OutOfCarrier, "module " + name_ + ": zero outside carrier");
    }

    const std::string& name() const { return name_; }
    const Hyperring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const Carrier& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    std::size_t m() const { return ring_->m(); }
    std::size_t n() const { return ring_->n(); }
    const HyperOpTable& add() const { return add_; }
    const ActionTable& action() const { return action_; }
    std::size_t zero() const { return zero_; }
    bool unital() const { return unital_; }
    ElementSet all() const { return carrier_.all(); }
    ElementSet zero_set() const { return ElementSet::single(zero_); }

    /// g(r_1^{n-1}, a).
    ElementSet act(std::span<const std::size_t> scalars, std::size_t a) const { return action_.at(scalars, a); }
    ElementSet act(std::initializer_list<std::size_t> scalars, std::size_t a) const {
        return act(std::span<const std::size_t>(scalars.begin(), scalars.size()), a);
    }

    /// g(r, 1^{(n-2)}, a).
    ElementSet act_single(std::size_t r, std::size_t a) const {
        std::array<std::size_t, kMaxArity> buf{};
        buf.fill(ring_->one());
        buf[0] = r;
        return action_.at(std::span<const std::size_t>(buf.data(), n() - 1), a);
    }
    /// g(rs, 1^{(n-2)}, xs).
    ElementSet act_single(ElementSet rs, ElementSet xs) const {
        ElementSet out;
        for (auto r : rs)
            for (auto a : xs) out |= act_single(r, a);
        return out;
    }
    /// g(A_1, ..., A_{n-1}, X).
    ElementSet act_sets(std::span<const ElementSet> scalar_sets, ElementSet xs) const {
        return action_.eval_unchecked(scalar_sets, xs);
    }

    /// f(a, X, 0^{(m-2)}).
    ElementSet sum_with(ElementSet as, ElementSet xs) const {
        std::array<ElementSet, kMaxArity> args{};
        args.fill(zero_set());
        args[0] = as;
        args[1] = xs;
        return add_.eval_unchecked(std::span<const ElementSet>(args.data(), m()));
    }

private:
    std::string name_;
    RingPtr ring_;
    Carrier carrier_;
    HyperOpTable add_;
    ActionTable action_;
    std::size_t zero_;
    bool unital_;
};

using ModulePtr = std::shared_ptr<const Hypermodule>;

}  // namespace hyperprime
