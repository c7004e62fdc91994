#pragma once

/**
 * @file builders.hpp
 * @brief Hyperrings and hypermodules from ordinary operations.
 *
 * A commutative ring or module becomes a Krasner (m,n)-structure with
 * singleton hyperoperations: f(x_1^m) = {x_1 + ... + x_m},
 * g'(x_1^n) = x_1 ... x_n and g(r_1^{n-1}, a) = {r_1 ... r_{n-1} a}.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hyperprime/structures.hpp"
#include "hyperprime/table.hpp"
#include "hyperprime/tuples.hpp"

namespace hyperprime {

using BinaryOp = std::function<std::size_t(std::size_t, std::size_t)>;

inline HyperOpTable fold_table(std::size_t arity, std::size_t size, const BinaryOp& op) {
    return HyperOpTable::from_function(arity, size, [&](const Tuple& t) {
        std::size_t acc = t[0];
        for (std::size_t i = 1; i < t.size(); ++i) acc = op(acc, t[i]);
        return ElementSet::single(acc);
    });
}

inline RingPtr ring_from_ops(std::string name, std::size_t m, std::size_t n, std::vector<std::string> labels,
                             const BinaryOp& add, const BinaryOp& mul, std::size_t zero, std::size_t one) {
    const auto s = labels.size();
    return std::make_shared<const Hyperring>(std::move(name), m, n, Carrier(std::move(labels)), fold_table(m, s, add),
                                             fold_table(n, s, mul), zero, one);
}

/// scalar(r, a) is the ring acting on the module by a single scalar.
inline ModulePtr module_from_ops(std::string name, RingPtr ring, std::vector<std::string> labels, const BinaryOp& add,
                                 const BinaryOp& scalar, std::size_t zero, bool unital) {
    const auto s = labels.size();
    const auto& R = *ring;
    auto action = ActionTable::from_function(R.n() - 1, R.size(), s, [&](const Tuple& rs, std::size_t a) {
        std::size_t x = a;
        for (auto r : rs) x = scalar(r, x);
        return ElementSet::single(x);
    });
    return std::make_shared<const Hypermodule>(std::move(name), std::move(ring), Carrier(std::move(labels)),
                                               fold_table(R.m(), s, add), std::move(action), zero, unital);
}

inline std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

/// Z/k as an (m,n)-hyperring.
inline RingPtr zmod_ring(std::string name, std::size_t k, std::size_t m = 3, std::size_t n = 3) {
    return ring_from_ops(
        std::move(name), m, n, numeric_labels(k), [k](std::size_t a, std::size_t b) { return (a + b) % k; },
        [k](std::size_t a, std::size_t b) { return (a * b) % k; }, 0, 1);
}

/// Z/k as a module over a Z/j ring (k divides j), acting by r a mod k.
inline ModulePtr zmod_module(std::string name, RingPtr ring, std::size_t k) {
    return module_from_ops(
        std::move(name), std::move(ring), numeric_labels(k), [k](std::size_t a, std::size_t b) { return (a + b) % k; },
        [k](std::size_t r, std::size_t a) { return (r * a) % k; }, 0, true);
}

/// The Klein four-group {0,x,y,z} under a XOR b XOR c, with r acting as a when
/// odd(r) holds for the product of the scalars and as 0 otherwise.
inline ModulePtr klein_module(std::string name, RingPtr ring, std::function<bool(std::size_t)> odd) {
    return module_from_ops(
        std::move(name), std::move(ring), {"0", "x", "y", "z"}, [](std::size_t a, std::size_t b) { return a ^ b; },
        [odd = std::move(odd)](std::size_t r, std::size_t a) { return odd(r) ? a : std::size_t{0}; }, 0, true);
}

/// Z/k modulo a multiplicative subgroup G of its units: classes {0} and xG, with
/// f'(A, B, C) = classes of all a + b + c and g' the class of the product.
/// Labelled by the smallest member of each class.
inline RingPtr zmod_by_units(std::string name, std::size_t k, const std::vector<std::size_t>& G, std::size_t m = 3,
                             std::size_t n = 3) {
    std::vector<std::size_t> cls(k, k);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t x = 0; x < k; ++x) {
        if (cls[x] != k) continue;
        const std::size_t id = members.size();
        members.emplace_back();
        for (auto u : G) {
            const std::size_t y = (x * u) % k;
            if (cls[y] == k) {
                cls[y] = id;
                members.back().push_back(y);
            }
        }
        if (x == 0) {
            cls[0] = id;
            members.back() = {0};
        }
    }
    std::vector<std::string> labels;
    for (const auto& c : members) labels.push_back(std::to_string(*std::min_element(c.begin(), c.end())));
    const std::size_t s = members.size();
    auto add = HyperOpTable::from_function(m, s, [&](const Tuple& t) {
        ElementSet out;
        std::vector<std::vector<std::size_t>> args;
        for (auto c : t) args.push_back(members[c]);
        for_each_in_product(std::span<const std::vector<std::size_t>>(args), [&](const Tuple& xs) {
            std::size_t sum = 0;
            for (auto x : xs) sum += x;
            out.insert(cls[sum % k]);
        });
        return out;
    });
    auto mul = HyperOpTable::from_function(n, s, [&](const Tuple& t) {
        std::size_t prod = 1;
        for (auto c : t) prod = (prod * members[c].front()) % k;
        return ElementSet::single(cls[prod]);
    });
    return std::make_shared<const Hyperring>(std::move(name), m, n, Carrier(std::move(labels)), std::move(add),
                                             std::move(mul), cls[0], cls[1]);
}

/// R acting on itself: f = f', g(r_1^{n-1}, a) = {g'(r_1^{n-1}, a)}.
inline ModulePtr regular_module(std::string name, RingPtr ring) {
    const auto& R = *ring;
    auto act = ActionTable::from_function(R.n() - 1, R.size(), R.size(), [&](const Tuple& r, std::size_t a) {
        Tuple t = r;
        t.push_back(a);
        return R.mul().at(t);
    });
    return std::make_shared<const Hypermodule>(std::move(name), ring, R.carrier(), R.add(), std::move(act), R.zero(),
                                               true);
}

}  // namespace hyperprime
