#pragma once

/**
 * @file corpus_sources.hpp
 * @brief The generated members of the structure corpus, as file texts.
 *
 * fix_b.hyp is the Klein four-group over Z/2, a finite stand-in for the same
 * group over the integers: g(r_1, r_2, a) is a added to itself r_1 r_2 times,
 * which only depends on r_1 r_2 mod 2.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperprime/builders.hpp"
#include "hyperprime/construct.hpp"
#include "hyperprime/format.hpp"

namespace hyperprime {

inline std::string corpus_file(const std::string& comment, const std::vector<RingPtr>& rings,
                               const std::vector<ModulePtr>& modules) {
    StructureFile f;
    f.rings = rings;
    f.modules = modules;
    return "# " + comment + "\n" + serialize(f);
}

/// (file name, contents) pairs in a fixed order.
inline std::vector<std::pair<std::string, std::string>> generated_corpus_files() {
    std::vector<std::pair<std::string, std::string>> out;
    const auto odd = [](std::size_t r) { return r % 2 == 1; };

    auto z2 = zmod_ring("Z2", 2);
    out.emplace_back("fix_b.hyp", corpus_file("Klein four-group over Z/2", {z2}, {klein_module("H", z2, odd)}));
    out.emplace_back("z2.hyp", corpus_file("Z/2 over itself", {z2}, {zmod_module("Z2", z2, 2)}));

    auto z4 = zmod_ring("Z4", 4);
    out.emplace_back("z4.hyp", corpus_file("Z/4 over itself, Z/2 and the Klein group over Z/4", {z4},
                                           {zmod_module("Z4", z4, 4), zmod_module("Z2", z4, 2),
                                            klein_module("H", z4, odd)}));

    auto z2_2 = zmod_ring("Z2", 2);
    auto z2xz2 = product_rings(*z2_2, *z2_2);
    auto first = module_from_ops(
        "Z2", z2xz2, numeric_labels(2), [](std::size_t a, std::size_t b) { return (a + b) % 2; },
        [](std::size_t r, std::size_t a) { return (r / 2) * a % 2; }, 0, true);
    out.emplace_back("z2xz2.hyp", corpus_file("Z/2 x Z/2 over itself, and Z/2 through the first projection", {z2xz2},
                                              {regular_module("Z2xZ2", z2xz2), first}));

    auto k3 = zmod_by_units("K", 3, {1, 2});
    out.emplace_back("krasner.hyp", corpus_file("Z/3 modulo {1,2}: the Krasner hyperfield", {k3},
                                                {regular_module("K", k3)}));

    auto k5 = zmod_by_units("Z5pm", 5, {1, 4});
    out.emplace_back("z5pm.hyp", corpus_file("Z/5 modulo {1,4}", {k5}, {regular_module("Z5pm", k5)}));
    return out;
}

}  // namespace hyperprime
