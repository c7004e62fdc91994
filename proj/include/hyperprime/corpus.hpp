#pragma once

/**
 * @file corpus.hpp
 * @brief Structure corpus: the modules in a directory of .hyp files, their
 * quotients by every subhypermodule and their pairwise products.
 *
 * Modules whose ring or module axioms fail are listed as skipped and take no
 * further part. Products are formed from file modules only.
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hyperprime/axioms.hpp"
#include "hyperprime/construct.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/format.hpp"
#include "hyperprime/subobjects.hpp"

namespace hyperprime {

inline constexpr std::size_t kDefaultMaxCarrier = 16;

/// HYPERPRIME_MAX_CARRIER when set to a positive integer, else fallback.
inline std::size_t max_carrier_from_env(std::size_t fallback = kDefaultMaxCarrier) {
    const char* v = std::getenv("HYPERPRIME_MAX_CARRIER");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0) throw Error(ErrorKind::Parse, std::string("bad HYPERPRIME_MAX_CARRIER '") + v + "'");
    return std::min<std::size_t>(n, kMaxCarrier);
}

enum class Origin { File, Quotient, Product, ProductRing };

constexpr std::string_view to_string(Origin o) {
    switch (o) {
        case Origin::File: return "file";
        case Origin::Quotient: return "quotient";
        case Origin::Product: return "product";
        case Origin::ProductRing: return "product-ring";
    }
    return "file";
}

struct CorpusEntry {
    std::string id;
    Origin origin = Origin::File;
    ModulePtr module;
    std::shared_ptr<const Quotient> quotient;
    std::shared_ptr<const Product> product;
};

struct CorpusSkip {
    std::string id;
    std::string reason;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    std::vector<CorpusSkip> skipped;

    const CorpusEntry* find(std::string_view id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }
};

struct CorpusOptions {
    std::size_t max_carrier = kDefaultMaxCarrier;
    bool quotients = true;
    bool products = true;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw Error(ErrorKind::Parse, "cannot read " + p.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline StructureFile load_structure_file(const std::filesystem::path& p) {
    try {
        return parse_structure(read_file(p));
    } catch (const Error& e) {
        throw Error(e.kind(), p.filename().string() + ": " + e.what());
    }
}

/// Axiom failures of the module and its ring, as one line; empty when both pass.
inline std::string axiom_failures(const Hypermodule& M) {
    const auto [ring, mod] = verify_all(M);
    std::string out;
    for (const auto* rep : {&ring, &mod})
        for (const auto& r : rep->results)
            if (!r.pass()) out += (out.empty() ? "" : ", ") + rep->kind + " " + r.id;
    return out;
}

/// Builds the corpus from named base modules.
inline Corpus build_corpus(const std::vector<std::pair<std::string, ModulePtr>>& base, CorpusOptions opts = {}) {
    Corpus c;
    std::vector<const CorpusEntry*> verified;
    std::vector<std::size_t> base_idx;
    for (const auto& [id, M] : base) {
        if (M->size() > opts.max_carrier) {
            c.skipped.push_back({id, "carrier larger than " + std::to_string(opts.max_carrier)});
            continue;
        }
        const auto bad = axiom_failures(*M);
        if (!bad.empty()) {
            c.skipped.push_back({id, "fails " + bad});
            continue;
        }
        c.entries.push_back({id, Origin::File, M, nullptr, nullptr});
        base_idx.push_back(c.entries.size() - 1);
    }
    const std::size_t nbase = base_idx.size();
    if (opts.quotients) {
        for (std::size_t i = 0; i < nbase; ++i) {
            const auto M = c.entries[i].module;
            const auto id = c.entries[i].id;
            for (const auto& N : enumerate_subhypermodules(*M)) {
                const auto qid = id + "/" + coset_label(M->carrier(), N.members);
                auto q = std::make_shared<Quotient>(quotient(M, N.members, {.allow_axiom_failure = true}));
                if (!q->report.ok()) {
                    c.skipped.push_back({qid, "quotient fails its axioms"});
                    continue;
                }
                c.entries.push_back({qid, Origin::Quotient, q->module, q, nullptr});
            }
        }
    }
    if (opts.products) {
        for (std::size_t i = 0; i < nbase; ++i) {
            for (std::size_t j = 0; j < nbase; ++j) {
                const auto& A = c.entries[i];
                const auto& B = c.entries[j];
                const auto pid = A.id + " x " + B.id;
                if (A.module->size() * B.module->size() > opts.max_carrier) continue;
                std::vector<CorpusEntry> made;
                if (same_ring(A.module->ring(), B.module->ring())) {
                    auto p = std::make_shared<Product>(product_same_ring(A.module, B.module));
                    made.push_back({pid, Origin::Product, p->module, nullptr, p});
                }
                if (A.module->m() == B.module->m() && A.module->n() == B.module->n() &&
                    A.module->ring().size() * B.module->ring().size() <= kMaxCarrier) {
                    auto p = std::make_shared<Product>(product_module_over_product_ring(A.module, B.module));
                    made.push_back({pid + " over " + p->module->ring().name(), Origin::ProductRing, p->module, nullptr, p});
                }
                for (auto& e : made) {
                    if (!e.product->report.ok())
                        c.skipped.push_back({e.id, "product fails its axioms"});
                    else
                        c.entries.push_back(std::move(e));
                }
            }
        }
    }
    return c;
}

/// Every module of every .hyp file in dir (sorted by file name), with ids "stem/module".
inline std::vector<std::pair<std::string, ModulePtr>> load_base_modules(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Parse, dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".hyp") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, ModulePtr>> out;
    for (const auto& p : files) {
        const auto f = load_structure_file(p);
        for (const auto& m : f.modules) out.emplace_back(p.stem().string() + "/" + m->name(), m);
    }
    return out;
}

inline Corpus load_corpus(const std::filesystem::path& dir, CorpusOptions opts = {}) {
    return build_corpus(load_base_modules(dir), opts);
}

}  // namespace hyperprime
