#pragma once

// Shared helpers for the test binaries: fixture access, running the CLI, and
// brute-force oracles written against the raw tables only.

#include <array>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperprime/hyperprime.hpp"

namespace testsupport {

using namespace hyperprime;

inline std::string fixture(const std::string& name) { return std::string(HYPERPRIME_FIXTURES) + "/" + name; }
inline std::string golden(const std::string& name) { return std::string(HYPERPRIME_GOLDEN) + "/" + name; }

inline std::string slurp(const std::string& path) { return read_file(path); }

inline StructureFile load(const std::string& name) { return load_structure_file(fixture(name)); }

inline ModulePtr module_of(const std::string& file, const std::string& module) {
    auto f = load(file);
    auto M = f.find_module(module);
    if (!M) throw std::runtime_error("no module " + module + " in " + file);
    return M;
}

struct CliRun {
    int code = -1;
    std::string out;
};

/// Runs the CLI with the given argument string; stdout and stderr are merged.
inline CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERPRIME_CLI) + " " + args + " 2>&1";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// ---------------------------------------------------------------- oracles

/// Every tuple of the given arity over {0..size-1}, unsorted.
inline std::vector<Tuple> all_tuples(std::size_t arity, std::size_t size) {
    std::vector<Tuple> out;
    Tuple t(arity, 0);
    for (;;) {
        out.push_back(t);
        std::size_t i = 0;
        while (i < arity && ++t[i] == size) t[i++] = 0;
        if (i == arity) return out;
    }
}

inline std::vector<std::size_t> members(std::uint64_t bits, std::size_t size) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size; ++i)
        if (bits >> i & 1u) out.push_back(i);
    return out;
}

inline bool naive_closed(const HyperOpTable& f, std::size_t m, std::uint64_t S, std::size_t size) {
    const auto xs = members(S, size);
    for (const auto& idx : all_tuples(m, xs.size())) {
        Tuple t;
        for (auto i : idx) t.push_back(xs[i]);
        if ((f.at(t).bits() & ~S) != 0) return false;
    }
    return true;
}

/// Some y in S with zero in f(x, y, 0, ..., 0).
inline bool naive_inverses(const HyperOpTable& f, std::size_t m, std::size_t zero, std::uint64_t S, std::size_t size) {
    for (auto x : members(S, size)) {
        bool found = false;
        for (auto y : members(S, size)) {
            Tuple t(m, zero);
            t[0] = x;
            t[1] = y;
            if (f.at(t).contains(zero)) found = true;
        }
        if (!found) return false;
    }
    return true;
}

/// All subhypermodules by filtering every subset of the carrier.
inline std::vector<std::uint64_t> naive_subhypermodules(const Hypermodule& M) {
    std::vector<std::uint64_t> out;
    const std::size_t s = M.size();
    const auto scalars = all_tuples(M.n() - 1, M.ring().size());
    for (std::uint64_t S = 1; S < (std::uint64_t{1} << s); ++S) {
        if (!(S >> M.zero() & 1u)) continue;
        if (!naive_closed(M.add(), M.m(), S, s) || !naive_inverses(M.add(), M.m(), M.zero(), S, s)) continue;
        bool ok = true;
        for (const auto& r : scalars)
            for (auto a : members(S, s))
                if ((M.action().at(r, a).bits() & ~S) != 0) ok = false;
        if (ok) out.push_back(S);
    }
    return out;
}

inline std::vector<std::uint64_t> naive_hyperideals(const Hyperring& R) {
    std::vector<std::uint64_t> out;
    const std::size_t s = R.size();
    const auto tuples = all_tuples(R.n(), s);
    for (std::uint64_t S = 1; S < (std::uint64_t{1} << s); ++S) {
        if (!(S >> R.zero() & 1u)) continue;
        if (!naive_closed(R.add(), R.m(), S, s) || !naive_inverses(R.add(), R.m(), R.zero(), S, s)) continue;
        bool ok = true;
        for (const auto& t : tuples) {
            bool touches = false;
            for (auto x : t) touches = touches || (S >> x & 1u);
            if (touches && (R.mul().at(t).bits() & ~S) != 0) ok = false;
        }
        if (ok) out.push_back(S);
    }
    return out;
}

/// g(r, 1, ..., 1, a) computed from the raw action table.
inline ElementSet naive_single(const Hypermodule& M, std::size_t r, std::size_t a) {
    Tuple t(M.n() - 1, M.ring().one());
    t[0] = r;
    return M.action().at(t, a);
}

/// Classical-style primality over every unsorted scalar tuple.
/// The premise additionally requires the product to avoid excluded (and 0 when nonzero is set).
inline bool naive_classical_like(const Hypermodule& M, ElementSet Q, ElementSet excluded, bool nonzero) {
    for (const auto& r : all_tuples(M.n() - 1, M.ring().size())) {
        for (std::size_t a = 0; a < M.size(); ++a) {
            const ElementSet X = M.action().at(r, a);
            if (!X.subset_of(Q) || X.intersects(excluded)) continue;
            if (nonzero && X.contains(M.zero())) continue;
            bool concl = false;
            for (auto ri : r) concl = concl || naive_single(M, ri, a).subset_of(Q);
            if (!concl) return false;
        }
    }
    return true;
}

/// n-ary prime by definition: g(r, a) within N, a outside N forces g(r, M) within N.
inline bool naive_prime(const Hypermodule& M, ElementSet N) {
    for (const auto& r : all_tuples(M.n() - 1, M.ring().size())) {
        ElementSet whole;
        for (std::size_t a = 0; a < M.size(); ++a) whole |= M.action().at(r, a);
        for (std::size_t a = 0; a < M.size(); ++a)
            if (M.action().at(r, a).subset_of(N) && !N.contains(a) && !whole.subset_of(N)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- mutations

struct Mutation {
    std::size_t line = 0;
    std::string before;
    std::string after;
};

/// Replaces the result of one randomly chosen table line. Ring products stay single-valued.
inline std::pair<std::string, Mutation> mutate_structure_text(const std::string& text, std::mt19937& rng) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) lines.push_back(l);
    // Carrier labels per block, and which lines are table entries.
    std::vector<std::vector<std::string>> carrier_at(lines.size());
    std::vector<bool> in_ring(lines.size(), false);
    std::vector<std::size_t> candidates;
    std::vector<std::string> labels;
    bool ring_block = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto toks = detail::split_ws(lines[i]);
        if (toks.empty()) continue;
        if (toks[0] == "ring") ring_block = true;
        if (toks[0] == "module") ring_block = false;
        if (toks[0] == "elements") labels.assign(toks.begin() + 1, toks.end());
        if ((toks[0] == "f" || toks[0] == "g") && lines[i].find('=') != std::string::npos) {
            candidates.push_back(i);
            carrier_at[i] = labels;
            in_ring[i] = ring_block;
        }
    }
    const std::size_t i = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const auto eq = lines[i].find('=');
    const std::string head = lines[i].substr(0, eq + 1);
    const auto old_toks = detail::split_ws(lines[i].substr(eq + 1));
    const auto& labs = carrier_at[i];
    const bool single = in_ring[i] && lines[i].rfind("g", 0) == 0;
    std::string result;
    for (;;) {
        std::vector<std::string> pick;
        if (single) {
            pick.push_back(labs[std::uniform_int_distribution<std::size_t>(0, labs.size() - 1)(rng)]);
        } else {
            const auto bits = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << labs.size()) - 1)(rng);
            for (std::size_t b = 0; b < labs.size(); ++b)
                if (bits >> b & 1u) pick.push_back(labs[b]);
        }
        if (pick == old_toks) continue;
        for (const auto& p : pick) result += " " + p;
        break;
    }
    Mutation m{i + 1, lines[i], head + result};
    lines[i] = m.after;
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return {out, m};
}

}  // namespace testsupport
