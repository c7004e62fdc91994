#pragma once

/**
 * @file format.hpp
 * @brief Plain-text structure files.
 *
 *     ring R arity 3 3
 *     elements 0 1 2
 *     zero 0
 *     one 1
 *     f 0 0 1 = 1          # any order; stored sorted
 *     g 1 1 1 = 1
 *     module M over R
 *     elements 0 1 2 3
 *     zero 0
 *     unital false
 *     f 0 1 2 = 0 1 2
 *     g 1 2 | 1 = 2        # scalars | element = result
 *
 * Every sorted tuple must be listed exactly once.
 */

#include <algorithm>
#include <cstddef>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperprime/element_set.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/table.hpp"
#include "hyperprime/tuples.hpp"

namespace hyperprime {

struct StructureFile {
    std::vector<RingPtr> rings;
    std::vector<ModulePtr> modules;

    RingPtr find_ring(std::string_view name) const {
        for (const auto& r : rings)
            if (r->name() == name) return r;
        return nullptr;
    }
    ModulePtr find_module(std::string_view name) const {
        for (const auto& m : modules)
            if (m->name() == name) return m;
        return nullptr;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

struct PendingTable {
    std::size_t arity = 0;
    std::size_t size = 0;
    std::map<Tuple, ElementSet> entries;
};

struct Block {
    bool is_module = false;
    std::size_t line = 0;
    std::string name;
    std::string over;
    std::size_t m = 0, n = 0;
    std::optional<Carrier> carrier;
    std::optional<std::string> zero, one;
    bool unital = false;
    std::map<Tuple, ElementSet> f;
    std::map<std::pair<Tuple, std::size_t>, ElementSet> g;
    RingPtr ring;
};

inline std::size_t lookup(const Carrier& c, const std::string& label, std::size_t line) {
    if (auto i = c.find(label)) return *i;
    parse_fail(line, "unknown element label '" + label + "'");
}

inline ElementSet parse_result(const Carrier& c, const std::vector<std::string>& toks, std::size_t from,
                               std::size_t line) {
    ElementSet out;
    for (std::size_t i = from; i < toks.size(); ++i) out.insert(lookup(c, toks[i], line));
    if (out.empty()) parse_fail(line, "empty hyperproduct");
    return out;
}

inline HyperOpTable finish_table(const std::map<Tuple, ElementSet>& entries, std::size_t arity, const Carrier& c,
                                 const std::string& what, std::size_t line) {
    MultisetIndexer idx(arity, c.size());
    std::vector<ElementSet> out(idx.count());
    for_each_sorted_tuple(arity, c.size(), [&](const Tuple& t) {
        auto it = entries.find(t);
        if (it == entries.end()) parse_fail(line, "incomplete table: " + what + " has no entry for " + c.format_tuple(t));
        out[idx.rank_sorted(t)] = it->second;
    });
    return HyperOpTable(arity, c.size(), std::move(out));
}

inline RingPtr finish_ring(Block& b) {
    if (!b.carrier) parse_fail(b.line, "ring " + b.name + " has no elements line");
    if (!b.zero || !b.one) parse_fail(b.line, "ring " + b.name + " needs zero and one");
    const auto& c = *b.carrier;
    if (c.size() < 2) parse_fail(b.line, "ring " + b.name + ": single-element rings are not supported");
    std::map<Tuple, ElementSet> gp;
    for (const auto& [key, v] : b.g) {
        if (v.size() != 1)
            parse_fail(b.line, "ring " + b.name + ": g entry " + c.format_tuple(key.first) + " must be a single element");
        gp.emplace(key.first, v);
    }
    auto add = finish_table(b.f, b.m, c, "f of ring " + b.name, b.line);
    auto mul = finish_table(gp, b.n, c, "g of ring " + b.name, b.line);
    try {
        return std::make_shared<const Hyperring>(b.name, b.m, b.n, c, std::move(add), std::move(mul),
                                                 lookup(c, *b.zero, b.line), lookup(c, *b.one, b.line));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        parse_fail(b.line, e.what());
    }
}

inline ModulePtr finish_module(Block& b) {
    if (!b.carrier) parse_fail(b.line, "module " + b.name + " has no elements line");
    if (!b.zero) parse_fail(b.line, "module " + b.name + " needs zero");
    const auto& c = *b.carrier;
    const auto& R = *b.ring;
    auto add = finish_table(b.f, R.m(), c, "f of module " + b.name, b.line);
    const std::size_t k = R.n() - 1;
    MultisetIndexer idx(k, R.size());
    std::vector<ElementSet> act(idx.count() * c.size());
    for_each_sorted_tuple(k, R.size(), [&](const Tuple& t) {
        for (std::size_t a = 0; a < c.size(); ++a) {
            auto it = b.g.find({t, a});
            if (it == b.g.end())
                parse_fail(b.line, "incomplete table: g of module " + b.name + " has no entry for " +
                                       R.carrier().format_tuple(t) + " | " + c.label(a));
            act[idx.rank_sorted(t) * c.size() + a] = it->second;
        }
    });
    try {
        return std::make_shared<const Hypermodule>(b.name, b.ring, c, std::move(add),
                                                   ActionTable(k, R.size(), c.size(), std::move(act)),
                                                   lookup(c, *b.zero, b.line), b.unital);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        parse_fail(b.line, e.what());
    }
}

}  // namespace detail

/// Parses every ring and module in the text. Modules may refer to rings defined earlier in the same text
/// or to rings passed in `known`.
inline StructureFile parse_structure(std::string_view text, const std::vector<RingPtr>& known = {}) {
    StructureFile out;
    std::optional<detail::Block> cur;

    auto find_ring = [&](const std::string& name) -> RingPtr {
        if (auto r = out.find_ring(name)) return r;
        for (const auto& r : known)
            if (r->name() == name) return r;
        return nullptr;
    };
    auto close = [&] {
        if (!cur) return;
        if (cur->is_module)
            out.modules.push_back(detail::finish_module(*cur));
        else
            out.rings.push_back(detail::finish_ring(*cur));
        cur.reset();
    };

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        const auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const auto& kw = toks[0];

        if (kw == "ring") {
            close();
            if (toks.size() != 5 || toks[2] != "arity") detail::parse_fail(lineno, "expected 'ring NAME arity M N'");
            if (find_ring(toks[1])) detail::parse_fail(lineno, "duplicate ring name '" + toks[1] + "'");
            detail::Block b;
            b.line = lineno;
            b.name = toks[1];
            try {
                b.m = std::stoul(toks[3]);
                b.n = std::stoul(toks[4]);
            } catch (const std::exception&) {
                detail::parse_fail(lineno, "arities must be integers");
            }
            if (b.m < 2 || b.n < 2 || b.m > kMaxArity || b.n > kMaxArity)
                detail::parse_fail(lineno, "arities must be in [2, " + std::to_string(kMaxArity) + "]");
            cur = std::move(b);
            continue;
        }
        if (kw == "module") {
            close();
            if (toks.size() != 4 || toks[2] != "over") detail::parse_fail(lineno, "expected 'module NAME over RING'");
            if (out.find_module(toks[1])) detail::parse_fail(lineno, "duplicate module name '" + toks[1] + "'");
            detail::Block b;
            b.is_module = true;
            b.line = lineno;
            b.name = toks[1];
            b.over = toks[3];
            b.ring = find_ring(toks[3]);
            if (!b.ring) detail::parse_fail(lineno, "unknown ring '" + toks[3] + "'");
            b.m = b.ring->m();
            b.n = b.ring->n();
            cur = std::move(b);
            continue;
        }
        if (!cur) detail::parse_fail(lineno, "'" + kw + "' outside a ring or module block");
        auto& b = *cur;

        if (kw == "elements") {
            if (b.carrier) detail::parse_fail(lineno, "elements listed twice");
            std::vector<std::string> labels(toks.begin() + 1, toks.end());
            for (const auto& l : labels)
                if (l.find_first_of("|=") != std::string::npos)
                    detail::parse_fail(lineno, "label '" + l + "' contains a reserved character");
            try {
                b.carrier = Carrier(std::move(labels));
            } catch (const Error& e) {
                detail::parse_fail(lineno, e.what());
            }
            continue;
        }
        if (kw == "zero" || kw == "one") {
            if (toks.size() != 2) detail::parse_fail(lineno, "expected '" + kw + " LABEL'");
            if (kw == "one" && b.is_module) detail::parse_fail(lineno, "modules have no 'one'");
            (kw == "zero" ? b.zero : b.one) = toks[1];
            continue;
        }
        if (kw == "unital") {
            if (!b.is_module) detail::parse_fail(lineno, "'unital' applies to modules only");
            if (toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
                detail::parse_fail(lineno, "expected 'unital true|false'");
            b.unital = toks[1] == "true";
            continue;
        }
        if (kw == "f" || kw == "g") {
            if (!b.carrier) detail::parse_fail(lineno, "table entry before elements line");
            const auto& c = *b.carrier;
            const auto eq = std::find(toks.begin(), toks.end(), "=");
            if (eq == toks.end()) detail::parse_fail(lineno, "missing '='");
            const auto eq_at = static_cast<std::size_t>(eq - toks.begin());
            if (kw == "f" || !b.is_module) {
                const std::size_t arity = kw == "f" ? b.m : b.n;
                if (eq_at - 1 != arity)
                    detail::parse_fail(lineno, kw + " expects " + std::to_string(arity) + " arguments");
                Tuple t;
                for (std::size_t i = 1; i < eq_at; ++i) t.push_back(detail::lookup(c, toks[i], lineno));
                std::sort(t.begin(), t.end());
                const auto r = detail::parse_result(c, toks, eq_at + 1, lineno);
                if (kw == "f") {
                    if (!b.f.emplace(t, r).second) detail::parse_fail(lineno, "duplicate tuple " + c.format_tuple(t));
                } else {
                    if (!b.g.emplace(std::pair{t, std::size_t{0}}, r).second)
                        detail::parse_fail(lineno, "duplicate tuple " + c.format_tuple(t));
                }
                continue;
            }
            const auto bar = std::find(toks.begin(), toks.end(), "|");
            if (bar == toks.end() || bar > eq) detail::parse_fail(lineno, "module g entry needs 'scalars | element'");
            const auto bar_at = static_cast<std::size_t>(bar - toks.begin());
            const auto& rc = b.ring->carrier();
            if (bar_at - 1 != b.n - 1)
                detail::parse_fail(lineno, "g expects " + std::to_string(b.n - 1) + " scalars");
            if (eq_at != bar_at + 2) detail::parse_fail(lineno, "g expects one module element after '|'");
            Tuple t;
            for (std::size_t i = 1; i < bar_at; ++i) t.push_back(detail::lookup(rc, toks[i], lineno));
            std::sort(t.begin(), t.end());
            const auto a = detail::lookup(c, toks[bar_at + 1], lineno);
            const auto r = detail::parse_result(c, toks, eq_at + 1, lineno);
            if (!b.g.emplace(std::pair{t, a}, r).second)
                detail::parse_fail(lineno, "duplicate tuple " + rc.format_tuple(t) + " | " + c.label(a));
            continue;
        }
        detail::parse_fail(lineno, "unknown keyword '" + kw + "'");
    }
    close();
    return out;
}

namespace detail {

inline void write_result(std::ostringstream& os, const Carrier& c, ElementSet r) {
    os << " =";
    for (auto i : r) os << ' ' << c.label(i);
    os << '\n';
}

}  // namespace detail

inline std::string serialize_ring(const Hyperring& R) {
    std::ostringstream os;
    const auto& c = R.carrier();
    os << "ring " << R.name() << " arity " << R.m() << ' ' << R.n() << '\n';
    os << "elements";
    for (const auto& l : c.labels()) os << ' ' << l;
    os << "\nzero " << c.label(R.zero()) << "\none " << c.label(R.one()) << '\n';
    R.add().for_each_entry([&](const Tuple& t, ElementSet r) {
        os << 'f';
        for (auto x : t) os << ' ' << c.label(x);
        detail::write_result(os, c, r);
    });
    R.mul().for_each_entry([&](const Tuple& t, ElementSet r) {
        os << 'g';
        for (auto x : t) os << ' ' << c.label(x);
        detail::write_result(os, c, r);
    });
    return os.str();
}

/// Module block only; the ring must be written before it.
inline std::string serialize_module_block(const Hypermodule& M) {
    std::ostringstream os;
    const auto& c = M.carrier();
    const auto& rc = M.ring().carrier();
    os << "module " << M.name() << " over " << M.ring().name() << '\n';
    os << "elements";
    for (const auto& l : c.labels()) os << ' ' << l;
    os << "\nzero " << c.label(M.zero()) << "\nunital " << (M.unital() ? "true" : "false") << '\n';
    M.add().for_each_entry([&](const Tuple& t, ElementSet r) {
        os << 'f';
        for (auto x : t) os << ' ' << c.label(x);
        detail::write_result(os, c, r);
    });
    M.action().for_each_entry([&](const Tuple& t, std::size_t a, ElementSet r) {
        os << 'g';
        for (auto x : t) os << ' ' << rc.label(x);
        os << " | " << c.label(a);
        detail::write_result(os, c, r);
    });
    return os.str();
}

/// Ring followed by the module: a self-contained file.
inline std::string serialize_module(const Hypermodule& M) {
    return serialize_ring(M.ring()) + "\n" + serialize_module_block(M);
}

inline std::string serialize(const StructureFile& file) {
    std::string out;
    for (const auto& r : file.rings) out += serialize_ring(*r) + "\n";
    for (const auto& m : file.modules) out += serialize_module_block(*m) + "\n";
    return out;
}

/// Same labels, same distinguished elements, same tables.
inline bool same_ring(const Hyperring& a, const Hyperring& b) {
    return a.m() == b.m() && a.n() == b.n() && a.carrier() == b.carrier() && a.zero() == b.zero() &&
           a.one() == b.one() && a.add() == b.add() && a.mul() == b.mul();
}

inline bool same_module(const Hypermodule& a, const Hypermodule& b) {
    return same_ring(a.ring(), b.ring()) && a.carrier() == b.carrier() && a.zero() == b.zero() &&
           a.unital() == b.unital() && a.add() == b.add() && a.action() == b.action();
}

/// "0,2" -> {0, 2} in the labels of c. Blank entries are ignored.
inline ElementSet parse_label_set(const Carrier& c, std::string_view text) {
    ElementSet out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) out.insert(c.index_of(item));
        pos = comma + 1;
    }
    if (out.empty()) throw Error(ErrorKind::EmptySubset, "subset is empty");
    return out;
}

}  // namespace hyperprime
