#pragma once

/**
 * @file report.hpp
 * @brief Plain-text report of everything computed for a structure file.
 *
 * The layout is line oriented and stable so reports can be diffed against
 * checked-in golden files. Element names are always the labels of the file.
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "hyperprime/axioms.hpp"
#include "hyperprime/classify.hpp"
#include "hyperprime/construct.hpp"
#include "hyperprime/error.hpp"
#include "hyperprime/format.hpp"
#include "hyperprime/structures.hpp"
#include "hyperprime/subobjects.hpp"

namespace hyperprime {

inline std::string format_clause(const AxiomResult& r) {
    if (r.by_construction) return r.id + ": by construction";
    std::string out = r.id + ": ";
    if (r.pass()) return out + "pass (" + std::to_string(r.checked) + " checked)";
    return out + "FAIL " + std::to_string(r.failures) + "/" + std::to_string(r.checked) + ", first: " + r.detail;
}

inline std::string format_verdict(const Hypermodule& M, const Verdict& v) {
    std::string out = v.holds ? "true" : "false";
    if (v.witness)
        out += " (r=" + M.ring().carrier().format_tuple(v.witness->scalars) +
               " a=" + M.carrier().label(v.witness->element) + ")";
    if (!v.diagnostic.empty()) out += " [" + v.diagnostic + "]";
    return out;
}

inline void write_axioms(std::ostringstream& os, const AxiomReport& rep) {
    for (const auto& r : rep.results) os << "  " << format_clause(r) << '\n';
}

inline void write_sub_section(std::ostringstream& os, const Hypermodule& M, ElementSet Q, const ModulePtr& Mp) {
    const auto& C = M.carrier();
    const auto& RC = M.ring().carrier();
    os << "sub " << C.format(Q) << '\n';
    os << "  S_N = " << RC.format(colon_SN(M, Q).members) << '\n';
    os << "  N_a:";
    for (std::size_t a = 0; a < M.size(); ++a) os << ' ' << C.label(a) << "->" << RC.format(colon_Na(M, Q, a).members);
    os << '\n';
    if (Q == M.all()) return;
    os << "  prime: " << format_verdict(M, prime(M, Q)) << '\n';
    os << "  classical-prime: " << format_verdict(M, classical_prime(M, Q)) << '\n';
    os << "  weakly-classical-prime: " << format_verdict(M, weakly_classical_prime(M, Q)) << '\n';
    for (const auto& phi : phi_registry()) {
        const ElementSet v = phi(M, Q);
        os << "  phi-classical-prime[" << phi.name << "] phi(Q)=" << C.format(v) << ": ";
        try {
            os << format_verdict(M, phi_classical_prime(M, Q, phi)) << '\n';
        } catch (const Error& e) {
            os << "error " << to_string(e.kind()) << '\n';
        }
    }
    if (M.m() == 3 && M.n() == 3 && M.size() <= kDefaultZeroCap) {
        const auto z = find_classical_zeros(M, Q);
        os << "  classical zeros: " << z.witnesses.size();
        if (!z.witnesses.empty())
            os << ", first r=" << RC.format_tuple(z.witnesses.front().scalars)
               << " X=" << C.format(z.witnesses.front().subset);
        os << '\n';
    }
    const auto q = quotient(Mp, Q, {.allow_axiom_failure = true});
    os << "  quotient " << q.module->name() << ": " << q.cosets.size() << " cosets, axioms "
       << (q.report.ok() ? "pass" : "FAIL");
    if (!q.report.ok()) {
        os << " (";
        bool first = true;
        for (const auto& r : q.report.results)
            if (!r.pass()) {
                os << (first ? "" : ", ") << r.id;
                first = false;
            }
        os << ')';
    }
    os << '\n';
}

inline void write_module_section(std::ostringstream& os, const ModulePtr& Mp) {
    const auto& M = *Mp;
    const auto& C = M.carrier();
    os << "module " << M.name() << " over " << M.ring().name() << " on " << C.format(M.all()) << '\n';
    const auto rep = verify_module_axioms(M, {.require_valid_ring = false});
    write_axioms(os, rep);
    os << summary_line(rep, M.unital()) << '\n';

    const auto subs = enumerate_subhypermodules(M);
    os << "subhypermodules (" << subs.size() << "):";
    for (const auto& s : subs) os << ' ' << C.format(s.members);
    os << '\n';
    os << "maximal:";
    for (const auto& s : maximal_subhypermodules(subs, M.size())) os << ' ' << C.format(s.members);
    os << '\n';
    os << "faithful: " << (is_faithful(M) ? "true" : "false") << '\n';
    os << "torsion-free: strict=" << (is_torsion_free(M, true) ? "true" : "false")
       << " loose=" << (is_torsion_free(M, false) ? "true" : "false") << '\n';
    os << "multiplication: " << (is_multiplication_module(M, subs) ? "true" : "false") << '\n';
    for (const auto& s : subs) write_sub_section(os, M, s.members, Mp);
}

/// Report over every ring and module in the file, in file order.
inline std::string structure_report(const StructureFile& file) {
    std::ostringstream os;
    for (const auto& R : file.rings) {
        os << "ring " << R->name() << " (" << R->m() << ',' << R->n() << ") on " << R->carrier().format(R->all())
           << '\n';
        const auto rep = verify_ring_axioms(*R);
        write_axioms(os, rep);
        os << summary_line(rep) << '\n';
        const auto ideals = enumerate_hyperideals(*R);
        os << "hyperideals (" << ideals.size() << "):";
        for (const auto& i : ideals) os << ' ' << R->carrier().format(i.members);
        os << '\n';
    }
    for (const auto& M : file.modules) write_module_section(os, M);
    return os.str();
}

}  // namespace hyperprime
