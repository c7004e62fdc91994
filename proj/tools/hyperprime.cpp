// hyperprime: verify, enumerate, classify, construct and run the theorem harness.
//
// Exit codes: 0 success or pass, 1 verification or property failure, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperprime/hyperprime.hpp"

namespace hp = hyperprime;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

hp::ModulePtr need_module(const hp::StructureFile& f, const std::string& name) {
    if (name.empty()) {
        if (f.modules.size() == 1) return f.modules.front();
        throw hp::Error(hp::ErrorKind::Parse, "--module is required when the file has several modules");
    }
    auto M = f.find_module(name);
    if (!M) throw hp::Error(hp::ErrorKind::Parse, "no module named '" + name + "'");
    return M;
}

bool write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    os << text;
    return static_cast<bool>(os);
}

std::string emit_module(const hp::Hypermodule& M) { return hp::serialize_module(M); }

int cmd_verify(const std::string& file, bool as_json) {
    const auto f = hp::load_structure_file(file);
    bool ok = true;
    json out = json::array();
    auto record = [&](const hp::AxiomReport& rep) {
        ok = ok && rep.ok();
        json clauses = json::array();
        for (const auto& r : rep.results) {
            json c{{"id", r.id}, {"group", r.group}, {"checked", r.checked}, {"failures", r.failures}};
            if (r.by_construction) c["by_construction"] = true;
            if (!r.pass()) c["witness"] = r.detail;
            clauses.push_back(c);
        }
        out.push_back({{"kind", rep.kind}, {"structure", rep.structure}, {"ok", rep.ok()}, {"clauses", clauses}});
    };
    std::vector<std::string> lines;
    std::vector<std::string> failures;
    auto note_failures = [&](const hp::AxiomReport& rep) {
        for (const auto& r : rep.results)
            if (!r.pass()) failures.push_back("  " + rep.kind + " " + rep.structure + " " + hp::format_clause(r));
    };
    std::vector<const hp::Hyperring*> covered;
    for (const auto& M : f.modules) {
        const auto [ring_rep, mod_rep] = hp::verify_all(*M);
        if (std::find(covered.begin(), covered.end(), &M->ring()) == covered.end()) {
            covered.push_back(&M->ring());
            record(ring_rep);
            note_failures(ring_rep);
        }
        record(mod_rep);
        note_failures(mod_rep);
        lines.push_back(hp::summary_line(ring_rep) + "; " + hp::summary_line(mod_rep, M->unital()));
    }
    for (const auto& R : f.rings) {
        if (std::find(covered.begin(), covered.end(), R.get()) != covered.end()) continue;
        const auto rep = hp::verify_ring_axioms(*R);
        record(rep);
        note_failures(rep);
        lines.push_back(hp::summary_line(rep));
    }
    if (as_json) {
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& l : lines) std::cout << l << '\n';
        for (const auto& l : failures) std::cout << l << '\n';
    }
    return ok ? kOk : kFailure;
}

int cmd_subs(const std::string& file, const std::string& module, bool ideals) {
    const auto f = hp::load_structure_file(file);
    const auto M = need_module(f, module);
    if (ideals) {
        for (const auto& i : hp::enumerate_hyperideals(M->ring())) std::cout << M->ring().carrier().format(i.members) << '\n';
        return kOk;
    }
    const auto subs = hp::enumerate_subhypermodules(*M);
    const auto maxs = hp::maximal_subhypermodules(subs, M->size());
    for (const auto& s : subs) {
        std::cout << M->carrier().format(s.members);
        if (!s.proper()) std::cout << " (improper)";
        else if (std::find(maxs.begin(), maxs.end(), s) != maxs.end()) std::cout << " (maximal)";
        std::cout << '\n';
    }
    return kOk;
}

int cmd_colon(const std::string& file, const std::string& module, const std::string& sub, const std::string& elem) {
    const auto f = hp::load_structure_file(file);
    const auto M = need_module(f, module);
    const auto N = hp::as_subhypermodule(*M, hp::parse_label_set(M->carrier(), sub)).members;
    const auto& RC = M->ring().carrier();
    if (elem.empty()) {
        std::cout << "S_N = " << RC.format(hp::colon_SN(*M, N).members) << '\n';
    } else {
        const auto a = M->carrier().index_of(elem);
        std::cout << "N_" << elem << " = " << RC.format(hp::colon_Na(*M, N, a).members) << '\n';
    }
    return kOk;
}

int cmd_classify(const std::string& file, const std::string& module, const std::string& sub, const std::string& kind,
                 const std::string& phi_name, bool witness) {
    const auto f = hp::load_structure_file(file);
    const auto M = need_module(f, module);
    const auto Q = hp::parse_label_set(M->carrier(), sub);
    hp::Verdict v;
    std::string label;
    if (kind == "prime") {
        v = hp::prime(*M, Q);
        label = "prime";
    } else if (kind == "classical") {
        v = hp::classical_prime(*M, Q);
        label = "classical-prime";
    } else if (kind == "weakly") {
        v = hp::weakly_classical_prime(*M, Q);
        label = "weakly-classical-prime";
    } else {
        const auto phi = hp::phi_by_name(phi_name);
        v = hp::phi_classical_prime(*M, Q, phi);
        label = "phi-classical-prime[" + phi.name + "]";
    }
    std::cout << label << ": " << (v.holds ? "true" : "false") << '\n';
    if (witness && v.witness)
        std::cout << "witness: r=" << M->ring().carrier().format_tuple(v.witness->scalars)
                  << " a=" << M->carrier().label(v.witness->element) << '\n';
    if (!v.diagnostic.empty()) std::cout << "diagnostic: " << v.diagnostic << '\n';
    return kOk;
}

int cmd_zeros(const std::string& file, const std::string& module, const std::string& sub, std::size_t cap) {
    const auto f = hp::load_structure_file(file);
    const auto M = need_module(f, module);
    const auto Q = hp::parse_label_set(M->carrier(), sub);
    const auto z = hp::find_classical_zeros(*M, Q, cap);
    if (!z.warning.empty()) std::cout << "warning: " << z.warning << '\n';
    std::cout << "classical zeros: " << z.witnesses.size() << '\n';
    for (const auto& w : z.witnesses)
        std::cout << "  r=" << M->ring().carrier().format_tuple(w.scalars) << " X=" << M->carrier().format(w.subset)
                  << '\n';
    return kOk;
}

int cmd_quotient(const std::string& file, const std::string& module, const std::string& sub, const std::string& emit) {
    const auto f = hp::load_structure_file(file);
    const auto M = need_module(f, module);
    const auto N = hp::parse_label_set(M->carrier(), sub);
    const auto q = hp::quotient(M, N, {.allow_axiom_failure = true});
    std::cout << q.module->name() << ": " << q.cosets.size() << " cosets\n";
    for (std::size_t c = 0; c < q.cosets.size(); ++c)
        std::cout << "  " << q.module->carrier().label(c) << '\n';
    std::cout << hp::summary_line(q.report, q.module->unital()) << '\n';
    for (const auto& r : q.report.results)
        if (!r.pass()) std::cout << "  " << hp::format_clause(r) << '\n';
    if (!emit.empty() && !write_text(emit, emit_module(*q.module))) {
        std::cerr << "cannot write " << emit << '\n';
        return kUsage;
    }
    return q.report.ok() ? kOk : kFailure;
}

int cmd_product(const std::string& file, const std::vector<std::string>& names, bool over_product_ring,
                const std::string& emit) {
    if (names.size() != 2) throw hp::Error(hp::ErrorKind::Parse, "--modules takes exactly two names");
    const auto f = hp::load_structure_file(file);
    const auto M1 = need_module(f, names[0]);
    const auto M2 = need_module(f, names[1]);
    const auto p = over_product_ring ? hp::product_module_over_product_ring(M1, M2) : hp::product_same_ring(M1, M2);
    std::cout << p.module->name() << " over " << p.module->ring().name() << ": " << p.module->size()
              << " elements\n";
    std::cout << hp::summary_line(p.report, p.module->unital()) << '\n';
    for (const auto& r : p.report.results)
        if (!r.pass()) std::cout << "  " << hp::format_clause(r) << '\n';
    if (!emit.empty() && !write_text(emit, emit_module(*p.module))) {
        std::cerr << "cannot write " << emit << '\n';
        return kUsage;
    }
    return p.report.ok() ? kOk : kFailure;
}

int cmd_hom(const std::string& file, const std::string& from, const std::string& to, const std::string& map) {
    const auto f = hp::load_structure_file(file);
    const auto M1 = need_module(f, from);
    const auto M2 = need_module(f, to);
    auto parsed = hp::parse_map(map, *M1, *M2);
    hp::Homomorphism h;
    try {
        h = hp::check_homomorphism(std::move(parsed), M1, M2);
    } catch (const hp::Error& e) {
        if (e.kind() != hp::ErrorKind::NotHom) throw;
        std::cout << "not a homomorphism: " << e.what() << '\n';
        return kFailure;
    }
    std::cout << "homomorphism " << M1->name() << " -> " << M2->name() << '\n';
    std::cout << "kernel: " << M1->carrier().format(h.kernel()) << '\n';
    std::cout << "image: " << M2->carrier().format(h.image(M1->all())) << '\n';
    std::cout << "epi: " << (h.is_epi() ? "true" : "false") << '\n';
    std::cout << "mono: " << (h.is_mono() ? "true" : "false") << '\n';
    return kOk;
}

int cmd_harness(const std::string& dir, const std::vector<std::string>& theorems, bool as_json, bool summary_only,
                std::size_t max_carrier) {
    hp::CorpusOptions copts;
    copts.max_carrier = max_carrier ? max_carrier : hp::max_carrier_from_env();
    const auto corpus = hp::load_corpus(dir, copts);
    hp::HarnessOptions hopts;
    hopts.theorems = theorems;
    const auto results = hp::run_harness(corpus, hopts);
    if (as_json) {
        json out = json::array();
        for (const auto& r : results) {
            json j{{"theorem", r.theorem},
                   {"structure", r.structure},
                   {"status", std::string(hp::to_string(r.status))},
                   {"instances", r.instances},
                   {"nonvacuous", r.nonvacuous},
                   {"failures", r.failures}};
            if (!r.witness.empty()) j["witness"] = r.witness;
            if (!r.reason.empty()) j["reason"] = r.reason;
            out.push_back(j);
        }
        std::cout << out.dump(2) << '\n';
        return hp::any_failure(results) ? kFailure : kOk;
    }
    std::cout << "corpus: " << corpus.entries.size() << " structures, " << corpus.skipped.size() << " skipped\n";
    for (const auto& s : corpus.skipped) std::cout << "  skipped " << s.id << ": " << s.reason << '\n';
    if (!summary_only) {
        for (const auto& r : results) {
            std::cout << hp::to_string(r.status) << ' ' << r.theorem << " @ " << r.structure << " (" << r.nonvacuous
                      << '/' << r.instances << " non-vacuous";
            if (r.failures) std::cout << ", " << r.failures << " failing";
            std::cout << ')';
            if (!r.witness.empty()) std::cout << " witness: " << r.witness;
            if (r.status == hp::Status::Skipped) std::cout << " reason: " << r.reason;
            std::cout << '\n';
        }
    }
    std::cout << "summary:\n";
    for (const auto& s : hp::summarize(results))
        std::cout << "  " << s.theorem << ": pass " << s.pass << ", vacuous " << s.vacuous << ", fail " << s.fail
                  << ", skipped " << s.skipped << "; " << s.nonvacuous << '/' << s.instances << " non-vacuous\n";
    return hp::any_failure(results) ? kFailure : kOk;
}

int cmd_report(const std::string& file) {
    std::cout << hp::structure_report(hp::load_structure_file(file));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Krasner (m,n)-hypermodules: axioms, sub-objects, classical primes and the theorem harness"};
    app.require_subcommand(1);
    bool deterministic = false;
    app.add_flag("--deterministic", deterministic, "Canonical witnesses and ordering; output is always canonical");

    std::string file, module, sub, elem, kind = "classical", phi = "zero", emit, from, to, map, dir;
    std::vector<std::string> modules, theorems;
    bool ideals = false, witness = false, as_json = false, product_ring = false, summary_only = false;
    std::size_t cap = hp::kDefaultZeroCap, max_carrier = 0;

    auto* verify = app.add_subcommand("verify", "Check ring and module axioms");
    verify->add_option("file", file)->required()->check(CLI::ExistingFile);
    verify->add_flag("--json", as_json);

    auto* subs = app.add_subcommand("subs", "List subhypermodules or hyperideals");
    subs->add_option("file", file)->required()->check(CLI::ExistingFile);
    subs->add_option("--module", module);
    subs->add_flag("--ideals", ideals, "List hyperideals of the ring instead");

    auto* colon = app.add_subcommand("colon", "S_N, or N_a with --elem");
    colon->add_option("file", file)->required()->check(CLI::ExistingFile);
    colon->add_option("--module", module);
    colon->add_option("--sub", sub)->required();
    colon->add_option("--elem", elem);

    auto* classify = app.add_subcommand("classify", "Classify a proper subhypermodule");
    classify->add_option("file", file)->required()->check(CLI::ExistingFile);
    classify->add_option("--module", module);
    classify->add_option("--sub", sub)->required();
    classify->add_option("--kind", kind)->check(CLI::IsMember({"prime", "classical", "weakly", "phi"}));
    classify->add_option("--phi", phi)->check(CLI::IsMember({"empty", "zero", "ideal", "id"}));
    classify->add_flag("--witness", witness);

    auto* zeros = app.add_subcommand("zeros", "List classical zeros of a subhypermodule");
    zeros->add_option("file", file)->required()->check(CLI::ExistingFile);
    zeros->add_option("--module", module);
    zeros->add_option("--sub", sub)->required();
    zeros->add_option("--cap", cap, "Largest carrier searched over all subsets");

    auto* quot = app.add_subcommand("quotient", "Build M/N");
    quot->add_option("file", file)->required()->check(CLI::ExistingFile);
    quot->add_option("--module", module);
    quot->add_option("--sub", sub)->required();
    quot->add_option("--emit", emit, "Write the quotient as a structure file");

    auto* prod = app.add_subcommand("product", "Build M1 x M2");
    prod->add_option("file", file)->required()->check(CLI::ExistingFile);
    prod->add_option("--modules", modules)->required()->delimiter(',');
    prod->add_flag("--product-ring", product_ring, "Act by R1 x R2 componentwise");
    prod->add_option("--emit", emit, "Write the product as a structure file");

    auto* hom = app.add_subcommand("hom", "Check a map between modules over one ring");
    hom->add_option("file", file)->required()->check(CLI::ExistingFile);
    hom->add_option("--from", from)->required();
    hom->add_option("--to", to)->required();
    hom->add_option("--map", map)->required();

    auto* harness = app.add_subcommand("harness", "Run the theorems over a corpus directory");
    harness->add_option("dir", dir)->required()->check(CLI::ExistingDirectory);
    harness->add_option("--theorem", theorems, "Comma separated theorem ids")->delimiter(',');
    harness->add_flag("--json", as_json);
    harness->add_flag("--summary", summary_only, "Only per-theorem totals");
    harness->add_option("--max-carrier", max_carrier, "Largest derived structure (default HYPERPRIME_MAX_CARRIER or 16)");

    auto* report = app.add_subcommand("report", "Full plain-text report of a structure file");
    report->add_option("file", file)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(file, as_json);
        if (*subs) return cmd_subs(file, module, ideals);
        if (*colon) return cmd_colon(file, module, sub, elem);
        if (*classify) return cmd_classify(file, module, sub, kind, phi, witness);
        if (*zeros) return cmd_zeros(file, module, sub, cap);
        if (*quot) return cmd_quotient(file, module, sub, emit);
        if (*prod) return cmd_product(file, modules, product_ring, emit);
        if (*hom) return cmd_hom(file, from, to, map);
        if (*harness) return cmd_harness(dir, theorems, as_json, summary_only, max_carrier);
        if (*report) return cmd_report(file);
    } catch (const hp::Error& e) {
        std::cerr << "error (" << hp::to_string(e.kind()) << "): " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
