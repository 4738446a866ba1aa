// posetder: outer derivations, homology torsion and conclusiveness of finite posets.
//
// Exit codes: 0 ok, 2 input error, 3 path limit exceeded, 4 internal
// cross-check failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posetder/errors.hpp"
#include "posetder/fixtures.hpp"
#include "posetder/report.hpp"
#include "posetder/survey.hpp"

namespace {

using posetder::Json;

constexpr int kExitInput = 2;
constexpr int kExitPathLimit = 3;
constexpr int kExitCrossCheck = 4;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int fail(int code, const std::string& kind, const std::string& message) {
    emit(Json{{"error", message}, {"kind", kind}});
    return code;
}

struct Options {
    std::size_t path_limit = posetder::kDefaultPathLimit;
    bool json = true;
    bool reduce = false;

    std::string analyze_path;
    std::vector<std::string> rings;
    std::optional<std::uint64_t> witness_prime;
    int crown_max_n = 6;

    std::string poset_path;
    std::string function_path;
    std::optional<std::string> verify_ring;
    std::uint64_t prime = 2;

    int homology_dim = 1;
    int sweep_max_n = 7;
    int sweep_jobs = 1;
    std::string sweep_out;
    std::string fixture_name;
};

int run_analyze(const Options& o) {
    const auto poset = posetder::load_poset(o.analyze_path, o.reduce);
    posetder::AnalyzeOptions ao;
    if (!o.rings.empty()) ao.rings = o.rings;
    ao.path_limit = o.path_limit;
    ao.witness_prime = o.witness_prime;
    ao.crown_max_n = o.crown_max_n;
    emit(posetder::report_to_json(poset, posetder::analyze(poset, ao)));
    return 0;
}

int run_verify(const Options& o) {
    const auto poset = posetder::load_poset(o.poset_path, o.reduce);
    auto fn = posetder::load_json(o.function_path);
    if (o.verify_ring && fn.is_object()) fn["ring"] = *o.verify_ring;
    emit(posetder::verify_derivation(poset, posetder::cover_assignment_from_json(poset, fn)));
    return 0;
}

int run_witness(const Options& o) {
    const auto poset = posetder::load_poset(o.poset_path, o.reduce);
    emit(posetder::witness_json(poset, o.prime, o.path_limit));
    return 0;
}

int run_homology(const Options& o) {
    const auto poset = posetder::load_poset(o.poset_path, o.reduce);
    const auto verdict = posetder::classify(poset);
    emit(Json{{"homology", posetder::homology_to_json(posetder::homology(poset, o.homology_dim))},
              {"conclusiveness", posetder::verdict_to_json(verdict)}});
    return 0;
}

int run_core(const Options& o) {
    const auto poset = posetder::load_poset(o.poset_path, o.reduce);
    const auto c = posetder::core(poset);
    emit(Json{{"core", posetder::poset_to_json(c)},
              {"removed", poset.size() - c.size()},
              {"canonical_form", posetder::to_hex(posetder::canonical_form(c))}});
    return 0;
}

int run_crowns(const Options& o) {
    const auto poset = posetder::load_poset(o.poset_path, o.reduce);
    const auto crowns = posetder::find_crowns(poset, o.crown_max_n);
    emit(Json{{"max_n", o.crown_max_n}, {"crowns", posetder::crowns_to_json(poset, crowns)}});
    return 0;
}

int run_criteria(const Options& o) {
    const auto poset = posetder::load_poset(o.poset_path, o.reduce);
    const auto report = posetder::evaluate_criteria(poset, o.crown_max_n);
    std::optional<posetder::ConclusiveVerdict> verdict;
    if (report.table2_case) verdict = posetder::classify(poset);
    emit(Json{{"criteria", posetder::criteria_to_json(poset, report, verdict)}});
    return 0;
}

int run_sweep(const Options& o) {
    auto report = posetder::sweep(o.sweep_max_n, o.sweep_jobs, [](int n, std::size_t done, std::size_t) {
        std::cerr << "n=" << n << ": " << done << " posets\n";
    });
    const auto j = posetder::sweep_to_json(report);
    if (o.sweep_out.empty()) {
        emit(j);
    } else {
        std::ofstream out(o.sweep_out);
        if (!out) return fail(kExitInput, "io", "cannot write '" + o.sweep_out + "'");
        out << j.dump(2) << '\n';
    }
    if (!report.ok()) {
        for (const auto& f : report.identity_failures) std::cerr << "cross-check failed: " << f << '\n';
        return kExitCrossCheck;
    }
    return 0;
}

int run_fixture(const Options& o) {
    emit(posetder::fixture_json(o.fixture_name));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outer derivations, homology torsion and conclusiveness of finite posets"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit JSON (the only format)");
    app.add_option("--path-limit", o.path_limit, "Maximum cover paths per pair of elements")
        ->check(CLI::PositiveNumber);
    app.add_flag("--reduce", o.reduce, "Transitively reduce the input covers before validation");

    int (*handler)(const Options&) = nullptr;

    auto* analyze = app.add_subcommand("analyze", "Full report for a poset file");
    analyze->add_option("path", o.analyze_path, "Poset JSON")->required();
    analyze->add_option("--ring", o.rings, "q | gf:<p> (repeatable; default q, gf:2, gf:3)");
    analyze->add_option("--witness", o.witness_prime, "Also produce an outer derivation over Z/p");
    analyze->add_option("--crown-max-n", o.crown_max_n, "Largest crown searched")->check(CLI::Range(2, 64));
    analyze->callback([&] { handler = run_analyze; });

    auto* derivation = app.add_subcommand("derivation", "Check or construct derivations");
    derivation->require_subcommand(1);
    auto* verify = derivation->add_subcommand("verify", "Test a cover assignment for transitivity and potentiality");
    verify->add_option("poset", o.poset_path, "Poset JSON")->required();
    verify->add_option("function", o.function_path, "Function JSON")->required();
    verify->add_option("--ring", o.verify_ring, "Override the ring named in the function file");
    verify->callback([&] { handler = run_verify; });
    auto* witness = derivation->add_subcommand("witness", "Find an outer derivation over Z/p");
    witness->add_option("poset", o.poset_path, "Poset JSON")->required();
    witness->add_option("--prime", o.prime, "Prime p")->required();
    witness->callback([&] { handler = run_witness; });

    auto* homology = app.add_subcommand("homology", "Integral homology of the order complex");
    homology->add_option("poset", o.poset_path, "Poset JSON")->required();
    homology->add_option("--dim", o.homology_dim, "Homology degree")->check(CLI::NonNegativeNumber);
    homology->callback([&] { handler = run_homology; });

    auto* core = app.add_subcommand("core", "Remove beat points until none remain");
    core->add_option("poset", o.poset_path, "Poset JSON")->required();
    core->callback([&] { handler = run_core; });

    auto* crowns = app.add_subcommand("crowns", "List induced crowns");
    crowns->add_option("poset", o.poset_path, "Poset JSON")->required();
    crowns->add_option("--max-n", o.crown_max_n, "Largest crown searched")->check(CLI::Range(2, 64));
    crowns->callback([&] { handler = run_crowns; });

    auto* criteria = app.add_subcommand("criteria", "Combinatorial conclusiveness criteria");
    criteria->add_option("poset", o.poset_path, "Poset JSON")->required();
    criteria->add_option("--crown-max-n", o.crown_max_n, "Largest crown searched")->check(CLI::Range(2, 64));
    criteria->callback([&] { handler = run_criteria; });

    auto* sweep = app.add_subcommand("sweep", "Classify every poset up to a size");
    sweep->add_option("--max-n", o.sweep_max_n, "Largest poset size (1..8)");
    sweep->add_option("--jobs", o.sweep_jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", o.sweep_out, "Write the report here instead of stdout");
    sweep->callback([&] { handler = run_sweep; });

    auto* fixture = app.add_subcommand("fixture", "Print a built-in poset or function");
    fixture->add_option("name", o.fixture_name,
                        "rp2 | table1 | diamond | s5 | crown:n | chain:n | antichain:n | fence:n")
        ->required();
    fixture->callback([&] { handler = run_fixture; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kExitInput, "usage", e.what());
    }

    try {
        return handler(o);
    } catch (const posetder::PathLimitExceeded& e) {
        return fail(kExitPathLimit, "path_limit", e.what());
    } catch (const posetder::InputError& e) {
        return fail(kExitInput, "input", e.what());
    } catch (const std::exception& e) {
        return fail(kExitCrossCheck, "internal", e.what());
    }
}
