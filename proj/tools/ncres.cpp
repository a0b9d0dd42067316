#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ncres/clifford.hpp"
#include "ncres/errors.hpp"
#include "ncres/report.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

namespace {

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact boundary residue terms for twisted Dirac and signature operators"};
    app.require_subcommand(1);

    std::string family = "both", format = "json", fixtures, display, out;
    std::vector<std::string> cases;
    std::uint64_t seed = 0;
    int jet_order = 1, jobs = 0;
    double tol = 1e-9;
    bool no_oracle = false, timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", family, "dirac, signature or both")->check(CLI::IsMember({"dirac", "signature", "both"}));
        sub->add_option("--case", cases, "case groups (aI aII aIII b c); default all")->delimiter(',');
        sub->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--seed", seed, "oracle seed");
        sub->add_option("--fixtures", fixtures, "fixtures JSON path");
        sub->add_option("--display", display, "theorem display JSON path");
        sub->add_option("--jet-order", jet_order, "normal-coordinate jet order")->check(CLI::Range(0, 4));
        sub->add_option("--jobs", jobs, "case workers (0 = hardware threads)");
        sub->add_option("--tol", tol, "oracle relative tolerance");
        sub->add_option("-o,--output", out, "write the report to a file");
        sub->add_flag("--timing", timing, "include wall times (output no longer reproducible)");
    };

    auto* compute = app.add_subcommand("compute", "evaluate cases, assemble totals, diff against fixtures");
    add_common(compute);
    compute->add_flag("--no-oracle", no_oracle, "skip numeric verification");
    bool dump_generators = false;
    compute->add_flag("--dump-generators", dump_generators, "print exact generator matrices and exit");

    auto* oracle = app.add_subcommand("oracle", "compute with numeric verification of every case and mismatch");
    add_common(oracle);

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    bool quick = false;
    selftest->add_option("--seed", seed, "randomization seed");
    selftest->add_option("--tol", tol, "numeric tolerance");
    selftest->add_option("--jobs", jobs, "case workers");
    selftest->add_flag("--quick", quick, "skip the full-pipeline suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (selftest->parsed()) {
            SelftestOptions o;
            o.seed = seed;
            o.tol = tol;
            o.pipeline = !quick;
            if (jobs > 0) o.jobs = jobs;
            bool ok = true;
            for (auto& r : run_selftest(o)) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.detail.empty()) std::cout << ": " << r.detail;
                std::cout << "\n";
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
        if (dump_generators) {
            std::cout << "# spin\n" << build_spin_rep().dump() << "# exterior\n" << build_exterior_rep().dump();
            return 0;
        }
        RunConfig cfg;
        cfg.families = parse_family_selection(family);
        cfg.cases = cases;
        cfg.format = format;
        cfg.oracle = oracle->parsed() || !no_oracle;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.fixtures_path = fixtures;
        cfg.display_path = display;
        cfg.jet_order = jet_order;
        cfg.jobs = jobs;
        cfg.timing = timing;
        Report rep = run(cfg);
        int rc = emit(format == "json" ? render_json(rep) : render_markdown(rep), out);
        if (rc != 0) return rc;
        if (!rep.ok()) {
            std::cerr << (rep.diff.engine_bug ? "engine bug classified in ledger\n" : "invariant failures\n");
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
