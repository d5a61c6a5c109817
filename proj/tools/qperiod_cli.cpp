// Command-line front end: exact Kauffman brackets, Jones polynomials, SO(3)
// quantum invariants from surgery presentations or the Brieskorn closed form,
// and the periodicity criteria built on them.
//
// Exit codes: 0 = computed (whatever the verdict), 2 = input error,
// 3 = crossing cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "qperiod/qperiod.hpp"

namespace {

using namespace qperiod;

std::string ring_2p(long long p) { return "Z[A]/Phi_" + std::to_string(2 * p); }
std::string ring_2p_mod(long long p) {
    return "Z/" + std::to_string(p) + "[A]/Phi_" + std::to_string(2 * p);
}

ReportFile report_from(const PeriodicityReport& r, const LaurentZ& invariant,
                       const std::string& ring) {
    ReportFile f;
    f.criterion = r.criterion;
    f.p = r.p;
    f.verdict = r.pass ? "pass" : "fail";
    f.passing_j = r.passing_j;
    f.invariant = exponent_map(invariant);
    f.ring = ring;
    f.notes = r.notes;
    return f;
}

void print_periodicity(const PeriodicityReport& r) {
    std::cout << r.criterion << " criterion at p=" << r.p << ": "
              << (r.pass ? "PASS" : "FAIL") << "\n";
    if (r.criterion == "manifold") {
        std::cout << "  passing phases j:";
        if (r.passing_j.empty()) std::cout << " none";
        for (long long j : r.passing_j) std::cout << " " << j;
        std::cout << "\n";
    }
    if (!r.pass) std::cout << "  certificate: not " << r.p << "-periodic\n";
    std::cout << "  note: " << r.notes << "\n";
}

std::string invariant_display(const InvariantValue& inv) {
    if (inv.value2p) return to_display(inv.value2p->to_laurent('A'), "A");
    return to_display(inv.value4p.to_laurent('z'), "z");
}

ReportFile invariant_report(const InvariantValue& inv, const std::string& criterion) {
    ReportFile f;
    f.criterion = criterion;
    f.p = inv.p;
    f.verdict = "computed";
    if (inv.value2p) {
        f.invariant = exponent_map(inv.value2p->to_laurent('A'));
        f.ring = ring_2p(inv.p);
    } else {
        LaurentQ raw = inv.value4p.to_laurent('z');
        for (const auto& [e, c] : raw.terms()) f.invariant[e] = qperiod::to_string(c);
        f.ring = "Q[z]/Phi_" + std::to_string(4 * inv.p);
        f.notes = "not a homology sphere presentation; value in the 4p-th cyclotomic ring";
    }
    return f;
}

struct ExperimentTable {
    GridExperiment ex;

    Json to_json() const {
        Json j;
        j["format"] = "experiment-v1";
        j["rows"] = Json::array();
        for (const auto& cell : ex.cells) {
            Json row;
            row["n"] = cell.n;
            row["p"] = cell.p;
            row["divisibility_flag"] = cell.flagged;
            row["verdict"] = cell.report.pass ? "pass" : "fail";
            row["passing_j"] = cell.report.passing_j;
            j["rows"].push_back(row);
        }
        j["totals"]["pairs"] = ex.total;
        j["totals"]["passes"] = ex.passes;
        j["totals"]["divisibility_pairs"] = ex.flagged_count;
        j["totals"]["divisibility_passes"] = ex.flagged_passes;
        Json exc = Json::array();
        for (auto [n, p] : ex.exceptional) exc.push_back({n, p});
        j["totals"]["exceptional_passes"] = exc;
        return j;
    }

    void print_text() const {
        std::cout << "   n   p  div  verdict  passing j\n";
        for (const auto& cell : ex.cells) {
            std::printf("%4lld  %2lld   %c   %-7s ", cell.n, cell.p, cell.flagged ? 'y' : '.',
                        cell.report.pass ? "pass" : "fail");
            for (long long j : cell.report.passing_j) std::printf(" %lld", j);
            std::printf("\n");
        }
        std::cout << "pairs: " << ex.total << "  criterion holds: " << ex.passes
                  << "  divisibility pairs: " << ex.flagged_count << " (all must pass: "
                  << ex.flagged_passes << " passed)\nexceptional passes:";
        for (auto [n, p] : ex.exceptional) std::cout << " (" << n << "," << p << ")";
        std::cout << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kauffman bracket / Jones polynomial / SO(3) quantum invariant "
                 "calculator with periodicity criteria"};
    app.require_subcommand(1);

    long long max_crossings = qperiod::kDefaultCrossingCap;
    app.add_option("--max-crossings", max_crossings, "State-sum crossing cap (default 26)");

    std::string file, out_path, json_path;
    long long p = 5, n = 3, max_p = 61;
    unsigned jobs = 1;
    bool renormalized = false;

    auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a link file");
    cmd_bracket->add_option("file", file, "linkfile-v1 JSON")->required();
    cmd_bracket->add_flag("--renormalized", renormalized,
                          "renormalized bracket (every loop contributes -A^2-A^-2)");

    auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial of an oriented link file");
    cmd_jones->add_option("file", file, "linkfile-v1 JSON")->required();

    auto* cmd_inv = app.add_subcommand("invariant",
                                       "SO(3) invariant of a surgery presentation at odd prime p");
    cmd_inv->add_option("file", file, "linkfile-v1 JSON")->required();
    cmd_inv->add_option("--p", p, "odd prime")->required();
    cmd_inv->add_option("--out", out_path, "write reportfile-v1 JSON here");

    auto* cmd_brk = app.add_subcommand("brieskorn",
                                       "closed-form invariant of +1 surgery on the (2,n) torus knot");
    cmd_brk->add_option("--n", n, "odd integer, |n| >= 3")->required();
    cmd_brk->add_option("--p", p, "odd prime")->required();
    cmd_brk->add_option("--out", out_path, "write reportfile-v1 JSON here");

    auto* cmd_check = app.add_subcommand("check", "periodicity criteria");
    std::string link_file, manifold_file;
    long long brieskorn_n = 0;
    bool experiment = false, scan = false;
    auto* opt_link = cmd_check->add_option("--link", link_file, "Jones + bracket criteria for a link");
    auto* opt_manifold =
        cmd_check->add_option("--manifold", manifold_file, "criterion for a surgery presentation");
    auto* opt_brieskorn =
        cmd_check->add_option("--brieskorn", brieskorn_n, "criterion for the (2,n) Brieskorn family");
    auto* opt_experiment = cmd_check->add_flag("--experiment", experiment,
                                               "108-pair grid over primes 5..19 and odd 3 <= |n| <= 19");
    auto* opt_scan = cmd_check->add_flag("--poincare-scan", scan,
                                         "test the Poincare sphere at p = 5 and primes 7..max-p");
    cmd_check->add_option("--p", p, "odd prime");
    cmd_check->add_option("--max-p", max_p, "largest prime for --poincare-scan (default 61)");
    cmd_check->add_option("--jobs", jobs, "worker threads for --experiment");
    cmd_check->add_option("--json", json_path, "write the report(s) as JSON here");
    opt_link->excludes(opt_manifold)->excludes(opt_brieskorn)->excludes(opt_experiment)->excludes(opt_scan);
    opt_manifold->excludes(opt_brieskorn)->excludes(opt_experiment)->excludes(opt_scan);
    opt_brieskorn->excludes(opt_experiment)->excludes(opt_scan);
    opt_experiment->excludes(opt_scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_bracket) {
            FramedLinkDiagram d = load_link_file(file);
            LaurentZ b = renormalized ? bracket_renormalized(d.pd, max_crossings)
                                      : bracket(d.pd, max_crossings);
            std::cout << to_display(b, "A") << "\n";
        } else if (*cmd_jones) {
            FramedLinkDiagram d = load_link_file(file);
            std::cout << jones_display(jones(d.pd, max_crossings)) << "\n";
        } else if (*cmd_inv) {
            if (!is_odd_prime(p)) throw MalformedDiagram("--p must be an odd prime");
            FramedLinkDiagram d = load_link_file(file);
            SO3Context ctx(p);
            auto pres = SurgeryPresentation::from_diagram(d);
            InvariantValue inv = surgery_invariant(pres, ctx, max_crossings);
            std::cout << invariant_display(inv) << "\n";
            if (!out_path.empty())
                write_json_file(out_path, report_file_json(invariant_report(inv, "invariant")));
        } else if (*cmd_brk) {
            if (!is_odd_prime(p)) throw MalformedDiagram("--p must be an odd prime");
            SO3Context ctx(p);
            InvariantValue inv = brieskorn_invariant(n, ctx);
            std::cout << invariant_display(inv) << "\n";
            if (!out_path.empty())
                write_json_file(out_path, report_file_json(invariant_report(inv, "invariant")));
        } else if (*cmd_check) {
            if (*opt_link) {
                if (!is_odd_prime(p)) throw MalformedDiagram("--p must be an odd prime");
                FramedLinkDiagram d = load_link_file(link_file);
                LaurentZ v = jones(d.pd, max_crossings), b = bracket(d.pd, max_crossings);
                std::vector<PeriodicityReport> reports = {
                    jones_periodicity_test(d.pd, p, max_crossings),
                    bracket_periodicity_test(d, p, BracketMode::with_writhe, max_crossings),
                    bracket_periodicity_test(d, p, BracketMode::framed, max_crossings)};
                Json all = Json::array();
                for (const auto& r : reports) {
                    print_periodicity(r);
                    const LaurentZ& inv = r.criterion == "jones" ? v : b;
                    std::string ring =
                        r.criterion == "jones"
                            ? "Z/" + std::to_string(p) + "[s]/(s^" + std::to_string(2 * p) + "-1)"
                        : r.criterion == "bracket-with-writhe"
                            ? "Z/" + std::to_string(p) + "[A]/(A^" + std::to_string(4 * p) + "-1)"
                            : "Z/" + std::to_string(p) + "[A]/(A^" + std::to_string(2 * p) + "-1)";
                    all.push_back(report_file_json(report_from(r, inv, ring)));
                }
                if (!json_path.empty()) write_json_file(json_path, all);
            } else if (*opt_manifold || *opt_brieskorn) {
                if (!is_odd_prime(p)) throw MalformedDiagram("--p must be an odd prime");
                SO3Context ctx(p);
                InvariantValue inv;
                if (*opt_manifold) {
                    FramedLinkDiagram d = load_link_file(manifold_file);
                    auto pres = SurgeryPresentation::from_diagram(d);
                    inv = surgery_invariant(pres, ctx, max_crossings);
                    if (!inv.homology_sphere)
                        throw MalformedDiagram(
                            "manifold criterion requires a homology-sphere presentation "
                            "(linking matrix determinant +-1)");
                } else {
                    inv = brieskorn_invariant(brieskorn_n, ctx);
                }
                PeriodicityReport r = manifold_periodicity_test(inv, p);
                std::cout << "I_" << p << " = " << invariant_display(inv) << "\n";
                print_periodicity(r);
                if (!json_path.empty())
                    write_json_file(json_path, report_file_json(report_from(
                                                   r, inv.value2p->to_laurent('A'), ring_2p_mod(p))));
            } else if (*opt_experiment) {
                ExperimentTable table{grid_experiment(jobs)};
                table.print_text();
                if (!json_path.empty()) write_json_file(json_path, table.to_json());
            } else if (*opt_scan) {
                auto rows = poincare_scan(max_p);
                Json j = Json::array();
                for (const auto& row : rows) {
                    std::cout << "p=" << row.p << ": " << (row.report.pass ? "pass" : "fail");
                    if (!row.report.pass) std::cout << "  (not " << row.p << "-periodic)";
                    std::cout << "\n";
                    Json r;
                    r["p"] = row.p;
                    r["verdict"] = row.report.pass ? "pass" : "fail";
                    r["passing_j"] = row.report.passing_j;
                    j.push_back(r);
                }
                if (!json_path.empty()) write_json_file(json_path, j);
            } else {
                std::cerr << "check: pick one of --link/--manifold/--brieskorn/--experiment/"
                             "--poincare-scan\n";
                return 2;
            }
        }
    } catch (const TooManyCrossings& e) {
        std::cerr << "error: " << e.what() << " (raise --max-crossings)\n";
        return 3;
    } catch (const MalformedDiagram& e) {
        std::cerr << "error: MalformedDiagram: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
