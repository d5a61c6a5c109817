// Acceptance suite: end-to-end checks of the published reference values and
// the structural guarantees, one line per criterion, with per-criterion time
// budgets.  Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qperiod/qperiod.hpp"

using namespace qperiod;
using Clock = std::chrono::steady_clock;

namespace {

LaurentZ A_poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentZ p('A');
    for (auto [e, c] : terms) p.add_term(e, Int(c));
    return p;
}

std::string set_to_string(const std::set<std::pair<long long, long long>>& s) {
    std::ostringstream os;
    for (auto [n, p] : s) os << "(" << n << "," << p << ") ";
    return os.str();
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

// Results shared between criteria.
GridExperiment g_grid;
std::vector<ScanRow> g_scan;

bool check_raw_integrality(const InvariantValue& inv, std::string& why) {
    const auto& co = inv.value4p.coeffs();
    for (std::size_t j = 0; j < co.size(); ++j) {
        if (j % 2 == 1 && co[j] != 0) {
            why = "odd zeta-coordinate " + std::to_string(j) + " nonzero";
            return false;
        }
        if (j % 2 == 0 && !is_integral(co[j])) {
            why = "non-integral coefficient " + qperiod::to_string(co[j]);
            return false;
        }
    }
    return true;
}

std::vector<FramedLinkDiagram> oracle_corpus() {
    std::vector<FramedLinkDiagram> out = {
        catalog::unknot(),
        catalog::unlink(2),
        catalog::unlink(3),
        catalog::kink(1),
        catalog::kink(-1),
        catalog::hopf_positive(),
        catalog::hopf_negative(),
        catalog::trefoil_right(),
        catalog::trefoil_left(),
        catalog::figure_eight(),
        catalog::torus2(4),
        catalog::torus2(-4),
        catalog::torus2(5),
        catalog::torus2(-5),
        catalog::torus2(6),
        catalog::torus2(7),
        disjoint_union(catalog::trefoil_right(), catalog::unknot()),
        disjoint_union(catalog::hopf_positive(), catalog::unknot()),
        disjoint_union(catalog::kink(1), catalog::kink(-1)),
        cable(catalog::kink(1), 0, 2),
        cable(catalog::hopf_positive(), 0, 2),
    };
    FramedLinkDiagram r2;
    r2.pd.crossings = {{{1, 4, 2, 3}}, {{2, 4, 1, 3}}};
    r2.pd.components = {{1, 2}, {3, 4}};
    r2.framings = {0, 0};
    out.push_back(r2);
    return out;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"brieskorn(3, 5) closed-form value", 1.0, [](std::string& why) {
        SO3Context ctx(5);
        auto inv = brieskorn_invariant(3, ctx);
        auto expect = reduce_to_ring(A_poly({{0, 1}, {1, -2}, {2, 2}, {3, -1}}), ctx.ring2p());
        if (*inv.value2p == expect) return true;
        why = "got " + to_display(inv.value2p->to_laurent('A'), "A");
        return false;
    }});

    criteria.push_back({"brieskorn(3, 7) closed-form value", 1.0, [](std::string& why) {
        SO3Context ctx(7);
        auto inv = brieskorn_invariant(3, ctx);
        auto expect = reduce_to_ring(A_poly({{0, -2}, {1, 1}, {3, 2}, {4, -1}}), ctx.ring2p());
        if (*inv.value2p == expect) return true;
        why = "got " + to_display(inv.value2p->to_laurent('A'), "A");
        return false;
    }});

    criteria.push_back({"surgery state sum equals closed form (p = 5, 7)", 30.0,
                        [](std::string& why) {
        for (long long p : {5, 7}) {
            SO3Context ctx(p);
            auto pres = SurgeryPresentation::from_diagram(catalog::trefoil_right(1));
            auto s = surgery_invariant(pres, ctx);
            auto b = brieskorn_invariant(3, ctx);
            if (!(s.value2p == b.value2p)) {
                why = "mismatch at p = " + std::to_string(p);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"criterion phases: j = -1 at p = 5, no phase at p = 7", 1.0,
                        [](std::string& why) {
        SO3Context c5(5), c7(7);
        auto r5 = manifold_periodicity_test(brieskorn_invariant(3, c5), 5);
        auto r7 = manifold_periodicity_test(brieskorn_invariant(3, c7), 7);
        bool j4 = false;
        for (long long j : r5.passing_j) j4 |= (j == 4);
        if (!r5.pass || !j4) {
            why = "p = 5 did not pass with phase 4";
            return false;
        }
        if (r7.pass || !r7.passing_j.empty()) {
            why = "p = 7 unexpectedly passed";
            return false;
        }
        return true;
    }});

    criteria.push_back({"grid experiment reproduces the reference counts", 60.0,
                        [](std::string& why) {
        g_grid = grid_experiment(2);
        if (g_grid.total != 108) {
            why = "total " + std::to_string(g_grid.total);
            return false;
        }
        if (g_grid.passes != 37) {
            why = "passes " + std::to_string(g_grid.passes);
            return false;
        }
        if (g_grid.flagged_count != 27 || g_grid.flagged_passes != 27) {
            why = "divisibility pairs " + std::to_string(g_grid.flagged_count) + ", passing " +
                  std::to_string(g_grid.flagged_passes);
            return false;
        }
        // Reference exceptional set as printed in the source table.
        std::set<std::pair<long long, long long>> reference = {
            {9, 5},  {-9, 5},  {11, 5},  {-11, 5},  {13, 7},
            {-13, 7}, {15, 7}, {-15, 7}, {19, 5},  {-19, 7}};
        std::set<std::pair<long long, long long>> got(g_grid.exceptional.begin(),
                                                      g_grid.exceptional.end());
        if (got != reference) {
            why = "exceptional set mismatch: computed { " + set_to_string(got) +
                  "}, reference { " + set_to_string(reference) +
                  "}; the computed set is forced by the closed form, which is 4p-periodic in n "
                  "(so I_7 of n = -19 equals I_7 of n = 9, and I_5 of n = +-19 equals the "
                  "3-sphere value 1, confirmed here by independent surgery state sums); the "
                  "reference table's entry (-19,7) is inconsistent with its own formula and the "
                  "computed entry is (-19,5)";
            return false;
        }
        return true;
    }});

    criteria.push_back({"poincare scan: only p = 5 passes up to 61", 120.0, [](std::string& why) {
        g_scan = poincare_scan(61);
        for (const auto& row : g_scan) {
            bool want_pass = row.p == 5;
            if (row.report.pass != want_pass) {
                why = "p = " + std::to_string(row.p) + " verdict " +
                      (row.report.pass ? "pass" : "fail");
                return false;
            }
        }
        if (g_scan.size() != 16) {
            why = "expected 16 primes, saw " + std::to_string(g_scan.size());
            return false;
        }
        return true;
    }});

    criteria.push_back({"eta identities at p = 5, 7, 11", 5.0, [](std::string& why) {
        for (long long p : {5, 7, 11}) {
            SO3Context ctx(p);
            CycloQ eta2 = ctx.eta() * ctx.eta();
            LaurentZ br('x');
            br.add_term(imod(8, 4 * p), Int(1));
            br.add_term(0, Int(-2));
            br.add_term(imod(-8, 4 * p), Int(1));
            if (Rat(p) * eta2 != -promote(reduce_to_ring(br, ctx.ring4p()))) {
                why = "eta^2 = -(A^2-A^{-2})^2/p failed at p = " + std::to_string(p);
                return false;
            }
            LaurentZ s('A');
            for (long long i = 0; i <= (p - 3) / 2; ++i) s += delta_laurent(i) * delta_laurent(i);
            if (eta2 * ctx.reduce4p(s) != promote(CycloZ::one(ctx.ring4p()))) {
                why = "eta^2 [Omega_p] = 1 failed at p = " + std::to_string(p);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"blow-up invariance of the surgery invariant", 60.0, [](std::string& why) {
        std::vector<FramedLinkDiagram> presentations = {
            FramedLinkDiagram{}, catalog::unknot(1), catalog::trefoil_right(1)};
        for (long long p : {5, 7}) {
            SO3Context ctx(p);
            for (std::size_t i = 0; i < presentations.size(); ++i) {
                auto base = surgery_invariant(
                    SurgeryPresentation::from_diagram(presentations[i]), ctx);
                for (long long f : {1, -1}) {
                    auto blown = surgery_invariant(SurgeryPresentation::from_diagram(
                                                       add_disjoint_unknot(presentations[i], f)),
                                                   ctx);
                    if (blown.value4p != base.value4p) {
                        why = "presentation " + std::to_string(i) + ", framing " +
                              std::to_string(f) + ", p = " + std::to_string(p);
                        return false;
                    }
                }
            }
        }
        return true;
    }});

    criteria.push_back({"integrality of homology-sphere invariants", 120.0, [](std::string& why) {
        // Re-verify the raw rational values behind every invariant used
        // above: even zeta-coordinates integral, odd ones zero.
        SO3Context c5(5), c7(7);
        std::vector<InvariantValue> values;
        values.push_back(brieskorn_invariant(3, c5));
        values.push_back(brieskorn_invariant(3, c7));
        values.push_back(
            surgery_invariant(SurgeryPresentation::from_diagram(catalog::trefoil_right(1)), c5));
        values.push_back(
            surgery_invariant(SurgeryPresentation::from_diagram(catalog::trefoil_right(1)), c7));
        std::map<long long, SO3Context> ctxs;
        for (long long a = 3; a <= 19; a += 2)
            for (long long n : {a, -a})
                for (long long p : {5, 7, 11, 13, 17, 19}) {
                    auto it = ctxs.find(p);
                    if (it == ctxs.end()) it = ctxs.emplace(p, SO3Context(p)).first;
                    values.push_back(brieskorn_invariant(n, it->second));
                }
        for (const auto& row : g_scan) {
            SO3Context ctx(row.p);
            values.push_back(brieskorn_invariant(3, ctx));
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::string detail;
            if (!values[i].homology_sphere || !values[i].value2p) {
                why = "value " + std::to_string(i) + " not reduced";
                return false;
            }
            if (!check_raw_integrality(values[i], detail)) {
                why = "value " + std::to_string(i) + ": " + detail;
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"bracket state sum equals skein recursion on the corpus", 30.0,
                        [](std::string& why) {
        auto corpus = oracle_corpus();
        if (corpus.size() < 20) {
            why = "corpus too small";
            return false;
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (corpus[i].pd.crossing_count() > 8) {
                why = "diagram " + std::to_string(i) + " exceeds 8 crossings";
                return false;
            }
            if (bracket(corpus[i].pd) != bracket_by_skein(corpus[i].pd)) {
                why = "mismatch on diagram " + std::to_string(i);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({"link criteria on (2,p) torus knots and the trefoil", 10.0,
                        [](std::string& why) {
        for (long long p : {5, 7}) {
            auto knot = catalog::torus2(p);
            if (!jones_periodicity_test(knot.pd, p).pass ||
                !bracket_periodicity_test(knot, p, BracketMode::with_writhe).pass) {
                why = "(2," + std::to_string(p) + ") torus knot failed at p = " + std::to_string(p);
                return false;
            }
        }
        if (jones_periodicity_test(catalog::trefoil_left().pd, 5).pass ||
            bracket_periodicity_test(catalog::trefoil_left(), 5, BracketMode::with_writhe).pass) {
            why = "trefoil unexpectedly passed at p = 5";
            return false;
        }
        return true;
    }});

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (ok && elapsed > criteria[i].budget_seconds) {
            ok = false;
            why = "time budget exceeded";
        }
        std::printf("[%s] %2zu %-55s (%6.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), elapsed, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures;
}
