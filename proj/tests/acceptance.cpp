/*
 * Acceptance suite.  Eight criteria, one [PASS]/[FAIL] line each, nonzero
 * exit when any fails.  Time limits are part of the criteria and are pinned
 * here, not in the build system.
 */

#include "csfkit/chromatic.hpp"
#include "csfkit/clawtest.hpp"
#include "csfkit/graph.hpp"
#include "csfkit/hunt.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using csf::Basis;
using csf::Coeff;
using csf::Graph;
using csf::Partition;
using csf::SymExpr;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int idx, const std::string& name, bool ok, double ms, double limit_ms,
            const std::string& detail) {
    bool in_time = limit_ms <= 0 || ms <= limit_ms;
    bool pass = ok && in_time;
    if (!pass) ++g_failures;
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << idx << ". " << name << " (" << std::fixed;
    line.precision(ms < 10 ? 3 : 0);
    line << ms << " ms";
    if (limit_ms > 0) {
        line << " / limit " << (long long)limit_ms << " ms";
        if (!in_time) line << ", over limit";
    }
    line << ")";
    if (!ok && !detail.empty()) line << " " << detail;
    std::printf("%s\n", line.str().c_str());
}

SymExpr expr_from(Basis basis, int degree,
                  const std::vector<std::pair<std::vector<int>, long long>>& terms) {
    SymExpr out(basis, degree);
    for (const auto& [parts, c] : terms) out.add_term(Partition(parts), Coeff(c));
    return out;
}

void criterion_claw() {
    Timer t;
    csf::CsfResult r = csf::csf_elementary(csf::make_claw());
    bool ok =
        r.power == expr_from(Basis::power, 4,
                             {{{1, 1, 1, 1}, 1}, {{2, 1, 1}, -3}, {{3, 1}, 3}, {{4}, -1}}) &&
        *r.elementary == expr_from(Basis::elementary, 4,
                                   {{{2, 1, 1}, 1}, {{2, 2}, -2}, {{3, 1}, 5}, {{4}, 4}});
    report(1, "claw expansions in both bases", ok, t.ms(), 1.0, "wrong terms");
}

void criterion_quartet() {
    Timer t;
    bool ok = true;
    std::string detail;
    struct Row {
        const char* name;
        Graph g;
        SymExpr want;
    };
    const std::vector<Row> rows = {
        {"saltire", csf::make_saltire(3, 3),
         expr_from(Basis::elementary, 6,
                   {{{2, 2, 2}, 2}, {{3, 3}, -6}, {{4, 2}, 26}, {{5, 1}, 28}, {{6}, 102}})},
        {"augmented saltire", csf::make_augmented_saltire(3, 3),
         expr_from(Basis::elementary, 6,
                   {{{3, 2, 1}, 2}, {{3, 3}, -6}, {{4, 2}, 24}, {{5, 1}, 40}, {{6}, 120}})},
        {"complete bipartite", csf::make_complete_bipartite(3, 3),
         expr_from(Basis::elementary, 6,
                   {{{2, 2, 2}, 2}, {{3, 3}, -12}, {{4, 2}, 30}, {{5, 1}, 24}, {{6}, 186}})},
        {"augmented complete bipartite", csf::make_ak33(),
         expr_from(Basis::elementary, 6,
                   {{{3, 2, 1}, 2}, {{3, 3}, -6}, {{4, 2}, 20}, {{5, 1}, 32}, {{6}, 228}})},
    };
    const long long want33[] = {-6, -6, -12, -6};
    for (size_t i = 0; i < rows.size(); ++i) {
        SymExpr got = *csf::csf_elementary(rows[i].g).elementary;
        if (!(got == rows[i].want) ||
            coefficient_of(got, Partition({3, 3})) != Coeff(want33[i])) {
            ok = false;
            detail += std::string(" ") + rows[i].name;
        }
    }
    report(2, "six-vertex quartet expansions", ok, t.ms(), 1000.0, "mismatch:" + detail);
}

void criterion_tower() {
    Timer t;
    SymExpr got = *csf::csf_elementary(csf::make_triangular_tower(3, 3, 3)).elementary;
    SymExpr want = expr_from(Basis::elementary, 9,
                             {{{3, 3, 2, 1}, 12},
                              {{3, 3, 3}, -12},
                              {{4, 3, 2}, 102},
                              {{4, 4, 1}, 90},
                              {{5, 2, 2}, 18},
                              {{5, 3, 1}, 96},
                              {{5, 4}, 294},
                              {{6, 2, 1}, 30},
                              {{6, 3}, 180},
                              {{7, 2}, 342},
                              {{8, 1}, 294},
                              {{9}, 666}});
    report(3, "nine-vertex tower expansion", got == want, t.ms(), 1000.0, "wrong terms");
}

void criterion_lemmas() {
    Timer t;
    bool ok = true;
    std::string detail;
    size_t total = 0;
    for (const std::string& id : csf::lemma_ids()) {
        auto [lo, hi] = csf::lemma_default_range(id);
        for (int n = lo; n <= hi; ++n) {
            for (const auto& check : csf::brute_force_check(id, n)) {
                ++total;
                if (!check.pass) {
                    ok = false;
                    detail += " " + check.lemma + "@n=" + std::to_string(n);
                }
            }
        }
    }
    report(4, "coefficient identity suite (" + std::to_string(total) + " checks)", ok, t.ms(),
           60000.0, "failed:" + detail);
}

void criterion_headline() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (long long n = 3; n <= 5; ++n) {
        Coeff flat = Coeff(-n * (n - 1) * (n - 2));
        Coeff tower = Coeff(-n * (n - 1) * (n - 1) * (n - 2));
        Partition mu_sq({(int)n, (int)n});
        Partition mu_pair({(int)n + 1, (int)n});
        Partition mu_cube({(int)n, (int)n, (int)n});

        struct Case {
            const char* name;
            Graph g;
            Partition mu;
            Coeff want;
        };
        std::vector<Case> cases;
        cases.push_back({"SA(n,n)", csf::make_saltire((int)n, (int)n), mu_sq, flat});
        cases.push_back(
            {"AS(n,n)", csf::make_augmented_saltire((int)n, (int)n), mu_sq, flat});
        cases.push_back(
            {"AS(n,n+1)", csf::make_augmented_saltire((int)n, (int)n + 1), mu_pair, flat});
        cases.push_back(
            {"TT(n,n,n)", csf::make_triangular_tower((int)n, (int)n, (int)n), mu_cube, tower});
        for (auto& c : cases) {
            if (csf::e_coefficient_targeted(c.g, c.mu) != c.want) {
                ok = false;
                detail += std::string(" ") + c.name + "@n=" + std::to_string(n);
            }
        }
    }
    report(5, "negative coefficient formulas for the four families", ok, t.ms(), 0,
           "mismatch:" + detail);
}

void criterion_hunt() {
    Timer t;
    bool ok = true;
    std::string detail;
    csf::HuntOptions opts;
    opts.filters = csf::parse_filters("ccf,not-epos");

    for (int n = 4; n <= 5; ++n) {
        size_t hits = 0;
        csf::hunt(csf::corpus_builtin(n), opts, [&](const csf::SearchRecord&) { ++hits; });
        if (hits != 0) {
            ok = false;
            detail += " nonzero hits at n=" + std::to_string(n);
        }
    }

    std::set<std::string> got;
    csf::hunt(csf::corpus_builtin(6), opts,
              [&](const csf::SearchRecord& r) { got.insert(csf::canonical_form(csf::from_graph6(r.graph6))); });
    std::set<std::string> want = {csf::canonical_form(csf::make_saltire(3, 3)),
                                  csf::canonical_form(csf::make_augmented_saltire(3, 3)),
                                  csf::canonical_form(csf::make_complete_bipartite(3, 3)),
                                  csf::canonical_form(csf::make_ak33())};
    if (got != want) {
        ok = false;
        detail += " six-vertex hit set is not the known quartet";
    }
    report(6, "exhaustive scan through six vertices", ok, t.ms(), 120000.0, detail);
}

void criterion_cross() {
    Timer t;
    bool ok = true;
    std::string detail;

    // deletion criterion against the direct contraction search
    for (int n = 1; n <= 7 && ok; ++n) {
        for (const Graph& g : csf::enumerate_connected(n)) {
            if (csf::is_ccf_bv(g).ccf != !csf::contracts_to_claw(g).contracts) {
                ok = false;
                detail = " criterion mismatch at " + csf::to_graph6(g);
                break;
            }
        }
    }

    // power expansion against direct colour counting
    if (ok) {
        for (int n = 1; n <= 6 && ok; ++n) {
            for (const Graph& g : csf::enumerate_connected(n)) {
                SymExpr x = csf::csf_power(g).power;
                for (int m = 1; m <= 3; ++m) {
                    if (csf::colourings_from_power(x, m) !=
                        csf::BigInt(csf::count_proper_colourings(g, m))) {
                        ok = false;
                        detail = " colour count mismatch at " + csf::to_graph6(g);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
    }

    // multiplicativity over disjoint unions
    if (ok) {
        std::mt19937 rng(2024);
        std::vector<Graph> small;
        for (int n = 2; n <= 4; ++n)
            for (const Graph& g : csf::enumerate_connected(n)) small.push_back(g);
        std::vector<Graph> larger;
        for (int n = 2; n <= 5; ++n)
            for (const Graph& g : csf::enumerate_connected(n)) larger.push_back(g);
        std::uniform_int_distribution<size_t> pa(0, small.size() - 1);
        std::uniform_int_distribution<size_t> pb(0, larger.size() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            const Graph& a = small[pa(rng)];
            const Graph& b = larger[pb(rng)];
            Graph u = csf::disjoint_union(a, b);
            if (!(csf::csf_power(u).power ==
                  multiply(csf::csf_power(a).power, csf::csf_power(b).power))) {
                ok = false;
                detail = " disjoint union is not multiplicative";
                break;
            }
        }
    }

    // targeted coefficients against full expansions
    if (ok) {
        for (int n = 1; n <= 6 && ok; ++n) {
            auto mus = csf::enumerate_partitions(n);
            for (const Graph& g : csf::enumerate_connected(n)) {
                SymExpr full = *csf::csf_elementary(g).elementary;
                for (const Partition& mu : mus) {
                    if (csf::e_coefficient_targeted(g, mu) != coefficient_of(full, mu)) {
                        ok = false;
                        detail = " targeted coefficient mismatch at " + csf::to_graph6(g);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
    }

    report(7, "independent cross-checks", ok, t.ms(), 0, detail);
}

void criterion_graph6() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n) {
        for (const Graph& g : csf::enumerate_connected(n)) {
            std::string s = csf::to_graph6(g);
            if (!(csf::from_graph6(s) == g)) {
                ok = false;
                detail = " round trip broke at " + s;
            }
        }
    }
    if (ok && !(csf::from_graph6("Bw") == csf::make_complete(3))) {
        ok = false;
        detail = " Bw is not the triangle";
    }
    if (ok && !(csf::from_graph6("Cs") == csf::make_claw())) {
        ok = false;
        detail = " Cs is not the claw";
    }
    report(8, "graph6 round trips", ok, t.ms(), 0, detail);
}

} // namespace

int main() {
    criterion_claw();
    criterion_quartet();
    criterion_tower();
    criterion_lemmas();
    criterion_headline();
    criterion_hunt();
    criterion_cross();
    criterion_graph6();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
