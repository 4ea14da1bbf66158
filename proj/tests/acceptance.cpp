// End-to-end acceptance checks. Prints one pass/fail line per criterion and
// exits non-zero if any fails. Everything here is exact rational comparison.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "grouplib/catalog.hpp"
#include "grouplib/commdeg.hpp"
#include "grouplib/groupfile.hpp"
#include "grouplib/report.hpp"
#include "grouplib/verify.hpp"

using namespace grouplib;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::vector<std::pair<std::string, FiniteGroup>> corpus_and_witnesses(long bound) {
    std::vector<std::pair<std::string, FiniteGroup>> gs;
    for (const auto& e : corpus(bound)) gs.emplace_back(e.id, e.make());
    for (const auto& id : witness_ids()) gs.emplace_back("witness:" + id, witness(id));
    return gs;
}

long count_status(const VerificationReport& rep, const std::string& prefix, CheckStatus st) {
    long n = 0;
    for (const auto& e : rep.entries)
        if (e.status == st && e.check_id.rfind(prefix, 0) == 0) ++n;
    return n;
}

FiniteGroup relabel(const FiniteGroup& g, unsigned seed) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> inv(g.order());
    for (int i = 0; i < g.order(); ++i) inv[perm[i]] = i;
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) t[i][j] = perm[g.product(inv[i], inv[j])];
    return FiniteGroup::from_cayley_table(t);
}

}  // namespace

int main() {
    // 1. each internal row witness reproduces its table row tuple
    {
        const VerificationReport rep = verify_char_table({});
        const long pass = count_status(rep, "table-witness", CheckStatus::Pass);
        bool ok = pass == 12 && rep.ok();
        std::string bad;
        for (const auto& e : rep.entries)
            if (e.status == CheckStatus::Fail) bad = e.group_id + ": " + e.computed;
        line(1, ok, "12 table witnesses reproduce their rows", ok ? "" : bad);
    }

    // 2. threshold exactness on witnesses and the excluded parameter points
    {
        bool ok = true;
        const Rational threshold(11, 75);
        for (const auto& id : table_witness_ids())
            if (!(pr_exact(witness(id)) >= threshold)) ok = false;
        if (pr_formula_rusin(19, 9) != Rational(11, 171)) ok = false;
        if (!(pr_formula_rusin(19, 9) < threshold)) ok = false;
        if (pr_formula_main(5, 0, true) != Rational(49, 625)) ok = false;
        if (!(pr_formula_main(5, 0, true) < threshold)) ok = false;
        line(2, ok, "witness Pr >= 11/75; 11/171 and 49/625 fall below");
    }

    // 3. every closed form agrees with the pair count, >= 3 instances each
    {
        const VerificationReport rep = verify_formulas(corpus_and_witnesses(100));
        const bool ok = rep.ok();
        std::ostringstream counts;
        for (const auto& e : rep.entries)
            if (e.check_id.find(":coverage") != std::string::npos)
                counts << e.check_id.substr(0, e.check_id.find(':')) << "=" << e.computed << " ";
        line(3, ok, "closed forms match pr_exact on all hypothesis-satisfying groups",
             counts.str());
    }

    // 4. recognize(G/Z) on the six non-central-derived witnesses
    {
        const std::set<long> quotient_orders{21, 27, 39, 57, 63, 75};
        const std::map<long, std::string> expected{
            {21, "N:SDC(7,3)"}, {27, "N:ES(3,p)"},  {39, "N:SDC(13,3)"},
            {57, "N:SDC(19,3)"}, {63, "P[A[3],N:SDC(7,3)]"}, {75, "N:SDC(25,3)"}};
        bool ok = true;
        long seen = 0;
        std::string bad;
        for (const auto& id : table_witness_ids()) {
            const FiniteGroup g = witness(id);
            const Subgroup d = commutator_subgroup(g);
            const Subgroup z = center(g);
            if (d.members().subset_of(z.members())) continue;
            auto [q, proj] = quotient(g, z);
            if (!quotient_orders.count(q.order())) continue;
            ++seen;
            const std::string got = recognize(q).str();
            if (got != expected.at(q.order())) {
                ok = false;
                bad = id + " -> " + got;
            }
        }
        ok = ok && seen == 6;
        line(4, ok, "recognize(G/Z) names all six listed central quotients",
             ok ? "" : bad + " seen=" + std::to_string(seen));
    }

    // 5. the four corrections to the earlier classification
    {
        const VerificationReport rep = verify_rusin_corrections(512);
        std::string bad;
        for (const auto& e : rep.entries)
            if (e.status == CheckStatus::Fail) bad = e.check_id;
        line(5, rep.ok(), "all four correction checks pass", bad);
    }

    // 6. equation and lemma suites over the depth-2 corpus up to order 100
    {
        const auto gs = corpus_and_witnesses(100);
        const VerificationReport rep = verify_properties(gs);
        const long fails = count_status(rep, "", CheckStatus::Fail);
        const long vacuous = count_status(rep, "", CheckStatus::Vacuous);
        const bool ok = fails == 0 && vacuous == 0;
        line(6, ok, "property suites pass with zero vacuous rows",
             std::to_string(gs.size()) + " groups, " + std::to_string(fails) + " fails, " +
                 std::to_string(vacuous) + " vacuous");
    }

    // 7. ingestion completeness: relabeled odd-order witness files must land
    // on table rows; a fabricated off-table tuple must be rejected
    {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "grouplib-acceptance";
        fs::create_directories(dir);
        std::vector<std::pair<std::string, FiniteGroup>> supplied;
        unsigned seed = 1;
        for (const auto& id : table_witness_ids()) {
            const FiniteGroup g = witness(id);
            if (g.order() % 2 == 0 || g.order() > 400) continue;
            const fs::path p = dir / (std::to_string(seed) + ".grp");
            export_group(relabel(g, seed), p.string());
            supplied.emplace_back(p.filename().string(), ingest(p.string()));
            ++seed;
        }
        const VerificationReport rep = verify_char_table(supplied);
        bool ok = rep.ok() &&
                  count_status(rep, "table-complete", CheckStatus::Pass) ==
                      static_cast<long>(supplied.size());

        AnalysisReport fake = analyze(witness("11/75"));
        fake.derived_label = IsoLabel::abelian_label({5, 5, 5});
        if (match_table_row(fake)) ok = false;  // off-table tuple must not match
        fs::remove_all(dir);
        line(7, ok, "ingested odd-order files with Pr >= 11/75 match rows; off-table tuple fails",
             std::to_string(supplied.size()) + " files ingested");
    }

    // runtime spot check: brute-force Pr at order 729
    {
        const FiniteGroup g = witness("121/729");
        const auto t0 = std::chrono::steady_clock::now();
        const Rational pr = pr_exact(g);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        const bool ok = pr == Rational(121, 729) && ms < 2000;
        std::cout << "runtime: order-729 brute-force Pr in " << ms << " ms ("
                  << (ok ? "within" : "OVER") << " the 2 s budget)\n";
        if (!ok) ++failures;
    }

    return failures == 0 ? 0 : 1;
}
