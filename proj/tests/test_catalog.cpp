#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "grouplib/catalog.hpp"
#include "grouplib/commdeg.hpp"
#include "grouplib/groupfile.hpp"
#include "grouplib/report.hpp"

using namespace grouplib;

TEST_CASE("witness ids and orders") {
    const std::map<std::string, long> orders = {
        {"1", 1},        {"11/27", 27},   {"83/243", 243},     {"29/125", 125},
        {"5/21", 21},    {"55/343", 343}, {"17/81", 81},       {"121/729", 729},
        {"7/39", 39},    {"3/19", 57},    {"29/189", 189},     {"11/75", 75},
        {"rem-5/14", 14}, {"rem-7/16-d16", 16}, {"rem-25/64", 64}, {"rem-T", 12},
    };
    CHECK(witness_ids().size() == 16);
    for (const auto& id : witness_ids()) CHECK(witness(id).order() == orders.at(id));
    CHECK(table_witness_ids().size() == 12);
    CHECK_THROWS_AS(witness("no-such-row"), UnknownRow);
}

TEST_CASE("witness invariants match their rows") {
    const AnalysisReport w75 = analyze(witness("11/75"));
    CHECK(w75.pr == Rational(11, 75));
    CHECK(w75.derived_order == 25);
    CHECK(w75.derived_center_order == 1);
    CHECK(w75.center_quotient_label.str() == "N:SDC(25,3)");
    CHECK_FALSE(w75.nilpotency.has_value());

    const AnalysisReport w19 = analyze(witness("3/19"));
    CHECK(w19.pr == Rational(3, 19));
    CHECK(w19.derived_order == 19);
    CHECK(w19.center_quotient_label.str() == "N:SDC(19,3)");

    const AnalysisReport w189 = analyze(witness("29/189"));
    CHECK(w189.pr == Rational(29, 189));
    CHECK(w189.derived_label.str() == "A[21]");
    CHECK(w189.derived_center_order == 3);
    CHECK(w189.center_quotient_label.str() == "P[A[3],N:SDC(7,3)]");

    const AnalysisReport w81 = analyze(witness("17/81"));
    CHECK(w81.pr == Rational(17, 81));
    CHECK(w81.derived_label.str() == "A[3,3]");
    CHECK(w81.derived_center_order == 3);
    CHECK(w81.center_quotient_label.kind == IsoLabel::Kind::Extraspecial);
    CHECK(w81.nilpotency == 3);

    const AnalysisReport triv = analyze(witness("1"));
    CHECK(triv.order == 1);
    CHECK(triv.pr == Rational(1));
}

TEST_CASE("every table witness meets the threshold; remark witnesses are context") {
    for (const auto& id : table_witness_ids())
        CHECK(pr_exact(witness(id)) >= Rational(11, 75));
    CHECK(witness("rem-5/14").order() % 2 == 0);
    CHECK(witness("rem-T").order() % 2 == 0);
}

TEST_CASE("analysis report serialization is stable") {
    const std::string tsv = report_tsv(analyze(witness("5/21")));
    CHECK(tsv.find("order\t21\n") != std::string::npos);
    CHECK(tsv.find("pr\t5/21\n") != std::string::npos);
    CHECK(tsv.find("center_quotient\tN:SDC(7,3)\n") != std::string::npos);
    CHECK(tsv.find("nilpotency_class\tnot-nilpotent\n") != std::string::npos);
}

TEST_CASE("abelian family enumeration") {
    const auto fam = enumerate_family(Family::Abelian, 8);
    CHECK(fam.size() == 10);  // C2..C8 plus C2^2, C4xC2, C2^3
    for (size_t i = 1; i < fam.size(); ++i) CHECK(fam[i - 1].order <= fam[i].order);
    std::multiset<long> orders;
    for (const auto& e : fam) orders.insert(e.order);
    CHECK(orders.count(8) == 3);
    CHECK(orders.count(4) == 2);
    for (const auto& e : fam) {
        CHECK(e.known_abelian);
        CHECK(e.make().order() == e.order);
    }
}

TEST_CASE("pq semidirect family") {
    const auto fam = enumerate_family(Family::PQSemidirect, 100);
    std::set<long> orders;
    for (const auto& e : fam) orders.insert(e.order);
    for (long o : {6L, 10L, 14L, 21L, 22L}) CHECK(orders.count(o) == 1);
    for (const auto& e : fam) {
        const FiniteGroup g = e.make();
        CHECK_FALSE(is_abelian(g));
    }
}

TEST_CASE("extraspecial family") {
    const auto fam = enumerate_family(Family::Extraspecial, 400);
    std::multiset<long> orders;
    for (const auto& e : fam) orders.insert(e.order);
    CHECK(orders == std::multiset<long>{8, 8, 27, 27, 125, 125, 343, 343});
}

TEST_CASE("corpus is deterministic and order-sorted") {
    const auto a = corpus(60);
    const auto b = corpus(60);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        if (i) {
            CHECK(a[i - 1].order <= a[i].order);
            if (a[i - 1].order == a[i].order) CHECK(a[i - 1].id < a[i].id);
        }
    }
    for (const auto& e : corpus(40)) CHECK(e.make().order() == e.order);
}

TEST_CASE("corpus contains depth-2 products") {
    bool found = false;
    for (const auto& e : corpus(48))
        if (e.id == "prod(abelian(2),dih(3))") found = true;
    CHECK(found);
}

TEST_CASE("witness files round-trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "grouplib-roundtrip";
    fs::create_directories(dir);
    for (const char* id : {"5/21", "17/81", "rem-T"}) {
        const FiniteGroup g = witness(id);
        const fs::path p = dir / "g.grp";
        export_group(g, p.string());
        CHECK(ingest(p.string()).table_equal(g));
    }
    fs::remove_all(dir);
}

TEST_CASE("ingest of an externally relabeled table is isomorphic to the witness") {
    // stands in for a CAS export of the unique non-abelian order-21 group
    const FiniteGroup g = witness("5/21");
    std::vector<int> perm(21);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(2024);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> inv(21);
    for (int i = 0; i < 21; ++i) inv[perm[i]] = i;
    std::ostringstream out;
    out << "cayley 21\n";
    for (int i = 0; i < 21; ++i) {
        for (int j = 0; j < 21; ++j)
            out << (j ? " " : "") << perm[g.product(inv[i], inv[j])];
        out << "\n";
    }
    std::istringstream in(out.str());
    const FiniteGroup h = read_group(in);
    CHECK(are_isomorphic(g, h).isomorphic);
}
