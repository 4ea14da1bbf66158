#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplib/catalog.hpp"
#include "grouplib/construct.hpp"
#include "grouplib/structure.hpp"

using namespace grouplib;

TEST_CASE("center and centralizers") {
    const FiniteGroup a = abelian({2, 6});
    CHECK(center(a).order() == a.order());

    const FiniteGroup f21 = witness("5/21");
    CHECK(center(f21).order() == 1);

    const FiniteGroup es3 = extraspecial(3);
    const Subgroup d = commutator_subgroup(es3);
    CHECK(centralizer_set(es3, d.members()).order() == es3.order());  // G' = Z here

    CHECK(center(dihedral(8)).order() == 2);
    CHECK(centralizer(dihedral(8), 1).order() == 8);  // rotation: centralized by <r>
}

TEST_CASE("conjugacy classes are deterministic and correctly sized") {
    const FiniteGroup a = abelian({8});
    const ConjClasses ca = conjugacy_classes(a);
    CHECK(ca.count() == 8);
    for (int s : ca.sizes) CHECK(s == 1);

    const ConjClasses c21 = conjugacy_classes(witness("5/21"));
    CHECK(c21.sizes == std::vector<int>{1, 3, 3, 7, 7});

    const ConjClasses c75 = conjugacy_classes(witness("11/75"));
    CHECK(c75.count() == 11);
    std::vector<int> expect{1, 3, 3, 3, 3, 3, 3, 3, 3, 25, 25};
    CHECK(c75.sizes == expect);

    // sizes ascending, reps are minimal members, partition covers the group
    int total = 0;
    for (size_t i = 0; i < c75.classes.size(); ++i) {
        total += c75.sizes[i];
        CHECK(c75.classes[i].next(0) == c75.reps[i]);
        if (i) CHECK(c75.sizes[i] >= c75.sizes[i - 1]);
    }
    CHECK(total == 75);
}

TEST_CASE("commutator subgroup") {
    CHECK(commutator_subgroup(abelian({4, 2})).order() == 1);
    CHECK(commutator_subgroup(witness("5/21")).order() == 7);
    const FiniteGroup w = witness("17/81");
    const Subgroup d = commutator_subgroup(w);
    CHECK(d.order() == 9);
    CHECK(abelian_invariant_factors(subgroup_as_group(w, d)) == std::vector<long>{3, 3});
}

TEST_CASE("subgroup generation") {
    const FiniteGroup g = witness("5/21");
    CHECK(subgroup_generated(g, {}).order() == 1);
    int of_order7 = -1;
    for (int x = 0; x < g.order(); ++x)
        if (element_order(g, x) == 7) { of_order7 = x; break; }
    CHECK(subgroup_generated(g, {of_order7}).order() == 7);

    const FiniteGroup es3 = extraspecial(3);
    Bitset comms(es3.order());
    for (int x = 0; x < es3.order(); ++x)
        for (int y = 0; y < es3.order(); ++y) comms.set(es3.commutator(x, y));
    const auto gens = comms.members();
    CHECK(subgroup_generated(es3, std::span<const int>(gens.data(), gens.size())).order() == 3);
}

TEST_CASE("star operator basics") {
    const FiniteGroup es3 = extraspecial(3);
    CHECK(star(es3, trivial_subgroup(es3)).members() == center(es3).members());
    const Subgroup d = commutator_subgroup(es3);
    const Subgroup s = star(es3, d);
    CHECK(s.order() == es3.order());

    // Z(G/H) = H*/H for H = G'
    auto [q, proj] = quotient(es3, d);
    CHECK(center(q).order() * d.order() == s.order());

    const FiniteGroup d8 = dihedral(8);
    CHECK_THROWS_AS(star(d8, subgroup_generated(d8, {8})), NotNormal);
}

TEST_CASE("lower central series and nilpotency") {
    CHECK(nilpotency_class(cyclic(1)) == 0);
    CHECK(nilpotency_class(abelian({3, 9})) == 1);
    CHECK(nilpotency_class(extraspecial(3)) == 2);
    CHECK(nilpotency_class(witness("17/81")) == 3);
    CHECK_FALSE(nilpotency_class(witness("5/21")).has_value());
    CHECK(is_nilpotent(dihedral(8)));
    CHECK_FALSE(is_nilpotent(dihedral(7)));
}

TEST_CASE("sylow decomposition of nilpotent groups") {
    const auto c6 = sylow_decomposition(cyclic(6));
    REQUIRE(c6.has_value());
    REQUIRE(c6->size() == 2);
    CHECK((*c6)[0].first == 2);
    CHECK((*c6)[0].second.order() == 2);
    CHECK((*c6)[1].first == 3);
    CHECK((*c6)[1].second.order() == 3);

    const auto big = sylow_decomposition(direct_product(extraspecial(3), cyclic(5)));
    REQUIRE(big.has_value());
    CHECK((*big)[0].second.order() == 27);
    CHECK((*big)[1].second.order() == 5);

    CHECK_FALSE(sylow_decomposition(witness("5/21")).has_value());
}

TEST_CASE("abelian invariant factors") {
    CHECK(abelian_invariant_factors(cyclic(1)).empty());
    CHECK(abelian_invariant_factors(direct_product(cyclic(2), cyclic(3))) ==
          std::vector<long>{6});
    CHECK(abelian_invariant_factors(abelian({3, 9})) == std::vector<long>{3, 9});
    CHECK(abelian_invariant_factors(abelian({9, 3})) == std::vector<long>{3, 9});
    CHECK(abelian_invariant_factors(abelian({2, 2, 4, 3})) == std::vector<long>{2, 2, 12});

    const FiniteGroup dd = direct_product(extraspecial(3), extraspecial(3));
    auto [q, proj] = quotient(dd, center(dd));
    CHECK(abelian_invariant_factors(q) == std::vector<long>{3, 3, 3, 3});

    CHECK_THROWS_AS(abelian_invariant_factors(dihedral(3)), NotAbelian);
}

TEST_CASE("aut orders for the supported abelian shapes") {
    CHECK(aut_order_abelian({}) == mpz_class(1));
    CHECK(aut_order_abelian({7}) == mpz_class(6));
    CHECK(aut_order_abelian({9}) == mpz_class(6));      // p(p-1) for C_{p^2}
    CHECK(aut_order_abelian({21}) == mpz_class(12));
    CHECK(aut_order_abelian({5, 5}) == mpz_class(480));  // p(p+1)(p-1)^2
    CHECK(aut_order_abelian({3, 3}) == mpz_class(48));
    CHECK_FALSE(aut_order_abelian({2, 4}).has_value());
    CHECK_FALSE(aut_order_abelian({3, 3, 3}).has_value());
}

TEST_CASE("normal subgroups") {
    const FiniteGroup d3 = dihedral(3);
    const auto s3 = normal_subgroups(d3);
    CHECK(s3.size() == 3);  // 1, C3, G
    CHECK(s3.front().order() == 1);
    CHECK(s3.back().order() == 6);
    for (const auto& h : s3) CHECK(is_normal(h));

    const FiniteGroup g21 = witness("5/21");
    const auto f21 = normal_subgroups(g21);
    CHECK(f21.size() == 3);  // 1, C7, G
    CHECK(f21[1].order() == 7);

    // determinism
    const auto again = normal_subgroups(d3);
    for (size_t i = 0; i < s3.size(); ++i) CHECK(s3[i].members() == again[i].members());
}

TEST_CASE("subgroup_as_group preserves structure") {
    const FiniteGroup g = witness("29/189");
    const Subgroup d = commutator_subgroup(g);
    std::vector<int> map;
    const FiniteGroup dgrp = subgroup_as_group(g, d, &map);
    CHECK(dgrp.order() == 21);
    CHECK(is_abelian(dgrp));
    CHECK(map.size() == 21);
    for (int i = 0; i < dgrp.order(); ++i)
        for (int j = 0; j < dgrp.order(); ++j)
            CHECK(map[dgrp.product(i, j)] == g.product(map[i], map[j]));
}

TEST_CASE("subgroup constructor rejects non-closed sets") {
    const FiniteGroup g = cyclic(6);
    Bitset b(6);
    b.set(0);
    b.set(1);  // {e, g} is not closed in C6
    CHECK_THROWS_AS(Subgroup(g, b), GroupError);
}
