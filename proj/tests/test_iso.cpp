#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grouplib/catalog.hpp"
#include "grouplib/construct.hpp"
#include "grouplib/iso.hpp"

using namespace grouplib;

namespace {

FiniteGroup c7_semidirect(long k) {
    std::vector<int> img(7);
    for (int i = 0; i < 7; ++i) img[i] = static_cast<int>(k * i % 7);
    AutAction act{{1}, {Permutation(std::move(img))}};
    return semidirect_product(cyclic(7), cyclic(3), act);
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

TEST_CASE("fingerprint is invariant under relabeling") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const FiniteGroup g = witness("5/21");
        CHECK(fingerprint(g) == fingerprint(relabel(g, seed)));
    }
    const FiniteGroup es = extraspecial(3);
    CHECK(fingerprint(es) == fingerprint(relabel(es, 7u)));
}

TEST_CASE("fingerprint separates the two extraspecial kinds") {
    const Fingerprint a = fingerprint(extraspecial(3, ExtraspecialKind::ExponentP));
    const Fingerprint b = fingerprint(extraspecial(3, ExtraspecialKind::ExponentP2));
    CHECK(a != b);
    CHECK(a.exponent_value == 3);
    CHECK(b.exponent_value == 9);
}

TEST_CASE("isomorphism: identity and relabelings") {
    const FiniteGroup g = witness("11/75");
    const IsoResult self = are_isomorphic(g, g);
    CHECK(self.isomorphic);
    const FiniteGroup h = relabel(g, 11u);
    const IsoResult r = are_isomorphic(g, h);
    REQUIRE(r.isomorphic);
    REQUIRE(r.witness.size() == static_cast<size_t>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            CHECK(r.witness[g.product(a, b)] == h.product(r.witness[a], r.witness[b]));
}

TEST_CASE("the two order-21 actions give isomorphic groups") {
    CHECK(are_isomorphic(c7_semidirect(2), c7_semidirect(4)).isomorphic);
}

TEST_CASE("non-isomorphic pairs") {
    CHECK_FALSE(are_isomorphic(extraspecial(3, ExtraspecialKind::ExponentP),
                               extraspecial(3, ExtraspecialKind::ExponentP2))
                    .isomorphic);
    CHECK_FALSE(are_isomorphic(dihedral(4), dicyclic(2)).isomorphic);
    CHECK_FALSE(are_isomorphic(cyclic(8), abelian({2, 4})).isomorphic);
}

TEST_CASE("search budget is a distinct outcome") {
    const FiniteGroup g = witness("17/81");
    CHECK_THROWS_AS(are_isomorphic(g, relabel(g, 5u), 10), SearchBudgetExceeded);
}

TEST_CASE("label grammar golden strings") {
    using K = IsoLabel::Kind;
    CHECK(IsoLabel::abelian_label({}).str() == "1");
    CHECK(IsoLabel::abelian_label({3, 9}).str() == "A[3,9]");
    CHECK(IsoLabel::named(K::Dihedral, 7).str() == "N:DIH(7)");
    CHECK(IsoLabel::named(K::Dicyclic, 3).str() == "N:DIC(3)");
    CHECK(IsoLabel::named(K::Extraspecial, 3, 1).str() == "N:ES(3,p)");
    CHECK(IsoLabel::named(K::Extraspecial, 3, 2).str() == "N:ES(3,p2)");
    CHECK(IsoLabel::named(K::SemidirectCyclic, 25, 3).str() == "N:SDC(25,3)");
    CHECK(IsoLabel::product({IsoLabel::abelian_label({3}),
                             IsoLabel::named(K::SemidirectCyclic, 7, 3)})
              .str() == "P[A[3],N:SDC(7,3)]");
    CHECK(IsoLabel::unrecognized("o=60").str() == "U{o=60}");
    CHECK(IsoLabel::abelian_label({}).is_trivial());
    CHECK_FALSE(IsoLabel::abelian_label({2}).is_trivial());
}

TEST_CASE("recognize abelian groups") {
    CHECK(recognize(cyclic(1)).str() == "1");
    CHECK(recognize(cyclic(6)).str() == "A[6]");
    CHECK(recognize(abelian({2, 4})).str() == "A[2,4]");
    CHECK(recognize(abelian({5, 5})).str() == "A[5,5]");
}

TEST_CASE("recognize named families") {
    using K = IsoLabel::Kind;
    CHECK(recognize(witness("5/21")) == IsoLabel::named(K::SemidirectCyclic, 7, 3));
    CHECK(recognize(dihedral(7)) == IsoLabel::named(K::Dihedral, 7));
    CHECK(recognize(dicyclic(3)) == IsoLabel::named(K::Dicyclic, 3));
    CHECK(recognize(extraspecial(3)) == IsoLabel::named(K::Extraspecial, 3, 1));
    CHECK(recognize(extraspecial(3, ExtraspecialKind::ExponentP2)) ==
          IsoLabel::named(K::Extraspecial, 3, 2));

    const FiniteGroup w75 = witness("11/75");
    auto [q, proj] = quotient(w75, center(w75));
    CHECK(recognize(q) == IsoLabel::named(K::SemidirectCyclic, 25, 3));
}

TEST_CASE("recognize direct products") {
    using K = IsoLabel::Kind;
    const FiniteGroup w = witness("29/189");
    auto [q, proj] = quotient(w, center(w));
    CHECK(q.order() == 63);
    CHECK(recognize(q) == IsoLabel::product({IsoLabel::abelian_label({3}),
                                             IsoLabel::named(K::SemidirectCyclic, 7, 3)}));

    const FiniteGroup nil = direct_product(extraspecial(3), cyclic(5));
    const IsoLabel l = recognize(nil);
    REQUIRE(l.kind == K::Product);
    REQUIRE(l.factors.size() == 2);
    CHECK(l.factors[0] == IsoLabel::named(K::Extraspecial, 3, 1));
    CHECK(l.factors[1] == IsoLabel::abelian_label({5}));
}

TEST_CASE("recognize round-trips on relabeled groups") {
    for (const char* id : {"5/21", "11/75", "rem-T"}) {
        const FiniteGroup g = witness(id);
        CHECK(recognize(g) == recognize(relabel(g, 42u)));
    }
}

TEST_CASE("abelian type lists") {
    const auto l8 = detail::abelian_type_lists(8);
    CHECK(l8.size() == 3);  // [8], [4,2], [2,2,2]
    const auto l36 = detail::abelian_type_lists(36);
    CHECK(l36.size() == 4);
    CHECK(detail::abelian_type_lists(1) == std::vector<std::vector<long>>{{}});
}

TEST_CASE("abelian_invariants rejects non-abelian input") {
    CHECK_THROWS_AS(abelian_invariants(dihedral(5)), NotAbelian);
}
