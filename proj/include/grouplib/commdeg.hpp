#pragma once

#include <vector>

#include "grouplib/construct.hpp"
#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"
#include "grouplib/numtheory.hpp"
#include "grouplib/rational.hpp"
#include "grouplib/structure.hpp"

namespace grouplib {

// Pr(G) by direct commuting-pair count, cross-checked against the class
// equation identity Pr(G) = (#classes)/|G|.
inline Rational pr_exact(const FiniteGroup& g) {
    const int n = g.order();
    long pairs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.product(i, j) == g.product(j, i)) ++pairs;
    Rational by_pairs(mpz_class(pairs), mpz_class(n) * n);
    Rational by_classes(conjugacy_classes(g).count(), n);
    if (by_pairs != by_classes)
        throw GroupError("pr_exact cross-check failed: pair count vs class count");
    return by_pairs;
}

// Upper bound (1/|G'|)(1 + (|G'|-1)/p^2), p the smallest prime divisor of |G|.
inline Rational pr_bound_prgp(const FiniteGroup& g) {
    if (g.order() == 1) throw TrivialGroup();
    const long d = commutator_subgroup(g).order();
    const long p = smallest_prime_divisor(g.order());
    return Rational(mpz_class(p * p + d - 1), mpz_class(d) * p * p);
}

namespace detail {

// All subgroups of a small abelian group (joins of cyclic subgroups).
inline std::vector<Subgroup> all_subgroups_abelian(const FiniteGroup& g) {
    std::vector<Bitset> atoms;
    for (int x = 0; x < g.order(); ++x) {
        Subgroup s = subgroup_generated(g, {x});
        if (std::find(atoms.begin(), atoms.end(), s.members()) == atoms.end())
            atoms.push_back(s.members());
    }
    std::vector<Bitset> found = atoms;
    for (size_t head = 0; head < found.size(); ++head) {
        for (const Bitset& a : atoms) {
            Bitset u = found[head] | a;
            const auto gens = u.members();
            Subgroup s = subgroup_generated(g, std::span<const int>(gens.data(), gens.size()));
            if (std::find(found.begin(), found.end(), s.members()) == found.end())
                found.push_back(s.members());
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& b : found) out.emplace_back(g, std::move(b));
    return out;
}

inline bool is_cyclic(const FiniteGroup& g) {
    for (int x = 0; x < g.order(); ++x)
        if (element_order(g, x) == g.order()) return true;
    return false;
}

}  // namespace detail

// Closed form for p-groups with G' <= Z(G): sums (p-1)|G':K| / (p|G:K*|) over
// proper K < G' with cyclic quotient. Verifies the G/K* shape as far as it is
// directly testable: square order, exponent bound, and paired invariant
// factors when G/K* is abelian.
inline Rational pr_formula_class2(const FiniteGroup& g) {
    const auto f = factorize(g.order());
    if (f.size() != 1) throw NotClass2PGroup();
    const long p = f[0].first;
    Subgroup derived = commutator_subgroup(g);
    Subgroup z = center(g);
    if (!derived.members().subset_of(z.members())) throw NotClass2PGroup();

    std::vector<int> dmap;
    FiniteGroup dgrp = subgroup_as_group(g, derived, &dmap);
    Rational sum(0);
    for (const Subgroup& k : detail::all_subgroups_abelian(dgrp)) {
        if (k.order() == derived.order()) continue;  // proper only
        auto [q, proj] = quotient(dgrp, k);
        if (!detail::is_cyclic(q)) continue;
        // lift K back to G indices
        Bitset in_g(g.order());
        for (int i : k.members().members()) in_g.set(dmap[i]);
        Subgroup k_star = star(g, Subgroup(g, in_g));
        const long idx_gk = derived.order() / k.order();   // |G':K|
        const long idx_gstar = g.order() / k_star.order(); // |G:K*|
        if (!is_perfect_square(idx_gstar))
            throw GroupError("pr_formula_class2: |G:K*| is not a perfect square");
        auto [qq, qproj] = quotient(g, k_star);
        if (exponent(qq) > idx_gk)
            throw GroupError("pr_formula_class2: exponent of G/K* exceeds |G':K|");
        if (is_abelian(qq)) {
            const auto inv = abelian_invariant_factors(qq);
            if (inv.size() % 2 != 0)
                throw GroupError("pr_formula_class2: G/K* invariants do not pair up");
            for (size_t i = 0; i + 1 < inv.size(); i += 2)
                if (inv[i] != inv[i + 1])
                    throw GroupError("pr_formula_class2: G/K* invariants do not pair up");
            if (!inv.empty() && inv.back() != idx_gk)
                throw GroupError("pr_formula_class2: top invariant of G/K* is not |G':K|");
        }
        sum = sum + Rational(mpz_class((p - 1) * idx_gk), mpz_class(p) * idx_gstar);
    }
    return (Rational(1) + sum) / Rational(derived.order());
}

// (n^2 + p - 1) / (p n^2) for |G'| = p, G' meet Z trivial, n = |G/Z|/p.
inline Rational pr_formula_rusin(long p, long n) {
    if (!is_prime(p)) throw BadParameters("pr_formula_rusin: p must be prime");
    if (n <= 1 || (p - 1) % n != 0)
        throw BadParameters("pr_formula_rusin: n must be a divisor > 1 of p-1");
    return Rational(mpz_class(n) * n + (p - 1), mpz_class(p) * n * n);
}

// Pr(G) = Pr(H)/p^2 + (p+1)/(p|G|^2) * sum_{x in G-H} |C_G(x)| for H normal
// of prime index p. When H is abelian the closed form
// 1/p^2 + (p^2-1)/(p^2 |G'|) must agree, and |C_G(x)| = |G:G'| off H.
inline Rational pr_indexp_recursion(const FiniteGroup& g, const Subgroup& h) {
    if (is_abelian(g)) throw BadParameter("pr_indexp_recursion: G must be non-abelian");
    if (!is_normal(h)) throw NotNormal();
    const long p = g.order() / h.order();
    if (!is_prime(p)) throw NotPrimeIndex();

    FiniteGroup hgrp = subgroup_as_group(g, h);
    mpz_class centralizer_sum = 0;
    const long dord = commutator_subgroup(g).order();
    const bool h_abelian = is_abelian(hgrp);
    for (int x = 0; x < g.order(); ++x) {
        if (h.contains(x)) continue;
        const long c = centralizer(g, x).order();
        if (h_abelian && c != g.order() / dord)
            throw GroupError("pr_indexp_recursion: |C_G(x)| != |G:G'| off an abelian H");
        centralizer_sum += c;
    }
    const mpz_class g2 = mpz_class(g.order()) * g.order();
    Rational general = pr_exact(hgrp) / Rational(p * p) +
                       Rational(mpz_class(p + 1) * centralizer_sum, mpz_class(p) * g2);
    if (h_abelian) {
        Rational special = Rational(1, p * p) +
                           Rational(mpz_class(p * p - 1), mpz_class(p) * p * dord);
        if (special != general)
            throw GroupError("pr_indexp_recursion: abelian specialization disagrees");
    }
    if (general != pr_exact(g))
        throw GroupError("pr_indexp_recursion: recursion disagrees with pair count");
    return general;
}

// The two branches of the main closed form for |G'| = p^2, |G' meet Z| = p.
inline Rational pr_formula_main(long p, long s, bool cg_abelian) {
    if (!is_prime(p)) throw BadParameters("pr_formula_main: p must be prime");
    const mpz_class p4 = pow_z(p, 4);
    if (cg_abelian) return Rational(mpz_class(2 * p * p - 1), p4);
    if (s < 1) throw BadParameters("pr_formula_main: s must be >= 1");
    // (1/p^4)((p-1)/p^{2s-1} + p^2 + p - 1)
    const mpz_class pe = pow_z(p, static_cast<unsigned long>(2 * s - 1));
    return (Rational(p - 1, 1) / Rational(pe, 1) + Rational(p * p + p - 1)) / Rational(p4, 1);
}

struct MainCheck {
    long p = 0;
    long s = 0;  // from |C_G(G') : Z(C_G(G'))| = p^{2s}; 0 when C_G(G') abelian
    bool cg_abelian = false;
    Rational pr;
    long gz_order = 0;
};

// Verifies the hypotheses on G, evaluates the matching branch, and asserts
// every structural consequence: agreement with pr_exact, the |G/Z| sizes, and
// the two quotient-center indices equal to p^2.
inline MainCheck check_main(const FiniteGroup& g) {
    Subgroup derived = commutator_subgroup(g);
    Subgroup z = center(g);
    Subgroup dz(g, derived.members() & z.members());

    std::vector<std::string> missing;
    long p = 0;
    const auto df = factorize(derived.order());
    if (df.size() == 1 && df[0].second == 2)
        p = df[0].first;
    else
        missing.push_back("|G'| is not p^2");
    if (p != 0 && dz.order() != p) missing.push_back("|G' meet Z| != p");
    if (p != 0 && std::gcd(p - 1, static_cast<long>(g.order())) != 1)
        missing.push_back("gcd(p-1, |G|) != 1");
    if (!missing.empty()) throw HypothesesNotMet(missing);

    MainCheck r;
    r.p = p;
    Subgroup c = centralizer_set(g, derived.members());
    FiniteGroup cgrp = subgroup_as_group(g, c);
    const long zc = center(cgrp).order();
    r.cg_abelian = zc == c.order();
    if (!r.cg_abelian) {
        long idx = c.order() / zc, s = 0;
        while (idx > 1 && idx % (p * p) == 0) { idx /= p * p; ++s; }
        if (idx != 1) throw GroupError("check_main: |C:Z(C)| is not an even power of p");
        r.s = s;
    }
    r.pr = pr_formula_main(p, r.s, r.cg_abelian);
    if (r.pr != pr_exact(g)) throw GroupError("check_main: formula disagrees with pr_exact");

    r.gz_order = g.order() / z.order();
    const long p3 = p * p * p;
    if (r.cg_abelian) {
        if (r.gz_order != p3) throw GroupError("check_main: |G/Z| != p^3 in the abelian branch");
    } else {
        long e1 = 1, e2 = 1;
        for (int i = 0; i < 2 * r.s + 2; ++i) e1 *= p;
        e2 = e1 * p;
        if (r.gz_order != e1 && r.gz_order != e2)
            throw GroupError("check_main: |G/Z| not p^{2s+2} or p^{2s+3}");
    }
    for (const Subgroup* n : {&dz, &z}) {
        auto [q, proj] = quotient(g, *n);
        if (q.order() / center(q).order() != p * p)
            throw GroupError("check_main: quotient center index != p^2");
    }
    return r;
}

// Pr(H x K) = Pr(H) Pr(K).
inline bool pr_product_check(const FiniteGroup& g, const FiniteGroup& h) {
    return pr_exact(direct_product(g, h)) == pr_exact(g) * pr_exact(h);
}

}  // namespace grouplib
