#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"
#include "grouplib/numtheory.hpp"
#include "grouplib/permutation.hpp"
#include "grouplib/subgroup.hpp"

namespace grouplib {

enum class ExtraspecialKind {
    ExponentP,   // Heisenberg: unitriangular 3x3 matrices over F_p
    ExponentP2,  // C_{p^2} : C_p with the action x -> x^{1+p}
};

namespace detail {

inline std::vector<std::uint16_t> table_from(int n, auto&& prod) {
    std::vector<std::uint16_t> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<size_t>(i) * n + j] = static_cast<std::uint16_t>(prod(i, j));
    return t;
}

}  // namespace detail

inline FiniteGroup cyclic(long n) {
    if (n < 1) throw BadParameter("cyclic: n must be positive");
    if (n > kDefaultOrderCap) throw CapExceeded(n);
    const int m = static_cast<int>(n);
    return GroupBuilder::build(m, detail::table_from(m, [m](int i, int j) { return (i + j) % m; }));
}

// Direct product of cyclic factors C_{d1} x ... x C_{dk}; factor list need not
// be an invariant chain. Index encoding is mixed-radix, last factor fastest.
inline FiniteGroup abelian(const std::vector<long>& factors) {
    long n = 1;
    for (long d : factors) {
        if (d < 1) throw BadParameter("abelian: factors must be positive");
        n *= d;
        if (n > kDefaultOrderCap) throw CapExceeded(n);
    }
    const int m = static_cast<int>(n);
    auto prod = [&factors](int i, int j) {
        long ii = i, jj = j;
        std::vector<long> comp(factors.size());
        for (size_t k = factors.size(); k-- > 0;) {
            long d = factors[k];
            comp[k] = (ii % d + jj % d) % d;
            ii /= d;
            jj /= d;
        }
        long out = 0;
        for (size_t k = 0; k < factors.size(); ++k) out = out * factors[k] + comp[k];
        return static_cast<int>(out);
    };
    return GroupBuilder::build(m, detail::table_from(m, prod));
}

// Order 2n; elements (i, e) = rotation^i * reflection^e, index e*n + i.
inline FiniteGroup dihedral(long n) {
    if (n < 1) throw BadParameter("dihedral: n must be positive");
    if (2 * n > kDefaultOrderCap) throw CapExceeded(2 * n);
    const int m = static_cast<int>(n);
    auto prod = [m](int x, int y) {
        int i = x % m, e = x / m;
        int j = y % m, d = y / m;
        int k = e == 0 ? (i + j) % m : ((i - j) % m + m) % m;
        return (e ^ d) * m + k;
    };
    return GroupBuilder::build(2 * m, detail::table_from(2 * m, prod));
}

// Order 4n; <a, b | a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}>, index e*2n + i.
inline FiniteGroup dicyclic(long n) {
    if (n < 1) throw BadParameter("dicyclic: n must be positive");
    if (4 * n > kDefaultOrderCap) throw CapExceeded(4 * n);
    const int m2 = static_cast<int>(2 * n);
    const int half = static_cast<int>(n);
    auto prod = [m2, half](int x, int y) {
        int i = x % m2, e = x / m2;
        int j = y % m2, d = y / m2;
        if (e == 0) return d * m2 + (i + j) % m2;
        if (d == 0) return m2 + ((i - j) % m2 + m2) % m2;
        return ((i - j + half) % m2 + m2) % m2;
    };
    return GroupBuilder::build(2 * m2, detail::table_from(2 * m2, prod));
}

// Order p^3 with center = commutator subgroup of order p.
inline FiniteGroup extraspecial(long p, ExtraspecialKind kind = ExtraspecialKind::ExponentP) {
    if (!is_prime(p) || p == 2) throw BadParameter("extraspecial: p must be an odd prime");
    if (p * p * p > kDefaultOrderCap) throw CapExceeded(p * p * p);
    const int pi = static_cast<int>(p);
    const int n = pi * pi * pi;
    if (kind == ExtraspecialKind::ExponentP) {
        // (a,b,c), index a*p^2 + b*p + c; (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2)
        auto prod = [pi](int x, int y) {
            int a1 = x / (pi * pi), b1 = (x / pi) % pi, c1 = x % pi;
            int a2 = y / (pi * pi), b2 = (y / pi) % pi, c2 = y % pi;
            int a = (a1 + a2) % pi, b = (b1 + b2) % pi, c = (c1 + c2 + a1 * b2) % pi;
            return a * pi * pi + b * pi + c;
        };
        return GroupBuilder::build(n, detail::table_from(n, prod));
    }
    // (a,b), a mod p^2, b mod p, index a*p + b; (a1,b1)(a2,b2) = (a1 + a2*(1+p)^b1, b1+b2)
    const int p2 = pi * pi;
    auto prod = [pi, p2](int x, int y) {
        int a1 = x / pi, b1 = x % pi;
        int a2 = y / pi, b2 = y % pi;
        long t = pow_mod(1 + pi, b1, p2);
        int a = static_cast<int>((a1 + a2 * t) % p2);
        int b = (b1 + b2) % pi;
        return a * pi + b;
    };
    return GroupBuilder::build(n, detail::table_from(n, prod));
}

// Lexicographic index pairing (g, h) -> g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const long n = static_cast<long>(g.order()) * h.order();
    if (n > kDefaultOrderCap) throw CapExceeded(n);
    const int hn = h.order();
    auto prod = [&](int x, int y) {
        return g.product(x / hn, y / hn) * hn + h.product(x % hn, y % hn);
    };
    return GroupBuilder::build(static_cast<int>(n), detail::table_from(static_cast<int>(n), prod));
}

// Action of H on N, given per generator of H; each permutation must be an
// automorphism of N, and the assignment must extend to a homomorphism
// H -> Aut(N) (checked while extending over all of H).
struct AutAction {
    std::vector<int> generators;       // element indices in H
    std::vector<Permutation> images;   // automorphism of N per generator, degree |N|

    static AutAction trivial() { return {}; }
};

namespace detail {

inline bool is_automorphism(const FiniteGroup& n, const Permutation& p) {
    if (p.degree() != n.order()) return false;
    for (int a = 0; a < n.order(); ++a)
        for (int b = 0; b < n.order(); ++b)
            if (p(n.product(a, b)) != n.product(p(a), p(b))) return false;
    return true;
}

// Extends generator images to the full homomorphism table, verifying the
// defining relations of H along the way.
inline std::vector<Permutation> extend_action(const FiniteGroup& n, const FiniteGroup& h,
                                              const AutAction& action) {
    if (action.generators.size() != action.images.size())
        throw BadParameter("AutAction: generator/image count mismatch");
    for (size_t k = 0; k < action.generators.size(); ++k) {
        if (action.generators[k] < 0 || action.generators[k] >= h.order())
            throw BadParameter("AutAction: generator index out of range");
        if (!is_automorphism(n, action.images[k]))
            throw NotAutomorphism(action.generators[k]);
    }
    std::vector<std::optional<Permutation>> phi(h.order());
    phi[0] = Permutation::identity(n.order());
    std::vector<int> worklist{0};
    for (size_t head = 0; head < worklist.size(); ++head) {
        const int cur = worklist[head];
        for (size_t k = 0; k < action.generators.size(); ++k) {
            const int nxt = h.product(action.generators[k], cur);
            Permutation cand = action.images[k].compose(*phi[cur]);
            if (!phi[nxt]) {
                phi[nxt] = std::move(cand);
                worklist.push_back(nxt);
            } else if (!(*phi[nxt] == cand)) {
                throw RelationViolated("action violates a defining relation of the acting group at element " +
                                       std::to_string(nxt));
            }
        }
    }
    std::vector<Permutation> out;
    out.reserve(h.order());
    for (int i = 0; i < h.order(); ++i) {
        if (!phi[i]) {
            if (action.generators.empty()) {
                out.assign(h.order(), Permutation::identity(n.order()));
                return out;
            }
            throw RelationViolated("AutAction generators do not generate the acting group");
        }
        out.push_back(*phi[i]);
    }
    return out;
}

}  // namespace detail

// (n1,h1)(n2,h2) = (n1 * phi(h1)(n2), h1 h2), index (n,h) -> n*|H| + h.
// A trivial action reproduces direct_product(N, H) table-identically.
inline FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                      const AutAction& action) {
    const long order = static_cast<long>(n.order()) * h.order();
    if (order > kDefaultOrderCap) throw CapExceeded(order);
    const auto phi = detail::extend_action(n, h, action);
    const int hn = h.order();
    auto prod = [&](int x, int y) {
        int n1 = x / hn, h1 = x % hn;
        int n2 = y / hn, h2 = y % hn;
        return n.product(n1, phi[h1](n2)) * hn + h.product(h1, h2);
    };
    return GroupBuilder::build(static_cast<int>(order),
                               detail::table_from(static_cast<int>(order), prod));
}

// Quotient by a normal subgroup; cosets are represented by their minimal
// member, coset indices in ascending representative order (identity coset
// first). Also returns the projection map element -> coset index.
inline std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup& g, const Subgroup& n) {
    if (&n.parent() != &g) throw BadParameter("quotient: subgroup of a different group");
    if (!is_normal(n)) throw NotNormal();
    const int order = g.order();
    std::vector<int> rep(order, -1);
    for (int x = 0; x < order; ++x) {
        int r = x;
        for (int h : n.members().members()) r = std::min(r, g.product(x, h));
        rep[x] = r;
    }
    std::vector<int> reps;
    for (int x = 0; x < order; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<int> coset_index(order, -1);
    for (size_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = static_cast<int>(i);
    std::vector<int> projection(order);
    for (int x = 0; x < order; ++x) projection[x] = coset_index[rep[x]];

    const int qn = static_cast<int>(reps.size());
    auto prod = [&](int i, int j) { return projection[g.product(reps[i], reps[j])]; };
    FiniteGroup q = GroupBuilder::build(qn, detail::table_from(qn, prod));
    return {std::move(q), std::move(projection)};
}

}  // namespace grouplib
