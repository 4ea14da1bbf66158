#pragma once

#include <algorithm>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grouplib/construct.hpp"
#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"
#include "grouplib/numtheory.hpp"
#include "grouplib/subgroup.hpp"

namespace grouplib {

inline bool is_abelian(const FiniteGroup& g) {
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.product(i, j) != g.product(j, i)) return false;
    return true;
}

inline Subgroup centralizer(const FiniteGroup& g, int x) {
    Bitset b(g.order());
    for (int y = 0; y < g.order(); ++y)
        if (g.product(x, y) == g.product(y, x)) b.set(y);
    return Subgroup(g, b);
}

inline Subgroup centralizer_set(const FiniteGroup& g, const Bitset& s) {
    Bitset b(g.order());
    const auto elems = s.members();
    for (int y = 0; y < g.order(); ++y) {
        bool ok = true;
        for (int x : elems)
            if (g.product(x, y) != g.product(y, x)) { ok = false; break; }
        if (ok) b.set(y);
    }
    return Subgroup(g, b);
}

inline Subgroup center(const FiniteGroup& g) {
    auto& cache = g.cache();
    {
        std::lock_guard lk(cache.mu);
        if (cache.center) return Subgroup(g, *cache.center);
    }
    Bitset b(g.order());
    for (int y = 0; y < g.order(); ++y) {
        bool ok = true;
        for (int x = 0; x < g.order() && ok; ++x)
            ok = g.product(x, y) == g.product(y, x);
        if (ok) b.set(y);
    }
    std::lock_guard lk(cache.mu);
    cache.center = b;
    return Subgroup(g, b);
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
    auto& cache = g.cache();
    {
        std::lock_guard lk(cache.mu);
        if (cache.derived) return Subgroup(g, *cache.derived);
    }
    Bitset comms(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) comms.set(g.commutator(x, y));
    const auto gens = comms.members();
    Subgroup d = subgroup_generated(g, std::span<const int>(gens.data(), gens.size()));
    std::lock_guard lk(cache.mu);
    cache.derived = d.members();
    return d;
}

// Conjugacy classes, ordered by (size ascending, minimal member ascending).
struct ConjClasses {
    std::vector<Bitset> classes;
    std::vector<int> sizes;        // parallel to classes
    std::vector<int> reps;         // minimal member per class
    std::vector<int> class_index;  // element -> position in classes

    int count() const { return static_cast<int>(classes.size()); }
};

inline ConjClasses conjugacy_classes(const FiniteGroup& g) {
    auto& cache = g.cache();
    std::vector<Bitset> raw;
    {
        std::lock_guard lk(cache.mu);
        if (cache.raw_classes) raw = *cache.raw_classes;
    }
    if (raw.empty()) {
        std::vector<bool> seen(g.order(), false);
        for (int x = 0; x < g.order(); ++x) {
            if (seen[x]) continue;
            Bitset cls(g.order());
            for (int c = 0; c < g.order(); ++c) {
                int y = g.conjugate(c, x);
                if (!cls.test(y)) {
                    cls.set(y);
                    seen[y] = true;
                }
            }
            raw.push_back(std::move(cls));
        }
        std::lock_guard lk(cache.mu);
        cache.raw_classes = raw;
    }
    std::vector<std::pair<std::pair<int, int>, int>> order_keys;  // ((size, min), idx)
    for (size_t i = 0; i < raw.size(); ++i)
        order_keys.push_back({{raw[i].count(), raw[i].next(0)}, static_cast<int>(i)});
    std::sort(order_keys.begin(), order_keys.end());

    ConjClasses out;
    out.class_index.assign(g.order(), -1);
    for (auto& [key, idx] : order_keys) {
        for (int m : raw[idx].members()) out.class_index[m] = static_cast<int>(out.classes.size());
        out.sizes.push_back(key.first);
        out.reps.push_back(key.second);
        out.classes.push_back(raw[idx]);
    }
    return out;
}

// H* = {x in G : [G,x] subset of H}; requires H normal. The result is a
// normal subgroup containing H (asserted).
inline Subgroup star(const FiniteGroup& g, const Subgroup& h) {
    if (!is_normal(h)) throw NotNormal();
    Bitset b(g.order());
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y = 0; y < g.order() && ok; ++y)
            ok = h.contains(g.commutator(y, x));
        if (ok) b.set(x);
    }
    Subgroup s(g, b);
    if (!h.members().subset_of(b) || !is_normal(s))
        throw GroupError("star operator internal invariant failed");
    return s;
}

struct CentralSeries {
    std::vector<Subgroup> terms;  // G = gamma_1, gamma_2 = G', ... until stable
};

inline CentralSeries lower_central_series(const FiniteGroup& g) {
    CentralSeries s;
    s.terms.push_back(full_subgroup(g));
    while (true) {
        const Subgroup& prev = s.terms.back();
        Bitset comms(g.order());
        comms.set(0);
        for (int x : prev.members().members())
            for (int y = 0; y < g.order(); ++y) comms.set(g.commutator(x, y));
        const auto gens = comms.members();
        Subgroup next = subgroup_generated(g, std::span<const int>(gens.data(), gens.size()));
        if (next.members() == prev.members()) break;
        s.terms.push_back(std::move(next));
        if (s.terms.back().is_trivial()) break;
    }
    return s;
}

// Number of strict steps down to the trivial subgroup; nullopt when the
// series stabilizes above it. The trivial group has class 0, abelian class 1.
inline std::optional<int> nilpotency_class(const FiniteGroup& g) {
    CentralSeries s = lower_central_series(g);
    if (!s.terms.back().is_trivial()) return std::nullopt;
    return static_cast<int>(s.terms.size()) - 1;
}

inline bool is_nilpotent(const FiniteGroup& g) { return nilpotency_class(g).has_value(); }

// For nilpotent G: per prime divisor, the set of p-power-order elements,
// verified to be a subgroup and an internal direct factor.
inline std::optional<std::vector<std::pair<long, Subgroup>>> sylow_decomposition(
    const FiniteGroup& g) {
    if (!is_nilpotent(g)) return std::nullopt;
    std::vector<std::pair<long, Subgroup>> out;
    const auto factors = factorize(g.order());
    long orders_product = 1;
    for (auto [p, e] : factors) {
        Bitset b(g.order());
        for (int x = 0; x < g.order(); ++x) {
            int o = element_order(g, x);
            while (o % p == 0) o /= static_cast<int>(p);
            if (o == 1) b.set(x);
        }
        Subgroup s(g, b);  // throws if the p-elements are not closed
        long expect = 1;
        for (int i = 0; i < e; ++i) expect *= p;
        if (s.order() != expect) throw GroupError("sylow component has wrong order");
        orders_product *= s.order();
        out.emplace_back(p, std::move(s));
    }
    if (orders_product != g.order()) throw GroupError("sylow components do not fill the group");
    // pairwise commuting across components
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            for (int a : out[i].second.members().members())
                for (int b : out[j].second.members().members())
                    if (g.product(a, b) != g.product(b, a))
                        throw GroupError("sylow components do not commute");
    return out;
}

// Re-indexes a subgroup as a standalone group; identity stays at index 0 and
// the remaining members keep their relative order. index_map (optional out)
// maps new index -> parent index.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                                     std::vector<int>* index_map = nullptr) {
    const auto elems = h.members().members();  // ascending; elems[0] == 0
    std::vector<int> to_new(g.order(), -1);
    for (size_t i = 0; i < elems.size(); ++i) to_new[elems[i]] = static_cast<int>(i);
    const int m = static_cast<int>(elems.size());
    auto prod = [&](int i, int j) { return to_new[g.product(elems[i], elems[j])]; };
    if (index_map) *index_map = elems;
    return GroupBuilder::build(m, detail::table_from(m, prod));
}

// Invariant-factor decomposition d1 | d2 | ... | dk of an abelian group,
// computed per prime from the sizes |{x : x^{p^k} = 1}|.
inline std::vector<long> abelian_invariant_factors(const FiniteGroup& g) {
    if (!is_abelian(g)) throw NotAbelian();
    if (g.order() == 1) return {};
    std::map<long, std::vector<int>> partitions;  // prime -> exponents descending
    for (auto [p, e] : factorize(g.order())) {
        // count_k = #{x : x^{p^k} = 1} = p^{sum_i min(k, lambda_i)}
        std::vector<int> logs{0};
        for (int k = 1; k <= e; ++k) {
            int count = 0;
            for (int x = 0; x < g.order(); ++x) {
                int y = x;
                for (int i = 0; i < k; ++i) {
                    int acc = 0;  // y^p by p-fold product
                    for (long t = 0; t < p; ++t) acc = g.product(acc, y);
                    y = acc;
                }
                if (y == 0) ++count;
            }
            int lg = 0;
            long c = count;
            while (c > 1) { c /= p; ++lg; }
            logs.push_back(lg);
        }
        // differences give the conjugate partition; conjugate back
        std::vector<int> conj;
        for (size_t k = 1; k < logs.size(); ++k) {
            int d = logs[k] - logs[k - 1];
            if (d > 0) conj.push_back(d);
        }
        // lambda_j = #{k : conj[k] >= j+1}
        std::vector<int> lambda;
        for (int j = 1;; ++j) {
            int c = 0;
            for (int v : conj)
                if (v >= j) ++c;
            if (c == 0) break;
            lambda.push_back(c);
        }
        std::sort(lambda.rbegin(), lambda.rend());
        partitions[p] = lambda;
    }
    size_t k = 0;
    for (auto& [p, lambda] : partitions) k = std::max(k, lambda.size());
    std::vector<long> inv(k, 1);  // inv[0] largest
    for (auto& [p, lambda] : partitions)
        for (size_t i = 0; i < lambda.size(); ++i) {
            long pe = 1;
            for (int j = 0; j < lambda[i]; ++j) pe *= p;
            inv[i] *= pe;
        }
    std::reverse(inv.begin(), inv.end());  // ascending, d1 | d2 | ... | dk
    return inv;
}

// |Aut| for the abelian shapes the classification uses: cyclic C_m (Euler
// phi) and C_p x C_p. Anything else is unsupported, never a wrong answer.
inline std::optional<mpz_class> aut_order_abelian(const std::vector<long>& invariants) {
    if (invariants.empty()) return mpz_class(1);  // trivial group
    if (invariants.size() == 1) return mpz_class(euler_phi(invariants[0]));
    if (invariants.size() == 2 && invariants[0] == invariants[1] && is_prime(invariants[0])) {
        const long p = invariants[0];
        return mpz_class(p) * (p + 1) * (p - 1) * (p - 1);
    }
    return std::nullopt;
}

// Normal subgroups as joins of normal closures of single conjugacy classes,
// enumerated deterministically. Capped: groups with huge normal-subgroup
// lattices (large elementary abelian chunks) are sampled, not exhausted.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, size_t cap = 64) {
    const ConjClasses cls = conjugacy_classes(g);
    std::vector<Bitset> atoms;
    for (int c = 0; c < cls.count(); ++c) {
        const auto gens = cls.classes[c].members();
        Subgroup s = subgroup_generated(g, std::span<const int>(gens.data(), gens.size()));
        if (std::find(atoms.begin(), atoms.end(), s.members()) == atoms.end())
            atoms.push_back(s.members());
    }
    std::sort(atoms.begin(), atoms.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    std::vector<Bitset> found;
    Bitset triv(g.order());
    triv.set(0);
    found.push_back(triv);
    for (size_t head = 0; head < found.size() && found.size() < cap; ++head) {
        for (const Bitset& a : atoms) {
            Bitset u = found[head] | a;
            const auto gens = u.members();
            Subgroup s = subgroup_generated(g, std::span<const int>(gens.data(), gens.size()));
            if (std::find(found.begin(), found.end(), s.members()) == found.end()) {
                found.push_back(s.members());
                if (found.size() >= cap) break;
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& b : found) out.emplace_back(g, std::move(b));
    return out;
}

}  // namespace grouplib
