#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grouplib/construct.hpp"
#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"
#include "grouplib/numtheory.hpp"
#include "grouplib/structure.hpp"

namespace grouplib {

// Cheap isomorphism invariants, used as a pre-filter before any search and as
// the identity of an unrecognized type.
struct Fingerprint {
    long order = 0;
    std::vector<std::pair<int, int>> order_histogram;  // (element order, count), ascending
    std::vector<int> class_sizes;                      // ascending
    int center_order = 0;
    int derived_order = 0;
    std::vector<int> derived_series_orders;  // |G|, |G'|, |G''|, ... until stable
    long exponent_value = 0;

    bool operator==(const Fingerprint&) const = default;

    std::string str() const {
        std::ostringstream o;
        o << "o=" << order << ";eo=[";
        for (size_t i = 0; i < order_histogram.size(); ++i)
            o << (i ? "," : "") << order_histogram[i].first << ":" << order_histogram[i].second;
        o << "];cs=[";
        for (size_t i = 0; i < class_sizes.size(); ++i) o << (i ? "," : "") << class_sizes[i];
        o << "];z=" << center_order << ";d=" << derived_order << ";ds=[";
        for (size_t i = 0; i < derived_series_orders.size(); ++i)
            o << (i ? "," : "") << derived_series_orders[i];
        o << "];exp=" << exponent_value;
        return o.str();
    }
};

inline Fingerprint fingerprint(const FiniteGroup& g) {
    Fingerprint f;
    f.order = g.order();
    std::map<int, int> hist;
    for (int i = 0; i < g.order(); ++i) ++hist[element_order(g, i)];
    f.order_histogram.assign(hist.begin(), hist.end());
    f.class_sizes = conjugacy_classes(g).sizes;
    f.center_order = center(g).order();
    f.derived_order = commutator_subgroup(g).order();
    f.exponent_value = exponent(g);
    // derived series by repeated subgroup_as_group
    FiniteGroup cur = g;
    f.derived_series_orders.push_back(g.order());
    while (true) {
        Subgroup d = commutator_subgroup(cur);
        if (d.order() == cur.order()) break;  // perfect tail
        f.derived_series_orders.push_back(d.order());
        if (d.order() == 1) break;
        cur = subgroup_as_group(cur, d);
    }
    return f;
}

// Structured isomorphism-type descriptor.
struct IsoLabel {
    enum class Kind { Abelian, Dihedral, Dicyclic, Extraspecial, SemidirectCyclic, Product, Unrecognized };

    Kind kind = Kind::Abelian;
    std::vector<long> invariants;   // Abelian: d1 | d2 | ... | dk, empty = trivial
    long a = 0;                     // DIH(n)/DIC(n): n; ES(p,.): p; SDC(a,q): a = p or p^2
    long b = 0;                     // ES: 1 = exponent p, 2 = the C_{p^2}:C_p kind; SDC: q
    std::vector<IsoLabel> factors;  // Product
    std::string fp;                 // Unrecognized

    static IsoLabel abelian_label(std::vector<long> inv) {
        IsoLabel l;
        l.kind = Kind::Abelian;
        l.invariants = std::move(inv);
        return l;
    }
    static IsoLabel named(Kind k, long a_, long b_ = 0) {
        IsoLabel l;
        l.kind = k;
        l.a = a_;
        l.b = b_;
        return l;
    }
    static IsoLabel product(std::vector<IsoLabel> fs) {
        IsoLabel l;
        l.kind = Kind::Product;
        l.factors = std::move(fs);
        return l;
    }
    static IsoLabel unrecognized(std::string fp_) {
        IsoLabel l;
        l.kind = Kind::Unrecognized;
        l.fp = std::move(fp_);
        return l;
    }

    bool operator==(const IsoLabel&) const = default;

    bool is_trivial() const { return kind == Kind::Abelian && invariants.empty(); }

    // Compact stable grammar: `1`, `A[3,9]`, `N:SDC(7,3)`, `P[A[3],N:SDC(7,3)]`.
    std::string str() const {
        std::ostringstream o;
        switch (kind) {
            case Kind::Abelian:
                if (invariants.empty()) return "1";
                o << "A[";
                for (size_t i = 0; i < invariants.size(); ++i) o << (i ? "," : "") << invariants[i];
                o << "]";
                break;
            case Kind::Dihedral: o << "N:DIH(" << a << ")"; break;
            case Kind::Dicyclic: o << "N:DIC(" << a << ")"; break;
            case Kind::Extraspecial: o << "N:ES(" << a << "," << (b == 1 ? "p" : "p2") << ")"; break;
            case Kind::SemidirectCyclic: o << "N:SDC(" << a << "," << b << ")"; break;
            case Kind::Product: {
                o << "P[";
                for (size_t i = 0; i < factors.size(); ++i) o << (i ? "," : "") << factors[i].str();
                o << "]";
                break;
            }
            case Kind::Unrecognized: o << "U{" << fp << "}"; break;
        }
        return o.str();
    }
};

inline IsoLabel abelian_invariants(const FiniteGroup& g) {
    return IsoLabel::abelian_label(abelian_invariant_factors(g));  // throws NotAbelian
}

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> witness;  // index map G -> H when isomorphic
};

inline constexpr long kDefaultIsoBudget = 10'000'000;

namespace detail {

// Greedy generating sequence: maximal element order, then maximal closure
// gain, tie-break minimal index. Deterministic.
inline std::vector<int> generating_sequence(const FiniteGroup& g) {
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(g);
    while (cur.order() < g.order()) {
        int best = -1, best_order = -1, best_gain = -1;
        for (int x = 0; x < g.order(); ++x) {
            if (cur.contains(x)) continue;
            const int ord = element_order(g, x);
            if (ord < best_order) continue;
            std::vector<int> trial = gens;
            trial.push_back(x);
            const int gain = subgroup_generated(g, std::span<const int>(trial.data(), trial.size())).order();
            if (ord > best_order || gain > best_gain) {
                best = x;
                best_order = ord;
                best_gain = gain;
            }
        }
        gens.push_back(best);
        std::vector<int> all = gens;
        cur = subgroup_generated(g, std::span<const int>(all.data(), all.size()));
    }
    return gens;
}

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<int> gens;                // generating sequence of g
    std::vector<std::vector<int>> cands;  // candidate images per generator
    long budget;
    long used = 0;

    void spend(long amount) {
        used += amount;
        if (used > budget) throw SearchBudgetExceeded();
    }

    // Builds the homomorphism determined by images of gens[0..k), returns the
    // full map when it is a consistent injective homomorphism on the closure.
    std::optional<std::vector<int>> close(const std::vector<int>& images) {
        const int n = g.order();
        std::vector<int> img(n, -1), rev(h.order(), -1), list{0};
        img[0] = 0;
        rev[0] = 0;
        for (size_t head = 0; head < list.size(); ++head) {
            for (size_t k = 0; k < images.size(); ++k) {
                spend(1);
                const int e = list[head];
                const int ge = g.product(e, gens[k]);
                const int he = h.product(img[e], images[k]);
                if (img[ge] == -1) {
                    if (rev[he] != -1) return std::nullopt;  // not injective
                    img[ge] = he;
                    rev[he] = ge;
                    list.push_back(ge);
                } else if (img[ge] != he) {
                    return std::nullopt;
                }
            }
        }
        // homomorphism on the whole closed subgroup
        for (int a : list)
            for (int b : list) {
                spend(1);
                if (img[g.product(a, b)] != h.product(img[a], img[b])) return std::nullopt;
            }
        return img;
    }

    std::optional<std::vector<int>> extend(std::vector<int>& images, size_t k) {
        if (k == gens.size()) {
            auto m = close(images);
            if (!m) return std::nullopt;
            for (int v : *m)
                if (v == -1) return std::nullopt;  // closure did not cover G
            return m;
        }
        for (int cand : cands[k]) {
            images.push_back(cand);
            if (close(images)) {
                if (auto r = extend(images, k + 1)) return r;
            }
            images.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace detail

inline IsoResult are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                long budget = kDefaultIsoBudget) {
    if (fingerprint(g) != fingerprint(h)) return {};
    detail::IsoSearch search{g, h, detail::generating_sequence(g), {}, budget};
    const ConjClasses gcls = conjugacy_classes(g);
    const ConjClasses hcls = conjugacy_classes(h);
    for (int gen : search.gens) {
        const int ord = element_order(g, gen);
        const int csize = gcls.sizes[gcls.class_index[gen]];
        std::vector<int> c;
        for (int y = 0; y < h.order(); ++y)
            if (element_order(h, y) == ord && hcls.sizes[hcls.class_index[y]] == csize)
                c.push_back(y);
        search.cands.push_back(std::move(c));
    }
    std::vector<int> images;
    if (auto m = search.extend(images, 0)) return {true, std::move(*m)};
    return {};
}

namespace detail {

// All abelian groups of order m as elementary-divisor lists (prime-power
// parts, deterministic order).
inline std::vector<std::vector<long>> abelian_type_lists(long m) {
    std::vector<std::vector<std::vector<long>>> per_prime;
    for (auto [p, e] : factorize(m)) {
        std::vector<std::vector<long>> parts;
        std::vector<int> partition;
        // descending partitions of e
        auto rec = [&](auto&& self, int rest, int maxpart) -> void {
            if (rest == 0) {
                std::vector<long> lst;
                for (int x : partition) {
                    long pe = 1;
                    for (int i = 0; i < x; ++i) pe *= p;
                    lst.push_back(pe);
                }
                parts.push_back(lst);
                return;
            }
            for (int x = std::min(rest, maxpart); x >= 1; --x) {
                partition.push_back(x);
                self(self, rest - x, x);
                partition.pop_back();
            }
        };
        rec(rec, e, e);
        per_prime.push_back(std::move(parts));
    }
    std::vector<std::vector<long>> out{{}};
    for (auto& choices : per_prime) {
        std::vector<std::vector<long>> next;
        for (auto& base : out)
            for (auto& c : choices) {
                auto v = base;
                v.insert(v.end(), c.begin(), c.end());
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    if (m == 1) return {{}};
    return out;
}

struct NamedCandidate {
    IsoLabel label;
    FiniteGroup group;
};

inline std::optional<FiniteGroup> sdc_cyclic(long p, long q) {
    if (!is_prime(p) || q < 2 || (p - 1) % q != 0) return std::nullopt;
    long k = 2;
    while (multiplicative_order(k, p) != q) ++k;
    std::vector<int> img(p);
    for (long i = 0; i < p; ++i) img[i] = static_cast<int>(i * k % p);
    AutAction act{{1}, {Permutation(std::move(img))}};
    return semidirect_product(cyclic(p), cyclic(q), act);
}

inline std::optional<FiniteGroup> sdc_elementary(long p, long q) {
    if (!is_prime(p) || q < 2) return std::nullopt;
    // first order-q matrix in GL(2,p), lexicographic over (a,b,c,d)
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d) {
                    if (((a * d - b * c) % p + p) % p == 0) continue;
                    // matrix order
                    long ma = a, mb = b, mc = c, md = d;
                    long ord = 1;
                    while (!(ma == 1 && mb == 0 && mc == 0 && md == 1)) {
                        long na = (ma * a + mb * c) % p, nb = (ma * b + mb * d) % p;
                        long nc = (mc * a + md * c) % p, nd = (mc * b + md * d) % p;
                        ma = na; mb = nb; mc = nc; md = nd;
                        if (++ord > q) break;
                    }
                    if (ord != q) continue;
                    std::vector<int> img(p * p);
                    for (long u = 0; u < p; ++u)
                        for (long v = 0; v < p; ++v)
                            img[u * p + v] = static_cast<int>(((a * u + b * v) % p) * p +
                                                              (c * u + d * v) % p);
                    AutAction act{{1}, {Permutation(std::move(img))}};
                    return semidirect_product(abelian({p, p}), cyclic(q), act);
                }
    return std::nullopt;
}

// Non-abelian named-family candidates of a given order, in the deterministic
// order recognize() probes them.
inline std::vector<NamedCandidate> named_candidates(long m) {
    std::vector<NamedCandidate> out;
    using K = IsoLabel::Kind;
    if (m % 2 == 0 && m / 2 >= 3)
        out.push_back({IsoLabel::named(K::Dihedral, m / 2), dihedral(m / 2)});
    if (m % 4 == 0 && m / 4 >= 2)
        out.push_back({IsoLabel::named(K::Dicyclic, m / 4), dicyclic(m / 4)});
    for (auto [p, e] : factorize(m))
        if (e == 3 && p * p * p == m && p > 2) {
            out.push_back({IsoLabel::named(K::Extraspecial, p, 1), extraspecial(p, ExtraspecialKind::ExponentP)});
            out.push_back({IsoLabel::named(K::Extraspecial, p, 2), extraspecial(p, ExtraspecialKind::ExponentP2)});
        }
    for (auto [p, e] : factorize(m)) {
        if (e >= 1 && m / p > 1 && m % p == 0 && is_prime(p)) {
            const long q = m / p;
            if (q > 1 && (p - 1) % q == 0 && q != 1)
                if (auto cand = sdc_cyclic(p, q))
                    out.push_back({IsoLabel::named(K::SemidirectCyclic, p, q), std::move(*cand)});
        }
        if (e >= 2) {
            const long q = m / (p * p);
            if (q > 1)
                if (auto cand = sdc_elementary(p, q))
                    out.push_back({IsoLabel::named(K::SemidirectCyclic, p * p, q), std::move(*cand)});
        }
    }
    return out;
}

}  // namespace detail

inline IsoLabel recognize(const FiniteGroup& g);

namespace detail {

// Direct-product recognition over divisor splits; factor candidates are the
// abelian types and the named families.
inline std::optional<IsoLabel> recognize_product(const FiniteGroup& g) {
    const long n = g.order();
    // nilpotent, several primes: Sylow decomposition is the canonical split
    if (factorize(n).size() > 1) {
        if (auto syl = sylow_decomposition(g)) {
            std::vector<IsoLabel> parts;
            for (auto& [p, sub] : *syl) parts.push_back(recognize(subgroup_as_group(g, sub)));
            return IsoLabel::product(std::move(parts));
        }
    }
    for (long a = 2; a * a <= n; ++a) {
        if (n % a) continue;
        const long b = n / a;
        std::vector<NamedCandidate> left, right;
        for (auto& inv : abelian_type_lists(a))
            left.push_back({IsoLabel::abelian_label(abelian_invariant_factors(abelian(inv))), abelian(inv)});
        for (auto& c : named_candidates(a)) left.push_back(c);
        for (auto& inv : abelian_type_lists(b))
            right.push_back({IsoLabel::abelian_label(abelian_invariant_factors(abelian(inv))), abelian(inv)});
        for (auto& c : named_candidates(b)) right.push_back(c);
        for (auto& l : left)
            for (auto& r : right) {
                if (l.label.is_trivial() || r.label.is_trivial()) continue;
                FiniteGroup cand = direct_product(l.group, r.group);
                if (are_isomorphic(g, cand).isomorphic)
                    return IsoLabel::product({l.label, r.label});
            }
    }
    return std::nullopt;
}

}  // namespace detail

// Names the isomorphism type: abelian invariants, else the named families in
// the fixed probe order (Dihedral, Dicyclic, Extraspecial, SemidirectCyclic,
// Product), else Unrecognized with the fingerprint.
inline IsoLabel recognize(const FiniteGroup& g) {
    if (is_abelian(g)) return abelian_invariants(g);
    for (auto& cand : detail::named_candidates(g.order()))
        if (are_isomorphic(g, cand.group).isomorphic) return cand.label;
    if (auto p = detail::recognize_product(g)) return *p;
    return IsoLabel::unrecognized(fingerprint(g).str());
}

}  // namespace grouplib
