#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grouplib/construct.hpp"
#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"
#include "grouplib/groupfile.hpp"
#include "grouplib/iso.hpp"
#include "grouplib/numtheory.hpp"

namespace grouplib {

// ---------------------------------------------------------------------------
// Classification-table and remark witnesses, keyed by stable row ids.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& witness_ids() {
    static const std::vector<std::string> ids = {
        "1",     "11/27", "83/243", "29/125", "5/21",   "55/343",
        "17/81", "121/729", "7/39", "3/19",   "29/189", "11/75",
        "rem-5/14", "rem-7/16-d16", "rem-25/64", "rem-T",
    };
    return ids;
}

// Table rows (everything except the rem-* ids) in table order.
inline std::vector<std::string> table_witness_ids() {
    std::vector<std::string> out;
    for (const auto& id : witness_ids())
        if (id.rfind("rem-", 0) != 0) out.push_back(id);
    return out;
}

namespace detail {

// C_p : C_q acting by x -> x^k.
inline FiniteGroup cyclic_semidirect(long p, long q, long k) {
    std::vector<int> img(p);
    for (long i = 0; i < p; ++i) img[i] = static_cast<int>(i * k % p);
    AutAction act{{1}, {Permutation(std::move(img))}};
    return semidirect_product(cyclic(p), cyclic(q), act);
}

// C3 wr C3 as a permutation group on 9 points: a 3-cycle in the first block
// plus the block shift.
inline FiniteGroup wreath_c3_c3() {
    Permutation base = Permutation::parse_cycles("(0 1 2)", 9);
    Permutation shift = Permutation::parse_cycles("(0 3 6)(1 4 7)(2 5 8)", 9);
    return FiniteGroup::from_permutations({base, shift});
}

// Central product of two copies of extraspecial(3): quotient of the direct
// product by the anti-diagonal central C3. Order 3^5, exponent 3.
inline FiniteGroup central_product_es3() {
    FiniteGroup es = extraspecial(3, ExtraspecialKind::ExponentP);
    FiniteGroup d = direct_product(es, es);
    // center generator of the Heisenberg copy is (0,0,1) = index 1
    const int z = 1, zinv = es.inverse(1);
    Subgroup anti = subgroup_generated(d, {z * es.order() + zinv});
    return quotient(d, anti).first;
}

// C7 : extraspecial(3), the order-27 group acting through its C3 quotient by
// x -> x^2; the kernel is the index-3 subgroup spanned by the second
// generator and the derived subgroup.
inline FiniteGroup c7_by_es3() {
    FiniteGroup es = extraspecial(3, ExtraspecialKind::ExponentP);
    // Heisenberg coordinates (a,b,c) at index a*9+b*3+c: generators (1,0,0)
    // and (0,1,0); the action factors through a |-> a mod 3.
    std::vector<int> sq(7);
    for (int i = 0; i < 7; ++i) sq[i] = 2 * i % 7;
    AutAction act{{9, 3}, {Permutation(std::move(sq)), Permutation::identity(7)}};
    return semidirect_product(cyclic(7), es, act);
}

}  // namespace detail

inline FiniteGroup witness(const std::string& row_id) {
    if (row_id == "1") return cyclic(1);
    if (row_id == "11/27") return extraspecial(3, ExtraspecialKind::ExponentP);
    if (row_id == "83/243") return detail::central_product_es3();
    if (row_id == "29/125") return extraspecial(5, ExtraspecialKind::ExponentP);
    if (row_id == "5/21") return detail::cyclic_semidirect(7, 3, 2);
    if (row_id == "55/343") return extraspecial(7, ExtraspecialKind::ExponentP);
    if (row_id == "17/81") return detail::wreath_c3_c3();
    if (row_id == "121/729") {
        FiniteGroup es = extraspecial(3, ExtraspecialKind::ExponentP);
        return direct_product(es, es);
    }
    if (row_id == "7/39") return detail::cyclic_semidirect(13, 3, 3);
    if (row_id == "3/19") return detail::cyclic_semidirect(19, 3, 7);
    if (row_id == "29/189") return detail::c7_by_es3();
    if (row_id == "11/75") {
        // (C5 x C5) : C3 by the order-3 map (a,b) -> (b, -a-b)
        std::vector<int> img(25);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) img[a * 5 + b] = b * 5 + ((10 - a - b) % 5);
        AutAction act{{1}, {Permutation(std::move(img))}};
        return semidirect_product(abelian({5, 5}), cyclic(3), act);
    }
    if (row_id == "rem-5/14") return dihedral(7);
    if (row_id == "rem-7/16-d16") return dihedral(8);
    if (row_id == "rem-25/64") return direct_product(dihedral(4), dihedral(4));
    if (row_id == "rem-T") return dicyclic(3);
    throw UnknownRow(row_id);
}

// ---------------------------------------------------------------------------
// Deterministic small-group families (the property-test corpus). Entries are
// recipes; groups are built on demand. No isomorphism deduplication.
// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string id;
    long order = 0;
    bool known_abelian = false;
    std::function<FiniteGroup()> make;
};

enum class Family { Abelian, PQSemidirect, Extraspecial, Dihedral, Dicyclic, Product2 };

namespace detail {

inline std::string abelian_id(const std::vector<long>& parts) {
    std::ostringstream o;
    o << "abelian(";
    for (size_t i = 0; i < parts.size(); ++i) o << (i ? "," : "") << parts[i];
    o << ")";
    return o.str();
}

inline std::vector<CatalogEntry> base_family(Family f, long bound) {
    std::vector<CatalogEntry> out;
    switch (f) {
        case Family::Abelian:
            for (long n = 2; n <= bound; ++n)
                for (const auto& parts : abelian_type_lists(n))
                    out.push_back({abelian_id(parts), n, true,
                                   [parts] { return abelian(parts); }});
            break;
        case Family::PQSemidirect:
            for (long p = 3; p <= bound / 2; ++p) {
                if (!is_prime(p)) continue;
                for (long q = 2; q < p; ++q)
                    if ((p - 1) % q == 0 && q > 1 && p * q <= bound) {
                        long k = 2;
                        while (multiplicative_order(k, p) != q) ++k;
                        out.push_back({"sdc(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                       p * q, false,
                                       [p, q, k] { return cyclic_semidirect(p, q, k); }});
                    }
            }
            break;
        case Family::Extraspecial:
            for (long p = 2; p * p * p <= bound; ++p) {
                if (!is_prime(p)) continue;
                if (p == 2) {
                    // the two extraspecial groups of order 8
                    out.push_back({"es(2,d)", 8, false, [] { return dihedral(4); }});
                    out.push_back({"es(2,q)", 8, false, [] { return dicyclic(2); }});
                } else {
                    out.push_back({"es(" + std::to_string(p) + ",p)", p * p * p, false,
                                   [p] { return extraspecial(p, ExtraspecialKind::ExponentP); }});
                    out.push_back({"es(" + std::to_string(p) + ",p2)", p * p * p, false,
                                   [p] { return extraspecial(p, ExtraspecialKind::ExponentP2); }});
                }
            }
            break;
        case Family::Dihedral:
            for (long n = 3; 2 * n <= bound; ++n)
                out.push_back({"dih(" + std::to_string(n) + ")", 2 * n, false,
                               [n] { return dihedral(n); }});
            break;
        case Family::Dicyclic:
            for (long n = 2; 4 * n <= bound; ++n)
                out.push_back({"dic(" + std::to_string(n) + ")", 4 * n, false,
                               [n] { return dicyclic(n); }});
            break;
        case Family::Product2:
            break;  // handled by enumerate_family
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.id < b.id;
    });
    return out;
}

}  // namespace detail

inline std::vector<CatalogEntry> enumerate_family(Family f, long bound) {
    if (bound > kDefaultOrderCap) throw BadParameter("enumerate_family: bound exceeds order cap");
    if (f != Family::Product2) return detail::base_family(f, bound);
    // depth-2 closure under direct products of the base families
    std::vector<CatalogEntry> base;
    for (Family bf : {Family::Abelian, Family::PQSemidirect, Family::Extraspecial,
                      Family::Dihedral, Family::Dicyclic})
        for (auto& e : detail::base_family(bf, bound / 2)) base.push_back(std::move(e));
    std::sort(base.begin(), base.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.id < b.id;
    });
    std::vector<CatalogEntry> out;
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i; j < base.size(); ++j) {
            if (base[i].order * base[j].order > bound) continue;
            const auto &l = base[i], &r = base[j];
            out.push_back({"prod(" + l.id + "," + r.id + ")", l.order * r.order,
                           l.known_abelian && r.known_abelian,
                           [ml = l.make, mr = r.make] { return direct_product(ml(), mr()); }});
        }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.id < b.id;
    });
    return out;
}

// The full depth-2 corpus up to `bound`, ordered by (order, id).
inline std::vector<CatalogEntry> corpus(long bound) {
    std::vector<CatalogEntry> out;
    for (Family f : {Family::Abelian, Family::PQSemidirect, Family::Extraspecial,
                     Family::Dihedral, Family::Dicyclic, Family::Product2})
        for (auto& e : enumerate_family(f, bound)) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.id < b.id;
    });
    return out;
}

}  // namespace grouplib
