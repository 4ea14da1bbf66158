#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "grouplib/bitset.hpp"
#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"

namespace grouplib {

// A closed subset of element indices of a parent group. Construction verifies
// identity membership, closure under product and inverse, and Lagrange.
// The parent group must outlive the subgroup.
class Subgroup {
public:
    Subgroup(const FiniteGroup& parent, Bitset members)
        : parent_(&parent), members_(std::move(members)), order_(members_.count()) {
        assert(members_.size() == parent.order());
        if (!members_.test(0)) throw BadParameter("subgroup does not contain the identity");
        const auto elems = members_.members();
        for (int a : elems) {
            if (!members_.test(parent.inverse(a)))
                throw BadParameter("subgroup not closed under inverse");
            for (int b : elems)
                if (!members_.test(parent.product(a, b)))
                    throw BadParameter("subgroup not closed under product");
        }
        assert(parent.order() % order_ == 0);  // Lagrange
    }

    const FiniteGroup& parent() const { return *parent_; }
    const Bitset& members() const { return members_; }
    int order() const { return order_; }
    bool contains(int i) const { return members_.test(i); }
    bool is_trivial() const { return order_ == 1; }
    bool is_full() const { return order_ == parent_->order(); }

    bool operator==(const Subgroup& o) const {
        return parent_ == o.parent_ && members_ == o.members_;
    }

private:
    const FiniteGroup* parent_;
    Bitset members_;
    int order_;
};

// Smallest closed subset containing S and the identity (worklist closure).
inline Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens) {
    Bitset seen(g.order());
    seen.set(0);
    std::vector<int> list{0};
    for (int x : gens) {
        if (x < 0 || x >= g.order()) throw BadParameter("generator index out of range");
        if (!seen.test(x)) {
            seen.set(x);
            list.push_back(x);
        }
    }
    for (size_t head = 0; head < list.size(); ++head) {
        const int x = list[head];
        for (size_t i = 0; i < list.size(); ++i) {
            const int y = list[i];
            for (int z : {g.product(x, y), g.product(y, x)}) {
                if (!seen.test(z)) {
                    seen.set(z);
                    list.push_back(z);
                }
            }
        }
    }
    return Subgroup(g, seen);
}

inline Subgroup subgroup_generated(const FiniteGroup& g, std::initializer_list<int> gens) {
    return subgroup_generated(g, std::span<const int>(gens.begin(), gens.size()));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
    Bitset b(g.order());
    b.set(0);
    return Subgroup(g, b);
}

inline Subgroup full_subgroup(const FiniteGroup& g) {
    Bitset b(g.order());
    for (int i = 0; i < g.order(); ++i) b.set(i);
    return Subgroup(g, b);
}

inline bool is_normal(const FiniteGroup& g, const Bitset& h) {
    for (int x = 0; x < g.order(); ++x) {
        if (!h.test(x)) continue;
        for (int c = 0; c < g.order(); ++c)
            if (!h.test(g.conjugate(c, x))) return false;
    }
    return true;
}

inline bool is_normal(const Subgroup& h) { return is_normal(h.parent(), h.members()); }

}  // namespace grouplib
