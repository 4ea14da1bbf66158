#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grouplib/bitset.hpp"
#include "grouplib/errors.hpp"
#include "grouplib/permutation.hpp"

namespace grouplib {

inline constexpr int kDefaultOrderCap = 5000;

namespace detail {

// Lazily-filled per-group memo shared by all copies of one table.
struct GroupCache {
    std::mutex mu;
    std::optional<Bitset> center;
    std::optional<Bitset> derived;
    std::optional<std::vector<Bitset>> raw_classes;  // unsorted conjugation orbits
};

}  // namespace detail

// Immutable multiplication structure over element indices 0..n-1, identity at 0.
class FiniteGroup {
public:
    int order() const { return n_; }

    int product(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int x) const { return product(product(g, x), inverse(g)); }
    // [a,b] = a b a^-1 b^-1
    int commutator(int a, int b) const {
        return product(product(a, b), product(inverse(a), inverse(b)));
    }

    const std::vector<std::string>& labels() const { return labels_; }

    // Validates a raw table: identity is located and renumbered to index 0,
    // inverses cached, associativity checked (fully for n <= 512 or in strict
    // mode, by a seeded sample of 10*n^2 triples above that).
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         bool strict = false,
                                         std::vector<std::string> labels = {}) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw BadParameter("empty table");
        if (n > kDefaultOrderCap) throw CapExceeded(n);
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n) throw BadParameter("table is not square");
            for (int v : row)
                if (v < 0 || v >= n) throw BadParameter("table entry out of range");
        }

        // Locate the two-sided identity.
        int e = -1;
        for (int i = 0; i < n && e < 0; ++i) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                ok = table[i][j] == j && table[j][i] == j;
            if (ok) e = i;
        }
        if (e < 0) throw NoIdentity();

        FiniteGroup g;
        g.n_ = n;
        g.table_.resize(static_cast<size_t>(n) * n);
        if (e == 0) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g.table_[static_cast<size_t>(i) * n + j] = static_cast<std::uint16_t>(table[i][j]);
            g.labels_ = std::move(labels);
        } else {
            // Renumber by swapping indices 0 and e.
            auto re = [&](int i) { return i == 0 ? e : (i == e ? 0 : i); };
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g.table_[static_cast<size_t>(i) * n + j] =
                        static_cast<std::uint16_t>(re(table[re(i)][re(j)]));
            if (!labels.empty()) {
                std::swap(labels[0], labels[e]);
                g.labels_ = std::move(labels);
            }
        }
        g.finish_validation(strict);
        return g;
    }

    // Breadth-first closure of permutation generators; element 0 is the
    // identity, the rest in discovery order (deterministic given the list).
    static FiniteGroup from_permutations(const std::vector<Permutation>& gens,
                                         int cap = kDefaultOrderCap) {
        if (gens.empty()) throw BadParameter("no generators");
        const int deg = gens[0].degree();
        for (const auto& g : gens)
            if (g.degree() != deg) throw BadParameter("generators have mixed degrees");

        std::vector<Permutation> elems{Permutation::identity(deg)};
        std::map<Permutation, int> index{{elems[0], 0}};
        for (size_t head = 0; head < elems.size(); ++head) {
            for (const auto& g : gens) {
                Permutation p = g.compose(elems[head]);
                if (index.emplace(p, static_cast<int>(elems.size())).second) {
                    elems.push_back(std::move(p));
                    if (static_cast<int>(elems.size()) > cap)
                        throw CapExceeded(static_cast<long>(elems.size()));
                }
            }
        }

        const int n = static_cast<int>(elems.size());
        FiniteGroup g;
        g.n_ = n;
        g.table_.resize(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g.table_[static_cast<size_t>(i) * n + j] =
                    static_cast<std::uint16_t>(index.at(elems[i].compose(elems[j])));
        g.labels_.reserve(n);
        for (const auto& p : elems) g.labels_.push_back(p.to_cycles());
        g.finish_validation(false);  // closure is associative by construction
        return g;
    }

    detail::GroupCache& cache() const { return *cache_; }

    bool table_equal(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    friend class GroupBuilder;

    FiniteGroup() : cache_(std::make_shared<detail::GroupCache>()) {}

    void finish_validation(bool strict) {
        // Inverses: row of each element must contain the identity.
        inverse_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int inv = -1;
            for (int j = 0; j < n_; ++j)
                if (product(i, j) == 0 && product(j, i) == 0) { inv = j; break; }
            if (inv < 0) throw NoInverse(i);
            inverse_[i] = static_cast<std::uint16_t>(inv);
        }
        if (n_ <= 512 || strict) {
            for (int x = 0; x < n_; ++x)
                for (int y = 0; y < n_; ++y) {
                    const int xy = product(x, y);
                    for (int z = 0; z < n_; ++z)
                        if (product(xy, z) != product(x, product(y, z)))
                            throw NotAssociative(x, y, z);
                }
        } else {
            std::mt19937 rng(0x67726f75u ^ static_cast<unsigned>(n_));
            std::uniform_int_distribution<int> d(0, n_ - 1);
            const long samples = 10L * n_ * n_;
            for (long s = 0; s < samples; ++s) {
                int x = d(rng), y = d(rng), z = d(rng);
                if (product(product(x, y), z) != product(x, product(y, z)))
                    throw NotAssociative(x, y, z);
            }
        }
    }

    int n_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inverse_;
    std::vector<std::string> labels_;
    std::shared_ptr<detail::GroupCache> cache_;
};

// Internal escape hatch for constructions whose tables are valid by design
// (products, quotients, standard presentations). Validation still runs.
class GroupBuilder {
public:
    static FiniteGroup build(int n, const std::vector<std::uint16_t>& table,
                             std::vector<std::string> labels = {}) {
        if (n > kDefaultOrderCap) throw CapExceeded(n);
        FiniteGroup g;
        g.n_ = n;
        g.table_ = table;
        g.labels_ = std::move(labels);
        g.finish_validation(false);
        return g;
    }
};

inline int element_order(const FiniteGroup& g, int i) {
    int k = 1;
    int x = i;
    while (x != 0) {
        x = g.product(x, i);
        ++k;
    }
    return k;
}

inline long exponent(const FiniteGroup& g) {
    long e = 1;
    for (int i = 0; i < g.order(); ++i) e = std::lcm(e, static_cast<long>(element_order(g, i)));
    return e;
}

}  // namespace grouplib
