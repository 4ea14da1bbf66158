#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grouplib {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cayley-table validation failures name the offending indices.
struct NotAssociative : GroupError {
    int x, y, z;
    NotAssociative(int x_, int y_, int z_)
        : GroupError("not associative at triple (" + std::to_string(x_) + ", " +
                     std::to_string(y_) + ", " + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_) {}
};

struct NoIdentity : GroupError {
    NoIdentity() : GroupError("table has no two-sided identity") {}
};

struct NoInverse : GroupError {
    int element;
    explicit NoInverse(int i)
        : GroupError("element " + std::to_string(i) + " has no inverse"), element(i) {}
};

struct BadParameter : GroupError {
    using GroupError::GroupError;
};

struct CapExceeded : GroupError {
    long found;
    explicit CapExceeded(long found_)
        : GroupError("order cap exceeded (reached " + std::to_string(found_) + ")"),
          found(found_) {}
};

struct NotAutomorphism : GroupError {
    int generator;
    explicit NotAutomorphism(int gen)
        : GroupError("action image of generator " + std::to_string(gen) +
                     " is not an automorphism"),
          generator(gen) {}
};

struct RelationViolated : GroupError {
    using GroupError::GroupError;
};

struct NotNormal : GroupError {
    NotNormal() : GroupError("subgroup is not normal") {}
};

struct NotAbelian : GroupError {
    NotAbelian() : GroupError("group is not abelian") {}
};

struct NotPrimeIndex : GroupError {
    NotPrimeIndex() : GroupError("subgroup index is not prime") {}
};

struct NotClass2PGroup : GroupError {
    NotClass2PGroup() : GroupError("not a p-group with G' contained in the center") {}
};

struct TrivialGroup : GroupError {
    TrivialGroup() : GroupError("operation undefined on the trivial group") {}
};

struct BadParameters : GroupError {
    using GroupError::GroupError;
};

struct HypothesesNotMet : GroupError {
    std::vector<std::string> missing;
    explicit HypothesesNotMet(std::vector<std::string> m)
        : GroupError(join(m)), missing(std::move(m)) {}

private:
    static std::string join(const std::vector<std::string>& m) {
        std::string s = "hypotheses not met:";
        for (const auto& x : m) s += " [" + x + "]";
        return s;
    }
};

struct SearchBudgetExceeded : GroupError {
    SearchBudgetExceeded() : GroupError("isomorphism search budget exceeded") {}
};

struct ParseError : GroupError {
    int line;
    std::string reason;
    ParseError(int line_, std::string reason_)
        : GroupError("parse error at line " + std::to_string(line_) + ": " + reason_),
          line(line_), reason(std::move(reason_)) {}
};

struct UnknownRow : GroupError {
    explicit UnknownRow(const std::string& id) : GroupError("unknown witness row id: " + id) {}
};

}  // namespace grouplib
