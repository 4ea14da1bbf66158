#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "grouplib/errors.hpp"
#include "grouplib/group.hpp"
#include "grouplib/permutation.hpp"

namespace grouplib {

// Group text file format:
//   cayley <n>        followed by n lines of n space-separated indices
//   perm <degree> <k> followed by k lines of cycle notation, e.g. (0 1 2)(3 4)
// '#' begins a comment line; blank lines are ignored.

namespace detail {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next effective (non-blank, non-comment) line; false at eof
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            size_t i = raw.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (raw[i] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

}  // namespace detail

inline FiniteGroup read_group(std::istream& in, bool strict = false) {
    detail::LineReader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError(r.line_no, "empty file");
    std::istringstream head(line);
    std::string kind;
    head >> kind;
    if (kind == "cayley") {
        long n = -1;
        if (!(head >> n) || n < 1) throw ParseError(r.line_no, "bad order in cayley header");
        if (n > kDefaultOrderCap) throw ParseError(r.line_no, "order exceeds cap");
        std::string extra;
        if (head >> extra) throw ParseError(r.line_no, "trailing tokens in header");
        std::vector<std::vector<int>> table;
        for (long i = 0; i < n; ++i) {
            if (!r.next(line)) throw ParseError(r.line_no, "unexpected end of table");
            std::istringstream row(line);
            std::vector<int> vals;
            long v;
            while (row >> v) {
                if (v < 0 || v >= n)
                    throw ParseError(r.line_no, "index out of range: " + std::to_string(v));
                vals.push_back(static_cast<int>(v));
            }
            if (!row.eof()) throw ParseError(r.line_no, "non-numeric token in table row");
            if (static_cast<long>(vals.size()) != n)
                throw ParseError(r.line_no, "row has " + std::to_string(vals.size()) +
                                                " entries, expected " + std::to_string(n));
            table.push_back(std::move(vals));
        }
        if (r.next(line)) throw ParseError(r.line_no, "trailing content after table");
        return FiniteGroup::from_cayley_table(table, strict);
    }
    if (kind == "perm") {
        long degree = -1, k = -1;
        if (!(head >> degree >> k) || degree < 1 || k < 1)
            throw ParseError(r.line_no, "bad perm header");
        std::vector<Permutation> gens;
        for (long i = 0; i < k; ++i) {
            if (!r.next(line)) throw ParseError(r.line_no, "unexpected end of generator list");
            gens.push_back(Permutation::parse_cycles(line, static_cast<int>(degree), r.line_no));
        }
        if (r.next(line)) throw ParseError(r.line_no, "trailing content after generators");
        return FiniteGroup::from_permutations(gens);
    }
    throw ParseError(r.line_no, "unknown header '" + kind + "' (expected cayley or perm)");
}

inline FiniteGroup ingest(const std::string& path, bool strict = false) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_group(in, strict);
}

// Always writes the canonical cayley form; ingest(export(G)) is table-identical.
inline void write_group(std::ostream& out, const FiniteGroup& g) {
    out << "cayley " << g.order() << "\n";
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.product(i, j);
        out << "\n";
    }
}

inline void export_group(const FiniteGroup& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open " + path + " for writing");
    write_group(out, g);
}

}  // namespace grouplib
