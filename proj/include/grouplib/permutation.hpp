#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "grouplib/errors.hpp"

namespace grouplib {

// A bijection on points 0..degree-1, the input encoding for generators.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
        validate();
    }

    static Permutation identity(int degree) {
        std::vector<int> v(degree);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int p) const { return images[p]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images[i] != i) return false;
        return true;
    }

    // (a.compose(b))(x) = a(b(x))
    Permutation compose(const Permutation& b) const {
        if (degree() != b.degree()) throw BadParameter("permutation degree mismatch");
        std::vector<int> v(images.size());
        for (int i = 0; i < degree(); ++i) v[i] = images[b.images[i]];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(images.size());
        for (int i = 0; i < degree(); ++i) v[images[i]] = i;
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation& o) const { return images == o.images; }
    bool operator<(const Permutation& o) const { return images < o.images; }

    // Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
    std::string to_cycles() const {
        std::ostringstream out;
        std::vector<bool> seen(images.size(), false);
        bool any = false;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i] || images[i] == i) continue;
            any = true;
            out << '(' << i;
            seen[i] = true;
            for (int j = images[i]; j != i; j = images[j]) {
                out << ' ' << j;
                seen[j] = true;
            }
            out << ')';
        }
        if (!any) out << "()";
        return out.str();
    }

    static Permutation parse_cycles(const std::string& text, int degree, int line_for_errors = 0) {
        std::vector<int> v(degree);
        std::iota(v.begin(), v.end(), 0);
        size_t pos = 0;
        auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
        skip_ws();
        while (pos < text.size()) {
            if (text[pos] != '(')
                throw ParseError(line_for_errors, "expected '(' in cycle notation");
            ++pos;
            std::vector<int> cycle;
            skip_ws();
            while (pos < text.size() && text[pos] != ')') {
                size_t end;
                int p;
                try {
                    p = std::stoi(text.substr(pos), &end);
                } catch (const std::exception&) {
                    throw ParseError(line_for_errors, "bad point in cycle notation");
                }
                if (p < 0 || p >= degree)
                    throw ParseError(line_for_errors, "point out of range: " + std::to_string(p));
                cycle.push_back(p);
                pos += end;
                skip_ws();
            }
            if (pos == text.size()) throw ParseError(line_for_errors, "unterminated cycle");
            ++pos;  // ')'
            for (size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
                if (v[from] != from)
                    throw ParseError(line_for_errors, "point repeated across cycles: " + std::to_string(from));
                v[from] = to;
            }
            skip_ws();
        }
        return Permutation(std::move(v));
    }

private:
    void validate() const {
        std::vector<bool> hit(images.size(), false);
        for (int x : images) {
            if (x < 0 || x >= degree() || hit[x])
                throw BadParameter("permutation images are not a bijection");
            hit[x] = true;
        }
    }
};

}  // namespace grouplib
