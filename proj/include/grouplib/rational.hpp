#pragma once

#include <gmpxx.h>

#include <string>

#include "grouplib/errors.hpp"

namespace grouplib {

// Exact fraction of arbitrary-precision integers, always reduced, denominator > 0.
// Every Pr value in the library is one of these; there is no floating point anywhere.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long num) : q_(num) {}  // NOLINT: implicit on purpose
    Rational(long num, long den) { init(mpz_class(num), mpz_class(den)); }
    Rational(const mpz_class& num, const mpz_class& den) { init(num, den); }

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }

    Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.q_ == 0) throw BadParameters("division by zero rational");
        return Rational(q_ / o.q_);
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    // Serializes as `num/den` in lowest terms, `n` when the denominator is 1.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    void init(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw BadParameters("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    mpq_class q_;
};

inline mpz_class pow_z(long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

}  // namespace grouplib
