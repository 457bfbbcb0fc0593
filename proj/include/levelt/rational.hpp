#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "levelt/error.hpp"

namespace levelt {

// Arbitrary-precision rational, kept in canonical form (denominator > 0,
// gcd(|num|, den) = 1). Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) {
        if (d == 0) throw error(errc::arithmetic, "rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}

    // Accepts "p", "p/q", optional sign; rejects everything else.
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Shortest form: "3" rather than "3/1".
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error(errc::arithmetic, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw error(errc::arithmetic, "rational division by zero");
        return Rational(mpq_class(1 / q_));
    }

    // Representative of the fractional part in [0, 1): x - floor(x).
    Rational fractional_part() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw error(errc::parse, "empty rational literal");
    for (char c : s) {
        if (c != '-' && c != '/' && (c < '0' || c > '9'))
            throw error(errc::parse, "bad rational literal: '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw error(errc::parse, "bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw error(errc::parse, "zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

inline Rational Rational::fractional_part() const {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return *this - Rational(fl);
}

} // namespace levelt
