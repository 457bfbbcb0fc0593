#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "levelt/rational.hpp"

namespace levelt {

// Element of a cyclotomic field Q(zeta_N), stored in the power basis
// {zeta^0, ..., zeta^(phi(N)-1)} with coefficients reduced modulo the N-th
// cyclotomic polynomial. Every value is kept at its minimal conductor, so
// equality is plain field-wise comparison. N = 1 means a plain rational.
//
// All operations are exact and pure; values are immutable after
// construction and safe to share across threads.
class Scalar {
public:
    Scalar() : conductor_(1), coeffs_{Rational(0)} {}
    Scalar(const Rational& r) : conductor_(1), coeffs_{r} {} // NOLINT: implicit embed of Q
    Scalar(long n) : conductor_(1), coeffs_{Rational(n)} {}  // NOLINT

    // Builds Sum coeffs[k] * zeta_N^k and canonicalizes; coeffs must have
    // exactly phi(N) entries.
    static Scalar from_parts(unsigned long conductor, std::vector<Rational> coeffs);

    unsigned long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1; }
    Rational rational_value() const; // throws unless is_rational()

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o); // throws errc::arithmetic on zero divisor

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const; // throws errc::arithmetic on zero

    // Human-readable form, e.g. "1/2 - z8^3".
    std::string str() const;

private:
    unsigned long conductor_;
    std::vector<Rational> coeffs_;

    void canonicalize();
    friend std::vector<Rational> lift_coeffs(const Scalar& x, unsigned long target);
};

unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// Dense coefficient vector (ascending powers) of the N-th cyclotomic
// polynomial Phi_N; integer-valued, degree phi(N). Throws on N = 0.
std::vector<Rational> cyclotomic_coeffs(unsigned long n);

// zeta_q^p for e = p/q, i.e. exp(2*pi*i*e); periodic in e with period 1.
Scalar root_of_unity(const Rational& e);

// Deterministic total order used to pick canonical witnesses and to sort
// spectra in reports: by conductor, then lexicographically on coefficients.
bool scalar_less(const Scalar& a, const Scalar& b);

} // namespace levelt
