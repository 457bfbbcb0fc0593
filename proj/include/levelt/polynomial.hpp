#pragma once

#include <string>
#include <vector>

#include "levelt/cyclotomic.hpp"

namespace levelt {

// Dense univariate polynomial over cyclotomic scalars, ascending powers.
// The zero polynomial is the single coefficient 0.
class Polynomial {
public:
    Polynomial() : c_{Scalar(0)} {}
    explicit Polynomial(std::vector<Scalar> coeffs);

    static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
    static Polynomial x_power(std::size_t k); // X^k

    const std::vector<Scalar>& coeffs() const { return c_; }
    std::size_t degree() const { return c_.size() - 1; } // zero poly reports 0
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    bool is_monic() const { return c_.back().is_one(); }
    const Scalar& leading() const { return c_.back(); }
    const Scalar& constant_term() const { return c_[0]; }
    const Scalar& operator[](std::size_t k) const { return c_[k]; }

    Scalar eval(const Scalar& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial make_monic() const; // divide by leading coefficient

    // Human-readable form like "X^2 + 2*X + 1".
    std::string str() const;

private:
    std::vector<Scalar> c_;
};

// Quotient/remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) is 0. Coefficients stay inside the cyclotomic field.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Multiset of prescribed eigenvalues for one tuple member.
struct SpectrumSpec {
    std::vector<Scalar> values;

    std::size_t size() const { return values.size(); }
    std::vector<Scalar> sorted() const;
};

bool operator==(const SpectrumSpec& a, const SpectrumSpec& b);

// Monic polynomial with exactly the given root multiset. Every root must be
// nonzero (the spectra live in the multiplicative group).
Polynomial poly_from_roots(const SpectrumSpec& spec);

// Phi_N as a Polynomial over Scalar.
Polynomial cyclotomic_polynomial(unsigned long n);

} // namespace levelt
