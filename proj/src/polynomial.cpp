#include "levelt/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "levelt/error.hpp"

namespace levelt {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Scalar(0));
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::x_power(std::size_t k) {
    std::vector<Scalar> c(k + 1, Scalar(0));
    c[k] = Scalar(1);
    return Polynomial(std::move(c));
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> c = c_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::make_monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    Scalar inv = c_.back().inverse();
    std::vector<Scalar> c = c_;
    for (auto& v : c) v = v * inv;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error(errc::arithmetic, "polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs();
    const std::size_t db = b.degree();
    if (a.degree() < db || a.is_zero()) return {Polynomial(), Polynomial(rem)};
    std::vector<Scalar> quot(a.degree() - db + 1, Scalar(0));
    Scalar lead_inv = b.leading().inverse();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const Scalar& top = rem[db + shift];
        if (top.is_zero()) continue;
        Scalar f = top * lead_inv;
        quot[shift] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= f * b[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

std::vector<Scalar> SpectrumSpec::sorted() const {
    std::vector<Scalar> v = values;
    std::sort(v.begin(), v.end(), scalar_less);
    return v;
}

bool operator==(const SpectrumSpec& a, const SpectrumSpec& b) {
    return a.sorted() == b.sorted();
}

Polynomial poly_from_roots(const SpectrumSpec& spec) {
    if (spec.values.empty()) throw error(errc::precondition, "empty spectrum");
    Polynomial p = Polynomial::constant(Scalar(1));
    for (const Scalar& root : spec.values) {
        if (root.is_zero())
            throw error(errc::precondition, "spectrum contains 0, which is not invertible");
        p = p * Polynomial({-root, Scalar(1)});
    }
    return p;
}

Polynomial cyclotomic_polynomial(unsigned long n) {
    std::vector<Rational> raw = cyclotomic_coeffs(n);
    std::vector<Scalar> c;
    c.reserve(raw.size());
    for (const auto& r : raw) c.emplace_back(r);
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero() && !(first && k == 0)) continue;
        if (!first) os << " + ";
        first = false;
        bool needs_coeff = (k == 0) || !c_[k].is_one();
        if (needs_coeff) {
            std::string cs = c_[k].str();
            bool composite = cs.find(' ') != std::string::npos;
            os << (composite ? "(" + cs + ")" : cs);
            if (k > 0) os << "*";
        }
        if (k > 0) {
            os << "X";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace levelt
