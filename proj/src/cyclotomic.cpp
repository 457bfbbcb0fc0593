#include "levelt/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace levelt {

namespace {

// Conductors beyond this are outside the design envelope; mixing many
// coprime conductors in one expression is the only way to get here.
constexpr unsigned long kMaxConductor = 6000;

using Poly = std::vector<Rational>; // dense, ascending powers

std::size_t degree(const Poly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1].is_zero()) --d;
    return d == 0 ? 0 : d - 1;
}

void trim(Poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool is_zero_poly(const Poly& p) {
    for (const auto& c : p) {
        if (!c.is_zero()) return false;
    }
    return true;
}

// Remainder of a modulo b.
Poly poly_rem(Poly a, const Poly& b) {
    const std::size_t db = degree(b);
    trim(a);
    while (!is_zero_poly(a) && degree(a) >= db) {
        const std::size_t da = degree(a);
        Rational f = a[da] / b[db];
        for (std::size_t j = 0; j <= db; ++j) a[da - db + j] -= f * b[j];
        trim(a);
    }
    return a;
}

// Exact quotient a / b; remainder must vanish.
Poly poly_exact_div(const Poly& a, const Poly& b) {
    if (is_zero_poly(a)) return Poly{Rational(0)};
    Poly rem = a;
    const std::size_t db = degree(b);
    const std::size_t da = degree(a);
    if (da < db) throw error(errc::internal, "cyclotomic exact division by higher degree");
    Poly q(da >= db ? da - db + 1 : 1, Rational(0));
    for (std::size_t shift = da - db + 1; shift-- > 0;) {
        std::size_t top = db + shift;
        if (rem.size() <= top) continue;
        if (rem[top].is_zero()) continue;
        Rational f = rem[top] / b[db];
        q[shift] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= f * b[j];
    }
    trim(rem);
    if (!(rem.size() == 1 && rem[0].is_zero()))
        throw error(errc::internal, "cyclotomic exact division left a remainder");
    trim(q);
    return q;
}

} // namespace

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw error(errc::precondition, "euler_phi(0) is undefined");
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Rational> cyclotomic_coeffs(unsigned long n) {
    if (n == 0) throw error(errc::precondition, "cyclotomic polynomial of index 0");
    static std::map<unsigned long, Poly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // (X^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (unsigned long d : divisors(n)) {
        if (d == n) continue;
        num = poly_exact_div(num, cyclotomic_coeffs(d));
    }
    if (degree(num) != euler_phi(n))
        throw error(errc::internal, "cyclotomic polynomial has wrong degree");
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, num);
    return num;
}

namespace {

// Reduces a dense polynomial in zeta_N to the power basis (length phi(N)).
std::vector<Rational> reduce_mod_cyclotomic(Poly a, unsigned long n) {
    const std::size_t phi = euler_phi(n);
    if (degree(a) >= phi || a.size() > phi) a = poly_rem(std::move(a), cyclotomic_coeffs(n));
    a.resize(phi, Rational(0));
    return a;
}

// Coefficients of x's image in the power basis of Q(zeta_target); the
// source conductor must divide target.
std::vector<Rational> lift_raw(unsigned long src, const std::vector<Rational>& coeffs,
                               unsigned long target) {
    if (src == target) return coeffs;
    const unsigned long step = target / src;
    Poly dense(target, Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) dense[k * step] += coeffs[k];
    }
    return reduce_mod_cyclotomic(std::move(dense), target);
}

// Solves L * c = x over Q, where L is column-major (phi_n x width).
// Returns true and fills c on consistency.
bool solve_exact(std::vector<std::vector<Rational>> cols, std::vector<Rational> x,
                 std::vector<Rational>& out) {
    const std::size_t height = x.size();
    const std::size_t width = cols.size();
    // Augmented elimination, first-nonzero pivoting.
    std::vector<std::size_t> pivot_of_col(width, height);
    std::size_t row = 0;
    for (std::size_t col = 0; col < width && row < height; ++col) {
        std::size_t pr = height;
        for (std::size_t r = row; r < height; ++r) {
            if (!cols[col][r].is_zero()) { pr = r; break; }
        }
        if (pr == height) continue;
        for (std::size_t c2 = 0; c2 < width; ++c2) std::swap(cols[c2][pr], cols[c2][row]);
        std::swap(x[pr], x[row]);
        Rational inv = cols[col][row].inverse();
        for (std::size_t c2 = 0; c2 < width; ++c2) cols[c2][row] *= inv;
        x[row] *= inv;
        for (std::size_t r = 0; r < height; ++r) {
            if (r == row || cols[col][r].is_zero()) continue;
            Rational f = cols[col][r];
            for (std::size_t c2 = 0; c2 < width; ++c2) cols[c2][r] -= f * cols[c2][row];
            x[r] -= f * x[row];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < height; ++r) {
        if (!x[r].is_zero()) return false; // inconsistent
    }
    out.assign(width, Rational(0));
    for (std::size_t col = 0; col < width; ++col) {
        if (pivot_of_col[col] < height) out[col] = x[pivot_of_col[col]];
    }
    return true;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

std::vector<Rational> lift_coeffs(const Scalar& x, unsigned long target) {
    return lift_raw(x.conductor_, x.coeffs_, target);
}

void Scalar::canonicalize() {
    // Fast path: all higher coefficients zero means the value is rational.
    bool rational = true;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) { rational = false; break; }
    }
    if (rational) {
        coeffs_.resize(1);
        conductor_ = 1;
        return;
    }
    // Greedy descent: peel one prime at a time while the value stays
    // expressible; stops at the minimal conductor dividing the current one.
    bool descended = true;
    while (descended && conductor_ > 1) {
        descended = false;
        for (unsigned long p : prime_factors(conductor_)) {
            unsigned long smaller = conductor_ / p;
            if (smaller == 1) continue; // rational case handled by fast path
            const std::size_t phi_small = euler_phi(smaller);
            std::vector<std::vector<Rational>> basis_images(phi_small);
            for (std::size_t j = 0; j < phi_small; ++j) {
                Poly e(j + 1, Rational(0));
                e[j] = Rational(1);
                basis_images[j] = lift_raw(smaller, reduce_mod_cyclotomic(e, smaller), conductor_);
            }
            std::vector<Rational> sol;
            if (solve_exact(std::move(basis_images), coeffs_, sol)) {
                conductor_ = smaller;
                coeffs_ = std::move(sol);
                descended = true;
                break;
            }
        }
    }
}

Scalar Scalar::from_parts(unsigned long conductor, std::vector<Rational> coeffs) {
    if (conductor == 0) throw error(errc::precondition, "conductor must be positive");
    if (coeffs.size() != euler_phi(conductor))
        throw error(errc::parse, "scalar needs exactly phi(N) coefficients");
    Scalar s;
    s.conductor_ = conductor;
    s.coeffs_ = std::move(coeffs);
    s.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return conductor_ == 1 && coeffs_[0].is_zero();
}

bool Scalar::is_one() const {
    return conductor_ == 1 && coeffs_[0] == Rational(1);
}

Rational Scalar::rational_value() const {
    if (conductor_ != 1) throw error(errc::precondition, "scalar is not rational: " + str());
    return coeffs_[0];
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

unsigned long checked_lcm(unsigned long a, unsigned long b) {
    unsigned long l = std::lcm(a, b);
    if (l > kMaxConductor)
        throw error(errc::arithmetic,
                    "conductor " + std::to_string(l) + " exceeds the supported bound");
    return l;
}

} // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    unsigned long target = checked_lcm(conductor_, o.conductor_);
    std::vector<Rational> a = lift_raw(conductor_, coeffs_, target);
    std::vector<Rational> b = lift_raw(o.conductor_, o.coeffs_, target);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    conductor_ = target;
    coeffs_ = std::move(a);
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    unsigned long target = checked_lcm(conductor_, o.conductor_);
    std::vector<Rational> a = lift_raw(conductor_, coeffs_, target);
    std::vector<Rational> b = lift_raw(o.conductor_, o.coeffs_, target);
    Poly prod(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    conductor_ = target;
    coeffs_ = reduce_mod_cyclotomic(std::move(prod), target);
    canonicalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error(errc::arithmetic, "scalar division by zero");
    if (conductor_ == 1) return Scalar(coeffs_[0].inverse());
    // Extended Euclid of the representative against Phi_N; the cyclotomic
    // polynomial is irreducible over Q, so the gcd is a nonzero constant.
    Poly r0 = cyclotomic_coeffs(conductor_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)}; // coefficients of the representative
    while (!(r1.size() == 1 && r1[0].is_zero())) {
        // quotient of r0 by r1
        Poly rem = r0;
        const std::size_t d1 = degree(r1);
        Poly q(degree(r0) >= d1 ? degree(r0) - d1 + 1 : 1, Rational(0));
        for (std::size_t shift = q.size(); shift-- > 0;) {
            std::size_t top = d1 + shift;
            if (rem.size() <= top || rem[top].is_zero()) continue;
            Rational f = rem[top] / r1[d1];
            q[shift] = f;
            for (std::size_t j = 0; j <= d1; ++j) rem[shift + j] -= f * r1[j];
        }
        trim(rem);
        // s_next = s0 - q * s1
        Poly qs(q.size() + s1.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        Poly s_next(std::max(s0.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s_next[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s_next[i] -= qs[i];
        trim(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (degree(r0) != 0)
        throw error(errc::internal, "cyclotomic inverse: nonconstant gcd with Phi_N");
    Rational scale = r0[0].inverse();
    for (auto& c : s0) c *= scale;
    Scalar out;
    out.conductor_ = conductor_;
    out.coeffs_ = reduce_mod_cyclotomic(std::move(s0), conductor_);
    out.canonicalize();
    return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar root_of_unity(const Rational& e) {
    Rational frac = e.fractional_part(); // p/q with 0 <= p < q
    unsigned long q = frac.den().get_ui();
    unsigned long p = frac.num().get_ui();
    if (q > kMaxConductor)
        throw error(errc::arithmetic, "root of unity order exceeds the supported bound");
    Poly dense(p + 1, Rational(0));
    dense[p] = Rational(1);
    return Scalar::from_parts(q, reduce_mod_cyclotomic(std::move(dense), q));
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t k = 0; k < ca.size(); ++k) {
        if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
    return false;
}

std::string Scalar::str() const {
    if (conductor_ == 1) return coeffs_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (!first) {
            os << (cs[0] == '-' ? " - " : " + ");
            if (cs[0] == '-') cs = cs.substr(1);
        }
        first = false;
        if (k == 0) {
            os << cs;
        } else {
            if (cs == "1") {
                // coefficient 1 omitted
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << cs << "*";
            }
            os << "z" << conductor_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace levelt
