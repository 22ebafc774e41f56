#include "cliffex/axial.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffex {

BivariatePoly BivariatePoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(const Rational& c, int x0_degree, int r_degree) {
    BivariatePoly out;
    out.add_term(c, x0_degree, r_degree);
    return out;
}

Rational BivariatePoly::coefficient(int x0_degree, int r_degree) const {
    const auto it = terms_.find({x0_degree, r_degree});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Rational& c, int x0_degree, int r_degree) {
    if (x0_degree < 0 || r_degree < 0) {
        throw std::invalid_argument("BivariatePoly: negative exponent");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace({x0_degree, r_degree}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool BivariatePoly::all_r_degrees_even() const {
    for (const auto& [exps, c] : terms_) {
        if (exps.second % 2 != 0) {
            return false;
        }
    }
    return true;
}

bool BivariatePoly::all_r_degrees_odd() const {
    for (const auto& [exps, c] : terms_) {
        if (exps.second % 2 == 0) {
            return false;
        }
    }
    return true;
}

BivariatePoly BivariatePoly::d_x0() const {
    BivariatePoly out;
    for (const auto& [exps, c] : terms_) {
        if (exps.first > 0) {
            out.add_term(c * Rational(exps.first), exps.first - 1, exps.second);
        }
    }
    return out;
}

BivariatePoly BivariatePoly::d_r() const {
    BivariatePoly out;
    for (const auto& [exps, c] : terms_) {
        if (exps.second > 0) {
            out.add_term(c * Rational(exps.second), exps.first, exps.second - 1);
        }
    }
    return out;
}

BivariatePoly BivariatePoly::shift_r(int shift) const {
    BivariatePoly out;
    for (const auto& [exps, c] : terms_) {
        if (exps.second + shift < 0) {
            throw std::domain_error("BivariatePoly: division by r leaves a negative power");
        }
        out.add_term(c, exps.first, exps.second + shift);
    }
    return out;
}

BivariatePoly BivariatePoly::at_x0_zero() const {
    BivariatePoly out;
    for (const auto& [exps, c] : terms_) {
        if (exps.first == 0) {
            out.add_term(c, 0, exps.second);
        }
    }
    return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    for (const auto& [exps, c] : rhs.terms_) {
        add_term(c, exps.first, exps.second);
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
    for (const auto& [exps, c] : rhs.terms_) {
        add_term(-c, exps.first, exps.second);
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, c] : terms_) {
        c *= s;
    }
    return *this;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    BivariatePoly out;
    for (const auto& [le, lc] : lhs.terms_) {
        for (const auto& [re, rc] : rhs.terms_) {
            out.add_term(lc * rc, le.first + re.first, le.second + re.second);
        }
    }
    return out;
}

namespace {

std::string power_text(const std::string& var, int degree) {
    if (degree == 0) {
        return {};
    }
    return degree == 1 ? var : var + "^" + std::to_string(degree);
}

// Appends "c x0^i r^j [suffix]" with sign handling; unit coefficients are elided.
void append_term(std::string& out, const Rational& c, const std::vector<std::string>& factors) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = c.abs();
    if (out.empty()) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    std::string body;
    if (magnitude != Rational(1) || factors.empty()) {
        body = magnitude.str();
    }
    for (const auto& f : factors) {
        if (!body.empty()) {
            body += ' ';
        }
        body += f;
    }
    out += body;
}

std::vector<std::string> factor_list(const Exponents& exps, const std::string& first, const std::string& second) {
    std::vector<std::string> factors;
    if (auto p = power_text(first, exps.first); !p.empty()) {
        factors.push_back(std::move(p));
    }
    if (auto p = power_text(second, exps.second); !p.empty()) {
        factors.push_back(std::move(p));
    }
    return factors;
}

}  // namespace

std::string to_string(const BivariatePoly& p, const std::string& first, const std::string& second) {
    std::string out;
    for (const auto& [exps, c] : p.terms()) {
        append_term(out, c, factor_list(exps, first, second));
    }
    return out.empty() ? "0" : out;
}

AxialPolynomial::AxialPolynomial(int n) : n_(n) { check_dimension(n); }

AxialPolynomial::AxialPolynomial(int n, BivariatePoly scalar_part, BivariatePoly omega_part)
    : n_(n), a_(std::move(scalar_part)), b_(std::move(omega_part)) {
    check_dimension(n);
    if (!a_.all_r_degrees_even()) {
        throw std::invalid_argument("AxialPolynomial: scalar part must be even in r");
    }
    if (!b_.all_r_degrees_odd()) {
        throw std::invalid_argument("AxialPolynomial: omega part must be odd in r");
    }
}

void AxialPolynomial::require_same_dimension(const AxialPolynomial& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("AxialPolynomial dimension mismatch");
    }
}

AxialPolynomial AxialPolynomial::d_x0() const { return AxialPolynomial(n_, a_.d_x0(), b_.d_x0()); }

AxialPolynomial AxialPolynomial::at_x0_zero() const {
    return AxialPolynomial(n_, a_.at_x0_zero(), b_.at_x0_zero());
}

AxialPolynomial& AxialPolynomial::operator+=(const AxialPolynomial& rhs) {
    require_same_dimension(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

AxialPolynomial& AxialPolynomial::operator-=(const AxialPolynomial& rhs) {
    require_same_dimension(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

AxialPolynomial& AxialPolynomial::operator*=(const Rational& s) {
    a_ *= s;
    b_ *= s;
    return *this;
}

std::string to_string(const AxialPolynomial& p) {
    // A and B never share an exponent pair (parity), so one merged map orders everything.
    std::map<Exponents, std::pair<Rational, bool>, std::greater<>> merged;
    for (const auto& [exps, c] : p.scalar_part().terms()) {
        merged.emplace(exps, std::make_pair(c, false));
    }
    for (const auto& [exps, c] : p.omega_part().terms()) {
        merged.emplace(exps, std::make_pair(c, true));
    }
    std::string out;
    for (const auto& [exps, entry] : merged) {
        auto factors = factor_list(exps, "x0", "r");
        if (entry.second) {
            factors.emplace_back("w");
        }
        append_term(out, entry.first, factors);
    }
    return out.empty() ? "0" : out;
}

BivariatePoly radial_lower_even(const BivariatePoly& p) {
    if (!p.all_r_degrees_even()) {
        throw std::invalid_argument("radial_lower_even: odd r-degree present");
    }
    BivariatePoly out;
    for (const auto& [exps, c] : p.terms()) {
        if (exps.second > 0) {
            out.add_term(c * Rational(exps.second), exps.first, exps.second - 2);
        }
    }
    return out;
}

BivariatePoly radial_lower_odd(const BivariatePoly& p) {
    if (!p.all_r_degrees_odd()) {
        throw std::invalid_argument("radial_lower_odd: even r-degree present");
    }
    BivariatePoly out;
    for (const auto& [exps, c] : p.terms()) {
        if (exps.second > 1) {
            out.add_term(c * Rational(exps.second - 1), exps.first, exps.second - 2);
        }
    }
    return out;
}

AxialPolynomial apply_radial_powers(const BivariatePoly& u, const BivariatePoly& v, int n) {
    if (n <= 1 || n % 2 == 0) {
        throw std::invalid_argument("n must be odd (> 1)");
    }
    BivariatePoly a = u;
    BivariatePoly b = v;
    for (int step = 0; step < (n - 1) / 2; ++step) {
        a = radial_lower_even(a);
        b = radial_lower_odd(b);
    }
    return AxialPolynomial(n, std::move(a), std::move(b));
}

std::pair<BivariatePoly, BivariatePoly> vekua_residual(const AxialPolynomial& f) {
    const auto& a = f.scalar_part();
    const auto& b = f.omega_part();
    if (!a.all_r_degrees_even() || !b.all_r_degrees_odd()) {
        throw std::invalid_argument("vekua_residual: parity violation");
    }
    // With B = r C: dB/dr + (n-1) B/r = r^-1 (j + n - 1) r^j summed termwise, exact since j >= 1.
    BivariatePoly radial;
    for (const auto& [exps, c] : b.terms()) {
        radial.add_term(c * Rational(exps.second + f.dimension() - 1), exps.first, exps.second - 1);
    }
    return {a.d_x0() - radial, b.d_x0() + a.d_r()};
}

Multivector<Rational> evaluate(const AxialPolynomial& f, const Paravector<Rational>& x) {
    if (x.dimension() != f.dimension()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    const Rational r_sq = x.vector_norm_sq();
    auto in_r_sq = [&](const BivariatePoly& p, int r_offset) {
        Rational out(0);
        for (const auto& [exps, c] : p.terms()) {
            out += c * x.x0.pow(exps.first) * r_sq.pow((exps.second - r_offset) / 2);
        }
        return out;
    };
    const Rational scalar = in_r_sq(f.scalar_part(), 0);
    const Rational along_x = in_r_sq(f.omega_part(), 1);

    auto out = Multivector<Rational>::scalar(f.dimension(), scalar);
    for (int i = 0; i < f.dimension(); ++i) {
        out[BladeMask{1} << i] = along_x * x.vec[static_cast<std::size_t>(i)];
    }
    return out;
}

Multivector<double> evaluate(const AxialPolynomial& f, const Paravector<double>& x) {
    if (x.dimension() != f.dimension()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    const double r = std::sqrt(x.vector_norm_sq());
    auto out = Multivector<double>::scalar(f.dimension(), f.scalar_part().evaluate(x.x0, r));
    if (r == 0.0) {
        return out;
    }
    const double b = f.omega_part().evaluate(x.x0, r);
    const auto unit = omega(x.vec).unit();
    for (int i = 0; i < f.dimension(); ++i) {
        out[BladeMask{1} << i] = b * unit.vec[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace cliffex
