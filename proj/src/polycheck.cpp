#include "cliffex/polycheck.hpp"

#include <stdexcept>

namespace cliffex {

CliffordPolynomial::CliffordPolynomial(int n) : n_(n) { check_dimension(n); }

CliffordPolynomial CliffordPolynomial::constant(int n, const Multivector<Rational>& c) {
    CliffordPolynomial out(n);
    out.add_term(MultiExponent(static_cast<std::size_t>(n) + 1, 0), c);
    return out;
}

CliffordPolynomial CliffordPolynomial::coordinate(int n, int i) {
    if (i < 0 || i > n) {
        throw std::out_of_range("coordinate index out of range");
    }
    CliffordPolynomial out(n);
    MultiExponent e(static_cast<std::size_t>(n) + 1, 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.add_term(e, Multivector<Rational>::scalar(n, 1));
    return out;
}

void CliffordPolynomial::add_term(const MultiExponent& exponents, const Multivector<Rational>& c) {
    if (exponents.size() != static_cast<std::size_t>(n_) + 1) {
        throw std::invalid_argument("CliffordPolynomial: exponent vector has wrong length");
    }
    if (c.dimension() != n_) {
        throw std::invalid_argument("CliffordPolynomial: coefficient dimension mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

CliffordPolynomial CliffordPolynomial::derivative(int i) const {
    if (i < 0 || i > n_) {
        throw std::out_of_range("derivative index out of range");
    }
    const auto idx = static_cast<std::size_t>(i);
    CliffordPolynomial out(n_);
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] == 0) {
            continue;
        }
        MultiExponent lowered = exps;
        --lowered[idx];
        out.add_term(lowered, c * Rational(exps[idx]));
    }
    return out;
}

CliffordPolynomial CliffordPolynomial::left_multiply(const Multivector<Rational>& m) const {
    CliffordPolynomial out(n_);
    for (const auto& [exps, c] : terms_) {
        out.add_term(exps, geometric_product(m, c));
    }
    return out;
}

Multivector<Rational> CliffordPolynomial::evaluate(const Paravector<Rational>& x) const {
    if (x.dimension() != n_) {
        throw std::invalid_argument("CliffordPolynomial::evaluate: dimension mismatch");
    }
    Multivector<Rational> out(n_);
    for (const auto& [exps, c] : terms_) {
        Rational monomial = x.x0.pow(exps[0]);
        for (int i = 1; i <= n_; ++i) {
            monomial *= x.vec[static_cast<std::size_t>(i - 1)].pow(exps[static_cast<std::size_t>(i)]);
        }
        out += c * monomial;
    }
    return out;
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& rhs) {
    if (rhs.n_ != n_) {
        throw std::invalid_argument("CliffordPolynomial dimension mismatch");
    }
    for (const auto& [exps, c] : rhs.terms_) {
        add_term(exps, c);
    }
    return *this;
}

CliffordPolynomial& CliffordPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, c] : terms_) {
        c *= s;
    }
    return *this;
}

CliffordPolynomial operator*(const CliffordPolynomial& lhs, const CliffordPolynomial& rhs) {
    if (lhs.n_ != rhs.n_) {
        throw std::invalid_argument("CliffordPolynomial dimension mismatch");
    }
    CliffordPolynomial out(lhs.n_);
    for (const auto& [le, lc] : lhs.terms_) {
        for (const auto& [re, rc] : rhs.terms_) {
            MultiExponent e = le;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += re[i];
            }
            out.add_term(e, geometric_product(lc, rc));
        }
    }
    return out;
}

std::string to_string(const CliffordPolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exps, c] = *it;
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(c) + ")";
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) {
                out += " x" + std::to_string(i);
                if (exps[i] > 1) {
                    out += "^" + std::to_string(exps[i]);
                }
            }
        }
    }
    return out;
}

namespace {

CliffordPolynomial power(const CliffordPolynomial& base, int exponent) {
    auto out = CliffordPolynomial::constant(base.dimension(), Multivector<Rational>::scalar(base.dimension(), 1));
    for (int i = 0; i < exponent; ++i) {
        out = out * base;
    }
    return out;
}

}  // namespace

CliffordPolynomial from_axial(const AxialPolynomial& f) {
    const auto& a = f.scalar_part();
    const auto& b = f.omega_part();
    if (!a.all_r_degrees_even() || !b.all_r_degrees_odd()) {
        throw std::invalid_argument("from_axial: parity violation");
    }
    const int n = f.dimension();

    CliffordPolynomial r_sq(n);
    CliffordPolynomial vector_part(n);
    for (int i = 1; i <= n; ++i) {
        const auto xi = CliffordPolynomial::coordinate(n, i);
        r_sq += xi * xi;
        vector_part += CliffordPolynomial::constant(n, Multivector<Rational>::generator(n, i)) * xi;
    }

    // Cache powers of |x|^2 and x0 shared across terms.
    std::map<int, CliffordPolynomial> r_sq_powers;
    auto r_sq_power = [&](int e) -> const CliffordPolynomial& {
        auto it = r_sq_powers.find(e);
        if (it == r_sq_powers.end()) {
            it = r_sq_powers.emplace(e, power(r_sq, e)).first;
        }
        return it->second;
    };
    const auto x0 = CliffordPolynomial::coordinate(n, 0);

    CliffordPolynomial out(n);
    for (const auto& [exps, c] : a.terms()) {
        out += power(x0, exps.first) * r_sq_power(exps.second / 2) * c;
    }
    for (const auto& [exps, c] : b.terms()) {
        out += vector_part * power(x0, exps.first) * r_sq_power((exps.second - 1) / 2) * c;
    }
    return out;
}

CliffordPolynomial cauchy_riemann_apply(const CliffordPolynomial& p) {
    const int n = p.dimension();
    CliffordPolynomial out = p.derivative(0);
    for (int i = 1; i <= n; ++i) {
        out += p.derivative(i).left_multiply(Multivector<Rational>::generator(n, i));
    }
    return out;
}

}  // namespace cliffex
