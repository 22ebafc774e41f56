#include "cliffex/exact_arith.hpp"

#include <stdexcept>

namespace cliffex {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        const auto first = s.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos) {
            return std::string_view{};
        }
        const auto last = s.find_last_not_of(" \t\r\n");
        return s.substr(first, last - first + 1);
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
            digits.remove_prefix(1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("Rational: malformed number '" + std::string(s) + "'");
        }
        std::string owned(s.front() == '+' ? s.substr(1) : s);
        return BigInt(owned, 10);
    };

    const auto body = trim(text);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(body));
    }
    return Rational(parse_int(body.substr(0, slash)), parse_int(body.substr(slash + 1)));
}

Rational Rational::abs() const {
    Rational out;
    out.value_ = ::abs(value_);
    return out;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Rational out;
    mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) {
    Rational out;
    out.value_ = -x.value_;
    return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

BigInt factorial(int m) {
    if (m < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
    return out;
}

BigInt double_factorial(int m) {
    if (m < -1) {
        throw std::invalid_argument("double_factorial: argument below -1");
    }
    if (m <= 0) {
        return 1;
    }
    BigInt out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
    return out;
}

BigInt binomial(int k, int s) {
    if (k < 0) {
        throw std::invalid_argument("binomial: negative upper index");
    }
    if (s < 0 || s > k) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(s));
    return out;
}

Rational pochhammer(const Rational& q, int l) {
    if (l < 0) {
        throw std::invalid_argument("pochhammer: negative length");
    }
    Rational out = 1;
    for (int i = 0; i < l; ++i) {
        out *= q + Rational(i);
    }
    return out;
}

}  // namespace cliffex
