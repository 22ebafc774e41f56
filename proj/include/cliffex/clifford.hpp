#pragma once

// Cl(0,n): generators e_1..e_n with e_i e_j + e_j e_i = -2 delta_ij.
//
// Blades are addressed by bitmask: bit (i-1) set means e_i is a factor, so
// the mask is also the canonical (strictly increasing) generator list.

#include <bit>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cliffex/exact_arith.hpp"

namespace cliffex {

inline constexpr int max_dimension = 9;

using BladeMask = std::uint32_t;

inline void check_dimension(int n) {
    if (n < 1 || n > max_dimension) {
        throw std::invalid_argument("Clifford dimension must be in 1.." + std::to_string(max_dimension));
    }
}

/// Sign picked up when the product of blades a and b is brought into
/// canonical order, including the -1 from every repeated generator.
constexpr int blade_product_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    for (BladeMask shifted = a >> 1; shifted != 0; shifted >>= 1) {
        swaps += std::popcount(shifted & b);
    }
    swaps += std::popcount(a & b);
    return (swaps % 2 == 0) ? 1 : -1;
}

/// "1" for the scalar blade, otherwise "e" followed by the generator indices.
inline std::string blade_name(BladeMask mask) {
    if (mask == 0) {
        return "1";
    }
    std::string name = "e";
    for (int i = 0; i < max_dimension; ++i) {
        if (mask & (BladeMask{1} << i)) {
            name += std::to_string(i + 1);
        }
    }
    return name;
}

template <typename Scalar>
class Multivector {
public:
    explicit Multivector(int n) : n_(n), coeffs_((check_dimension(n), std::size_t{1} << n), Scalar(0)) {}

    static Multivector scalar(int n, const Scalar& value) {
        Multivector out(n);
        out.coeffs_[0] = value;
        return out;
    }

    /// The generator e_i, 1 <= i <= n.
    static Multivector generator(int n, int i) {
        if (i < 1 || i > n) {
            throw std::out_of_range("generator index out of range");
        }
        Multivector out(n);
        out.coeffs_[BladeMask{1} << (i - 1)] = Scalar(1);
        return out;
    }

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    const Scalar& operator[](BladeMask blade) const { return coeffs_.at(blade); }
    Scalar& operator[](BladeMask blade) { return coeffs_.at(blade); }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != Scalar(0)) {
                return false;
            }
        }
        return true;
    }

    /// True when only grade-0 and grade-1 blades are populated.
    [[nodiscard]] bool is_paravector() const {
        for (BladeMask b = 0; b < coeffs_.size(); ++b) {
            if (std::popcount(b) > 1 && coeffs_[b] != Scalar(0)) {
                return false;
            }
        }
        return true;
    }

    Multivector& operator+=(const Multivector& rhs) {
        require_same_dimension(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        return *this;
    }

    Multivector& operator-=(const Multivector& rhs) {
        require_same_dimension(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= rhs.coeffs_[i];
        }
        return *this;
    }

    Multivector& operator*=(const Scalar& s) {
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
    friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
    friend Multivector operator*(Multivector lhs, const Scalar& s) { return lhs *= s; }
    friend Multivector operator*(const Scalar& s, Multivector rhs) { return rhs *= s; }
    friend Multivector operator-(Multivector x) { return x *= Scalar(-1); }

    friend bool operator==(const Multivector& lhs, const Multivector& rhs) {
        return lhs.n_ == rhs.n_ && lhs.coeffs_ == rhs.coeffs_;
    }

    void require_same_dimension(const Multivector& other) const {
        if (other.n_ != n_) {
            throw std::invalid_argument("Multivector dimension mismatch");
        }
    }

private:
    int n_;
    std::vector<Scalar> coeffs_;
};

template <typename Scalar>
Multivector<Scalar> geometric_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
    a.require_same_dimension(b);
    Multivector<Scalar> out(a.dimension());
    const auto size = static_cast<BladeMask>(a.size());
    for (BladeMask i = 0; i < size; ++i) {
        if (a[i] == Scalar(0)) {
            continue;
        }
        for (BladeMask j = 0; j < size; ++j) {
            if (b[j] == Scalar(0)) {
                continue;
            }
            Scalar term = a[i] * b[j];
            if (blade_product_sign(i, j) < 0) {
                out[i ^ j] -= term;
            } else {
                out[i ^ j] += term;
            }
        }
    }
    return out;
}

template <typename Scalar>
Multivector<Scalar> operator*(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
    return geometric_product(a, b);
}

/// x0 + x1 e1 + ... + xn en.
template <typename Scalar>
struct Paravector {
    Scalar x0{0};
    std::vector<Scalar> vec;

    [[nodiscard]] int dimension() const { return static_cast<int>(vec.size()); }

    [[nodiscard]] Scalar vector_norm_sq() const {
        Scalar out(0);
        for (const auto& xi : vec) {
            out += xi * xi;
        }
        return out;
    }

    [[nodiscard]] Multivector<Scalar> to_multivector() const {
        Multivector<Scalar> out(dimension());
        out[0] = x0;
        for (int i = 0; i < dimension(); ++i) {
            out[BladeMask{1} << i] = vec[static_cast<std::size_t>(i)];
        }
        return out;
    }

    static Paravector from_multivector(const Multivector<Scalar>& m) {
        if (!m.is_paravector()) {
            throw std::invalid_argument("multivector has components of grade > 1");
        }
        Paravector out{m[0], std::vector<Scalar>(static_cast<std::size_t>(m.dimension()), Scalar(0))};
        for (int i = 0; i < m.dimension(); ++i) {
            out.vec[static_cast<std::size_t>(i)] = m[BladeMask{1} << i];
        }
        return out;
    }

    friend bool operator==(const Paravector&, const Paravector&) = default;
};

template <typename Scalar>
Paravector<Scalar> conjugate(const Paravector<Scalar>& x) {
    Paravector<Scalar> out = x;
    for (auto& xi : out.vec) {
        xi = -xi;
    }
    return out;
}

template <typename Scalar>
Multivector<Scalar> paravector_power(const Paravector<Scalar>& x, int k) {
    if (k < 0) {
        throw std::invalid_argument("paravector_power: negative exponent");
    }
    const auto base = x.to_multivector();
    auto out = Multivector<Scalar>::scalar(x.dimension(), Scalar(1));
    for (int i = 0; i < k; ++i) {
        out = geometric_product(out, base);
    }
    return out;
}

/// Direction of a nonzero vector part, kept as the pair (x, |x|^2) so that
/// exact arithmetic never needs a square root. omega = x / sqrt(norm_sq).
template <typename Scalar>
struct Direction {
    std::vector<Scalar> vec;
    Scalar norm_sq;

    /// omega^2 = x x / |x|^2, which is -1 for every nonzero x.
    [[nodiscard]] Multivector<Scalar> squared() const {
        const Paravector<Scalar> v{Scalar(0), vec};
        auto out = paravector_power(v, 2);
        for (BladeMask b = 0; b < out.size(); ++b) {
            out[b] = out[b] / norm_sq;
        }
        return out;
    }

    /// Materialized unit vector; floating point only.
    [[nodiscard]] Paravector<Scalar> unit() const
        requires std::is_floating_point_v<Scalar>
    {
        const Scalar norm = std::sqrt(norm_sq);
        Paravector<Scalar> out{Scalar(0), vec};
        for (auto& xi : out.vec) {
            xi /= norm;
        }
        return out;
    }
};

template <typename Scalar>
Direction<Scalar> omega(const std::vector<Scalar>& vec) {
    Scalar norm_sq(0);
    for (const auto& xi : vec) {
        norm_sq += xi * xi;
    }
    if (norm_sq == Scalar(0)) {
        throw std::domain_error("omega: direction of the zero vector is undefined");
    }
    return Direction<Scalar>{vec, norm_sq};
}

inline std::string format_scalar(const Rational& x) { return x.str(); }

inline std::string format_scalar(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

/// "3 + 4 e1 - 1/2 e12"; "0" for the zero multivector.
template <typename Scalar>
std::string to_string(const Multivector<Scalar>& m) {
    std::string out;
    for (BladeMask b = 0; b < m.size(); ++b) {
        if (m[b] == Scalar(0)) {
            continue;
        }
        const bool negative = m[b] < Scalar(0);
        const Scalar magnitude = negative ? Scalar(-m[b]) : m[b];
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += format_scalar(magnitude);
        if (b != 0) {
            out += " " + blade_name(b);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cliffex
