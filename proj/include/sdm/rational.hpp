#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sdm {

/// Exact rational number on 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator > 0). Intermediate products use 128-bit arithmetic;
/// overflow of the reduced result throws.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    /// Recovers the rational a double was meant to represent: tries the
    /// best small-denominator approximation within 4 ulp (so decimal
    /// literals like 0.641 come back as 641/1000), falling back to the
    /// exact binary expansion p/2^k.
    static Rational from_double(double x);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Polynomial with exact rational coefficients, coeffs[k] * x^k.
using RationalPoly = std::vector<Rational>;

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_scale(const RationalPoly& a, const Rational& s);
RationalPoly poly_derivative(const RationalPoly& a);
void poly_trim(RationalPoly& a);

/// Rational function num/den in one indeterminate with exact coefficients.
/// Used for z-domain algebra where q stands for z^-1.
struct RationalFunctionQ {
    RationalPoly num{Rational(0)};
    RationalPoly den{Rational(1)};

    static RationalFunctionQ zero() { return {}; }
    RationalFunctionQ operator+(const RationalFunctionQ& o) const;
    RationalFunctionQ operator*(const RationalFunctionQ& o) const;
    RationalFunctionQ scaled(const Rational& s) const;
    /// d/dq of the function.
    RationalFunctionQ derivative() const;
    /// Cancels the polynomial gcd of num and den and renormalizes so all
    /// coefficients are coprime integers and den[0] > 0.
    void reduce();
};

/// Z{n^p} as a rational function of q = z^-1 (one-sided, n >= 0).
RationalFunctionQ z_transform_power(int p);

}  // namespace sdm
