/// @file qfield.hpp
/// @brief Exact coefficient arithmetic: arbitrary-precision rationals,
///        dense univariate polynomials in q, and normalized rational
///        functions in q.
///
/// RatFunQ is the coefficient field for every series in this project.
/// All three types are immutable values with canonical normal forms, so
/// equality is plain representation equality:
///  - Rational: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
///  - PolyQ: dense coefficient list, trailing coefficient nonzero
///    (empty list = zero polynomial).
///  - RatFunQ: gcd(num, den) = 1, den monic and nonzero.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qaudit {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
    static Rational from_string(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    friend Rational operator-(const Rational& a);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    Rational inverse() const;
    Rational pow(unsigned e) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    BigInt num_;
    BigInt den_; // always >= 1
    void normalize();
};

// ---------------------------------------------------------------------------
// PolyQ — dense polynomial in q over Rational
// ---------------------------------------------------------------------------

class PolyQ {
public:
    PolyQ() = default;                                   // zero polynomial
    PolyQ(const Rational& constant);
    PolyQ(long long constant) : PolyQ(Rational(constant)) {}

    /// Coefficient list by ascending power of q; trailing zeros are trimmed.
    static PolyQ from_coeffs(std::vector<Rational> coeffs);
    /// q^e for e >= 0.
    static PolyQ q_power(unsigned e);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    /// Coefficient of q^i (zero when i exceeds the degree).
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;

    friend PolyQ operator-(const PolyQ& a);
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);

    PolyQ scaled(const Rational& c) const;
    PolyQ monic() const;

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    /// Euclidean division; exact rational arithmetic.
    /// Throws std::domain_error when dividing by zero.
    static std::pair<PolyQ, PolyQ> divrem(const PolyQ& a, const PolyQ& b);

    /// Monic greatest common divisor (primitive integer remainder sequence
    /// internally, so Euclid does not blow up rational coefficients).
    /// Throws std::domain_error("gcd of zeros") when both inputs are zero.
    static PolyQ gcd(const PolyQ& a, const PolyQ& b);

    /// Exact value at q = q0.
    Rational eval(const Rational& q0) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const PolyQ& p);

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// ---------------------------------------------------------------------------
// RatFunQ — normalized fraction of PolyQ
// ---------------------------------------------------------------------------

class RatFunQ {
public:
    RatFunQ() : num_(), den_(Rational(1)) {}
    RatFunQ(long long v) : num_(Rational(v)), den_(Rational(1)) {}
    RatFunQ(const Rational& v) : num_(v), den_(Rational(1)) {}
    RatFunQ(const PolyQ& num) : num_(num), den_(Rational(1)) {}

    /// Normalized fraction (gcd cancelled, monic denominator).
    /// Throws std::domain_error("division by zero polynomial") on zero den.
    RatFunQ(PolyQ num, PolyQ den);

    /// q^e for any integer e (negative exponents land in the denominator).
    static RatFunQ q_power(long long e);
    static RatFunQ one_minus_q_power(long long e);   // 1 - q^e

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunQ operator-(const RatFunQ& a);
    friend RatFunQ operator+(const RatFunQ& a, const RatFunQ& b);
    friend RatFunQ operator-(const RatFunQ& a, const RatFunQ& b);
    friend RatFunQ operator*(const RatFunQ& a, const RatFunQ& b);
    friend RatFunQ operator/(const RatFunQ& a, const RatFunQ& b);

    RatFunQ& operator+=(const RatFunQ& b) { return *this = *this + b; }
    RatFunQ& operator-=(const RatFunQ& b) { return *this = *this - b; }
    RatFunQ& operator*=(const RatFunQ& b) { return *this = *this * b; }
    RatFunQ& operator/=(const RatFunQ& b) { return *this = *this / b; }

    friend bool operator==(const RatFunQ& a, const RatFunQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunQ& a, const RatFunQ& b) { return !(a == b); }

    RatFunQ inverse() const;
    RatFunQ pow(long long e) const;

    /// Exact value at q = q0; throws std::domain_error("pole at evaluation
    /// point") when the denominator vanishes there.
    Rational eval_at(const Rational& q0) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunQ& f);

private:
    PolyQ num_;
    PolyQ den_; // monic, nonzero
};

} // namespace qaudit
