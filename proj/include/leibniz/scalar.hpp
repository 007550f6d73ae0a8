#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars over Q and Q(a).
 *
 * Rational wraps a GMP rational kept in lowest terms. Polynomial holds
 * rational coefficients indexed by degree with trailing zeros trimmed.
 * RationalFunction is a reduced fraction of polynomials whose denominator
 * is monic, so two equal rational functions have identical representations.
 *
 * Scalar is the tagged union used everywhere else; arithmetic between
 * scalars of different fields throws MixedFieldError.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace leibniz {

enum class Field { Q, Qa };

std::string_view field_name(Field f);

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" with optional leading sign.
    static Rational from_string(std::string_view text);

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integers print without "/1".
    std::string to_string() const;

private:
    mpq_class v_{0};
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

    /// The indeterminate a.
    static Polynomial indeterminate();

    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rational leading() const;
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& k) const;

    /// Euclidean division; throws DivisionByZero when the divisor is zero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    /// Monic gcd (zero when both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);
    Polynomial monic() const;

    Rational evaluate(const Rational& at) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Descending degree, e.g. "1/2*a^2 - a + 3".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Polynomial& num);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// Throws PoleError when the denominator vanishes at `at`.
    Rational evaluate(const Rational& at) const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(Rational r) : v_(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    Scalar(RationalFunction f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

    static Scalar zero(Field f);
    static Scalar one(Field f);
    static Scalar from_int(long v, Field f);

    Field field() const noexcept { return v_.index() == 0 ? Field::Q : Field::Qa; }
    bool is_zero() const noexcept;
    bool is_one() const;

    const Rational& rational() const;
    const RationalFunction& function() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar pow(unsigned exponent) const;

    /// Rebuilds the canonical representation (idempotent).
    Scalar normalized() const;

    friend bool operator==(const Scalar&, const Scalar&) = default;

    std::string to_string() const;

private:
    std::variant<Rational, RationalFunction> v_;
};

/// Parses the scalar text grammar: integer or p/q literals, the indeterminate `a`,
/// + - * ^ (non-negative integer exponents), parentheses and at most one
/// top-level '/'. Throws ParseError / FieldMismatch.
Scalar parse_scalar(std::string_view text, Field field);

/// Evaluates a Q(a) scalar at a rational point. Throws PoleError at a pole and
/// MixedFieldError if `s` is a Q scalar.
Rational substitute(const Scalar& s, const Rational& value);

inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace leibniz
