#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dodgson/errors.hpp"

namespace dodgson {

enum class RingKind { Integer, Rational, Real, Polynomial };

std::string_view ring_name(RingKind kind) noexcept;

/// Absolute zero-tolerance used by approximate reals unless overridden.
inline constexpr double kDefaultTolerance = 1e-9;

/// A double carrying the zero-tolerance of the computation it belongs to.
struct Real {
    double value = 0.0;
    double tolerance = kDefaultTolerance;
};

/// Dense univariate polynomial over the rationals, lowest degree first.
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients at all.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpq_class> coeffs);

    static Polynomial constant(const mpq_class& c);
    /// The monomial c * x^degree.
    static Polynomial monomial(const mpq_class& c, std::size_t degree);
    static Polynomial x() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^k, zero past the degree.
    mpq_class coefficient(std::size_t k) const;
    const mpq_class& leading() const;

    Polynomial derivative() const;
    Polynomial monic() const;
    double evaluate(double x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<mpq_class> coeffs_;
};

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division over Q. Throws DivisionByZero for a zero divisor.
PolynomialDivision divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Human-readable form in the variable `var`, highest degree first,
/// e.g. "x^3 - 2*x".
std::string to_string(const Polynomial& p, std::string_view var = "x");

/// A value in one of the four supported rings. Arithmetic requires both
/// operands to share a ring; there is no implicit promotion.
class Scalar {
public:
    /// Integer zero.
    Scalar() = default;

    static Scalar integer(long v) { return Scalar(mpz_class(v)); }
    static Scalar integer(mpz_class v) { return Scalar(std::move(v)); }
    static Scalar rational(mpq_class v);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar real(double v, double tolerance = kDefaultTolerance);
    static Scalar polynomial(Polynomial p) { return Scalar(std::move(p)); }

    RingKind kind() const noexcept { return static_cast<RingKind>(value_.index()); }

    /// Typed access; throws RingMismatch when the tag differs.
    const mpz_class& as_integer() const;
    const mpq_class& as_rational() const;
    const Real& as_real() const;
    const Polynomial& as_polynomial() const;

    /// Zero and one of the same ring (and tolerance, for reals).
    Scalar zero_like() const;
    Scalar one_like() const;

    /// Exact structural equality. Reals compare by value only.
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    using Storage = std::variant<mpz_class, mpq_class, Real, Polynomial>;

    explicit Scalar(mpz_class v) : value_(std::move(v)) {}
    explicit Scalar(mpq_class v) : value_(std::move(v)) {}
    explicit Scalar(Real v) : value_(v) {}
    explicit Scalar(Polynomial v) : value_(std::move(v)) {}

    Storage value_{mpz_class(0)};
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);

/// The unique q with q * b == a. Integers and polynomials must divide
/// exactly (InexactDivision otherwise); reals use floating division.
/// Throws DivisionByZero when is_zero(b).
Scalar exact_div(const Scalar& a, const Scalar& b);

/// Exact zero test; approximate reals compare |a| against their tolerance.
bool is_zero(const Scalar& a);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }

/// Scalar text syntax: integers as digits, rationals as "p/q" (always with
/// the slash, so the ring survives a round trip), reals in shortest
/// round-trip form containing '.' or an exponent. Polynomials print in the
/// human-readable form of to_string(Polynomial).
std::string to_string(const Scalar& s);

/// Parses one scalar token. Any '/' makes a rational; a '.' or exponent
/// makes a real (with the given tolerance); anything else must be a signed
/// integer. Throws ParseError.
Scalar parse_scalar(std::string_view token, double tolerance = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace dodgson
