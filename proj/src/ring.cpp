#include "dodgson/ring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <system_error>

namespace dodgson {

std::string_view ring_name(RingKind kind) noexcept {
    switch (kind) {
        case RingKind::Integer: return "integer";
        case RingKind::Rational: return "rational";
        case RingKind::Real: return "real";
        case RingKind::Polynomial: return "polynomial";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> coeffs(degree + 1, mpq_class(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

const mpq_class& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    const mpq_class lead = leading();
    std::vector<mpq_class> c(coeffs_);
    for (auto& v : c) v /= lead;
    return Polynomial(std::move(c));
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpq_class(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<mpq_class> c(a.coeffs_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial{}, a};

    std::vector<mpq_class> rem(a.coefficients());
    const auto& div = b.coefficients();
    const std::size_t shift_max = rem.size() - div.size();
    std::vector<mpq_class> quot(shift_max + 1, mpq_class(0));
    const mpq_class& lead = div.back();

    for (std::size_t s = shift_max + 1; s-- > 0;) {
        const mpq_class q = rem[s + div.size() - 1] / lead;
        quot[s] = q;
        if (q == 0) continue;
        for (std::size_t k = 0; k < div.size(); ++k) rem[s + k] -= q * div[k];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

void append_coefficient_term(std::ostringstream& out, const mpq_class& c, std::size_t k,
                             std::string_view var, bool first) {
    const bool negative = sgn(c) < 0;
    if (first) {
        if (negative) out << "-";
    } else {
        out << (negative ? " - " : " + ");
    }
    const mpq_class mag = abs(c);
    if (k == 0) {
        out << mag.get_str();
        return;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
}

}  // namespace

std::string to_string(const Polynomial& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        append_coefficient_term(out, c[k], k, var, first);
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(mpq_class v) {
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return rational(mpq_class(num, den));
}

Scalar Scalar::real(double v, double tolerance) { return Scalar(Real{v, tolerance}); }

namespace {

[[noreturn]] void mismatch(RingKind want, RingKind got) {
    throw RingMismatch("expected " + std::string(ring_name(want)) + " scalar, got " +
                       std::string(ring_name(got)));
}

void require_same(const Scalar& a, const Scalar& b, std::string_view op) {
    if (a.kind() != b.kind()) {
        throw RingMismatch(std::string(op) + " of " + std::string(ring_name(a.kind())) + " and " +
                           std::string(ring_name(b.kind())));
    }
}

}  // namespace

const mpz_class& Scalar::as_integer() const {
    if (auto* v = std::get_if<mpz_class>(&value_)) return *v;
    mismatch(RingKind::Integer, kind());
}

const mpq_class& Scalar::as_rational() const {
    if (auto* v = std::get_if<mpq_class>(&value_)) return *v;
    mismatch(RingKind::Rational, kind());
}

const Real& Scalar::as_real() const {
    if (auto* v = std::get_if<Real>(&value_)) return *v;
    mismatch(RingKind::Real, kind());
}

const Polynomial& Scalar::as_polynomial() const {
    if (auto* v = std::get_if<Polynomial>(&value_)) return *v;
    mismatch(RingKind::Polynomial, kind());
}

Scalar Scalar::zero_like() const {
    switch (kind()) {
        case RingKind::Integer: return integer(0);
        case RingKind::Rational: return rational(mpq_class(0));
        case RingKind::Real: return real(0.0, as_real().tolerance);
        case RingKind::Polynomial: return polynomial(Polynomial{});
    }
    return {};
}

Scalar Scalar::one_like() const {
    switch (kind()) {
        case RingKind::Integer: return integer(1);
        case RingKind::Rational: return rational(mpq_class(1));
        case RingKind::Real: return real(1.0, as_real().tolerance);
        case RingKind::Polynomial: return polynomial(Polynomial::constant(1));
    }
    return {};
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case RingKind::Integer: return a.as_integer() == b.as_integer();
        case RingKind::Rational: return a.as_rational() == b.as_rational();
        case RingKind::Real: return a.as_real().value == b.as_real().value;
        case RingKind::Polynomial: return a.as_polynomial() == b.as_polynomial();
    }
    return false;
}

Scalar add(const Scalar& a, const Scalar& b) {
    require_same(a, b, "add");
    switch (a.kind()) {
        case RingKind::Integer: return Scalar::integer(mpz_class(a.as_integer() + b.as_integer()));
        case RingKind::Rational: return Scalar::rational(mpq_class(a.as_rational() + b.as_rational()));
        case RingKind::Real:
            return Scalar::real(a.as_real().value + b.as_real().value,
                                std::max(a.as_real().tolerance, b.as_real().tolerance));
        case RingKind::Polynomial: return Scalar::polynomial(a.as_polynomial() + b.as_polynomial());
    }
    return {};
}

Scalar sub(const Scalar& a, const Scalar& b) {
    require_same(a, b, "sub");
    switch (a.kind()) {
        case RingKind::Integer: return Scalar::integer(mpz_class(a.as_integer() - b.as_integer()));
        case RingKind::Rational: return Scalar::rational(mpq_class(a.as_rational() - b.as_rational()));
        case RingKind::Real:
            return Scalar::real(a.as_real().value - b.as_real().value,
                                std::max(a.as_real().tolerance, b.as_real().tolerance));
        case RingKind::Polynomial: return Scalar::polynomial(a.as_polynomial() - b.as_polynomial());
    }
    return {};
}

Scalar mul(const Scalar& a, const Scalar& b) {
    require_same(a, b, "mul");
    switch (a.kind()) {
        case RingKind::Integer: return Scalar::integer(mpz_class(a.as_integer() * b.as_integer()));
        case RingKind::Rational: return Scalar::rational(mpq_class(a.as_rational() * b.as_rational()));
        case RingKind::Real:
            return Scalar::real(a.as_real().value * b.as_real().value,
                                std::max(a.as_real().tolerance, b.as_real().tolerance));
        case RingKind::Polynomial: return Scalar::polynomial(a.as_polynomial() * b.as_polynomial());
    }
    return {};
}

Scalar neg(const Scalar& a) {
    switch (a.kind()) {
        case RingKind::Integer: return Scalar::integer(mpz_class(-a.as_integer()));
        case RingKind::Rational: return Scalar::rational(mpq_class(-a.as_rational()));
        case RingKind::Real: return Scalar::real(-a.as_real().value, a.as_real().tolerance);
        case RingKind::Polynomial: return Scalar::polynomial(-a.as_polynomial());
    }
    return {};
}

bool is_zero(const Scalar& a) {
    switch (a.kind()) {
        case RingKind::Integer: return a.as_integer() == 0;
        case RingKind::Rational: return a.as_rational() == 0;
        case RingKind::Real: return std::abs(a.as_real().value) < a.as_real().tolerance;
        case RingKind::Polynomial: return a.as_polynomial().is_zero();
    }
    return false;
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
    require_same(a, b, "exact_div");
    if (is_zero(b)) throw DivisionByZero("division by zero (" + to_string(a) + " / " + to_string(b) + ")");
    switch (a.kind()) {
        case RingKind::Integer: {
            const mpz_class& num = a.as_integer();
            const mpz_class& den = b.as_integer();
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
                throw InexactDivision("integer division leaves a remainder (" + num.get_str() + " / " +
                                      den.get_str() + ")");
            }
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return Scalar::integer(std::move(q));
        }
        case RingKind::Rational: return Scalar::rational(mpq_class(a.as_rational() / b.as_rational()));
        case RingKind::Real:
            return Scalar::real(a.as_real().value / b.as_real().value,
                                std::max(a.as_real().tolerance, b.as_real().tolerance));
        case RingKind::Polynomial: {
            auto [q, r] = divmod(a.as_polynomial(), b.as_polynomial());
            if (!r.is_zero()) {
                throw InexactDivision("polynomial division leaves remainder " + to_string(r));
            }
            return Scalar::polynomial(std::move(q));
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

std::string format_real(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

bool is_integer_syntax(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

std::string to_string(const Scalar& s) {
    switch (s.kind()) {
        case RingKind::Integer: return s.as_integer().get_str();
        case RingKind::Rational: {
            const mpq_class& q = s.as_rational();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case RingKind::Real: return format_real(s.as_real().value);
        case RingKind::Polynomial: return to_string(s.as_polynomial());
    }
    return {};
}

Scalar parse_scalar(std::string_view token, double tolerance) {
    const std::string tok(token);
    if (token.empty()) throw ParseError("empty scalar token");

    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        auto num = token.substr(0, slash);
        auto den = token.substr(slash + 1);
        if (!is_integer_syntax(num) || den.empty() ||
            !std::all_of(den.begin(), den.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("malformed rational '" + tok + "'", 0, tok);
        }
        mpz_class d = parse_integer(den);
        if (d == 0) throw ParseError("zero denominator in '" + tok + "'", 0, tok);
        return Scalar::rational(parse_integer(num), d);
    }

    if (token.find_first_of(".eE") != std::string_view::npos) {
        std::string_view body = token;
        if (body.front() == '+') body.remove_prefix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc{} || ptr != body.data() + body.size() || !std::isfinite(v)) {
            throw ParseError("malformed real '" + tok + "'", 0, tok);
        }
        return Scalar::real(v, tolerance);
    }

    if (!is_integer_syntax(token)) throw ParseError("malformed integer '" + tok + "'", 0, tok);
    return Scalar::integer(parse_integer(token));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }
std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace dodgson
