#include "leibniz/scalar.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Qa"; }

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::from_string(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (q.get_den() == 0) throw DivisionByZero();
    return Rational(std::move(q));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial Polynomial::indeterminate() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::leading() const { return c_.empty() ? Rational() : c_.back(); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& k) const {
    if (k.is_zero()) return {};
    Polynomial r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw DivisionByZero();
    r = a;
    std::vector<Rational> quot;
    if (a.degree() >= b.degree()) quot.resize(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        const Rational k = r.leading() / lead;
        quot[shift] = k;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= k * b.c_[i];
        r.trim();
    }
    q = Polynomial(std::move(quot));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return scaled(Rational(1) / leading());
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational Polynomial::evaluate(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = c_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            os << mag.to_string();
            continue;
        }
        if (!mag.is_one()) os << mag.to_string() << '*';
        os << 'a';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(num_, g, q, r);
        num_ = std::move(q);
        Polynomial::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        const Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RationalFunction::evaluate(const Rational& at) const {
    const Rational d = den_.evaluate(at);
    if (d.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes at a = " + at.to_string());
    return num_.evaluate(at) / d;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::zero(Field f) { return f == Field::Q ? Scalar(Rational()) : Scalar(RationalFunction()); }

Scalar Scalar::one(Field f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, Field f) {
    if (f == Field::Q) return Scalar(Rational(v));
    return Scalar(RationalFunction(Polynomial(Rational(v))));
}

bool Scalar::is_zero() const noexcept {
    if (auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
    return std::get<RationalFunction>(v_).is_zero();
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->is_one();
    const auto& f = std::get<RationalFunction>(v_);
    return f.is_polynomial() && f.numerator().degree() == 0 && f.numerator().leading().is_one();
}

const Rational& Scalar::rational() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r;
    throw MixedFieldError();
}

const RationalFunction& Scalar::function() const {
    if (auto* f = std::get_if<RationalFunction>(&v_)) return *f;
    throw MixedFieldError();
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.field() != b.field()) throw MixedFieldError();
    if (a.field() == Field::Q) return Scalar(op(a.rational(), b.rational()));
    return Scalar(op(a.function(), b.function()));
}

}  // namespace

Scalar Scalar::operator-() const {
    if (field() == Field::Q) return Scalar(-rational());
    return Scalar(-function());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) throw MixedFieldError();
    if (b.is_zero()) throw DivisionByZero();
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::pow(unsigned exponent) const {
    Scalar result = one(field());
    Scalar base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

Scalar Scalar::normalized() const {
    if (field() == Field::Q) return Scalar(Rational(rational().value()));
    const auto& f = function();
    return Scalar(RationalFunction(f.numerator(), f.denominator()));
}

std::string Scalar::to_string() const {
    if (field() == Field::Q) return rational().to_string();
    return function().to_string();
}

Rational substitute(const Scalar& s, const Rational& value) { return s.function().evaluate(value); }

// ------------------------------------------------------------------ Parser

namespace {

// Recursive descent over:
//   top     := sum ['/' sum]
//   sum     := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*
//   power   := primary ['^' INT]
//   primary := NUMBER | 'a' | '(' top ')'
// NUMBER is digits, optionally followed immediately by '/' digits.
class ScalarParser {
public:
    ScalarParser(std::string_view text, Field field) : s_(text), field_(field) {}

    Scalar parse() {
        Scalar v = top(true);
        skip();
        if (pos_ != s_.size()) {
            if (s_[pos_] == '/') throw ParseError("more than one top-level '/'", pos_);
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Scalar top(bool outermost) {
        Scalar num = sum();
        if (peek('/')) {
            const std::size_t at = pos_;
            ++pos_;
            Scalar den = sum();
            if (den.is_zero()) throw ParseError("zero denominator", at);
            num = num / den;
        }
        (void)outermost;
        return num;
    }

    Scalar sum() {
        Scalar acc = Scalar::zero(field_);
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Scalar t = term();
        acc = negate ? -t : t;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Scalar term() {
        Scalar acc = power();
        while (peek('*')) {
            ++pos_;
            acc *= power();
        }
        return acc;
    }

    Scalar power() {
        Scalar base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected non-negative integer exponent", start);
            const std::string digits(s_.substr(start, pos_ - start));
            if (digits.size() > 6) throw ParseError("exponent too large", start);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Scalar primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = top(false);
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string_view ident = s_.substr(start, pos_ - start);
            if (ident != "a") throw ParseError("unknown identifier '" + std::string(ident) + "'", start);
            if (field_ == Field::Q) throw FieldMismatch(start);
            return Scalar(RationalFunction(Polynomial::indeterminate()));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Scalar number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            digits();
        }
        const std::string_view lit = s_.substr(start, pos_ - start);
        Rational r;
        try {
            r = Rational::from_string(lit);
        } catch (const DivisionByZero&) {
            throw ParseError("zero denominator in literal", start);
        }
        if (field_ == Field::Q) return Scalar(r);
        return Scalar(RationalFunction(Polynomial(r)));
    }

    std::string_view s_;
    Field field_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, Field field) { return ScalarParser(text, field).parse(); }

}  // namespace leibniz
