#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "leibniz/catalog.hpp"
#include "leibniz/scalar.hpp"

using namespace leibniz;

namespace {

// Small-integer fraction oracle for Q.
struct Frac {
    long long n, d;
    Frac(long long num, long long den) : n(num), d(den) {
        if (d < 0) n = -n, d = -d;
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) n /= g, d /= g;
    }
};
Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }

Scalar random_q(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 25);
    return Rational(num(g), den(g));
}

Polynomial random_poly(std::mt19937_64& g, int max_degree) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> cs;
    for (int i = 0, d = deg(g); i <= d; ++i) cs.emplace_back(c(g));
    return Polynomial(cs);
}

Scalar random_qa(std::mt19937_64& g) {
    Polynomial den;
    do den = random_poly(g, 1);
    while (den.is_zero());
    return RationalFunction(random_poly(g, 2), den);
}

void field_axioms(Field f, Scalar (*gen)(std::mt19937_64&)) {
    std::mt19937_64 g(f == Field::Q ? 11 : 12);
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (int it = 0; it < 1000; ++it) {
        const Scalar a = gen(g), b = gen(g), c = gen(g);
        REQUIRE(a.field() == f);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a + (-a) == zero);
        CHECK(a - b == a + (-b));
        CHECK(a * zero == zero);
        if (!a.is_zero()) {
            CHECK(a * (one / a) == one);
            CHECK((b / a) * a == b);
        }
    }
}

}  // namespace

TEST_CASE("rational arithmetic against a fraction oracle") {
    CHECK(Scalar(Rational(1, 2)) + Scalar(Rational(1, 3)) == Scalar(Rational(5, 6)));
    std::mt19937_64 g(3);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 40);
    for (int it = 0; it < 500; ++it) {
        const long an = num(g), ad = den(g), bn = num(g), bd = den(g);
        const Frac s = Frac(an, ad) + Frac(bn, bd), p = Frac(an, ad) * Frac(bn, bd);
        const Rational a(an, ad), b(bn, bd);
        CHECK(a + b == Rational(s.n, s.d));
        CHECK(a * b == Rational(p.n, p.d));
        CHECK((a + b).denominator() == static_cast<long>(s.d));
    }
}

TEST_CASE("rational canonical form") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("field axioms over Q") { field_axioms(Field::Q, random_q); }
TEST_CASE("field axioms over Q(a)") { field_axioms(Field::Qa, random_qa); }

TEST_CASE("Q(a) arithmetic commutes with substitution") {
    std::mt19937_64 g(5);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        const Scalar a = random_qa(g), b = random_qa(g);
        for (long p : {-3L, 2L, 5L}) {
            const Rational v(p, 7);
            Rational av, bv;
            try {
                av = substitute(a, v);
                bv = substitute(b, v);
            } catch (const PoleError&) {
                continue;
            }
            CHECK(substitute(a + b, v) == av + bv);
            CHECK(substitute(a * b, v) == av * bv);
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("absorbing zero") {
    std::mt19937_64 g(9);
    for (int it = 0; it < 100; ++it) {
        CHECK((random_q(g) * Scalar::zero(Field::Q)).is_zero());
        CHECK((random_qa(g) * Scalar::zero(Field::Qa)).is_zero());
    }
}

TEST_CASE("canonical rational functions") {
    const Scalar s = parse_scalar("1+a", Field::Qa) / parse_scalar("1-a", Field::Qa);
    const RationalFunction& f = s.function();
    CHECK(f.denominator() == Polynomial({Rational(-1), Rational(1)}));
    CHECK(f.numerator() == Polynomial({Rational(-1), Rational(-1)}));
    CHECK(s == parse_scalar("(1+a)/(1-a)", Field::Qa));

    // common factors cancel: (a^2 - 1)/(2a - 2) = 1/2 a + 1/2
    const Scalar c = parse_scalar("(a^2-1)/(2*a-2)", Field::Qa);
    CHECK(c.function().is_polynomial());
    CHECK(c == parse_scalar("1/2*a + 1/2", Field::Qa));
    CHECK(c.function().denominator().is_monic());
}

TEST_CASE("mixed fields and division by zero") {
    CHECK_THROWS_AS(Scalar::one(Field::Q) + Scalar::one(Field::Qa), MixedFieldError);
    CHECK_THROWS_AS(Scalar::one(Field::Q) / Scalar::zero(Field::Q), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(Field::Qa) / Scalar::zero(Field::Qa), DivisionByZero);
}

TEST_CASE("parse_scalar") {
    CHECK(parse_scalar("-2", Field::Q) == Scalar(Rational(-2)));
    CHECK(parse_scalar("3/4", Field::Q) == Scalar(Rational(3, 4)));
    CHECK(parse_scalar("-3/4", Field::Q) == Scalar(Rational(-3, 4)));
    CHECK(parse_scalar("2*(3-1)^3", Field::Q) == Scalar(Rational(16)));
    CHECK(parse_scalar(" 1 + 1/2 ", Field::Q) == Scalar(Rational(3, 2)));
    CHECK(parse_scalar("a^2 - 1", Field::Qa).to_string() == "a^2 - 1");
    CHECK_THROWS_AS(parse_scalar("3/4 + x", Field::Q), ParseError);
    CHECK_THROWS_AS(parse_scalar("a", Field::Q), FieldMismatch);
    CHECK_THROWS_AS(parse_scalar("1/(a-a)", Field::Qa), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1+a)/2/(1-a)", Field::Qa), ParseError);
    CHECK_THROWS_AS(parse_scalar("", Field::Q), ParseError);
    CHECK_THROWS_AS(parse_scalar("2^-1", Field::Q), ParseError);
    try {
        parse_scalar("1 + y", Field::Q);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("substitute") {
    const Scalar f = parse_scalar("(1+a)/(1-a)", Field::Qa);
    CHECK_THROWS_AS(substitute(f, Rational(1)), PoleError);
    CHECK(substitute(f, Rational(0)) == Rational(1));
    CHECK(substitute(f, Rational(3)) == Rational(-2));
    CHECK(substitute(parse_scalar("a^2 - 1", Field::Qa), Rational(3)) == Rational(8));
    CHECK_THROWS_AS(substitute(Scalar(Rational(2)), Rational(1)), MixedFieldError);
}

TEST_CASE("idempotent canonicalization and render/parse round-trip") {
    std::mt19937_64 g(21);
    for (int it = 0; it < 300; ++it) {
        for (const Scalar& s : {random_q(g), random_qa(g)}) {
            CHECK(s.normalized() == s);
            CHECK(s.normalized().normalized() == s.normalized());
            CHECK(parse_scalar(s.to_string(), s.field()) == s);
        }
    }
}

TEST_CASE("catalog coefficients round-trip") {
    int count = 0;
    for (const auto& e : catalog())
        for (const auto& rule : e.rules)
            for (const auto& [k, text] : rule.result) {
                const Scalar s = parse_scalar(text, e.field());
                CHECK(parse_scalar(s.to_string(), e.field()) == s);
                ++count;
            }
    CHECK(count > 60);
}

TEST_CASE("polynomial gcd and division") {
    const Polynomial x = Polynomial::indeterminate();
    const Polynomial one({Rational(1)});
    const Polynomial a = (x - one) * (x + one) * (x + one);
    const Polynomial b = (x + one) * (x - Polynomial({Rational(2)}));
    CHECK(Polynomial::gcd(a, b) == x + one);
    Polynomial q, r;
    Polynomial::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(Polynomial::gcd(Polynomial(), Polynomial()).is_zero());
}
