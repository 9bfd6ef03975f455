#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ietlang/exact_scalar.hpp"

using namespace ietlang;

namespace {

ExactScalar quad(long long p, long long q, long long bp, long long bq, long long d) {
    return ExactScalar(Rational(p, q), Rational(bp, bq), d);
}

std::mt19937& rng() {
    static std::mt19937 gen(0x5eed01);
    return gen;
}

ExactScalar random_scalar(bool quadratic) {
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 12);
    Rational a(num(rng()), den(rng()));
    if (!quadratic) return ExactScalar(a);
    Rational b(num(rng()), den(rng()));
    return ExactScalar(a, b, 5);
}

}  // namespace

TEST_CASE("normalization to canonical form") {
    ExactScalar x = quad(2, 4, 0, 1, 5);
    CHECK(x.is_rational());
    CHECK(x.rational_part() == Rational(1, 2));
    CHECK(x.discriminant() == 0);

    ExactScalar y = quad(3, 2, -1, 2, 5);
    CHECK(y.rational_part() == Rational(3, 2));
    CHECK(y.radical_part() == Rational(-1, 2));
    CHECK(y.discriminant() == 5);
    CHECK(y.sign() == 1);  // 9 > 5

    ExactScalar z = quad(0, 1, 0, 1, 5);
    CHECK(z.is_zero());
    CHECK(z.sign() == 0);
}

TEST_CASE("normalization rejects bad input") {
    CHECK_THROWS_AS(make_rational(1, 0), error);
    CHECK_THROWS_AS(quad(1, 1, 1, 1, 12), error);  // 12 = 4*3
    try {
        quad(1, 1, 1, 1, 12);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_square_free_discriminant);
    }
    // Perfect-square discriminants fold into the rational part.
    ExactScalar folded = quad(1, 1, 3, 1, 4);
    CHECK(folded.is_rational());
    CHECK(folded.rational_part() == Rational(7));
}

TEST_CASE("comparison agrees with the real embedding") {
    ExactScalar half(Rational(1, 2));
    ExactScalar golden_complement = quad(3, 2, -1, 2, 5);  // (3 - sqrt 5)/2 ~ 0.38197
    CHECK(half > golden_complement);                       // sqrt 5 > 2
    CHECK(golden_complement < half);
    CHECK(golden_complement == golden_complement);
    CHECK(ExactScalar(0) < golden_complement);  // 3^2 > 5

    ExactScalar sqrt5 = quad(0, 1, 1, 1, 5);
    CHECK(sqrt5 > ExactScalar(2));
    CHECK(sqrt5 < ExactScalar(Rational(9, 4)));

    ExactScalar r2 = quad(0, 1, 1, 1, 2);
    CHECK_THROWS_AS(sqrt5 + r2, error);
}

TEST_CASE("approx truncates with a certified bound") {
    ExactScalar alpha = quad(3, 2, -1, 2, 5);
    CHECK(alpha.approx(6) == "0.381966");
    CHECK(ExactScalar(Rational(1, 3)).approx(3) == "0.333");
    CHECK(ExactScalar(0).approx(5) == "0.00000");
    CHECK(ExactScalar(Rational(-1, 3)).approx(3) == "-0.334");

    for (int i = 0; i < 200; ++i) {
        ExactScalar x = random_scalar(i % 2 == 0);
        auto [lo, hi] = x.approx_interval(4);
        CHECK(ExactScalar(lo) <= x);
        CHECK(x <= ExactScalar(hi));
        CHECK(hi - lo == Rational(1, 10000));
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    for (int i = 0; i < 300; ++i) {
        ExactScalar x = random_scalar(true), y = random_scalar(true), z = random_scalar(i % 2 == 0);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        if (!z.is_zero()) CHECK((x / z) * z == x);
    }
}

TEST_CASE("compare is an exact total order") {
    std::vector<ExactScalar> xs;
    for (int i = 0; i < 40; ++i) xs.push_back(random_scalar(true));
    for (const auto& x : xs)
        for (const auto& y : xs) {
            if (x < y) CHECK(y > x);
            if (x == y) CHECK(!(x < y));
            for (const auto& z : xs)
                if (x < y && y < z) CHECK(x < z);
        }
}

TEST_CASE("floor on both sides of zero") {
    CHECK(quad(0, 1, 1, 1, 5).floor() == 2);
    CHECK(quad(0, 1, -1, 1, 5).floor() == -3);
    CHECK(ExactScalar(Rational(-7, 2)).floor() == -4);
    CHECK(ExactScalar(3).floor() == 3);
}

TEST_CASE("rational_between finds certified interior rationals") {
    ExactScalar lo = quad(0, 1, 1, 1, 5);   // sqrt 5
    ExactScalar hi = quad(9, 4, 0, 1, 0);   // 2.25
    Rational r = rational_between(lo, hi);
    CHECK(ExactScalar(r) > lo);
    CHECK(ExactScalar(r) < hi);
}
