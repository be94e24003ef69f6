#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpa/core.hpp"
#include "fpa/polynomial.hpp"

using namespace fpa;

TEST_CASE("scalars parse and print in lowest terms")
{
    CHECK(parse_scalar("6/4") == Scalar(3, 2));
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK(to_string(Scalar(-3, 6)) == "-1/2");
    CHECK(to_string(Scalar(0)) == "0");
    CHECK_THROWS_AS(parse_scalar("1/0"), DomainError);
    CHECK_THROWS(parse_scalar("abc"));
}

TEST_CASE("factorials and powers of two")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(power_of_two(10) == 1024);
    CHECK(factorial(MultiIndex{2, 0, 3}) == 12);
}

TEST_CASE("multi-index arithmetic")
{
    const MultiIndex a{1, 2}, b{0, 1};
    CHECK(a + b == MultiIndex{1, 3});
    CHECK(a - b == MultiIndex{1, 1});
    CHECK_THROWS_AS(b - a, DomainError);
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(swap_halves(MultiIndex{1, 2, 3, 4}) == MultiIndex{3, 4, 1, 2});
    CHECK(norm(a) == 3);
    CHECK(indices_below(MultiIndex{1, 2}).size() == 6);
    // Compositions of 3 into 3 parts: C(5, 2).
    CHECK(indices_with_norm(3, 3).size() == 10);
}

TEST_CASE("graded lex order")
{
    GradedLexLess less;
    CHECK(less(MultiIndex{1, 0}, MultiIndex{0, 2}));
    CHECK(less(MultiIndex{0, 1}, MultiIndex{1, 0}));
    CHECK_FALSE(less(MultiIndex{1, 0}, MultiIndex{1, 0}));
}

TEST_CASE("polynomial ring identities")
{
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(3) == x.pow(3) + Scalar(3) * x * x * y + Scalar(3) * x * y * y + y.pow(3));
    CHECK((x * x * y).derivative(0) == Scalar(2) * x * y);
    CHECK(Polynomial(2).degree() == kMinusInfinity);
    CHECK((x * y + x).degree_in(1) == 1);
}

TEST_CASE("exact division and gcd")
{
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    const Polynomial one = Polynomial::constant(2, Scalar(1));
    CHECK(divide_exact(x * x - y * y, x + y) == x - y);
    CHECK_FALSE(divide_exact(x * x + y * y, x + y).has_value());
    CHECK(gcd(x * x - y * y, x + y) == x + y);
    CHECK(gcd(x, y) == one);
    CHECK(gcd(Scalar(4) * x * x, Scalar(6) * x) == x);
    CHECK_THROWS_AS(gcd(Polynomial(2), Polynomial(2)), DomainError);

    // Planted common factor: gcd(a c, b c) = c for coprime a, b.
    const Polynomial c = x * y + Scalar(2) * y + one;
    const Polynomial a = x * x + one, b = y - x;
    CHECK(gcd(a * c, b * c) == c.monic());
    CHECK(divide_exact(a * c, gcd(a * c, b * c)) == a * Scalar(c.leading_coefficient()));
}
