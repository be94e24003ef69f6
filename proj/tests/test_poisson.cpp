#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fpa/poisson.hpp"
#include "fpa/random.hpp"

using namespace fpa;

namespace {

PoissonElement x(int i) { return PoissonElement::generator(i); }
PoissonElement b(std::initializer_list<int> w) { return PoissonElement::basis(LieWord(w)); }

// {f, g} = sum over basis elements u, v of df/du dg/dv [u, v].
PoissonElement bracket_by_partials(const PoissonElement& f, const PoissonElement& g)
{
    std::set<LieWord, BasisOrder> fu, gv;
    for (const auto& [m, c] : f.terms())
        for (const auto& [w, e] : m.factors())
            fu.insert(w);
    for (const auto& [m, c] : g.terms())
        for (const auto& [w, e] : m.factors())
            gv.insert(w);
    PoissonElement out;
    for (const LieWord& u : fu)
        for (const LieWord& v : gv)
            out += partial(f, u) * partial(g, v) * PoissonElement::from_lie(bracket_basis(u, v));
    return out;
}

}  // namespace

TEST_CASE("ring operations")
{
    CHECK(x(1) * x(2) == x(2) * x(1));
    CHECK((x(1) + x(2)) * (x(1) - x(2)) == x(1).pow(2) - x(2).pow(2));
    CHECK(b({1, 2}) * PoissonElement(1) == b({1, 2}));
    CHECK(degree(b({1, 2}) * x(1)) == 3);
    CHECK(degree(PoissonElement()) == kMinusInfinity);
    CHECK(degree_in(b({1, 1, 2}) * x(2), 2) == 2);
}

TEST_CASE("bracket examples")
{
    CHECK(poisson_bracket(x(1), x(2) * x(3)) == b({1, 2}) * x(3) + x(2) * b({1, 3}));
    CHECK(poisson_bracket(x(1) * x(2), PoissonElement(1)).is_zero());
    CHECK(poisson_bracket(b({1, 2}), x(1)) == -b({1, 1, 2}));
}

TEST_CASE("bracket agrees with the partial-derivative formula")
{
    Random rng(21);
    for (int k = 0; k < 200; ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement f = rng.poisson(n, 4, 3), g = rng.poisson(n, 4, 3);
        CHECK(poisson_bracket(f, g) == bracket_by_partials(f, g));
    }
}

TEST_CASE("degree is additive")
{
    Random rng(22);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement f = rng.nonzero_poisson(n, 4, 3), g = rng.nonzero_poisson(n, 4, 3);
        CHECK(degree(f * g) == degree(f) + degree(g));
    }
}

TEST_CASE("gcd")
{
    CHECK(gcd(x(1), x(1).pow(2)) == x(1));
    CHECK(gcd(x(1), x(2)) == PoissonElement(1));
    CHECK(gcd(x(1).pow(2) - x(2).pow(2), x(1) + x(2)) == x(1) + x(2));
    CHECK(gcd(Scalar(3) * b({1, 2}) * x(1), Scalar(2) * b({1, 2}) * x(2)) == b({1, 2}));
    CHECK_THROWS_AS(gcd(PoissonElement(), PoissonElement()), DomainError);

    Random rng(23);
    for (int k = 0; k < 60; ++k) {
        const PoissonElement p = rng.nonzero_poisson(2, 3, 2), q = rng.nonzero_poisson(2, 3, 2);
        const PoissonElement c = rng.nonzero_poisson(2, 2, 2);
        const PoissonElement r = gcd(p * c, q * c);
        CHECK(divide_exact(p * c, r).has_value());
        CHECK(divide_exact(q * c, r).has_value());
        CHECK(divide_exact(r, c).has_value());
        CHECK(gcd(q * c, p * c) == r);
    }
}

TEST_CASE("substitution is a Poisson homomorphism")
{
    Random rng(24);
    for (int k = 0; k < 60; ++k) {
        const std::vector<PoissonElement> images{rng.poisson(2, 2, 2), rng.poisson(2, 2, 2)};
        const PoissonElement f = rng.poisson(2, 3, 2), g = rng.poisson(2, 3, 2);
        const auto s = [&](const PoissonElement& p) { return substitute(p, images); };
        CHECK(s(f * g) == s(f) * s(g));
        CHECK(s(poisson_bracket(f, g)) == poisson_bracket(s(f), s(g)));
    }
    const std::vector<PoissonElement> id{x(1), x(2)};
    CHECK(substitute(b({1, 1, 2}) * x(2), id) == b({1, 1, 2}) * x(2));
}

TEST_CASE("commutative polynomials and partial derivatives")
{
    CHECK(is_commutative_polynomial(x(1) * x(2) + PoissonElement(3)));
    CHECK_FALSE(is_commutative_polynomial(b({1, 2})));
    CHECK(partial(x(1).pow(3) * b({1, 2}), LieWord{1}) == Scalar(3) * x(1).pow(2) * b({1, 2}));
    CHECK(partial(x(1).pow(3) * b({1, 2}), LieWord{1, 2}) == x(1).pow(3));
}
