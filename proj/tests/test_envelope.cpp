#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpa/envelope.hpp"
#include "fpa/random.hpp"

using namespace fpa;

namespace {

PoissonElement x(int i) { return PoissonElement::generator(i); }
EnvElement h(int i) { return EnvElement::h(i); }
EnvElement e(const PoissonElement& p) { return EnvElement(p); }

}  // namespace

TEST_CASE("products")
{
    CHECK(env_mul(h(1), e(x(2))) == left_scale(x(2), h(1)) + e(poisson_bracket(x(1), x(2))));
    CHECK(env_mul(h(1), h(2)) == EnvElement::word(HWord{1, 2}));
    const EnvElement u = left_scale(x(1), h(2)) + e(x(2));
    CHECK(env_mul(u, EnvElement(1)) == u);
    CHECK(env_mul(EnvElement(1), u) == u);
    CHECK(env_mul(EnvElement::word(HWord{2, 1}), EnvElement::word(HWord{1})) == EnvElement::word(HWord{2, 1, 1}));
}

TEST_CASE("associativity on random triples")
{
    Random rng(31);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(1, 3);
        const EnvElement u = rng.env(n, 2, 2, 3), v = rng.env(n, 2, 2, 3), w = rng.env(n, 2, 2, 3);
        CHECK(env_mul(env_mul(u, v), w) == env_mul(u, env_mul(v, w)));
    }
}

TEST_CASE("ham")
{
    CHECK(ham(x(1) * x(2)) == left_scale(x(2), h(1)) + left_scale(x(1), h(2)));
    CHECK(ham(PoissonElement(1)).is_zero());
    CHECK(ham(PoissonElement::basis(LieWord{1, 2})) == env_mul(h(1), h(2)) - env_mul(h(2), h(1)));
    Random rng(32);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement p = rng.poisson(n, 3, 2), q = rng.poisson(n, 3, 2);
        CHECK(ham(p * q) == env_mul(e(q), ham(p)) + env_mul(e(p), ham(q)));
        CHECK(ham(poisson_bracket(p, q)) == env_mul(ham(p), ham(q)) - env_mul(ham(q), ham(p)));
        CHECK(split(ham(p)).p_part.is_zero());
    }
}

TEST_CASE("degrees and leading terms")
{
    CHECK(hdeg(EnvElement::word(HWord{1, 2})) == 2);
    CHECK(hdeg(e(x(1).pow(3))) == 0);
    CHECK(hdeg(EnvElement()) == kMinusInfinity);
    const EnvElement u = left_scale(x(1), EnvElement::word(HWord{1, 2})) + left_scale(x(2).pow(5), h(1));
    CHECK(ldm(u) == HWord{1, 2});
    CHECK(ldc(u) == x(1));
    CHECK(ldt(u) == left_scale(x(1), EnvElement::word(HWord{1, 2})));
    CHECK(ldm(EnvElement::word(HWord{1, 2}) + EnvElement::word(HWord{2, 1})) == HWord{2, 1});
    CHECK_THROWS_AS(ldm(EnvElement()), DomainError);

    Random rng(33);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(1, 3);
        const EnvElement a = rng.nonzero_env(n, 3, 2, 3), b = rng.nonzero_env(n, 3, 2, 3);
        const EnvElement ab = env_mul(a, b);
        CHECK(ldm(ab) == ldm(a) + ldm(b));
        CHECK(ldc(ab) == ldc(a) * ldc(b));
        CHECK(hdeg(ab) == hdeg(a) + hdeg(b));
        CHECK(top(ab) == graded_product(top(a), top(b)));
    }
}

TEST_CASE("top and split")
{
    CHECK(top(left_scale(x(1), h(1)) + e(x(2).pow(3))) == left_scale(x(1), h(1)));
    const Splitting s = split(e(x(1)) + left_scale(x(2), h(1)));
    CHECK(s.p_part == x(1));
    CHECK(s.omega_part == left_scale(x(2), h(1)));
    CHECK(split(EnvElement()).p_part.is_zero());
    CHECK(split(EnvElement()).omega_part.is_zero());
}

TEST_CASE("word order and left division")
{
    HWordOrder less;
    CHECK(less(HWord{2}, HWord{1, 1}));
    CHECK(less(HWord{1, 2}, HWord{2, 1}));
    CHECK(HWord{1}.left_divides(HWord{2, 1}));
    CHECK_FALSE(HWord{2}.left_divides(HWord{2, 1}));
    CHECK(HWord{}.left_divides(HWord{1}));
}

TEST_CASE("right cofactors")
{
    const EnvElement u = left_scale(x(1), EnvElement::word(HWord{2, 1})) + left_scale(x(2), h(2));
    const auto parts = right_cofactors(u, 2);
    CHECK(parts[0] == left_scale(x(1), h(2)));
    CHECK(parts[1] == e(x(2)));
    CHECK_THROWS_AS(right_cofactors(u + EnvElement(1), 2), DomainError);
}
