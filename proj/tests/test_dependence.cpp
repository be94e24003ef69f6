#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpa/dependence.hpp"
#include "fpa/random.hpp"

using namespace fpa;

namespace {

PoissonElement x(int i) { return PoissonElement::generator(i); }
EnvElement h(int i) { return EnvElement::h(i); }
EnvElement e(const PoissonElement& p) { return EnvElement(p); }

}  // namespace

TEST_CASE("shift identity")
{
    CHECK(lambda_shift(x(1), e(x(2).pow(3))) == e(x(2).pow(3)));
    const EnvElement v = lambda_shift(x(2), h(1));
    CHECK(v == left_scale(x(2), h(1)) - e(poisson_bracket(x(1), x(2))));
    CHECK(env_mul(v, e(x(2))) == env_mul(e(x(2).pow(2)), h(1)));

    Random rng(41);
    for (int k = 0; k < 60; ++k) {
        const int n = rng.uniform(1, 2);
        const PoissonElement lambda = rng.nonzero_poisson(n, 2, 2);
        const EnvElement u = rng.nonzero_env(n, 3, 2, 2);
        CHECK(env_mul(e(lambda.pow(static_cast<int>(hdeg(u)) + 1)), u) == env_mul(lambda_shift(lambda, u), e(lambda)));
    }
}

TEST_CASE("composition")
{
    CHECK(composition(left_scale(x(1).pow(2), h(1)), left_scale(x(1), h(1))).is_zero());
    CHECK(composition(EnvElement::word(HWord{2, 1}), h(1)).is_zero());
    // The leading word drops from h(x2) to h(x1).
    const EnvElement u = left_scale(x(2), h(2)) + h(1);
    const EnvElement v = left_scale(x(1), h(2));
    CHECK(composition(u, v) == left_scale(x(1), h(1)));
    CHECK_THROWS_AS(composition(h(1), h(2)), DomainError);
}

TEST_CASE("witness verification")
{
    const std::vector<EnvElement> s{h(1), left_scale(x(1), h(1))};
    CHECK(verify_witness(Witness{e(x(1)), EnvElement(-1)}, s));
    CHECK_FALSE(verify_witness(Witness{EnvElement(), EnvElement()}, s));
    CHECK_FALSE(verify_witness(Witness{EnvElement(1), EnvElement()}, std::vector<EnvElement>{h(1), h(2)}));
}

TEST_CASE("decision examples")
{
    {
        const std::vector<EnvElement> s{h(1), h(2)};
        const DependencyVerdict v = decide_left_dependence(s);
        CHECK(v.status == DependencyStatus::Independent);
        CHECK(pairwise_incomparable(v.final_rows));
    }
    {
        const std::vector<EnvElement> s{h(1), left_scale(x(1), h(1))};
        const DependencyVerdict v = decide_left_dependence(s);
        REQUIRE(v.status == DependencyStatus::Dependent);
        CHECK(verify_witness(*v.witness, s));
        CHECK(*v.witness == Witness{e(x(1)), EnvElement(-1)});
    }
    {
        const std::vector<EnvElement> s{ham(x(1).pow(2)), ham(x(1).pow(3))};
        const DependencyVerdict v = decide_left_dependence(s);
        REQUIRE(v.status == DependencyStatus::Dependent);
        CHECK(verify_witness(*v.witness, s));
    }
    {
        const std::vector<EnvElement> s{h(1), EnvElement()};
        const DependencyVerdict v = decide_left_dependence(s);
        REQUIRE(v.status == DependencyStatus::Dependent);
        CHECK(*v.witness == Witness{EnvElement(), EnvElement(1)});
    }
    {
        const std::vector<EnvElement> s{EnvElement::word(HWord{2, 1}), h(1), left_scale(x(2), h(1))};
        CHECK(decide_left_dependence(s, 0).status == DependencyStatus::BudgetExhausted);
    }
}

TEST_CASE("brute force")
{
    const std::vector<EnvElement> s{h(1), left_scale(x(1), h(1))};
    const auto w = brute_force_dependence(s, 0, 1);
    REQUIRE(w.has_value());
    CHECK(verify_witness(*w, s));
    CHECK_FALSE(brute_force_dependence(std::vector<EnvElement>{h(1)}, 3, 3).has_value());
    CHECK(poisson_monomials(2, 2).size() == 1 + 2 + 4);
    CHECK(hwords(2, 2).size() == 1 + 2 + 4);
}

TEST_CASE("decision agrees with brute force on small random systems")
{
    Random rng(42);
    for (int k = 0; k < 40; ++k) {
        std::vector<EnvElement> s;
        const int size = rng.uniform(1, 3);
        for (int i = 0; i < size; ++i)
            s.push_back(rng.nonzero_env(2, 1, 1, 2));
        if (rng.coin())
            s.push_back(left_scale(rng.nonzero_poisson(2, 1, 2), s[0]));
        const DependencyVerdict v = decide_left_dependence(s);
        REQUIRE(v.status != DependencyStatus::BudgetExhausted);
        const bool dependent = v.status == DependencyStatus::Dependent;
        if (dependent)
            CHECK(verify_witness(*v.witness, s));
        else
            CHECK(pairwise_incomparable(v.final_rows));
        CHECK(brute_force_dependence(s, 3, 4, 2).has_value() == dependent);
    }
}
