#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpa/calculus.hpp"
#include "fpa/random.hpp"

using namespace fpa;

namespace {

PoissonElement x(int i) { return PoissonElement::generator(i); }
EnvElement h(int i) { return EnvElement::h(i); }
EnvElement e(const PoissonElement& p) { return EnvElement(p); }

bool two_sided_inverse(const EnvMatrix& v, const EnvMatrix& j)
{
    const EnvMatrix id = identity_matrix(static_cast<int>(j.size()));
    return matrix_mul(v, j) == id && matrix_mul(j, v) == id;
}

}  // namespace

TEST_CASE("Fox derivatives")
{
    CHECK(fox(x(1) * x(2), 1, 2) == e(x(2)));
    const PoissonElement c = PoissonElement::basis(LieWord{1, 2});
    CHECK(fox(c, 1, 2) == -h(2));
    CHECK(fox(c, 2, 2) == h(1));
    CHECK(fox(x(3), 1, 3).is_zero());
    CHECK_THROWS_AS(fox(x(1), 3, 2), DomainError);
    CHECK_THROWS_AS(fox(x(1), 0, 2), DomainError);

    Random rng(51);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement p = rng.poisson(n, 4, 3), q = rng.poisson(n, 3, 2);
        EnvElement sum;
        for (int i = 1; i <= n; ++i) {
            sum += env_mul(fox(p, i, n), h(i));
            CHECK(fox(p * q, i, n) == left_scale(p, fox(q, i, n)) + left_scale(q, fox(p, i, n)));
        }
        CHECK(sum == ham(p));
    }
}

TEST_CASE("endomorphisms")
{
    const Endomorphism a{2, {x(1), x(2) + x(1).pow(2)}};
    const Endomorphism b{2, {x(1) + x(2), x(2)}};
    const Endomorphism ab = compose(a, b);
    CHECK(ab.images[0] == x(1) + x(2) + x(1).pow(2));
    CHECK(ab.images[1] == x(2) + x(1).pow(2));
    CHECK(Endomorphism::identity(2).apply(x(1) * x(2)) == x(1) * x(2));
    CHECK(has_polynomial_images(ab));
    CHECK_FALSE(has_polynomial_images(Endomorphism{2, {x(1), PoissonElement::basis(LieWord{1, 2})}}));
}

TEST_CASE("Jacobian matrices")
{
    CHECK(jacobian(Endomorphism::identity(3)) == identity_matrix(3));
    const EnvMatrix j = jacobian(Endomorphism{2, {x(1), x(2) + x(1).pow(2)}});
    CHECK(j == EnvMatrix{{EnvElement(1), EnvElement()}, {e(Scalar(2) * x(1)), EnvElement(1)}});

    const PoissonElement image = x(2) + poisson_bracket(x(1), poisson_bracket(x(1), x(2)));
    const EnvMatrix k = jacobian(Endomorphism{2, {x(1), image}});
    CHECK(env_mul(k[1][0], h(1)) + env_mul(k[1][1], h(2)) == ham(image));
}

TEST_CASE("bounded inversion")
{
    const EnvMatrix j = jacobian(Endomorphism{2, {x(1), x(2) + x(1).pow(2)}});
    const InversionResult r = invert_jacobian_bounded(j, 1, 2);
    REQUIRE(r.status == InversionResult::Status::Invertible);
    CHECK(*r.inverse == EnvMatrix{{EnvElement(1), EnvElement()}, {e(Scalar(-2) * x(1)), EnvElement(1)}});
    CHECK(two_sided_inverse(*r.inverse, j));

    const InversionResult id = invert_jacobian_bounded(identity_matrix(2), 0, 0);
    REQUIRE(id.status == InversionResult::Status::Invertible);
    CHECK(*id.inverse == identity_matrix(2));

    const EnvMatrix sq = jacobian(Endomorphism{2, {x(1).pow(2), x(2)}});
    CHECK(invert_jacobian_bounded(sq, 3, 6).status == InversionResult::Status::Unknown);
}

TEST_CASE("tame automorphisms have verified inverse Jacobians")
{
    Random rng(52);
    for (int k = 0; k < 10; ++k) {
        const Endomorphism psi = rng.tame_automorphism(3, 3);
        const EnvMatrix j = jacobian(psi);
        const InversionResult r = invert_jacobian_bounded(j, 3, 12);
        REQUIRE(r.status == InversionResult::Status::Invertible);
        CHECK(two_sided_inverse(*r.inverse, j));
        CHECK(has_polynomial_images(psi));
    }
}

TEST_CASE("pair status")
{
    CHECK(pair_status(x(1), x(2)).kind == PairStatus::Kind::Free);

    const PairStatus s = pair_status(x(1).pow(2), x(1).pow(3));
    REQUIRE(s.kind == PairStatus::Kind::Dependent);
    CHECK(*s.lambda == Scalar(3) * x(1));
    CHECK(*s.mu == PoissonElement(2));

    const PoissonElement f = x(1) * x(2) + PoissonElement::basis(LieWord{1, 2});
    const PairStatus same = pair_status(f, f);
    REQUIRE(same.kind == PairStatus::Kind::Dependent);
    CHECK(*same.lambda == PoissonElement(1));
    CHECK(*same.mu == PoissonElement(1));

    CHECK_THROWS_AS(pair_status(PoissonElement(), x(1)), DomainError);
}
