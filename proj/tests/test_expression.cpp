#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpa/expression.hpp"
#include "fpa/random.hpp"
#include "fpa/render.hpp"

using namespace fpa;

namespace {

PoissonElement x(int i) { return PoissonElement::generator(i); }

}  // namespace

TEST_CASE("syntax trees")
{
    const ExprPtr e = parse_expression("{x1, x2*x3}");
    CHECK(e->kind == Expr::Kind::Brace);
    CHECK(e->children[1]->kind == Expr::Kind::Mul);
    const ExprPtr f = parse_expression("h(x1)*x2 + 1/2");
    CHECK(f->kind == Expr::Kind::Add);
    CHECK(f->children[0]->kind == Expr::Kind::Mul);
    CHECK(f->children[1]->kind == Expr::Kind::Number);
    CHECK(f->children[1]->value == Scalar(1, 2));
}

TEST_CASE("syntax errors carry positions")
{
    try {
        parse_expression("{x1,");
        FAIL("no error");
    } catch (const ParseError& err) {
        CHECK(err.line() == 1);
        CHECK(err.column() == 5);
    }
    CHECK_THROWS_AS(parse_expression("x1 +"), ParseError);
    CHECK_THROWS_AS(parse_expression("x1 x2"), ParseError);
    CHECK_THROWS_AS(parse_expression("(x1"), ParseError);
    CHECK_THROWS_AS(parse_expression("z1"), ParseError);
    try {
        parse_expression("x1 +\n  * x2");
        FAIL("no error");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
    }
}

TEST_CASE("evaluation in each mode")
{
    CHECK(parse_poisson("{x1, x2*x3}", 3) == poisson_bracket(x(1), x(2) * x(3)));
    CHECK(parse_poisson("[x1,x2]*x3 + x2*[x1,x3]", 3) == poisson_bracket(x(1), x(2) * x(3)));
    CHECK(parse_poisson("(x1 + x2)^2 - 2*x1*x2", 2) == x(1).pow(2) + x(2).pow(2));
    CHECK(parse_env("h(x1)*x2", 2) == env_mul(EnvElement::h(1), EnvElement(x(2))));
    CHECK(parse_env("h(x1*x2)", 2) == ham(x(1) * x(2)));
    CHECK(parse_env("h(x1)h(x2)", 2) == EnvElement::word(HWord{1, 2}));
    CHECK(parse_symplectic("{x1, y1}", 1) == SymplecticPoly::constant(2, Scalar(1)));
    CHECK(parse_weyl("Y1*X1", 1) == weyl_mul(WeylElement::Y(1, 1), WeylElement::X(1, 1)));
    CHECK(parse_weyl("[X1, Y1]", 1) == WeylElement::constant(1, Scalar(1)));
    CHECK(parse_pnenv("h(x1)*y1", 1) == pn_env_mul(PnEnvElement::h_x(1, 1), PnEnvElement::from_poly(sp_y(1, 1))));
}

TEST_CASE("mode restrictions and index ranges")
{
    CHECK_THROWS_AS(parse_poisson("h(x1)", 2), ParseError);
    CHECK_THROWS_AS(parse_poisson("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_env("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_env("h(h(x1))", 2), ParseError);
    CHECK_THROWS_AS(parse_symplectic("h(x1)", 1), ParseError);
    CHECK_THROWS_AS(parse_weyl("{X1, Y1}", 1), ParseError);
    CHECK_THROWS_AS(parse_poisson("x3", 2), DomainError);
    CHECK_THROWS_AS(parse_poisson("x0", 2), DomainError);
    CHECK_THROWS_AS(parse_poisson("x1", 0), DomainError);
}

TEST_CASE("rendering")
{
    CHECK(render(poisson_bracket(x(1), x(2) * x(3))) == "x2*[x1,x3] + x3*[x1,x2]");
    CHECK(render(PoissonElement()) == "0");
    CHECK(render(Scalar(-1, 2) * x(1) + PoissonElement(3)) == "-1/2*x1 + 3");
    CHECK(render(EnvElement::word(HWord{1, 2})) == "h(x1)h(x2)");
    CHECK(render(HWord{}) == "1");
    CHECK(render(moyal(sp_x(1, 1), sp_y(1, 1))) == "x1*y1 + 1/2");
    const auto j = to_json(EnvElement::term(Scalar(-1, 2) * PoissonElement::basis(LieWord{1, 2}), HWord{1, 2}));
    CHECK(j.dump() == R"({"terms":[{"coeff":"-1/2","hword":[1,2],"pmono":[{"basis":"[x1,x2]","exp":1}]}]})");
}

TEST_CASE("render then parse is the identity")
{
    Random rng(71);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(1, 3), m = rng.uniform(1, 2);
        const PoissonElement p = rng.poisson(n, 4, 4);
        const EnvElement u = rng.env(n, 3, 3, 4);
        const SymplecticPoly f = rng.symplectic(m, 4, 4);
        const WeylElement w = rng.weyl(m, 4, 4);
        const PnEnvElement q = rng.pnenv(m, 3, 3, 3);
        CHECK(parse_poisson(render(p), n) == p);
        CHECK(parse_env(render(u), n) == u);
        CHECK(parse_symplectic(render(f), m) == f);
        CHECK(parse_weyl(render(w), m) == w);
        CHECK(parse_pnenv(render(q), m) == q);
    }
}
