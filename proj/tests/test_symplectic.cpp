#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fpa/random.hpp"
#include "fpa/symplectic.hpp"

using namespace fpa;

namespace {

SymplecticPoly one(int n) { return SymplecticPoly::constant(2 * n, Scalar(1)); }

// A Weyl element acting on k[t1..tn] as a differential operator:
// X_i is multiplication by t_i and Y_i is -d/dt_i, so that [X_i, Y_i] = 1.
Polynomial act(const WeylElement& a, const Polynomial& p)
{
    const int n = a.n();
    Polynomial out(n);
    for (const auto& [key, c] : a.terms()) {
        Polynomial q = p;
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < key[n + i]; ++k) {
                q = q.derivative(i);
                sign = -sign;
            }
        for (int i = 0; i < n; ++i)
            q = q * Polynomial::variable(n, i).pow(key[i]);
        out += Scalar(sign) * c * q;
    }
    return out;
}

}  // namespace

TEST_CASE("symplectic bracket")
{
    CHECK(sp_bracket(sp_x(1, 1), sp_y(1, 1)) == one(1));
    CHECK(sp_bracket(sp_x(2, 1), sp_x(2, 2)).is_zero());
    CHECK(sp_bracket(sp_x(1, 1).pow(2), sp_y(1, 1)) == Scalar(2) * sp_x(1, 1));
    CHECK(sp_rank(sp_x(3, 1)) == 3);
}

TEST_CASE("Weyl products")
{
    const WeylElement X = WeylElement::X(1, 1), Y = WeylElement::Y(1, 1);
    CHECK(weyl_mul(Y, X) == weyl_mul(X, Y) - WeylElement::constant(1, Scalar(1)));
    CHECK(weyl_mul(X, Y) == WeylElement::monomial(MultiIndex{1, 1}, Scalar(1)));

    Random rng(61);
    for (int k = 0; k < 60; ++k) {
        const int n = rng.uniform(1, 2);
        const WeylElement a = rng.weyl(n, 3, 2), b = rng.weyl(n, 3, 2), c = rng.weyl(n, 2, 2);
        CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
        // The product matches composition of differential operators.
        const Polynomial p = rng.symplectic(n, 4, 3);
        Polynomial test(n);
        for (const auto& [m, coeff] : p.terms()) {
            MultiIndex low(n);
            for (int i = 0; i < n; ++i)
                low.set(i, m[i] + m[n + i]);
            test.add_term(low, coeff);
        }
        CHECK(act(weyl_mul(a, b), test) == act(a, act(b, test)));
    }
}

TEST_CASE("symmetrization")
{
    const SymplecticPoly x = sp_x(1, 1), y = sp_y(1, 1);
    CHECK(symmetrize(x * y) ==
          WeylElement::monomial(MultiIndex{1, 1}, Scalar(1)) - WeylElement::constant(1, Scalar(1, 2)));
    CHECK(symmetrize(x * x) == WeylElement::monomial(MultiIndex{2, 0}, Scalar(1)));
    CHECK(symmetrize(one(1)) == WeylElement::constant(1, Scalar(1)));
}

TEST_CASE("P_n^e products")
{
    const PnEnvElement hx = PnEnvElement::h_x(1, 1), hy = PnEnvElement::h_y(1, 1);
    const PnEnvElement y = PnEnvElement::from_poly(sp_y(1, 1));
    CHECK(pn_env_mul(hx, y) == PnEnvElement::term(sp_y(1, 1), MultiIndex{1, 0}) + PnEnvElement::from_poly(one(1)));
    CHECK(pn_env_mul(hx, hy) == PnEnvElement::term(one(1), MultiIndex{1, 1}));
    CHECK(pn_env_mul(hx, hy) == pn_env_mul(hy, hx));

    Random rng(62);
    for (int k = 0; k < 60; ++k) {
        const int n = rng.uniform(1, 2);
        const PnEnvElement a = rng.pnenv(n, 2, 2, 2), b = rng.pnenv(n, 2, 2, 2), c = rng.pnenv(n, 2, 2, 2);
        CHECK(pn_env_mul(pn_env_mul(a, b), c) == pn_env_mul(a, pn_env_mul(b, c)));
    }
}

TEST_CASE("theta images")
{
    const PnEnvElement x = PnEnvElement::from_poly(sp_x(1, 1));
    const PnEnvElement y = PnEnvElement::from_poly(sp_y(1, 1));
    const PnEnvElement hx = PnEnvElement::h_x(1, 1), hy = PnEnvElement::h_y(1, 1);
    CHECK(theta_left(WeylElement::X(1, 1)) == x + Scalar(1, 2) * hx);
    CHECK(theta_right(WeylElement::Y(1, 1)) == y - Scalar(1, 2) * hy);
    const PnEnvElement l = theta_left(WeylElement::X(1, 1)), r = theta_left(WeylElement::Y(1, 1));
    CHECK(pn_env_mul(l, r) - pn_env_mul(r, l) == PnEnvElement::from_poly(one(1)));

    Random rng(63);
    for (int k = 0; k < 40; ++k) {
        const int n = rng.uniform(1, 2);
        const WeylElement a = rng.weyl(n, 2, 2), b = rng.weyl(n, 2, 2);
        CHECK(theta_left(weyl_mul(a, b)) == pn_env_mul(theta_left(a), theta_left(b)));
        CHECK(theta_right(weyl_mul(a, b)) == pn_env_mul(theta_right(b), theta_right(a)));
    }
}

TEST_CASE("rho_w and Moyal")
{
    const SymplecticPoly x = sp_x(1, 1), y = sp_y(1, 1);
    CHECK(rho_w(x) == theta_left(WeylElement::X(1, 1)));
    CHECK(rho_w(one(1)) == PnEnvElement::from_poly(one(1)));
    CHECK(moyal(x, y) == x * y + Scalar(1, 2) * one(1));
    CHECK(moyal(x * y + x, one(1)) == x * y + x);
    CHECK(moyal(x, y) - moyal(y, x) == sp_bracket(x, y));
    CHECK(moyal_order(x, y, 0) == x * y);

    Random rng(64);
    for (int k = 0; k < 60; ++k) {
        const int n = rng.uniform(1, 2);
        const SymplecticPoly f = rng.symplectic(n, 3, 3), g = rng.symplectic(n, 3, 3);
        CHECK(rho_w(f) == theta_left(symmetrize(f)));
        CHECK(pn_env_mul(rho_w(f), rho_w(g)) == rho_w(moyal(f, g)));
        SymplecticPoly total(2 * n);
        for (int order = 0; order <= 6; ++order)
            total += moyal_order(f, g, order);
        CHECK(total == moyal(f, g));
    }
}
