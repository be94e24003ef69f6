#pragma once

// The symplectic Poisson algebra P_n = k[x1..xn, y1..yn], the Weyl algebra
// A_n, the enveloping algebra P_n^e, the symmetrization map, the
// isomorphism onto P_n^e and the Moyal product.
//
// Polynomials in P_n use 2n variables: index i-1 is x_i and n+i-1 is y_i.
// Multi-indices over the h-generators use the same layout.

#include <map>

#include "fpa/core.hpp"
#include "fpa/polynomial.hpp"

namespace fpa {

using SymplecticPoly = Polynomial;

SymplecticPoly sp_x(int n, int i);
SymplecticPoly sp_y(int n, int i);
int sp_rank(const SymplecticPoly& f);  // n, from the variable count

// sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i)
SymplecticPoly sp_bracket(const SymplecticPoly& f, const SymplecticPoly& g);

// d^gamma f
SymplecticPoly derivative(const SymplecticPoly& f, const MultiIndex& gamma);

// Normal-ordered sum of c X^alpha Y^beta; keys are (alpha | beta).
class WeylElement {
public:
    using Terms = std::map<MultiIndex, Scalar, GradedLexLess>;

    explicit WeylElement(int n = 0) : n_(n) {}
    static WeylElement constant(int n, const Scalar& c);
    static WeylElement X(int n, int i);
    static WeylElement Y(int n, int i);
    static WeylElement monomial(const MultiIndex& key, const Scalar& c);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const MultiIndex& key, const Scalar& c);

    WeylElement& operator+=(const WeylElement& other);
    WeylElement& operator-=(const WeylElement& other);
    WeylElement& operator*=(const Scalar& c);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const Scalar& c, WeylElement a) { return a *= c; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }

private:
    int n_;
    Terms terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

// Average over all orderings of the letters of each monomial.
WeylElement symmetrize(const SymplecticPoly& f);

// sum of p_gamma h^gamma with commuting h(x_i), h(y_i) and P_n-coefficients
// on the left.
class PnEnvElement {
public:
    using Terms = std::map<MultiIndex, SymplecticPoly, GradedLexLess>;

    explicit PnEnvElement(int n = 0) : n_(n) {}
    static PnEnvElement from_poly(const SymplecticPoly& p);
    static PnEnvElement h_x(int n, int i);
    static PnEnvElement h_y(int n, int i);
    static PnEnvElement term(const SymplecticPoly& coeff, const MultiIndex& gamma);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const MultiIndex& gamma, const SymplecticPoly& coeff);
    // Coefficient of h^gamma (zero if absent).
    SymplecticPoly coefficient(const MultiIndex& gamma) const;

    PnEnvElement& operator+=(const PnEnvElement& other);
    PnEnvElement& operator-=(const PnEnvElement& other);
    PnEnvElement& operator*=(const Scalar& c);
    friend PnEnvElement operator+(PnEnvElement a, const PnEnvElement& b) { return a += b; }
    friend PnEnvElement operator-(PnEnvElement a, const PnEnvElement& b) { return a -= b; }
    friend PnEnvElement operator*(const Scalar& c, PnEnvElement a) { return a *= c; }
    friend bool operator==(const PnEnvElement& a, const PnEnvElement& b) { return a.terms_ == b.terms_; }

private:
    int n_;
    Terms terms_;
};

// Product in P_n^e, moving h-letters right past coefficients with
// h_v q = q h_v + {v, q}.
PnEnvElement pn_env_mul(const PnEnvElement& a, const PnEnvElement& b);

// X_i -> x_i + h(x_i)/2, Y_i -> y_i + h(y_i)/2.
PnEnvElement theta_left(const WeylElement& a);
// X_i -> x_i - h(x_i)/2, Y_i -> y_i - h(y_i)/2, reversing factor order.
PnEnvElement theta_right(const WeylElement& a);

// sum_gamma d^gamma(f) h^gamma / (gamma! 2^|gamma|)
PnEnvElement rho_w(const SymplecticPoly& f);

// sum_alpha (-1)^|alpha_2| / (alpha! 2^|alpha|) d^alpha(f) d^alpha*(g)
SymplecticPoly moyal(const SymplecticPoly& f, const SymplecticPoly& g);
// The |alpha| = order part of the same sum.
SymplecticPoly moyal_order(const SymplecticPoly& f, const SymplecticPoly& g, int order);

}  // namespace fpa
