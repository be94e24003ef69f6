#pragma once

// Fox derivatives, Jacobian matrices of Poisson endomorphisms, bounded search
// for inverse Jacobians and the dependence test for pairs of elements.

#include <optional>
#include <vector>

#include "fpa/dependence.hpp"
#include "fpa/envelope.hpp"
#include "fpa/poisson.hpp"

namespace fpa {

// x_i -> images[i-1], i = 1..n.
struct Endomorphism {
    int n = 0;
    std::vector<PoissonElement> images;

    static Endomorphism identity(int n);
    PoissonElement apply(const PoissonElement& p) const;
};

// (outer o inner)(x_i) = outer(inner(x_i)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

using EnvMatrix = std::vector<std::vector<EnvElement>>;

EnvMatrix identity_matrix(int n);
EnvMatrix matrix_mul(const EnvMatrix& a, const EnvMatrix& b);

// Coefficient of h(x_i) in h_p = sum_i fox(p, i) h(x_i). Throws DomainError
// unless 1 <= i <= n.
EnvElement fox(const PoissonElement& p, int i, int n);

// Entry (i, j) is fox(psi(x_i), j).
EnvMatrix jacobian(const Endomorphism& psi);

struct InversionResult {
    // Unknown means nothing was found inside the bounds, not that J is
    // singular.
    enum class Status { Invertible, Unknown } status = Status::Unknown;
    std::optional<EnvMatrix> inverse;
};

// Looks for V with V J = J V = I, entries supported on words of length
// <= hdeg_bound with P-coefficients of degree <= coeff_deg_bound.
InversionResult invert_jacobian_bounded(const EnvMatrix& jacobian, int hdeg_bound,
                                        int coeff_deg_bound);

struct PairStatus {
    enum class Kind { Free, Dependent } kind = Kind::Free;
    // lambda h_f = mu h_g with lambda, mu in P, scaled to coprime integer
    // coefficients and a positive leading coefficient of lambda. Absent when
    // only a dependency with coefficients outside P was found.
    std::optional<PoissonElement> lambda;
    std::optional<PoissonElement> mu;
    std::optional<Witness> witness;
};

// Free iff {f, g} != 0. Throws DomainError on a zero argument.
PairStatus pair_status(const PoissonElement& f, const PoissonElement& g,
                       std::size_t max_steps = kDefaultMaxSteps);

// True iff every image is an ordinary polynomial in x1..xn.
bool has_polynomial_images(const Endomorphism& psi);

}  // namespace fpa
