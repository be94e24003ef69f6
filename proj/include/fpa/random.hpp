#pragma once

// Seeded generators of random elements for the property suites.

#include <cstdint>
#include <random>

#include "fpa/calculus.hpp"
#include "fpa/envelope.hpp"
#include "fpa/free_lie.hpp"
#include "fpa/poisson.hpp"
#include "fpa/symplectic.hpp"

namespace fpa {

class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi);  // inclusive
    bool coin(double p = 0.5);
    // Nonzero rational with small numerator and denominator.
    Scalar scalar();

    LieWord lyndon_word(int n, int degree);
    LieElement lie_element(int n, int max_degree, int max_terms);
    // Nonzero, every term of the given degree, at least one bracket factor
    // available when degree >= 2.
    LieElement homogeneous_lie(int n, int degree, int max_terms);

    PoissonMonomial poisson_monomial(int n, int degree);
    PoissonElement poisson(int n, int max_degree, int max_terms);
    PoissonElement nonzero_poisson(int n, int max_degree, int max_terms);
    PoissonElement homogeneous_poisson(int n, int degree, int max_terms);

    HWord hword(int n, int length);
    EnvElement env(int n, int max_hdeg, int max_coeff_degree, int max_terms);
    EnvElement nonzero_env(int n, int max_hdeg, int max_coeff_degree, int max_terms);

    MultiIndex multi_index(std::size_t length, int max_norm);
    SymplecticPoly symplectic(int n, int max_degree, int max_terms);
    WeylElement weyl(int n, int max_degree, int max_terms);
    PnEnvElement pnenv(int n, int max_hdeg, int max_coeff_degree, int max_terms);

    // A composition of up to `max_maps` elementary automorphisms of k{x,y}:
    // invertible linear maps and (x, y + c(x)) with deg c <= max_degree.
    Endomorphism tame_automorphism(int max_maps, int max_degree);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace fpa
