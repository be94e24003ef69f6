#pragma once

// Left dependence of finite systems over the enveloping algebra: the
// reduction procedure with certificates, a bounded brute-force oracle and the
// shift identity lambda^(m+1) u = v lambda.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fpa/envelope.hpp"

namespace fpa {

using Witness = std::vector<EnvElement>;

enum class DependencyStatus { Dependent, Independent, BudgetExhausted };

// One replacement s_target <- lambda * s_target - mu * shift * s_pivot.
struct ReductionStep {
    std::size_t target = 0;
    std::size_t pivot = 0;
    PoissonElement lambda;
    PoissonElement mu;
    HWord shift;
};

struct DependencyVerdict {
    DependencyStatus status = DependencyStatus::BudgetExhausted;
    std::optional<Witness> witness;
    std::vector<ReductionStep> trace;
    // Row elements when the loop stopped.
    std::vector<EnvElement> final_rows;
};

inline constexpr std::size_t kDefaultMaxSteps = 100000;

// v with lambda^(m+1) * u = v * lambda, where m = hdeg u.
EnvElement lambda_shift(const PoissonElement& lambda, const EnvElement& u);

// (ldc(v)/r) u - (ldc(u)/r) t v for ldm(u) = t ldm(v), r = gcd of the leading
// coefficients. Throws DomainError if ldm(v) does not left-divide ldm(u).
EnvElement composition(const EnvElement& u, const EnvElement& v);

bool verify_witness(std::span<const EnvElement> witness, std::span<const EnvElement> system);

// True iff no leading word of a nonzero element left-divides the leading word
// of another.
bool pairwise_incomparable(std::span<const EnvElement> system);

DependencyVerdict decide_left_dependence(std::span<const EnvElement> system,
                                         std::size_t max_steps = kDefaultMaxSteps);

// Searches coefficients supported on words of length <= hdeg_bound with
// P-coefficients of degree <= coeff_deg_bound, in variables x1..xn
// (n = 0 means the largest index occurring in the system). Any returned
// witness has been verified.
std::optional<Witness> brute_force_dependence(std::span<const EnvElement> system, int hdeg_bound,
                                              int coeff_deg_bound, int n = 0);

// All Poisson monomials in x1..xn of weighted degree <= max_degree, by degree.
std::vector<PoissonMonomial> poisson_monomials(int n, int max_degree);
// All words over h(x1)..h(xn) of length <= max_length, by length.
std::vector<HWord> hwords(int n, int max_length);

}  // namespace fpa
