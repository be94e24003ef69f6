#pragma once

// The free Poisson algebra k{x1..xn}: commutative polynomials in the Lyndon
// basis elements, with the bracket extended from the Lie bracket by the
// Leibniz rule.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fpa/core.hpp"
#include "fpa/free_lie.hpp"
#include "fpa/polynomial.hpp"

namespace fpa {

// A product of powers of basis elements; factors kept in basis order.
class PoissonMonomial {
public:
    using Factor = std::pair<LieWord, int>;

    PoissonMonomial() = default;
    static PoissonMonomial basis(const LieWord& word, int exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int exponent_of(const LieWord& word) const;

    // Weighted degree: each basis element counts with its word length.
    int degree() const;
    int degree_in(int variable) const;
    // Per-variable degrees, length n.
    std::vector<int> multidegree(int n) const;
    int max_variable() const;

    PoissonMonomial operator*(const PoissonMonomial& other) const;
    // Removes one power of `word`; throws DomainError if absent.
    PoissonMonomial without(const LieWord& word) const;

    friend bool operator==(const PoissonMonomial&, const PoissonMonomial&) = default;

private:
    std::vector<Factor> factors_;
};

// Graded by weighted degree, then lexicographic on exponent vectors indexed in
// basis order (a larger exponent on an earlier basis element wins).
struct MonomialOrder {
    bool operator()(const PoissonMonomial& a, const PoissonMonomial& b) const;
};

class PoissonElement {
public:
    using Terms = std::map<PoissonMonomial, Scalar, MonomialOrder>;

    PoissonElement() = default;
    PoissonElement(const Scalar& c);  // NOLINT: constants embed implicitly
    PoissonElement(int c) : PoissonElement(Scalar(c)) {}  // NOLINT
    static PoissonElement generator(int index);
    static PoissonElement basis(const LieWord& word);
    static PoissonElement from_lie(const LieElement& lie);
    static PoissonElement monomial(const PoissonMonomial& m, const Scalar& c = Scalar(1));

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; throws DomainError if not constant.
    Scalar constant_value() const;
    void add_term(const PoissonMonomial& m, const Scalar& c);

    const PoissonMonomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    int max_variable() const;

    PoissonElement& operator+=(const PoissonElement& other);
    PoissonElement& operator-=(const PoissonElement& other);
    PoissonElement& operator*=(const Scalar& c);
    friend PoissonElement operator+(PoissonElement a, const PoissonElement& b) { return a += b; }
    friend PoissonElement operator-(PoissonElement a, const PoissonElement& b) { return a -= b; }
    friend PoissonElement operator-(PoissonElement a) { return a *= Scalar(-1); }
    friend PoissonElement operator*(PoissonElement a, const Scalar& c) { return a *= c; }
    friend PoissonElement operator*(const Scalar& c, PoissonElement a) { return a *= c; }
    friend PoissonElement operator*(const PoissonElement& a, const PoissonElement& b);
    friend bool operator==(const PoissonElement&, const PoissonElement&) = default;

    PoissonElement pow(int k) const;

private:
    Terms terms_;
};

PoissonElement poisson_bracket(const PoissonElement& a, const PoissonElement& b);

Degree degree(const PoissonElement& a);
Degree degree_in(const PoissonElement& a, int variable);
bool is_homogeneous(const PoissonElement& a);

// Monic gcd in the polynomial ring on the basis elements. Throws on (0, 0).
PoissonElement gcd(const PoissonElement& a, const PoissonElement& b);
std::optional<PoissonElement> divide_exact(const PoissonElement& a, const PoissonElement& b);

// Image under the Poisson endomorphism x_i -> images[i-1].
PoissonElement substitute(const PoissonElement& p, std::span<const PoissonElement> images);

// True iff only the generators x_i occur (no bracket basis elements).
bool is_commutative_polynomial(const PoissonElement& p);

// Ordinary partial derivative with respect to a basis element, treating the
// basis elements as independent polynomial variables.
PoissonElement partial(const PoissonElement& p, const LieWord& variable);

}  // namespace fpa
