#pragma once

// Sparse commutative polynomials over the rationals in a fixed number of
// variables, with exact division and gcd.

#include <cstddef>
#include <map>
#include <optional>

#include "fpa/core.hpp"

namespace fpa {

class Polynomial {
public:
    using Terms = std::map<MultiIndex, Scalar, GradedLexLess>;

    explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Scalar& c);
    static Polynomial variable(std::size_t num_vars, std::size_t index);
    static Polynomial monomial(const MultiIndex& exponents, const Scalar& c);

    std::size_t num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    // Coefficient of a monomial (zero if absent).
    Scalar coefficient(const MultiIndex& exponents) const;
    void add_term(const MultiIndex& exponents, const Scalar& c);

    // Greatest monomial under GradedLexLess. Throws DomainError on zero.
    const MultiIndex& leading_monomial() const;
    const Scalar& leading_coefficient() const;

    Degree degree() const;
    Degree degree_in(std::size_t var) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(int k) const;
    Polynomial derivative(std::size_t var) const;
    // Scales so the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

private:
    void check_compatible(const Polynomial& other) const;

    std::size_t num_vars_;
    Terms terms_;
};

// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor. gcd(0, 0) throws DomainError.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace fpa
