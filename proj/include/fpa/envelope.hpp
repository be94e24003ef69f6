#pragma once

// The universal enveloping algebra P^e of the free Poisson algebra, stored in
// the canonical form sum p_w * w: P-coefficients on the left of words in the
// free generators h(x1), ..., h(xn).

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fpa/core.hpp"
#include "fpa/poisson.hpp"

namespace fpa {

// A word h(x_i1) h(x_i2) ... h(x_ik); the empty word is the identity.
class HWord {
public:
    HWord() = default;
    explicit HWord(std::span<const int> letters);
    HWord(std::initializer_list<int> letters);
    static HWord letter(int index);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
    int back() const { return (*this)[size() - 1]; }
    std::vector<int> letters() const;
    int max_letter() const;
    HWord substr(std::size_t pos, std::size_t len = std::string::npos) const;
    HWord operator+(const HWord& other) const;
    const std::string& raw() const { return letters_; }

    // True iff *this is a suffix of `other`, i.e. other = t * (*this).
    bool left_divides(const HWord& other) const;

    friend bool operator==(const HWord&, const HWord&) = default;

private:
    std::string letters_;
};

// Longer words are larger; equal lengths compare left to right with
// h(x1) < h(x2) < ... .
struct HWordOrder {
    bool operator()(const HWord& a, const HWord& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.raw() < b.raw();
    }
};

class EnvElement {
public:
    using Terms = std::map<HWord, PoissonElement, HWordOrder>;

    EnvElement() = default;
    EnvElement(const PoissonElement& p);  // NOLINT: P embeds in P^e
    EnvElement(const Scalar& c) : EnvElement(PoissonElement(c)) {}  // NOLINT
    EnvElement(int c) : EnvElement(PoissonElement(c)) {}  // NOLINT
    static EnvElement term(const PoissonElement& coeff, const HWord& word);
    static EnvElement word(const HWord& word) { return term(PoissonElement(1), word); }
    static EnvElement h(int index) { return word(HWord::letter(index)); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const HWord& word, const PoissonElement& coeff);
    // Coefficient of a word (zero if absent).
    PoissonElement coefficient(const HWord& word) const;
    int max_variable() const;

    EnvElement& operator+=(const EnvElement& other);
    EnvElement& operator-=(const EnvElement& other);
    EnvElement& operator*=(const Scalar& c);
    friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
    friend EnvElement operator-(EnvElement a) { return a *= Scalar(-1); }
    friend EnvElement operator*(const Scalar& c, EnvElement a) { return a *= c; }
    friend bool operator==(const EnvElement&, const EnvElement&) = default;

    // Right multiplication by a word; no rewriting is needed.
    EnvElement times_word(const HWord& word) const;

private:
    Terms terms_;
};

// p * u with p in P acting on the left: multiplies every coefficient.
EnvElement left_scale(const PoissonElement& p, const EnvElement& u);

// The word w times the coefficient q, rewritten into canonical form by
// h(x_a) q = q h(x_a) + {x_a, q}.
EnvElement word_times(const HWord& w, const PoissonElement& q);

EnvElement env_mul(const EnvElement& u, const EnvElement& v);
EnvElement env_pow(const EnvElement& u, int k);

// The universal derivation p -> h_p.
EnvElement ham(const PoissonElement& p);

Degree hdeg(const EnvElement& u);
// Leading word, its coefficient and the leading term; DomainError on zero.
const HWord& ldm(const EnvElement& u);
const PoissonElement& ldc(const EnvElement& u);
EnvElement ldt(const EnvElement& u);

// Terms of maximal word length.
EnvElement top(const EnvElement& u);
// Product in the associated graded algebra P (x) A: coefficients commute
// with the words.
EnvElement graded_product(const EnvElement& a, const EnvElement& b);

struct Splitting {
    PoissonElement p_part;
    EnvElement omega_part;
};
Splitting split(const EnvElement& u);

// (f_1, ..., f_n) with u = f_1 h(x1) + ... + f_n h(xn). Throws DomainError
// when u has a nonzero component in P or a letter beyond n.
std::vector<EnvElement> right_cofactors(const EnvElement& u, int n);

}  // namespace fpa
