#pragma once

// The free Lie algebra on x1..xn with the Lyndon basis.
//
// Basis elements are identified with Lyndon words (a word strictly smaller
// than each of its proper rotations, letters ordered x1 < x2 < ... < xn);
// the Lie polynomial attached to a word is its standard bracketing, obtained
// by splitting off the longest proper Lyndon suffix.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpa/core.hpp"

namespace fpa {

// A nonempty word over variable indices 1..255. Letters are stored as chars
// so short words live inline and compare with memcmp.
class LieWord {
public:
    LieWord() = default;
    explicit LieWord(std::span<const int> letters);
    LieWord(std::initializer_list<int> letters);
    static LieWord letter(int index);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
    std::vector<int> letters() const;
    int max_letter() const;
    // Number of occurrences of letter `index`.
    int count(int index) const;
    LieWord substr(std::size_t pos, std::size_t len = std::string::npos) const;
    LieWord operator+(const LieWord& other) const;
    const std::string& raw() const { return letters_; }

    friend bool operator==(const LieWord&, const LieWord&) = default;

private:
    std::string letters_;
};

// Plain lexicographic order, a proper prefix being smaller.
inline bool lex_less(const LieWord& a, const LieWord& b) { return a.raw() < b.raw(); }

// Basis enumeration order: by degree, then lexicographically.
struct BasisOrder {
    bool operator()(const LieWord& a, const LieWord& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.raw() < b.raw();
    }
};

// Throws DomainError on an empty word.
bool is_lyndon(std::span<const int> word);
bool is_lyndon(const LieWord& word);

// For a Lyndon word of length >= 2: (u, v) with v the longest proper Lyndon
// suffix. Throws DomainError otherwise.
std::pair<LieWord, LieWord> standard_factorization(const LieWord& word);

// All Lyndon words over n letters of length <= max_degree, in basis order.
std::vector<LieWord> lyndon_basis(int n, int max_degree);

// "x1", "[x1,x2]", "[x1,[x1,x2]]", ...
std::string bracket_string(const LieWord& word);

class LieElement {
public:
    using Terms = std::map<LieWord, Scalar, BasisOrder>;

    LieElement() = default;
    static LieElement basis(const LieWord& word, const Scalar& c = Scalar(1));
    static LieElement generator(int index) { return basis(LieWord::letter(index)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const LieWord& word, const Scalar& c);

    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);
    LieElement& operator*=(const Scalar& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    Terms terms_;
};

// Bracket of two basis elements, rewritten into the Lyndon basis. Results are
// memoised process-wide behind a mutex.
const LieElement& bracket_basis(const LieWord& u, const LieWord& v);

LieElement lie_bracket(const LieElement& a, const LieElement& b);

}  // namespace fpa
