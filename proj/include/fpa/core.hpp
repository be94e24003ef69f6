#pragma once

// Exact scalars, multi-indices and the error types shared by every module.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fpa {

// Arbitrary precision rational; gmpxx keeps values canonical after every
// arithmetic operation.
using Scalar = mpq_class;

// Degree of an element; the zero element has degree kMinusInfinity.
using Degree = long;
inline constexpr Degree kMinusInfinity = std::numeric_limits<Degree>::min();

// Raised when an operation is applied outside its domain (zero leading term,
// index out of range, mismatched variable counts, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// Parses "7", "-3", "2/6" (normalised to 1/3).
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

Scalar factorial(int k);
Scalar power_of_two(int k);

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t length) : entries_(length, 0) {}
    MultiIndex(std::initializer_list<int> entries);
    explicit MultiIndex(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    void set(std::size_t i, int value);
    void increment(std::size_t i, int by = 1);

    bool is_zero() const;

    MultiIndex operator+(const MultiIndex& other) const;
    // Entrywise difference; throws DomainError if any entry would go negative.
    MultiIndex operator-(const MultiIndex& other) const;
    // True iff every entry of *this is <= the matching entry of other.
    bool divides(const MultiIndex& other) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

int norm(const MultiIndex& a);
Scalar factorial(const MultiIndex& a);
// (a1, a2) -> (a2, a1) for the two halves of an even-length index.
MultiIndex swap_halves(const MultiIndex& a);

// All multi-indices of the given length whose entries are bounded entrywise by
// `bound` (inclusive).
std::vector<MultiIndex> indices_below(const MultiIndex& bound);
// All multi-indices of the given length with norm exactly `total`.
std::vector<MultiIndex> indices_with_norm(std::size_t length, int total);

// Total degree first, then lexicographic on entries. The vector with the
// larger entry at the first differing position is the larger one.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

}  // namespace fpa
