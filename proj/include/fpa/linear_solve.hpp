#pragma once

// Sparse incremental row echelon forms, exact over the rationals and modulo a
// 61-bit prime, used by the bounded search routines.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fpa/core.hpp"

namespace fpa {

using SparseVector = std::map<std::size_t, Scalar>;
// Coefficients indexed by the identifiers of inserted vectors.
using Combination = std::map<std::size_t, Scalar>;

class ExactEchelon {
public:
    // Returns nullopt if v is independent of the vectors inserted so far (v is
    // then kept). Otherwise returns c with sum_id c[id] * v_id = 0, including
    // c[id] = 1 for v itself; v is not kept.
    std::optional<Combination> insert(const SparseVector& v, std::size_t id);

    // v = residual + sum_id c[id] * v_id, the residual having no entry on any
    // pivot position.
    std::pair<SparseVector, Combination> reduce(const SparseVector& v) const;

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseVector entries;  // leading entry 1 at the pivot
        Combination combo;
    };
    std::map<std::size_t, Row> rows_;  // keyed by pivot
};

class ModularEchelon {
public:
    static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
    using Vector = std::map<std::size_t, std::uint64_t>;

    // Returns the identifiers involved in a dependency when v is dependent on
    // the kept vectors, nullopt (and keeps v) otherwise.
    std::optional<std::vector<std::size_t>> insert(const Vector& v, std::size_t id);
    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Vector entries;
        std::map<std::size_t, std::uint64_t> combo;
    };
    std::map<std::size_t, Row> rows_;
};

// Rank-only variant over the same prime for large screens. Vectors are sorted
// by position with nonzero entries.
class ModularRank {
public:
    using Vector = std::vector<std::pair<std::size_t, std::uint64_t>>;

    // True (and v is kept) if v is independent of the kept vectors.
    bool insert(const Vector& v);
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<Vector> rows_;          // first entry is the pivot, equal to 1
    std::vector<std::int64_t> pivots_;  // row index by position, -1 if none
    std::vector<std::uint64_t> work_;
    std::vector<char> touched_;
};

// Image of a rational in Z/p; nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod_prime(const Scalar& s);
std::uint64_t mul_mod_prime(std::uint64_t a, std::uint64_t b);
std::uint64_t add_mod_prime(std::uint64_t a, std::uint64_t b);

}  // namespace fpa
