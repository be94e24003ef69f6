#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "fpa/free_lie.hpp"
#include "fpa/random.hpp"

using namespace fpa;

namespace {

// Free associative algebra: words (as strings of letter indices) to scalars.
using Assoc = std::map<std::string, Scalar>;

Assoc assoc_mul(const Assoc& a, const Assoc& b)
{
    Assoc out;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b)
            out[u + v] += c * d;
    std::erase_if(out, [](const auto& t) { return is_zero(t.second); });
    return out;
}

Assoc assoc_sub(Assoc a, const Assoc& b)
{
    for (const auto& [w, c] : b)
        a[w] -= c;
    std::erase_if(a, [](const auto& t) { return is_zero(t.second); });
    return a;
}

// Expands the standard bracketing of a Lyndon word as iterated commutators.
Assoc expand_word(const LieWord& w)
{
    if (w.size() == 1)
        return {{w.raw(), Scalar(1)}};
    const auto [u, v] = standard_factorization(w);
    const Assoc eu = expand_word(u), ev = expand_word(v);
    return assoc_sub(assoc_mul(eu, ev), assoc_mul(ev, eu));
}

Assoc expand(const LieElement& e)
{
    Assoc out;
    for (const auto& [w, c] : e.terms())
        for (const auto& [word, d] : expand_word(w))
            out[word] += c * d;
    std::erase_if(out, [](const auto& t) { return is_zero(t.second); });
    return out;
}

int mobius(int m)
{
    int mu = 1;
    for (int p = 2; p <= m; ++p)
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0;
            mu = -mu;
        }
    return mu;
}

// Number of Lyndon words of length k over n letters (necklace formula).
long witt(int n, int k)
{
    long total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d)
            continue;
        long power = 1;
        for (int i = 0; i < d; ++i)
            power *= n;
        total += mobius(k / d) * power;
    }
    return total / k;
}

LieElement g(int i) { return LieElement::generator(i); }

}  // namespace

TEST_CASE("Lyndon words")
{
    CHECK(is_lyndon(LieWord{1}));
    CHECK(is_lyndon(LieWord{1, 2}));
    CHECK_FALSE(is_lyndon(LieWord{2, 1}));
    CHECK_FALSE(is_lyndon(LieWord{1, 1}));
    CHECK(is_lyndon(LieWord{1, 1, 2}));
    CHECK(is_lyndon(LieWord{1, 2, 2}));
    CHECK_FALSE(is_lyndon(LieWord{1, 2, 1, 2}));
    CHECK_THROWS_AS(is_lyndon(std::span<const int>{}), DomainError);
}

TEST_CASE("standard factorization splits off the longest Lyndon suffix")
{
    CHECK(standard_factorization(LieWord{1, 1, 2}) == std::pair{LieWord{1}, LieWord{1, 2}});
    CHECK(standard_factorization(LieWord{1, 2, 2}) == std::pair{LieWord{1, 2}, LieWord{2}});
    CHECK(standard_factorization(LieWord{1, 1, 2, 1, 2}) == std::pair{LieWord{1, 1, 2}, LieWord{1, 2}});
    CHECK(bracket_string(LieWord{1, 2, 2}) == "[[x1,x2],x2]");
    CHECK(bracket_string(LieWord{1, 1, 2}) == "[x1,[x1,x2]]");
}

TEST_CASE("basis enumeration")
{
    CHECK(lyndon_basis(2, 1) == std::vector<LieWord>{LieWord{1}, LieWord{2}});
    CHECK(lyndon_basis(2, 2) == std::vector<LieWord>{LieWord{1}, LieWord{2}, LieWord{1, 2}});
    CHECK(lyndon_basis(2, 3) ==
          std::vector<LieWord>{LieWord{1}, LieWord{2}, LieWord{1, 2}, LieWord{1, 1, 2}, LieWord{1, 2, 2}});
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 6; ++k) {
            long count = 0;
            for (const LieWord& w : lyndon_basis(n, k))
                count += static_cast<long>(w.size()) == k;
            CHECK(count == witt(n, k));
        }
}

TEST_CASE("bracket examples")
{
    CHECK(lie_bracket(g(1), g(2)) == LieElement::basis(LieWord{1, 2}));
    CHECK(lie_bracket(g(1), g(1)).is_zero());
    CHECK(lie_bracket(LieElement::basis(LieWord{1, 2}), g(1)) == LieElement::basis(LieWord{1, 1, 2}, Scalar(-1)));
}

TEST_CASE("bracket agrees with the associative commutator")
{
    Random rng(11);
    for (int k = 0; k < 150; ++k) {
        const int n = rng.uniform(1, 3);
        const LieElement a = rng.lie_element(n, 3, 3);
        const LieElement b = rng.lie_element(n, 3, 3);
        const Assoc ea = expand(a), eb = expand(b);
        CHECK(expand(lie_bracket(a, b)) == assoc_sub(assoc_mul(ea, eb), assoc_mul(eb, ea)));
    }
}

TEST_CASE("antisymmetry, Jacobi and grading")
{
    Random rng(12);
    for (int k = 0; k < 100; ++k) {
        const int n = rng.uniform(2, 3);
        const LieElement a = rng.lie_element(n, 2, 2), b = rng.lie_element(n, 2, 2), c = rng.lie_element(n, 1, 2);
        CHECK((lie_bracket(a, b) + lie_bracket(b, a)).is_zero());
        CHECK((lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b)))
                  .is_zero());
        const LieWord u = rng.lyndon_word(n, rng.uniform(1, 3)), v = rng.lyndon_word(n, rng.uniform(1, 2));
        for (const auto& [w, coeff] : bracket_basis(u, v).terms())
            for (int i = 1; i <= n; ++i)
                CHECK(w.count(i) == u.count(i) + v.count(i));
    }
}
