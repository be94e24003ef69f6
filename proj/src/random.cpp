#include "fpa/random.hpp"

namespace fpa {

int Random::uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Random::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Scalar Random::scalar()
{
    static constexpr int dens[] = {1, 1, 1, 2, 3};
    int num = uniform(1, 5);
    if (coin())
        num = -num;
    Scalar s(num, dens[uniform(0, 4)]);
    s.canonicalize();
    return s;
}

LieWord Random::lyndon_word(int n, int degree)
{
    if (degree == 1)
        return LieWord::letter(uniform(1, n));
    if (n < 2)
        throw DomainError("no Lyndon words of length >= 2 over one letter");
    while (true) {
        std::vector<int> letters(degree);
        for (int& l : letters)
            l = uniform(1, n);
        LieWord w(letters);
        if (is_lyndon(w))
            return w;
    }
}

LieElement Random::lie_element(int n, int max_degree, int max_terms)
{
    LieElement e;
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        const int d = uniform(1, n < 2 ? 1 : max_degree);
        e.add_term(lyndon_word(n, d), scalar());
    }
    return e;
}

LieElement Random::homogeneous_lie(int n, int degree, int max_terms)
{
    while (true) {
        LieElement e;
        const int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t)
            e.add_term(lyndon_word(n, degree), scalar());
        if (!e.is_zero())
            return e;
    }
}

PoissonMonomial Random::poisson_monomial(int n, int degree)
{
    PoissonMonomial m;
    int left = degree;
    while (left > 0) {
        const int d = uniform(1, n < 2 ? 1 : left);
        m = m * PoissonMonomial::basis(lyndon_word(n, d));
        left -= d;
    }
    return m;
}

PoissonElement Random::poisson(int n, int max_degree, int max_terms)
{
    PoissonElement p;
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t)
        p.add_term(poisson_monomial(n, uniform(0, max_degree)), scalar());
    return p;
}

PoissonElement Random::nonzero_poisson(int n, int max_degree, int max_terms)
{
    while (true) {
        PoissonElement p = poisson(n, max_degree, max_terms);
        if (!p.is_zero())
            return p;
    }
}

PoissonElement Random::homogeneous_poisson(int n, int degree, int max_terms)
{
    while (true) {
        PoissonElement p;
        const int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t)
            p.add_term(poisson_monomial(n, degree), scalar());
        if (!p.is_zero())
            return p;
    }
}

HWord Random::hword(int n, int length)
{
    std::vector<int> letters(length);
    for (int& l : letters)
        l = uniform(1, n);
    return HWord(letters);
}

EnvElement Random::env(int n, int max_hdeg, int max_coeff_degree, int max_terms)
{
    EnvElement u;
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t)
        u.add_term(hword(n, uniform(0, max_hdeg)), poisson(n, max_coeff_degree, 2));
    return u;
}

EnvElement Random::nonzero_env(int n, int max_hdeg, int max_coeff_degree, int max_terms)
{
    while (true) {
        EnvElement u = env(n, max_hdeg, max_coeff_degree, max_terms);
        if (!u.is_zero())
            return u;
    }
}

MultiIndex Random::multi_index(std::size_t length, int max_norm)
{
    MultiIndex m(length);
    const int total = uniform(0, max_norm);
    for (int k = 0; k < total; ++k)
        m.increment(static_cast<std::size_t>(uniform(0, static_cast<int>(length) - 1)));
    return m;
}

SymplecticPoly Random::symplectic(int n, int max_degree, int max_terms)
{
    SymplecticPoly f(2 * n);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t)
        f.add_term(multi_index(2 * n, max_degree), scalar());
    return f;
}

WeylElement Random::weyl(int n, int max_degree, int max_terms)
{
    WeylElement w(n);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t)
        w.add_term(multi_index(2 * n, max_degree), scalar());
    return w;
}

PnEnvElement Random::pnenv(int n, int max_hdeg, int max_coeff_degree, int max_terms)
{
    PnEnvElement u(n);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t)
        u.add_term(multi_index(2 * n, max_hdeg), symplectic(n, max_coeff_degree, 2));
    return u;
}

Endomorphism Random::tame_automorphism(int max_maps, int max_degree)
{
    const PoissonElement x = PoissonElement::generator(1);
    const PoissonElement y = PoissonElement::generator(2);
    Endomorphism psi = Endomorphism::identity(2);
    const int maps = uniform(1, max_maps);
    for (int k = 0; k < maps; ++k) {
        Endomorphism e{2, {}};
        if (coin()) {
            Scalar a, b, c, d;
            do {
                a = uniform(-2, 2);
                b = uniform(-2, 2);
                c = uniform(-2, 2);
                d = uniform(-2, 2);
            } while (a * d - b * c == 0);
            e.images = {a * x + b * y, c * x + d * y};
        } else {
            PoissonElement c;
            const int deg = uniform(1, max_degree);
            for (int i = 0; i <= deg; ++i)
                if (i == deg || coin())
                    c += Scalar(uniform(-3, 3)) * x.pow(i);
            e.images = {x, y + c};
        }
        psi = compose(e, psi);
    }
    return psi;
}

}  // namespace fpa
