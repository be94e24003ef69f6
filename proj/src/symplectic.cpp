#include "fpa/symplectic.hpp"

#include <algorithm>

namespace fpa {

namespace {

void check_same(int a, int b)
{
    if (a != b)
        throw DomainError("operands over different variable counts");
}

Scalar binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

MultiIndex unit(std::size_t length, std::size_t i)
{
    MultiIndex e(length);
    e.set(i, 1);
    return e;
}

}  // namespace

SymplecticPoly sp_x(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    return Polynomial::variable(2 * n, i - 1);
}

SymplecticPoly sp_y(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    return Polynomial::variable(2 * n, n + i - 1);
}

int sp_rank(const SymplecticPoly& f)
{
    if (f.num_vars() % 2 != 0)
        throw DomainError("symplectic polynomials need an even variable count");
    return static_cast<int>(f.num_vars() / 2);
}

SymplecticPoly sp_bracket(const SymplecticPoly& f, const SymplecticPoly& g)
{
    const int n = sp_rank(f);
    check_same(n, sp_rank(g));
    SymplecticPoly r(2 * n);
    for (int i = 0; i < n; ++i) {
        r += f.derivative(i) * g.derivative(n + i);
        r -= f.derivative(n + i) * g.derivative(i);
    }
    return r;
}

SymplecticPoly derivative(const SymplecticPoly& f, const MultiIndex& gamma)
{
    if (gamma.size() != f.num_vars())
        throw DomainError("multi-index length does not match the variable count");
    SymplecticPoly r = f;
    for (std::size_t v = 0; v < gamma.size() && !r.is_zero(); ++v)
        for (int k = 0; k < gamma[v] && !r.is_zero(); ++k)
            r = r.derivative(v);
    return r;
}

WeylElement WeylElement::constant(int n, const Scalar& c)
{
    return monomial(MultiIndex(2 * n), c);
}

WeylElement WeylElement::X(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    return monomial(unit(2 * n, i - 1), Scalar(1));
}

WeylElement WeylElement::Y(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    return monomial(unit(2 * n, n + i - 1), Scalar(1));
}

WeylElement WeylElement::monomial(const MultiIndex& key, const Scalar& c)
{
    if (key.size() % 2 != 0)
        throw DomainError("Weyl monomials need an even-length key");
    WeylElement w(static_cast<int>(key.size() / 2));
    w.add_term(key, c);
    return w;
}

void WeylElement::add_term(const MultiIndex& key, const Scalar& c)
{
    if (key.size() != static_cast<std::size_t>(2 * n_))
        throw DomainError("Weyl monomial has the wrong length");
    if (fpa::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (fpa::is_zero(it->second))
            terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& other)
{
    check_same(n_, other.n_);
    for (const auto& [k, c] : other.terms_)
        add_term(k, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other)
{
    check_same(n_, other.n_);
    for (const auto& [k, c] : other.terms_)
        add_term(k, -c);
    return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& c)
{
    if (fpa::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b)
{
    check_same(a.n(), b.n());
    const int n = a.n();
    WeylElement r(n);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            // X^a Y^b X^c Y^d, reordering Y_i^b X_i^c =
            // sum_k (-1)^k k! C(b,k) C(c,k) X_i^(c-k) Y_i^(b-k)
            std::vector<int> limit(n), k(n, 0);
            for (int i = 0; i < n; ++i)
                limit[i] = std::min(ka[n + i], kb[i]);
            while (true) {
                Scalar coeff = ca * cb;
                MultiIndex key(2 * n);
                for (int i = 0; i < n; ++i) {
                    const int bi = ka[n + i], ci = kb[i];
                    coeff *= factorial(k[i]) * binomial(bi, k[i]) * binomial(ci, k[i]);
                    if (k[i] % 2)
                        coeff = -coeff;
                    key.set(i, ka[i] + ci - k[i]);
                    key.set(n + i, bi - k[i] + kb[n + i]);
                }
                r.add_term(key, coeff);
                int i = 0;
                while (i < n && k[i] == limit[i])
                    k[i++] = 0;
                if (i == n)
                    break;
                ++k[i];
            }
        }
    return r;
}

WeylElement symmetrize(const SymplecticPoly& f)
{
    const int n = sp_rank(f);
    WeylElement r(n);
    std::vector<WeylElement> letters;
    for (int i = 1; i <= n; ++i)
        letters.push_back(WeylElement::X(n, i));
    for (int i = 1; i <= n; ++i)
        letters.push_back(WeylElement::Y(n, i));
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> word;
        for (int v = 0; v < 2 * n; ++v)
            word.insert(word.end(), e[v], v);
        WeylElement sum(n);
        long count = 0;
        do {
            WeylElement prod = WeylElement::constant(n, Scalar(1));
            for (int v : word)
                prod = weyl_mul(prod, letters[v]);
            sum += prod;
            ++count;
        } while (std::next_permutation(word.begin(), word.end()));
        r += Scalar(c / count) * sum;
    }
    return r;
}

PnEnvElement PnEnvElement::from_poly(const SymplecticPoly& p)
{
    PnEnvElement e(sp_rank(p));
    e.add_term(MultiIndex(p.num_vars()), p);
    return e;
}

PnEnvElement PnEnvElement::h_x(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    return term(Polynomial::constant(2 * n, Scalar(1)), unit(2 * n, i - 1));
}

PnEnvElement PnEnvElement::h_y(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    return term(Polynomial::constant(2 * n, Scalar(1)), unit(2 * n, n + i - 1));
}

PnEnvElement PnEnvElement::term(const SymplecticPoly& coeff, const MultiIndex& gamma)
{
    PnEnvElement e(sp_rank(coeff));
    e.add_term(gamma, coeff);
    return e;
}

void PnEnvElement::add_term(const MultiIndex& gamma, const SymplecticPoly& coeff)
{
    if (gamma.size() != static_cast<std::size_t>(2 * n_) || coeff.num_vars() != gamma.size())
        throw DomainError("term has the wrong number of variables");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(gamma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymplecticPoly PnEnvElement::coefficient(const MultiIndex& gamma) const
{
    auto it = terms_.find(gamma);
    return it == terms_.end() ? Polynomial(2 * n_) : it->second;
}

PnEnvElement& PnEnvElement::operator+=(const PnEnvElement& other)
{
    check_same(n_, other.n_);
    for (const auto& [g, p] : other.terms_)
        add_term(g, p);
    return *this;
}

PnEnvElement& PnEnvElement::operator-=(const PnEnvElement& other)
{
    check_same(n_, other.n_);
    for (const auto& [g, p] : other.terms_)
        add_term(g, -p);
    return *this;
}

PnEnvElement& PnEnvElement::operator*=(const Scalar& c)
{
    if (fpa::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, p] : terms_)
        p *= c;
    return *this;
}

namespace {

PnEnvElement times_h(const PnEnvElement& u, const MultiIndex& gamma)
{
    PnEnvElement r(u.n());
    for (const auto& [g, p] : u.terms())
        r.add_term(g + gamma, p);
    return r;
}

// h^gamma q rewritten with the coefficient on the left.
PnEnvElement h_times(const MultiIndex& gamma, const SymplecticPoly& q)
{
    const int n = sp_rank(q);
    if (gamma.is_zero() || q.is_constant())
        return PnEnvElement::term(q, gamma);
    std::size_t l = 0;
    while (gamma[l] == 0)
        ++l;
    const MultiIndex e = unit(2 * n, l);
    const MultiIndex rest = gamma - e;
    // {x_i, q} = dq/dy_i and {y_i, q} = -dq/dx_i
    const std::size_t nn = static_cast<std::size_t>(n);
    const SymplecticPoly br = l < nn ? q.derivative(nn + l) : -q.derivative(l - nn);
    PnEnvElement r = times_h(h_times(rest, q), e);
    if (!br.is_zero())
        r += h_times(rest, br);
    return r;
}

}  // namespace

PnEnvElement pn_env_mul(const PnEnvElement& a, const PnEnvElement& b)
{
    check_same(a.n(), b.n());
    PnEnvElement r(a.n());
    for (const auto& [ga, pa] : a.terms())
        for (const auto& [gb, pb] : b.terms()) {
            const PnEnvElement moved = times_h(h_times(ga, pb), gb);
            for (const auto& [g, p] : moved.terms())
                r.add_term(g, pa * p);
        }
    return r;
}

namespace {

PnEnvElement generator_image(int n, int v, const Scalar& sign)
{
    const SymplecticPoly var = Polynomial::variable(2 * n, v);
    PnEnvElement h = PnEnvElement::term(Polynomial::constant(2 * n, sign / 2), unit(2 * n, v));
    return PnEnvElement::from_poly(var) + h;
}

PnEnvElement theta(const WeylElement& a, const Scalar& sign, bool reverse)
{
    const int n = a.n();
    std::vector<PnEnvElement> images;
    for (int v = 0; v < 2 * n; ++v)
        images.push_back(generator_image(n, v, sign));
    PnEnvElement r(n);
    for (const auto& [key, c] : a.terms()) {
        std::vector<int> word;
        for (int v = 0; v < 2 * n; ++v)
            word.insert(word.end(), key[v], v);
        if (reverse)
            std::reverse(word.begin(), word.end());
        PnEnvElement prod = PnEnvElement::from_poly(Polynomial::constant(2 * n, c));
        for (int v : word)
            prod = pn_env_mul(prod, images[v]);
        r += prod;
    }
    return r;
}

}  // namespace

PnEnvElement theta_left(const WeylElement& a) { return theta(a, Scalar(1), false); }

PnEnvElement theta_right(const WeylElement& a) { return theta(a, Scalar(-1), true); }

PnEnvElement rho_w(const SymplecticPoly& f)
{
    const int n = sp_rank(f);
    PnEnvElement r(n);
    if (f.is_zero())
        return r;
    MultiIndex bound(2 * n);
    for (int v = 0; v < 2 * n; ++v)
        bound.set(v, static_cast<int>(std::max<Degree>(0, f.degree_in(v))));
    for (const MultiIndex& gamma : indices_below(bound)) {
        SymplecticPoly d = derivative(f, gamma);
        if (d.is_zero())
            continue;
        r.add_term(gamma, d * Scalar(1 / (factorial(gamma) * power_of_two(norm(gamma)))));
    }
    return r;
}

namespace {

SymplecticPoly moyal_terms(const SymplecticPoly& f, const SymplecticPoly& g, int only_order)
{
    const int n = sp_rank(f);
    check_same(n, sp_rank(g));
    SymplecticPoly r(2 * n);
    if (f.is_zero() || g.is_zero())
        return r;
    // d^alpha f vanishes unless alpha is bounded by the degrees of f, and
    // d^alpha* g unless alpha* is bounded by those of g
    MultiIndex bound(2 * n);
    for (int v = 0; v < 2 * n; ++v) {
        const int partner = v < n ? v + n : v - n;
        bound.set(v, static_cast<int>(std::max<Degree>(
                         0, std::min(f.degree_in(v), g.degree_in(partner)))));
    }
    for (const MultiIndex& alpha : indices_below(bound)) {
        const int order = norm(alpha);
        if (only_order >= 0 && order != only_order)
            continue;
        SymplecticPoly df = derivative(f, alpha);
        if (df.is_zero())
            continue;
        SymplecticPoly dg = derivative(g, swap_halves(alpha));
        if (dg.is_zero())
            continue;
        int second_half = 0;
        for (int i = n; i < 2 * n; ++i)
            second_half += alpha[i];
        Scalar coeff = 1 / (factorial(alpha) * power_of_two(order));
        if (second_half % 2)
            coeff = -coeff;
        r += (df * dg) * coeff;
    }
    return r;
}

}  // namespace

SymplecticPoly moyal(const SymplecticPoly& f, const SymplecticPoly& g) { return moyal_terms(f, g, -1); }

SymplecticPoly moyal_order(const SymplecticPoly& f, const SymplecticPoly& g, int order)
{
    if (order < 0)
        throw DomainError("order must be nonnegative");
    return moyal_terms(f, g, order);
}

}  // namespace fpa
