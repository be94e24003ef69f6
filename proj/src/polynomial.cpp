#include "fpa/polynomial.hpp"

#include <algorithm>

namespace fpa {

Polynomial Polynomial::constant(std::size_t num_vars, const Scalar& c)
{
    Polynomial p(num_vars);
    p.add_term(MultiIndex(num_vars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index)
{
    if (index >= num_vars)
        throw DomainError("variable index out of range");
    MultiIndex e(num_vars);
    e.set(index, 1);
    return monomial(e, Scalar(1));
}

Polynomial Polynomial::monomial(const MultiIndex& exponents, const Scalar& c)
{
    Polynomial p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Scalar Polynomial::coefficient(const MultiIndex& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& exponents, const Scalar& c)
{
    if (exponents.size() != num_vars_)
        throw DomainError("monomial has the wrong number of variables");
    if (fpa::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (fpa::is_zero(it->second))
            terms_.erase(it);
    }
}

const MultiIndex& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

Degree Polynomial::degree() const
{
    return terms_.empty() ? kMinusInfinity : norm(terms_.rbegin()->first);
}

Degree Polynomial::degree_in(std::size_t var) const
{
    Degree d = kMinusInfinity;
    for (const auto& [e, c] : terms_)
        d = std::max<Degree>(d, e[var]);
    return d;
}

void Polynomial::check_compatible(const Polynomial& other) const
{
    if (num_vars_ != other.num_vars_)
        throw DomainError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c)
{
    if (fpa::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, Scalar(ca * cb));
    return r;
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial r = constant(num_vars_, Scalar(1));
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        MultiIndex d = e;
        d.increment(var, -1);
        r.add_term(d, Scalar(c * e[var]));
    }
    return r;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    return *this * Scalar(1 / leading_coefficient());
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    Polynomial rem = a;
    Polynomial quot(a.num_vars());
    const MultiIndex& lb = b.leading_monomial();
    const Scalar& cb = b.leading_coefficient();
    while (!rem.is_zero()) {
        const MultiIndex& lr = rem.leading_monomial();
        if (!lb.divides(lr))
            return std::nullopt;
        Polynomial step = Polynomial::monomial(lr - lb, Scalar(rem.leading_coefficient() / cb));
        quot += step;
        rem -= step * b;
    }
    return quot;
}

namespace {

// Coefficients of p viewed as a univariate polynomial in `var`.
std::map<int, Polynomial> coefficients_in(const Polynomial& p, std::size_t var)
{
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : p.terms()) {
        MultiIndex rest = e;
        rest.set(var, 0);
        auto [it, _] = out.try_emplace(e[var], Polynomial(p.num_vars()));
        it->second.add_term(rest, c);
    }
    return out;
}

Polynomial shift_in(const Polynomial& p, std::size_t var, int by)
{
    Polynomial r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        MultiIndex s = e;
        s.increment(var, by);
        r.add_term(s, c);
    }
    return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var)
{
    Polynomial g(p.num_vars());
    for (const auto& [k, c] : coefficients_in(p, var)) {
        g = gcd_rec(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

Polynomial exact(const Polynomial& a, const Polynomial& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw DomainError("internal error: inexact division in gcd");
    return *q;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var)
{
    return exact(p, content_in(p, var)).monic();
}

// Pseudo-remainder of a by b in `var`.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var)
{
    const int db = static_cast<int>(b.degree_in(var));
    const Polynomial lb = coefficients_in(b, var).at(db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = static_cast<int>(a.degree_in(var));
        const Polynomial la = coefficients_in(a, var).at(da);
        a = lb * a - shift_in(la * b, var, da - db);
    }
    return a;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    const std::size_t nv = a.num_vars();
    std::optional<std::size_t> var;
    for (std::size_t v = nv; v-- > 0;) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            break;
        }
    }
    if (!var)
        return Polynomial::constant(nv, Scalar(1));
    if (a.degree_in(*var) <= 0)
        return gcd_rec(a, content_in(b, *var));
    if (b.degree_in(*var) <= 0)
        return gcd_rec(content_in(a, *var), b);

    const Polynomial ca = content_in(a, *var);
    const Polynomial cb = content_in(b, *var);
    const Polynomial c = gcd_rec(ca, cb);
    Polynomial A = exact(a, ca).monic();
    Polynomial B = exact(b, cb).monic();
    if (A.degree_in(*var) < B.degree_in(*var))
        std::swap(A, B);
    while (!B.is_zero() && B.degree_in(*var) > 0) {
        Polynomial R = pseudo_remainder(A, B, *var);
        A = std::move(B);
        B = R.is_zero() ? R : primitive_part(R, *var);
    }
    if (!B.is_zero())
        return c;  // the primitive parts are coprime
    return (c * A).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd(0, 0) is undefined");
    if (a.num_vars() != b.num_vars())
        throw DomainError("polynomials over different variable sets");
    return gcd_rec(a, b).monic();
}

}  // namespace fpa
