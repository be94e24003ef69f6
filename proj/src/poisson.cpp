#include "fpa/poisson.hpp"

#include <algorithm>
#include <unordered_map>

namespace fpa {

PoissonMonomial PoissonMonomial::basis(const LieWord& word, int exponent)
{
    PoissonMonomial m;
    if (exponent < 0)
        throw DomainError("negative exponent");
    if (exponent > 0)
        m.factors_.emplace_back(word, exponent);
    return m;
}

int PoissonMonomial::exponent_of(const LieWord& word) const
{
    for (const auto& [w, e] : factors_)
        if (w == word)
            return e;
    return 0;
}

int PoissonMonomial::degree() const
{
    int d = 0;
    for (const auto& [w, e] : factors_)
        d += static_cast<int>(w.size()) * e;
    return d;
}

int PoissonMonomial::degree_in(int variable) const
{
    int d = 0;
    for (const auto& [w, e] : factors_)
        d += w.count(variable) * e;
    return d;
}

std::vector<int> PoissonMonomial::multidegree(int n) const
{
    std::vector<int> d(n, 0);
    for (const auto& [w, e] : factors_)
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] > n)
                throw DomainError("variable index exceeds n");
            d[w[i] - 1] += e;
        }
    return d;
}

int PoissonMonomial::max_variable() const
{
    int m = 0;
    for (const auto& [w, e] : factors_)
        m = std::max(m, w.max_letter());
    return m;
}

PoissonMonomial PoissonMonomial::operator*(const PoissonMonomial& other) const
{
    PoissonMonomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    const BasisOrder less;
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (less(a->first, b->first)) {
            r.factors_.push_back(*a++);
        } else {
            r.factors_.push_back(*b++);
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, other.factors_.end());
    return r;
}

PoissonMonomial PoissonMonomial::without(const LieWord& word) const
{
    PoissonMonomial r = *this;
    for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
        if (it->first == word) {
            if (--it->second == 0)
                r.factors_.erase(it);
            return r;
        }
    }
    throw DomainError("monomial does not contain the requested factor");
}

bool MonomialOrder::operator()(const PoissonMonomial& a, const PoissonMonomial& b) const
{
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    const BasisOrder less;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second)
                return ia->second < ib->second;
            continue;
        }
        // the side holding the earlier basis element has the larger vector
        return less(ib->first, ia->first);
    }
    return ia == ea && ib != eb;
}

PoissonElement::PoissonElement(const Scalar& c)
{
    add_term(PoissonMonomial{}, c);
}

PoissonElement PoissonElement::generator(int index) { return basis(LieWord::letter(index)); }

PoissonElement PoissonElement::basis(const LieWord& word)
{
    return monomial(PoissonMonomial::basis(word));
}

PoissonElement PoissonElement::from_lie(const LieElement& lie)
{
    PoissonElement p;
    for (const auto& [w, c] : lie.terms())
        p.add_term(PoissonMonomial::basis(w), c);
    return p;
}

PoissonElement PoissonElement::monomial(const PoissonMonomial& m, const Scalar& c)
{
    PoissonElement p;
    p.add_term(m, c);
    return p;
}

bool PoissonElement::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar PoissonElement::constant_value() const
{
    if (!is_constant())
        throw DomainError("element is not a constant");
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

void PoissonElement::add_term(const PoissonMonomial& m, const Scalar& c)
{
    if (fpa::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (fpa::is_zero(it->second))
            terms_.erase(it);
    }
}

const PoissonMonomial& PoissonElement::leading_monomial() const
{
    if (terms_.empty())
        throw DomainError("zero element has no leading monomial");
    return terms_.rbegin()->first;
}

const Scalar& PoissonElement::leading_coefficient() const
{
    if (terms_.empty())
        throw DomainError("zero element has no leading coefficient");
    return terms_.rbegin()->second;
}

int PoissonElement::max_variable() const
{
    int m = 0;
    for (const auto& [mono, c] : terms_)
        m = std::max(m, mono.max_variable());
    return m;
}

PoissonElement& PoissonElement::operator+=(const PoissonElement& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

PoissonElement& PoissonElement::operator-=(const PoissonElement& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

PoissonElement& PoissonElement::operator*=(const Scalar& c)
{
    if (fpa::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

PoissonElement operator*(const PoissonElement& a, const PoissonElement& b)
{
    PoissonElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, Scalar(ca * cb));
    return r;
}

PoissonElement PoissonElement::pow(int k) const
{
    if (k < 0)
        throw DomainError("negative power");
    PoissonElement r(1);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

namespace {

// Leibniz expansion of the bracket of two monomials.
PoissonElement bracket_monomials(const PoissonMonomial& a, const PoissonMonomial& b)
{
    PoissonElement r;
    for (const auto& [u, eu] : a.factors()) {
        const PoissonMonomial ra = a.without(u);
        for (const auto& [v, ev] : b.factors()) {
            const LieElement& uv = bracket_basis(u, v);
            if (uv.is_zero())
                continue;
            const PoissonMonomial rest = ra * b.without(v);
            const Scalar mult(eu * ev);
            for (const auto& [w, c] : uv.terms())
                r.add_term(rest * PoissonMonomial::basis(w), Scalar(mult * c));
        }
    }
    return r;
}

}  // namespace

PoissonElement poisson_bracket(const PoissonElement& a, const PoissonElement& b)
{
    PoissonElement r;
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.is_one())
            continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (mb.is_one())
                continue;
            r += Scalar(ca * cb) * bracket_monomials(ma, mb);
        }
    }
    return r;
}

Degree degree(const PoissonElement& a)
{
    return a.is_zero() ? kMinusInfinity : a.leading_monomial().degree();
}

Degree degree_in(const PoissonElement& a, int variable)
{
    Degree d = kMinusInfinity;
    for (const auto& [m, c] : a.terms())
        d = std::max<Degree>(d, m.degree_in(variable));
    return d;
}

bool is_homogeneous(const PoissonElement& a)
{
    if (a.is_zero())
        return true;
    const int d = a.terms().begin()->first.degree();
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

namespace {

// Embeds a pair of Poisson elements into a common polynomial ring whose
// variables are the basis elements occurring in either, in basis order.
struct CommonRing {
    std::vector<LieWord> variables;

    CommonRing(const PoissonElement& a, const PoissonElement& b)
    {
        for (const auto* p : {&a, &b})
            for (const auto& [m, c] : p->terms())
                for (const auto& [w, e] : m.factors())
                    variables.push_back(w);
        std::sort(variables.begin(), variables.end(), BasisOrder{});
        variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
    }

    Polynomial embed(const PoissonElement& p) const
    {
        Polynomial r(variables.size());
        for (const auto& [m, c] : p.terms()) {
            MultiIndex e(variables.size());
            for (const auto& [w, k] : m.factors()) {
                auto it = std::lower_bound(variables.begin(), variables.end(), w, BasisOrder{});
                e.set(static_cast<std::size_t>(it - variables.begin()), k);
            }
            r.add_term(e, c);
        }
        return r;
    }

    PoissonElement extract(const Polynomial& q) const
    {
        PoissonElement r;
        for (const auto& [e, c] : q.terms()) {
            PoissonMonomial m;
            for (std::size_t i = 0; i < variables.size(); ++i)
                if (e[i] > 0)
                    m = m * PoissonMonomial::basis(variables[i], e[i]);
            r.add_term(m, c);
        }
        return r;
    }
};

}  // namespace

PoissonElement gcd(const PoissonElement& a, const PoissonElement& b)
{
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd(0, 0) is undefined");
    const CommonRing ring(a, b);
    PoissonElement g = ring.extract(gcd(ring.embed(a), ring.embed(b)));
    // normalise under the Poisson monomial order, which may differ from the
    // order used inside the polynomial ring
    return g * Scalar(1 / g.leading_coefficient());
}

std::optional<PoissonElement> divide_exact(const PoissonElement& a, const PoissonElement& b)
{
    if (b.is_zero())
        throw DomainError("division by zero");
    const CommonRing ring(a, b);
    auto q = divide_exact(ring.embed(a), ring.embed(b));
    if (!q)
        return std::nullopt;
    return ring.extract(*q);
}

PoissonElement substitute(const PoissonElement& p, std::span<const PoissonElement> images)
{
    std::unordered_map<std::string, PoissonElement> memo;
    auto image_of = [&](auto&& self, const LieWord& w) -> PoissonElement {
        if (auto it = memo.find(w.raw()); it != memo.end())
            return it->second;
        PoissonElement r;
        if (w.size() == 1) {
            if (w[0] > static_cast<int>(images.size()))
                throw DomainError("substitution does not cover every variable");
            r = images[w[0] - 1];
        } else {
            auto [u, v] = standard_factorization(w);
            r = poisson_bracket(self(self, u), self(self, v));
        }
        memo.emplace(w.raw(), r);
        return r;
    };
    PoissonElement out;
    for (const auto& [m, c] : p.terms()) {
        PoissonElement term(c);
        for (const auto& [w, e] : m.factors())
            term = term * image_of(image_of, w).pow(e);
        out += term;
    }
    return out;
}

bool is_commutative_polynomial(const PoissonElement& p)
{
    for (const auto& [m, c] : p.terms())
        for (const auto& [w, e] : m.factors())
            if (w.size() != 1)
                return false;
    return true;
}

PoissonElement partial(const PoissonElement& p, const LieWord& variable)
{
    PoissonElement r;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent_of(variable);
        if (e > 0)
            r.add_term(m.without(variable), Scalar(c * e));
    }
    return r;
}

}  // namespace fpa
