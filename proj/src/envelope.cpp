#include "fpa/envelope.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace fpa {

namespace {

char encode_letter(int index)
{
    if (index < 1 || index > 255)
        throw DomainError("variable index must lie in 1..255");
    return static_cast<char>(static_cast<unsigned char>(index));
}

}  // namespace

HWord::HWord(std::span<const int> letters)
{
    letters_.reserve(letters.size());
    for (int l : letters)
        letters_.push_back(encode_letter(l));
}

HWord::HWord(std::initializer_list<int> letters)
    : HWord(std::span<const int>(letters.begin(), letters.size()))
{
}

HWord HWord::letter(int index)
{
    HWord w;
    w.letters_.push_back(encode_letter(index));
    return w;
}

std::vector<int> HWord::letters() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back((*this)[i]);
    return out;
}

int HWord::max_letter() const
{
    int m = 0;
    for (std::size_t i = 0; i < size(); ++i)
        m = std::max(m, (*this)[i]);
    return m;
}

HWord HWord::substr(std::size_t pos, std::size_t len) const
{
    HWord w;
    w.letters_ = letters_.substr(pos, len);
    return w;
}

HWord HWord::operator+(const HWord& other) const
{
    HWord w;
    w.letters_ = letters_ + other.letters_;
    return w;
}

bool HWord::left_divides(const HWord& other) const
{
    return size() <= other.size() &&
           other.letters_.compare(other.size() - size(), size(), letters_) == 0;
}

EnvElement::EnvElement(const PoissonElement& p)
{
    add_term(HWord{}, p);
}

EnvElement EnvElement::term(const PoissonElement& coeff, const HWord& word)
{
    EnvElement e;
    e.add_term(word, coeff);
    return e;
}

void EnvElement::add_term(const HWord& word, const PoissonElement& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PoissonElement EnvElement::coefficient(const HWord& word) const
{
    auto it = terms_.find(word);
    return it == terms_.end() ? PoissonElement{} : it->second;
}

int EnvElement::max_variable() const
{
    int m = 0;
    for (const auto& [w, p] : terms_)
        m = std::max({m, w.max_letter(), p.max_variable()});
    return m;
}

EnvElement& EnvElement::operator+=(const EnvElement& other)
{
    for (const auto& [w, p] : other.terms_)
        add_term(w, p);
    return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& other)
{
    for (const auto& [w, p] : other.terms_)
        add_term(w, -p);
    return *this;
}

EnvElement& EnvElement::operator*=(const Scalar& c)
{
    if (fpa::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, p] : terms_)
        p *= c;
    return *this;
}

EnvElement EnvElement::times_word(const HWord& word) const
{
    if (word.empty())
        return *this;
    EnvElement r;
    for (const auto& [w, p] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), w + word, p);
    return r;
}

EnvElement left_scale(const PoissonElement& p, const EnvElement& u)
{
    EnvElement r;
    if (p.is_zero())
        return r;
    for (const auto& [w, q] : u.terms())
        r.add_term(w, p * q);
    return r;
}

namespace {

std::string monomial_key(const PoissonMonomial& m)
{
    std::string key;
    for (const auto& [w, e] : m.factors()) {
        key += w.raw();
        key.push_back('\0');
        key += std::to_string(e);
        key.push_back('\0');
    }
    return key;
}

struct Memo {
    std::shared_mutex mutex;
    std::unordered_map<std::string, EnvElement> table;

    template <typename F>
    EnvElement lookup(const std::string& key, F&& compute)
    {
        {
            std::shared_lock lock(mutex);
            if (auto it = table.find(key); it != table.end())
                return it->second;
        }
        EnvElement value = compute();
        std::unique_lock lock(mutex);
        table.try_emplace(key, value);
        return value;
    }
};

EnvElement word_times_monomial(const HWord& w, const PoissonMonomial& m)
{
    if (w.empty())
        return EnvElement(PoissonElement::monomial(m));
    if (m.is_one())
        return EnvElement::word(w);
    static Memo memo;
    std::string key = w.raw();
    key.push_back('\0');
    key += monomial_key(m);
    return memo.lookup(key, [&] {
        // w = w' a: w q = (w' q) a + w' {x_a, q}
        const HWord prefix = w.substr(0, w.size() - 1);
        const HWord last = HWord::letter(w.back());
        EnvElement r = word_times_monomial(prefix, m).times_word(last);
        const PoissonElement br =
            poisson_bracket(PoissonElement::generator(w.back()), PoissonElement::monomial(m));
        for (const auto& [mm, c] : br.terms())
            r += c * word_times_monomial(prefix, mm);
        return r;
    });
}

}  // namespace

EnvElement word_times(const HWord& w, const PoissonElement& q)
{
    EnvElement r;
    for (const auto& [m, c] : q.terms())
        r += c * word_times_monomial(w, m);
    return r;
}

EnvElement env_mul(const EnvElement& u, const EnvElement& v)
{
    EnvElement r;
    for (const auto& [w, p] : u.terms())
        for (const auto& [w2, q] : v.terms())
            r += left_scale(p, word_times(w, q)).times_word(w2);
    return r;
}

EnvElement env_pow(const EnvElement& u, int k)
{
    if (k < 0)
        throw DomainError("negative power");
    EnvElement r(1);
    for (int i = 0; i < k; ++i)
        r = env_mul(r, u);
    return r;
}

namespace {

// h of a basis element: the associative expansion of its standard
// bracketing in the letters h(x_i), with scalar coefficients.
EnvElement ham_basis(const LieWord& e)
{
    if (e.size() == 1)
        return EnvElement::h(e[0]);
    static Memo memo;
    return memo.lookup(e.raw(), [&] {
        auto [u, v] = standard_factorization(e);
        const EnvElement hu = ham_basis(u);
        const EnvElement hv = ham_basis(v);
        EnvElement r;
        for (const auto& [wu, cu] : hu.terms())
            for (const auto& [wv, cv] : hv.terms()) {
                const Scalar c = cu.constant_value() * cv.constant_value();
                r.add_term(wu + wv, PoissonElement(c));
                r.add_term(wv + wu, PoissonElement(Scalar(-c)));
            }
        return r;
    });
}

}  // namespace

EnvElement ham(const PoissonElement& p)
{
    EnvElement r;
    for (const auto& [m, c] : p.terms())
        for (const auto& [e, k] : m.factors())
            r += left_scale(PoissonElement::monomial(m.without(e), Scalar(c * k)), ham_basis(e));
    return r;
}

Degree hdeg(const EnvElement& u)
{
    return u.is_zero() ? kMinusInfinity : static_cast<Degree>(u.terms().rbegin()->first.size());
}

const HWord& ldm(const EnvElement& u)
{
    if (u.is_zero())
        throw DomainError("zero element has no leading monomial");
    return u.terms().rbegin()->first;
}

const PoissonElement& ldc(const EnvElement& u)
{
    if (u.is_zero())
        throw DomainError("zero element has no leading coefficient");
    return u.terms().rbegin()->second;
}

EnvElement ldt(const EnvElement& u) { return EnvElement::term(ldc(u), ldm(u)); }

EnvElement top(const EnvElement& u)
{
    if (u.is_zero())
        throw DomainError("zero element has no top part");
    const std::size_t d = ldm(u).size();
    EnvElement r;
    for (const auto& [w, p] : u.terms())
        if (w.size() == d)
            r.add_term(w, p);
    return r;
}

EnvElement graded_product(const EnvElement& a, const EnvElement& b)
{
    EnvElement r;
    for (const auto& [wa, pa] : a.terms())
        for (const auto& [wb, pb] : b.terms())
            r.add_term(wa + wb, pa * pb);
    return r;
}

Splitting split(const EnvElement& u)
{
    Splitting s;
    for (const auto& [w, p] : u.terms()) {
        if (w.empty())
            s.p_part = p;
        else
            s.omega_part.add_term(w, p);
    }
    return s;
}

std::vector<EnvElement> right_cofactors(const EnvElement& u, int n)
{
    std::vector<EnvElement> out(n);
    for (const auto& [w, p] : u.terms()) {
        if (w.empty())
            throw DomainError("element has a nonzero component in P");
        if (w.back() > n)
            throw DomainError("letter index exceeds n");
        out[w.back() - 1].add_term(w.substr(0, w.size() - 1), p);
    }
    return out;
}

}  // namespace fpa
