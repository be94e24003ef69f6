#include "fpa/free_lie.hpp"

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

LieWord::LieWord(std::span<const int> letters)
{
    letters_.reserve(letters.size());
    for (int l : letters)
        letters_.push_back(encode_letter(l));
}

LieWord::LieWord(std::initializer_list<int> letters)
    : LieWord(std::span<const int>(letters.begin(), letters.size()))
{
}

LieWord LieWord::letter(int index)
{
    LieWord w;
    w.letters_.push_back(encode_letter(index));
    return w;
}

std::vector<int> LieWord::letters() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back((*this)[i]);
    return out;
}

int LieWord::max_letter() const
{
    int m = 0;
    for (std::size_t i = 0; i < size(); ++i)
        m = std::max(m, (*this)[i]);
    return m;
}

int LieWord::count(int index) const
{
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), encode_letter(index)));
}

LieWord LieWord::substr(std::size_t pos, std::size_t len) const
{
    LieWord w;
    w.letters_ = letters_.substr(pos, len);
    return w;
}

LieWord LieWord::operator+(const LieWord& other) const
{
    LieWord w;
    w.letters_ = letters_ + other.letters_;
    return w;
}

bool is_lyndon(const LieWord& word)
{
    if (word.empty())
        throw DomainError("is_lyndon: empty word");
    const std::string& s = word.raw();
    for (std::size_t i = 1; i < s.size(); ++i) {
        // the rotation s[i..] s[..i] must be strictly greater than s
        const std::string rotation = s.substr(i) + s.substr(0, i);
        if (!(s < rotation))
            return false;
    }
    return true;
}

bool is_lyndon(std::span<const int> word)
{
    if (word.empty())
        throw DomainError("is_lyndon: empty word");
    return is_lyndon(LieWord(word));
}

std::pair<LieWord, LieWord> standard_factorization(const LieWord& word)
{
    if (word.size() < 2 || !is_lyndon(word))
        throw DomainError("standard factorization needs a Lyndon word of length >= 2");
    for (std::size_t i = 1; i < word.size(); ++i) {
        LieWord suffix = word.substr(i);
        if (is_lyndon(suffix))
            return {word.substr(0, i), std::move(suffix)};
    }
    // the last letter alone is always Lyndon, so the loop returns
    throw DomainError("unreachable");
}

std::vector<LieWord> lyndon_basis(int n, int max_degree)
{
    if (n < 1 || max_degree < 1)
        throw DomainError("lyndon_basis needs n >= 1 and max_degree >= 1");
    // Duval's generation in lexicographic order.
    std::vector<LieWord> out;
    std::vector<int> w{1};
    while (!w.empty()) {
        out.emplace_back(std::span<const int>(w));
        const std::size_t k = w.size();
        while (w.size() < static_cast<std::size_t>(max_degree))
            w.push_back(w[w.size() - k]);
        while (!w.empty() && w.back() == n)
            w.pop_back();
        if (!w.empty())
            ++w.back();
    }
    std::stable_sort(out.begin(), out.end(), BasisOrder{});
    return out;
}

std::string bracket_string(const LieWord& word)
{
    if (word.size() == 1)
        return "x" + std::to_string(word[0]);
    auto [u, v] = standard_factorization(word);
    return "[" + bracket_string(u) + "," + bracket_string(v) + "]";
}

LieElement LieElement::basis(const LieWord& word, const Scalar& c)
{
    LieElement e;
    e.add_term(word, c);
    return e;
}

void LieElement::add_term(const LieWord& word, const Scalar& c)
{
    if (fpa::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (fpa::is_zero(it->second))
            terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& other)
{
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other)
{
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Scalar& c)
{
    if (fpa::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

namespace {

struct BracketCache {
    std::shared_mutex mutex;
    std::unordered_map<std::string, LieElement> table;
};

BracketCache& cache()
{
    static BracketCache c;
    return c;
}

// [basis word u, arbitrary element x]
LieElement bracket_word_element(const LieWord& u, const LieElement& x)
{
    LieElement r;
    for (const auto& [w, c] : x.terms()) {
        LieElement t = bracket_basis(u, w);
        r += c * t;
    }
    return r;
}

LieElement compute_bracket(const LieWord& u, const LieWord& v)
{
    if (u == v)
        return {};
    if (lex_less(v, u)) {
        LieElement r = bracket_basis(v, u);
        return Scalar(-1) * r;
    }
    // u < v: uv is Lyndon; its standard factorization is (u, v) unless u
    // splits as (u1, u2) with u2 < v.
    if (u.size() == 1)
        return LieElement::basis(u + v);
    auto [u1, u2] = standard_factorization(u);
    if (!lex_less(u2, v))
        return LieElement::basis(u + v);
    // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    LieElement r = bracket_word_element(u1, bracket_basis(u2, v));
    r -= bracket_word_element(u2, bracket_basis(u1, v));
    return r;
}

}  // namespace

const LieElement& bracket_basis(const LieWord& u, const LieWord& v)
{
    std::string key = u.raw();
    key.push_back('\0');
    key += v.raw();
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.table.find(key);
        if (it != c.table.end())
            return it->second;
    }
    LieElement value = compute_bracket(u, v);
    std::unique_lock lock(c.mutex);
    auto [it, _] = c.table.try_emplace(std::move(key), std::move(value));
    return it->second;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b)
{
    LieElement r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r += Scalar(cu * cv) * bracket_basis(u, v);
    return r;
}

}  // namespace fpa
