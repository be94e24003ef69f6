#include "fpa/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fpa {

Scalar parse_scalar(std::string_view text)
{
    auto valid = [](std::string_view digits) {
        return !digits.empty() &&
               std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!valid(num) || !valid(den))
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    const mpz_class d{std::string(den)};
    if (d == 0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    Scalar value(mpz_class{std::string(num)}, d);
    value.canonicalize();
    if (text.front() == '-')
        value = -value;
    return value;
}

std::string to_string(const Scalar& s)
{
    Scalar t = s;
    t.canonicalize();
    return t.get_str();
}

Scalar factorial(int k)
{
    mpz_class r = 1;
    for (int i = 2; i <= k; ++i)
        r *= i;
    return Scalar(r);
}

Scalar power_of_two(int k)
{
    mpz_class r = 1;
    r <<= k;
    return Scalar(r);
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    if (std::any_of(entries_.begin(), entries_.end(), [](int e) { return e < 0; }))
        throw DomainError("multi-index entries must be nonnegative");
}

void MultiIndex::set(std::size_t i, int value)
{
    if (value < 0)
        throw DomainError("multi-index entries must be nonnegative");
    entries_.at(i) = value;
}

void MultiIndex::increment(std::size_t i, int by) { set(i, entries_.at(i) + by); }

bool MultiIndex::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const
{
    if (size() != other.size())
        throw DomainError("multi-index length mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < size(); ++i)
        r.entries_[i] += other.entries_[i];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const
{
    if (size() != other.size())
        throw DomainError("multi-index length mismatch");
    std::vector<int> r(size());
    for (std::size_t i = 0; i < size(); ++i)
        r[i] = entries_[i] - other.entries_[i];
    return MultiIndex(std::move(r));
}

bool MultiIndex::divides(const MultiIndex& other) const
{
    if (size() != other.size())
        return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

int norm(const MultiIndex& a)
{
    return std::accumulate(a.entries().begin(), a.entries().end(), 0);
}

Scalar factorial(const MultiIndex& a)
{
    Scalar r = 1;
    for (int e : a.entries())
        r *= factorial(e);
    return r;
}

MultiIndex swap_halves(const MultiIndex& a)
{
    if (a.size() % 2 != 0)
        throw DomainError("swap_halves needs an even-length multi-index");
    const std::size_t half = a.size() / 2;
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < half; ++i) {
        r[i] = a[half + i];
        r[half + i] = a[i];
    }
    return MultiIndex(std::move(r));
}

std::vector<MultiIndex> indices_below(const MultiIndex& bound)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(bound.size());
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < bound.size(); ++i) {
            if (cur[i] < bound[i]) {
                cur.increment(i);
                break;
            }
            cur.set(i, 0);
        }
        if (i == bound.size())
            break;
    }
    return out;
}

std::vector<MultiIndex> indices_with_norm(std::size_t length, int total)
{
    std::vector<MultiIndex> out;
    if (length == 0) {
        if (total == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> cur(length, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == length) {
            cur[pos] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const
{
    const int da = norm(a), db = norm(b);
    if (da != db)
        return da < db;
    return a.entries() < b.entries();
}

}  // namespace fpa
