#include "fpa/linear_solve.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace fpa {

namespace {

constexpr std::uint64_t P = ModularEchelon::kPrime;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = a + b;
    return s >= P ? s - P : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & P);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    return add_mod(lo, hi);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, P - 2); }

template <typename Map, typename T, typename Sub>
void axpy(Map& target, const Map& source, const T& factor, Sub subtract)
{
    for (const auto& [k, v] : source) {
        auto [it, inserted] = target.try_emplace(k);
        subtract(it->second, v, factor);
        if (it->second == 0)
            target.erase(it);
    }
}

void sub_scaled(Scalar& slot, const Scalar& v, const Scalar& f) { slot -= f * v; }
void add_scaled(Scalar& slot, const Scalar& v, const Scalar& f) { slot += f * v; }

void sub_scaled_mod(std::uint64_t& slot, std::uint64_t v, std::uint64_t f)
{
    slot = sub_mod(slot, mul_mod(f, v));
}

}  // namespace

std::optional<std::uint64_t> reduce_mod_prime(const Scalar& s)
{
    auto to_mod = [](const mpz_class& z) {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(P));
        if (r < 0)
            r += static_cast<unsigned long>(P);
        return static_cast<std::uint64_t>(r.get_ui());
    };
    const std::uint64_t den = to_mod(s.get_den());
    if (den == 0)
        return std::nullopt;
    return mul_mod(to_mod(s.get_num()), inv_mod(den));
}

std::optional<Combination> ExactEchelon::insert(const SparseVector& v, std::size_t id)
{
    SparseVector work = v;
    Combination combo{{id, Scalar(1)}};
    auto pos = work.begin();
    while (pos != work.end()) {
        auto row = rows_.find(pos->first);
        if (row == rows_.end()) {
            ++pos;
            continue;
        }
        const std::size_t key = pos->first;
        const Scalar f = pos->second;
        axpy(work, row->second.entries, f, sub_scaled);
        axpy(combo, row->second.combo, f, sub_scaled);
        pos = work.upper_bound(key);
    }
    if (work.empty())
        return combo;
    const Scalar inv = 1 / work.begin()->second;
    for (auto& [k, c] : work)
        c *= inv;
    for (auto& [k, c] : combo)
        c *= inv;
    const std::size_t pivot = work.begin()->first;
    rows_.emplace(pivot, Row{std::move(work), std::move(combo)});
    return std::nullopt;
}

std::pair<SparseVector, Combination> ExactEchelon::reduce(const SparseVector& v) const
{
    SparseVector work = v;
    Combination combo;
    auto pos = work.begin();
    while (pos != work.end()) {
        auto row = rows_.find(pos->first);
        if (row == rows_.end()) {
            ++pos;
            continue;
        }
        const std::size_t key = pos->first;
        const Scalar f = pos->second;
        axpy(work, row->second.entries, f, sub_scaled);
        axpy(combo, row->second.combo, f, add_scaled);
        pos = work.upper_bound(key);
    }
    return {std::move(work), std::move(combo)};
}

std::optional<std::vector<std::size_t>> ModularEchelon::insert(const Vector& v, std::size_t id)
{
    Vector work = v;
    std::map<std::size_t, std::uint64_t> combo{{id, 1}};
    auto pos = work.begin();
    while (pos != work.end()) {
        auto row = rows_.find(pos->first);
        if (row == rows_.end()) {
            ++pos;
            continue;
        }
        const std::size_t key = pos->first;
        const std::uint64_t f = pos->second;
        axpy(work, row->second.entries, f, sub_scaled_mod);
        axpy(combo, row->second.combo, f, sub_scaled_mod);
        pos = work.upper_bound(key);
    }
    if (work.empty()) {
        std::vector<std::size_t> support;
        for (const auto& [k, c] : combo)
            support.push_back(k);
        return support;
    }
    const std::uint64_t inv = inv_mod(work.begin()->second);
    for (auto& [k, c] : work)
        c = mul_mod(c, inv);
    for (auto& [k, c] : combo)
        c = mul_mod(c, inv);
    const std::size_t pivot = work.begin()->first;
    rows_.emplace(pivot, Row{std::move(work), std::move(combo)});
    return std::nullopt;
}

std::uint64_t mul_mod_prime(std::uint64_t a, std::uint64_t b) { return mul_mod(a, b); }
std::uint64_t add_mod_prime(std::uint64_t a, std::uint64_t b) { return add_mod(a, b); }

bool ModularRank::insert(const Vector& v)
{
    if (v.empty())
        return false;
    std::size_t top = 0;
    for (const auto& [k, c] : v)
        top = std::max(top, k);
    if (work_.size() <= top) {
        work_.resize(top + 1, 0);
        touched_.resize(top + 1, 0);
        pivots_.resize(top + 1, -1);
    }
    // positions still to visit, smallest first; reduction only adds larger ones
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> queue;
    std::vector<std::size_t> seen;
    const auto touch = [&](std::size_t k) {
        if (!touched_[k]) {
            touched_[k] = 1;
            queue.push(k);
            seen.push_back(k);
        }
    };
    for (const auto& [k, c] : v) {
        work_[k] = c % P;
        touch(k);
    }
    Vector residual;
    while (!queue.empty()) {
        const std::size_t k = queue.top();
        queue.pop();
        const std::uint64_t f = work_[k];
        if (f == 0)
            continue;
        if (pivots_[k] < 0) {
            residual.emplace_back(k, f);
            continue;
        }
        for (const auto& [j, c] : rows_[static_cast<std::size_t>(pivots_[k])]) {
            work_[j] = sub_mod(work_[j], mul_mod(f, c));
            touch(j);
        }
    }
    for (std::size_t k : seen) {
        work_[k] = 0;
        touched_[k] = 0;
    }
    if (residual.empty())
        return false;
    const std::uint64_t inv = inv_mod(residual.front().second);
    for (auto& [k, c] : residual)
        c = mul_mod(c, inv);
    pivots_[residual.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(residual));
    return true;
}

}  // namespace fpa
