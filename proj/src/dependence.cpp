#include "fpa/dependence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "fpa/linear_solve.hpp"

namespace fpa {

EnvElement lambda_shift(const PoissonElement& lambda, const EnvElement& u)
{
    if (lambda.is_zero() || u.is_zero())
        throw DomainError("lambda_shift needs nonzero arguments");
    const Degree m = hdeg(u);
    const EnvElement lam(lambda);
    // lambda u = u lambda + u1 with hdeg u1 < m
    const EnvElement u1 = left_scale(lambda, u) - env_mul(u, lam);
    EnvElement v = left_scale(lambda.pow(static_cast<int>(m)), u);
    if (u1.is_zero())
        return v;
    const Degree d1 = hdeg(u1);
    v += left_scale(lambda.pow(static_cast<int>(m - 1 - d1)), lambda_shift(lambda, u1));
    return v;
}

EnvElement composition(const EnvElement& u, const EnvElement& v)
{
    if (u.is_zero() || v.is_zero())
        throw DomainError("composition needs nonzero arguments");
    const HWord& lu = ldm(u);
    const HWord& lv = ldm(v);
    if (!lv.left_divides(lu))
        throw DomainError("leading word of the second argument does not left-divide the first");
    const HWord t = lu.substr(0, lu.size() - lv.size());
    const PoissonElement r = gcd(ldc(u), ldc(v));
    const PoissonElement a = *divide_exact(ldc(v), r);
    const PoissonElement b = *divide_exact(ldc(u), r);
    return left_scale(a, u) - left_scale(b, env_mul(EnvElement::word(t), v));
}

bool verify_witness(std::span<const EnvElement> witness, std::span<const EnvElement> system)
{
    if (witness.size() != system.size())
        return false;
    if (std::all_of(witness.begin(), witness.end(), [](const EnvElement& e) { return e.is_zero(); }))
        return false;
    EnvElement sum;
    for (std::size_t r = 0; r < system.size(); ++r)
        sum += env_mul(witness[r], system[r]);
    return sum.is_zero();
}

bool pairwise_incomparable(std::span<const EnvElement> system)
{
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = 0; j < system.size(); ++j)
            if (i != j && !system[i].is_zero() && !system[j].is_zero() &&
                ldm(system[j]).left_divides(ldm(system[i])))
                return false;
    return true;
}

namespace {

std::optional<Witness> escalating_search(std::span<const EnvElement> system)
{
    for (auto [h, d] : {std::pair{1, 2}, std::pair{2, 4}, std::pair{4, 6}})
        if (auto w = brute_force_dependence(system, h, d))
            return w;
    return std::nullopt;
}

}  // namespace

DependencyVerdict decide_left_dependence(std::span<const EnvElement> system, std::size_t max_steps)
{
    if (system.empty())
        throw DomainError("empty system");
    const std::size_t k = system.size();
    DependencyVerdict verdict;

    for (std::size_t r = 0; r < k; ++r) {
        if (system[r].is_zero()) {
            Witness w(k);
            w[r] = EnvElement(1);
            verdict.status = DependencyStatus::Dependent;
            verdict.witness = std::move(w);
            verdict.final_rows.assign(system.begin(), system.end());
            return verdict;
        }
    }

    std::vector<EnvElement> rows(system.begin(), system.end());
    std::vector<Witness> combos(k, Witness(k));
    for (std::size_t r = 0; r < k; ++r)
        combos[r][r] = EnvElement(1);

    const HWordOrder less;
    for (std::size_t step = 0; step < max_steps; ++step) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j || !ldm(rows[j]).left_divides(ldm(rows[i])))
                    continue;
                if (!best || less(ldm(rows[i]), ldm(rows[best->first])))
                    best = std::pair{i, j};
            }
        if (!best) {
            verdict.status = DependencyStatus::Independent;
            verdict.final_rows = std::move(rows);
            return verdict;
        }

        const auto [i, j] = *best;
        const HWord& li = ldm(rows[i]);
        ReductionStep rec;
        rec.target = i;
        rec.pivot = j;
        rec.shift = li.substr(0, li.size() - ldm(rows[j]).size());
        const PoissonElement r = gcd(ldc(rows[i]), ldc(rows[j]));
        rec.lambda = *divide_exact(ldc(rows[j]), r);
        rec.mu = *divide_exact(ldc(rows[i]), r);

        const EnvElement t = EnvElement::word(rec.shift);
        const HWord old_ldm = li;
        EnvElement next = left_scale(rec.lambda, rows[i]) - left_scale(rec.mu, env_mul(t, rows[j]));
        if (!next.is_zero() && !less(ldm(next), old_ldm))
            throw std::logic_error("reduction step failed to lower the leading word");
        for (std::size_t c = 0; c < k; ++c)
            combos[i][c] = left_scale(rec.lambda, combos[i][c]) - left_scale(rec.mu, env_mul(t, combos[j][c]));
        rows[i] = std::move(next);
        verdict.trace.push_back(std::move(rec));

        if (rows[i].is_zero()) {
            verdict.final_rows = rows;
            if (verify_witness(combos[i], system)) {
                verdict.status = DependencyStatus::Dependent;
                verdict.witness = std::move(combos[i]);
            } else if (auto w = escalating_search(system)) {
                verdict.status = DependencyStatus::Dependent;
                verdict.witness = std::move(w);
            } else {
                verdict.status = DependencyStatus::BudgetExhausted;
            }
            return verdict;
        }
    }
    verdict.status = DependencyStatus::BudgetExhausted;
    verdict.final_rows = std::move(rows);
    return verdict;
}

std::vector<PoissonMonomial> poisson_monomials(int n, int max_degree)
{
    std::vector<PoissonMonomial> out{PoissonMonomial{}};
    if (max_degree < 1)
        return out;
    const std::vector<LieWord> basis = lyndon_basis(n, max_degree);
    // extend each monomial only by basis elements not earlier than its last factor
    std::vector<std::pair<PoissonMonomial, std::size_t>> frontier{{PoissonMonomial{}, 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<PoissonMonomial, std::size_t>> next;
        for (const auto& [m, start] : frontier)
            for (std::size_t b = start; b < basis.size(); ++b) {
                if (m.degree() + static_cast<int>(basis[b].size()) > max_degree)
                    continue;
                PoissonMonomial mm = m * PoissonMonomial::basis(basis[b]);
                out.push_back(mm);
                next.emplace_back(std::move(mm), b);
            }
        frontier = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

std::vector<HWord> hwords(int n, int max_length)
{
    std::vector<HWord> out{HWord{}};
    std::size_t begin = 0;
    for (int len = 1; len <= max_length; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (int a = 1; a <= n; ++a)
                out.push_back(out[i] + HWord::letter(a));
        begin = end;
    }
    return out;
}

namespace {

// Grading used to split the search: one entry per variable, h(x_i) counting
// toward x_i. Returns the grade of every term if they agree, else nullopt.
std::optional<std::vector<int>> common_multidegree(const EnvElement& u, int n)
{
    std::optional<std::vector<int>> grade;
    for (const auto& [w, p] : u.terms())
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> g = m.multidegree(n);
            for (std::size_t i = 0; i < w.size(); ++i)
                ++g[w[i] - 1];
            if (grade && *grade != g)
                return std::nullopt;
            grade = std::move(g);
        }
    return grade;
}

std::optional<int> common_total_degree(const EnvElement& u)
{
    std::optional<int> grade;
    for (const auto& [w, p] : u.terms())
        for (const auto& [m, c] : p.terms()) {
            const int g = m.degree() + static_cast<int>(w.size());
            if (grade && *grade != g)
                return std::nullopt;
            grade = g;
        }
    return grade;
}

std::string term_key(const HWord& w, const PoissonMonomial& m)
{
    std::string key = w.raw();
    key.push_back('\0');
    for (const auto& [b, e] : m.factors()) {
        key += b.raw();
        key.push_back('\0');
        key += std::to_string(e);
        key.push_back('\0');
    }
    return key;
}

struct Unknown {
    std::size_t element;
    const HWord* word;
    const PoissonMonomial* coeff;
};

class Coordinates {
public:
    std::size_t index(const HWord& w, const PoissonMonomial& m)
    {
        auto [it, inserted] = table_.try_emplace(term_key(w, m), table_.size());
        return it->second;
    }

private:
    std::unordered_map<std::string, std::size_t> table_;
};

// Value of a basis element at the evaluation point: a fixed hash of its word.
std::uint64_t point_value(const LieWord& b)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : b.raw())
        h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    h += 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h % ModularEchelon::kPrime;
}

std::optional<std::uint64_t> evaluate(const PoissonElement& p)
{
    std::uint64_t total = 0;
    for (const auto& [m, c] : p.terms()) {
        auto v = reduce_mod_prime(c);
        if (!v)
            return std::nullopt;
        std::uint64_t term = *v;
        for (const auto& [b, e] : m.factors())
            for (int i = 0; i < e; ++i)
                term = mul_mod_prime(term, point_value(b));
        total = add_mod_prime(total, term);
    }
    return total;
}

// The products w * s_r with every basis element of P specialized to a point
// of Z/p. A nonzero maximal minor there is a nonzero minor over P, so full rank
// rules out dependencies with coefficients of any degree. Otherwise returns
// the product indices of a dependency at the point.
struct Specialization {
    bool full_rank = false;
    std::set<std::size_t> support;
};

Specialization specialize(const std::vector<std::vector<EnvElement>>& products)
{
    Specialization out;
    std::map<std::string, std::size_t> columns;
    ModularEchelon echelon;
    std::size_t id = 0;
    for (const auto& row : products)
        for (const EnvElement& u : row) {
            ModularEchelon::Vector v;
            for (const auto& [w, p] : u.terms()) {
                const auto value = evaluate(p);
                if (!value)
                    return out;
                if (*value)
                    v[columns.try_emplace(w.raw(), columns.size()).first->second] = *value;
            }
            if (auto dep = echelon.insert(v, id)) {
                out.support.insert(dep->begin(), dep->end());
                return out;
            }
            ++id;
        }
    out.full_rank = true;
    return out;
}

std::optional<Combination> exact_dependency(const std::vector<SparseVector>& vectors,
                                            const std::vector<std::size_t>& ids)
{
    ExactEchelon exact;
    for (std::size_t id : ids)
        if (auto combo = exact.insert(vectors[id], id))
            return combo;
    return std::nullopt;
}

// Tries to find a dependency among the images of one homogeneous group of
// unknowns. Unknowns whose product is in `preferred` are tried alone first.
std::optional<Combination> solve_group(const std::vector<Unknown>& group,
                                       const std::vector<std::vector<EnvElement>>& products,
                                       const std::vector<HWord>& words, const std::set<std::size_t>& preferred)
{
    Coordinates coords;
    std::vector<SparseVector> vectors;
    std::vector<std::size_t> first;
    vectors.reserve(group.size());
    for (std::size_t id = 0; id < group.size(); ++id) {
        const Unknown& u = group[id];
        const std::size_t wi = static_cast<std::size_t>(u.word - words.data());
        if (preferred.count(u.element * words.size() + wi))
            first.push_back(id);
        const EnvElement& base = products[u.element][wi];
        SparseVector v;
        for (const auto& [w, p] : base.terms())
            for (const auto& [m, c] : p.terms())
                v[coords.index(w, m * *u.coeff)] += c;
        vectors.push_back(std::move(v));
    }

    if (!first.empty() && first.size() < group.size())
        if (auto combo = exact_dependency(vectors, first))
            return combo;

    // modular screen: full rank mod p certifies independence
    ModularRank screen;
    bool screened = true;
    for (const SparseVector& v : vectors) {
        ModularRank::Vector mv;
        for (const auto& [k, c] : v) {
            auto r = reduce_mod_prime(c);
            if (!r) {
                screened = false;
                break;
            }
            if (*r)
                mv.emplace_back(k, *r);
        }
        if (!screened)
            break;
        if (!screen.insert(mv)) {
            screened = false;
            break;
        }
    }
    if (screened)
        return std::nullopt;

    std::vector<std::size_t> all(vectors.size());
    for (std::size_t id = 0; id < all.size(); ++id)
        all[id] = id;
    return exact_dependency(vectors, all);
}

}  // namespace

std::optional<Witness> brute_force_dependence(std::span<const EnvElement> system, int hdeg_bound,
                                              int coeff_deg_bound, int n)
{
    if (hdeg_bound < 0 || coeff_deg_bound < 0)
        throw DomainError("bounds must be nonnegative");
    const std::size_t k = system.size();
    if (n <= 0) {
        n = 1;
        for (const auto& s : system)
            n = std::max(n, s.max_variable());
    }
    for (std::size_t r = 0; r < k; ++r) {
        if (system[r].is_zero()) {
            Witness w(k);
            w[r] = EnvElement(1);
            return w;
        }
    }

    const std::vector<HWord> words = hwords(n, hdeg_bound);
    const std::vector<PoissonMonomial> monos = poisson_monomials(n, coeff_deg_bound);

    std::vector<std::vector<EnvElement>> products(k);
    for (std::size_t r = 0; r < k; ++r) {
        products[r].reserve(words.size());
        for (const HWord& w : words)
            products[r].push_back(env_mul(EnvElement::word(w), system[r]));
    }

    const Specialization special = specialize(products);
    if (special.full_rank)
        return std::nullopt;

    // group unknowns by the grade of their product
    std::vector<std::optional<std::vector<int>>> multi(k);
    std::vector<std::optional<int>> total(k);
    bool use_multi = true, use_total = true;
    for (std::size_t r = 0; r < k; ++r) {
        multi[r] = common_multidegree(system[r], n);
        total[r] = common_total_degree(system[r]);
        use_multi = use_multi && multi[r].has_value();
        use_total = use_total && total[r].has_value();
    }
    std::map<std::vector<int>, std::vector<Unknown>> groups;
    for (std::size_t r = 0; r < k; ++r)
        for (const HWord& w : words)
            for (const PoissonMonomial& m : monos) {
                std::vector<int> key;
                if (use_multi) {
                    key = m.multidegree(n);
                    for (int i = 0; i < n; ++i)
                        key[i] += (*multi[r])[i];
                    for (std::size_t l = 0; l < w.size(); ++l)
                        ++key[w[l] - 1];
                } else if (use_total) {
                    key = {m.degree() + static_cast<int>(w.size()) + *total[r]};
                }
                groups[key].push_back(Unknown{r, &w, &m});
            }

    for (const auto& [grade, group] : groups) {
        auto combo = solve_group(group, products, words, special.support);
        if (!combo)
            continue;
        Witness witness(k);
        for (const auto& [id, c] : *combo) {
            const Unknown& u = group[id];
            witness[u.element].add_term(*u.word, PoissonElement::monomial(*u.coeff, c));
        }
        if (verify_witness(witness, system))
            return witness;
        throw std::logic_error("brute-force search produced an invalid witness");
    }
    return std::nullopt;
}

}  // namespace fpa
