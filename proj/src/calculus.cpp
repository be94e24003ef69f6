#include "fpa/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "fpa/linear_solve.hpp"

namespace fpa {

Endomorphism Endomorphism::identity(int n)
{
    Endomorphism e{n, {}};
    for (int i = 1; i <= n; ++i)
        e.images.push_back(PoissonElement::generator(i));
    return e;
}

PoissonElement Endomorphism::apply(const PoissonElement& p) const
{
    if (static_cast<int>(images.size()) != n)
        throw DomainError("endomorphism needs one image per variable");
    return substitute(p, images);
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner)
{
    if (outer.n != inner.n)
        throw DomainError("endomorphisms over different variable counts");
    Endomorphism r{inner.n, {}};
    for (const auto& image : inner.images)
        r.images.push_back(outer.apply(image));
    return r;
}

EnvMatrix identity_matrix(int n)
{
    EnvMatrix m(n, std::vector<EnvElement>(n));
    for (int i = 0; i < n; ++i)
        m[i][i] = EnvElement(1);
    return m;
}

EnvMatrix matrix_mul(const EnvMatrix& a, const EnvMatrix& b)
{
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    EnvMatrix r(rows, std::vector<EnvElement>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner)
            throw DomainError("matrix dimensions do not match");
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t l = 0; l < inner; ++l)
                if (!a[i][l].is_zero() && !b[l][j].is_zero())
                    r[i][j] += env_mul(a[i][l], b[l][j]);
    }
    return r;
}

EnvElement fox(const PoissonElement& p, int i, int n)
{
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    if (p.max_variable() > n)
        throw DomainError("element uses a variable beyond n");
    return right_cofactors(ham(p), n)[i - 1];
}

EnvMatrix jacobian(const Endomorphism& psi)
{
    if (static_cast<int>(psi.images.size()) != psi.n)
        throw DomainError("endomorphism needs one image per variable");
    EnvMatrix j;
    for (const auto& image : psi.images) {
        if (image.max_variable() > psi.n)
            throw DomainError("image uses a variable beyond n");
        j.push_back(right_cofactors(ham(image), psi.n));
    }
    return j;
}

namespace {

using Grade = std::vector<int>;

Grade add(Grade a, const Grade& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Grade sub(Grade a, const Grade& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

Grade word_grade(const HWord& w, int n, bool multi)
{
    if (!multi)
        return {static_cast<int>(w.size())};
    Grade g(n, 0);
    for (std::size_t l = 0; l < w.size(); ++l)
        ++g[w[l] - 1];
    return g;
}

Grade monomial_grade(const PoissonMonomial& m, int n, bool multi)
{
    return multi ? m.multidegree(n) : Grade{m.degree()};
}

std::optional<Grade> element_grade(const EnvElement& u, int n, bool multi)
{
    std::optional<Grade> grade;
    for (const auto& [w, p] : u.terms())
        for (const auto& [m, c] : p.terms()) {
            Grade g = add(monomial_grade(m, n, multi), word_grade(w, n, multi));
            if (grade && *grade != g)
                return std::nullopt;
            grade = std::move(g);
        }
    return grade;
}

// Row grades a and column grades b with grade(J_ji) = b_i - a_j on every
// nonzero entry, if such exist.
std::optional<std::pair<std::vector<Grade>, std::vector<Grade>>> matrix_grading(const EnvMatrix& J,
                                                                                  int n, bool multi)
{
    const std::size_t size = J.size();
    const Grade zero(multi ? n : 1, 0);
    std::vector<std::optional<Grade>> a(size), b(size);
    std::vector<std::vector<std::optional<Grade>>> entry(size, std::vector<std::optional<Grade>>(size));
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t i = 0; i < size; ++i) {
            if (J[j][i].is_zero())
                continue;
            entry[j][i] = element_grade(J[j][i], n, multi);
            if (!entry[j][i])
                return std::nullopt;
        }
    // breadth-first over the bipartite graph of nonzero entries; nodes
    // 0..size-1 are rows, size..2size-1 columns
    for (std::size_t root = 0; root < 2 * size; ++root) {
        auto& root_slot = root < size ? a[root] : b[root - size];
        if (root_slot)
            continue;
        root_slot = zero;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t node = queue.front();
            queue.pop();
            for (std::size_t other = 0; other < size; ++other) {
                if (node < size) {
                    const std::size_t j = node, i = other;
                    if (!entry[j][i])
                        continue;
                    Grade want = add(*a[j], *entry[j][i]);
                    if (!b[i]) {
                        b[i] = want;
                        queue.push(size + i);
                    } else if (*b[i] != want) {
                        return std::nullopt;
                    }
                } else {
                    const std::size_t i = node - size, j = other;
                    if (!entry[j][i])
                        continue;
                    Grade want = sub(*b[i], *entry[j][i]);
                    if (!a[j]) {
                        a[j] = want;
                        queue.push(j);
                    } else if (*a[j] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    std::vector<Grade> ra, rb;
    for (std::size_t k = 0; k < size; ++k) {
        ra.push_back(*a[k]);
        rb.push_back(*b[k]);
    }
    return std::pair{ra, rb};
}

struct Unknown {
    std::size_t column;  // j in V_kj
    std::size_t word;
    std::size_t monomial;
};

std::string coordinate_key(std::size_t column, const HWord& w, const PoissonMonomial& m)
{
    std::string key = std::to_string(column);
    key.push_back('\x01');
    key += w.raw();
    key.push_back('\0');
    for (const auto& [b, e] : m.factors()) {
        key += b.raw();
        key.push_back('\0');
        key += std::to_string(e);
        key.push_back('\0');
    }
    return key;
}

}  // namespace

InversionResult invert_jacobian_bounded(const EnvMatrix& J, int hdeg_bound, int coeff_deg_bound)
{
    if (hdeg_bound < 0 || coeff_deg_bound < 0)
        throw DomainError("bounds must be nonnegative");
    const std::size_t size = J.size();
    for (const auto& row : J)
        if (row.size() != size)
            throw DomainError("Jacobian matrix must be square");
    InversionResult result;
    if (size == 0) {
        result.status = InversionResult::Status::Invertible;
        result.inverse = EnvMatrix{};
        return result;
    }
    int n = static_cast<int>(size);
    for (const auto& row : J)
        for (const auto& e : row)
            n = std::max(n, e.max_variable());

    const std::vector<HWord> words = hwords(n, hdeg_bound);
    const std::vector<PoissonMonomial> monos = poisson_monomials(n, coeff_deg_bound);

    // w * J_ji for every word w
    std::vector<std::vector<std::vector<EnvElement>>> shifted(
        words.size(), std::vector<std::vector<EnvElement>>(size, std::vector<EnvElement>(size)));
    for (std::size_t w = 0; w < words.size(); ++w)
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t i = 0; i < size; ++i)
                shifted[w][j][i] = env_mul(EnvElement::word(words[w]), J[j][i]);

    bool multi = true;
    auto grading = matrix_grading(J, n, true);
    if (!grading) {
        multi = false;
        grading = matrix_grading(J, n, false);
    }

    // rows sharing one set of admissible unknowns are solved together
    std::vector<std::vector<std::size_t>> groups;
    if (grading) {
        for (std::size_t k = 0; k < size; ++k)
            groups.push_back({k});
    } else {
        groups.emplace_back(size);
        std::iota(groups[0].begin(), groups[0].end(), 0);
    }

    EnvMatrix V(size, std::vector<EnvElement>(size));
    for (const auto& rows : groups) {
        std::vector<Unknown> unknowns;
        for (std::size_t w = 0; w < words.size(); ++w)
            for (std::size_t m = 0; m < monos.size(); ++m)
                for (std::size_t j = 0; j < size; ++j) {
                    if (grading) {
                        const std::size_t k = rows[0];
                        const Grade want = sub(grading->first[j], grading->second[k]);
                        const Grade have = add(monomial_grade(monos[m], n, multi),
                                               word_grade(words[w], n, multi));
                        if (want != have)
                            continue;
                    }
                    unknowns.push_back({j, w, m});
                }
        // layers of equal (word length, coefficient degree)
        auto layer_of = [&](const Unknown& u) {
            return std::pair{words[u.word].size(), monos[u.monomial].degree()};
        };
        std::stable_sort(unknowns.begin(), unknowns.end(),
                         [&](const Unknown& x, const Unknown& y) { return layer_of(x) < layer_of(y); });

        std::unordered_map<std::string, std::size_t> coords;
        auto coord = [&](std::size_t column, const HWord& w, const PoissonMonomial& m) {
            auto [it, _] = coords.try_emplace(coordinate_key(column, w, m), coords.size());
            return it->second;
        };
        std::vector<std::optional<Combination>> solved(rows.size());
        auto all_solved = [&] {
            return std::all_of(solved.begin(), solved.end(), [](const auto& s) { return s.has_value(); });
        };
        auto try_targets = [&](const ExactEchelon& echelon) {
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (solved[r])
                    continue;
                SparseVector target{{coord(rows[r], HWord{}, PoissonMonomial{}), Scalar(1)}};
                auto [residual, combo] = echelon.reduce(target);
                if (residual.empty())
                    solved[r] = std::move(combo);
            }
        };

        ExactEchelon echelon;
        try_targets(echelon);
        std::size_t pos = 0;
        while (pos < unknowns.size() && !all_solved()) {
            const auto layer = layer_of(unknowns[pos]);
            for (; pos < unknowns.size() && layer_of(unknowns[pos]) == layer; ++pos) {
                const Unknown& u = unknowns[pos];
                SparseVector v;
                for (std::size_t i = 0; i < size; ++i)
                    for (const auto& [w, p] : shifted[u.word][u.column][i].terms())
                        for (const auto& [m, c] : p.terms())
                            v[coord(i, w, m * monos[u.monomial])] += c;
                std::erase_if(v, [](const auto& e) { return fpa::is_zero(e.second); });
                echelon.insert(v, pos);
            }
            try_targets(echelon);
        }
        if (!all_solved())
            return result;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [id, c] : *solved[r]) {
                const Unknown& u = unknowns[id];
                V[rows[r]][u.column].add_term(words[u.word],
                                              PoissonElement::monomial(monos[u.monomial], c));
            }
    }

    const EnvMatrix I = identity_matrix(static_cast<int>(size));
    if (matrix_mul(V, J) != I || matrix_mul(J, V) != I)
        return result;
    result.status = InversionResult::Status::Invertible;
    result.inverse = std::move(V);
    return result;
}

namespace {

// Scales (lambda, mu) to coprime integer coefficients with a positive leading
// coefficient on lambda (on mu when lambda is zero).
void normalise_pair(PoissonElement& lambda, PoissonElement& mu)
{
    mpz_class den = 1, num = 0;
    for (const auto* p : {&lambda, &mu})
        for (const auto& [m, c] : p->terms()) {
            den = lcm(den, mpz_class(c.get_den()));
            num = gcd(num, mpz_class(c.get_num()));
        }
    if (num == 0)
        return;
    Scalar factor(den, num);
    factor.canonicalize();
    const PoissonElement& lead = lambda.is_zero() ? mu : lambda;
    if (sgn(lead.leading_coefficient()) < 0)
        factor = -factor;
    lambda *= factor;
    mu *= factor;
}

}  // namespace

PairStatus pair_status(const PoissonElement& f, const PoissonElement& g, std::size_t max_steps)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("pair_status needs nonzero elements");
    PairStatus status;
    if (!poisson_bracket(f, g).is_zero())
        return status;
    status.kind = PairStatus::Kind::Dependent;
    const EnvElement hf = ham(f), hg = ham(g);
    const std::vector<EnvElement> system{hf, hg};
    DependencyVerdict verdict = decide_left_dependence(system, max_steps);
    if (verdict.status != DependencyStatus::Dependent)
        return status;
    const Witness& w = *verdict.witness;
    status.witness = w;
    const Splitting s0 = split(w[0]), s1 = split(w[1]);
    PoissonElement lambda = s0.p_part, mu = -s1.p_part;
    if (lambda.is_zero() && mu.is_zero())
        return status;
    if (left_scale(lambda, hf) != left_scale(mu, hg))
        return status;
    normalise_pair(lambda, mu);
    status.lambda = std::move(lambda);
    status.mu = std::move(mu);
    return status;
}

bool has_polynomial_images(const Endomorphism& psi)
{
    return std::all_of(psi.images.begin(), psi.images.end(),
                       [](const PoissonElement& p) { return is_commutative_polynomial(p); });
}

}  // namespace fpa
