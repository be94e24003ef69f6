#include "fpa/checks.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fpa/calculus.hpp"
#include "fpa/dependence.hpp"
#include "fpa/expression.hpp"
#include "fpa/random.hpp"
#include "fpa/render.hpp"
#include "fpa/symplectic.hpp"

namespace fpa {

namespace {

// Collects the first failure of a suite.
class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what();
        }
    }
    bool failed() const { return !result_.passed; }

    SuiteResult finish()
    {
        if (result_.passed)
            result_.detail = std::to_string(result_.cases) + " cases";
        return result_;
    }

private:
    SuiteResult result_;
};

std::string show(const PoissonElement& p) { return render(p); }
std::string show(const EnvElement& u) { return render(u); }

SuiteResult poisson_axioms(const SuiteOptions& opt)
{
    Tally t("poisson-axioms");
    Random rng(opt.seed);
    for (int k = 0; k < 500 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement a = rng.poisson(n, 5, 3);
        const PoissonElement b = rng.poisson(n, 3, 3);
        const PoissonElement c = rng.poisson(n, 3, 3);
        const auto ctx = [&] { return "a = " + show(a) + ", b = " + show(b) + ", c = " + show(c); };
        t.check(poisson_bracket(a, b * c) == poisson_bracket(a, b) * c + b * poisson_bracket(a, c),
                [&] { return "Leibniz: " + ctx(); });
        t.check(poisson_bracket(a, poisson_bracket(b, c)) + poisson_bracket(b, poisson_bracket(c, a)) +
                        poisson_bracket(c, poisson_bracket(a, b)) ==
                    PoissonElement(),
                [&] { return "Jacobi: " + ctx(); });
        t.check(poisson_bracket(a, b) == -poisson_bracket(b, a), [&] { return "antisymmetry: " + ctx(); });

        const PoissonElement f = rng.homogeneous_poisson(n, rng.uniform(1, 5), 3);
        const PoissonElement g = rng.homogeneous_poisson(n, rng.uniform(1, 4), 3);
        const PoissonElement fg = poisson_bracket(f, g);
        t.check(fg.is_zero() || (is_homogeneous(fg) && degree(fg) == degree(f) + degree(g)),
                [&] { return "degree additivity: f = " + show(f) + ", g = " + show(g); });
    }
    return t.finish();
}

SuiteResult canonical_form(const SuiteOptions& opt)
{
    Tally t("canonical-form");
    Random rng(opt.seed);
    for (int k = 0; k < 300 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 3);
        const EnvElement u = rng.env(n, 3, 3, 3);
        const EnvElement v = rng.env(n, 3, 3, 3);
        const EnvElement w = rng.env(n, 3, 3, 3);
        t.check(env_mul(env_mul(u, v), w) == env_mul(u, env_mul(v, w)), [&] {
            return "associativity: u = " + show(u) + ", v = " + show(v) + ", w = " + show(w);
        });
    }
    for (int k = 0; k < 300 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement x = rng.poisson(n, 3, 2);
        const PoissonElement y = rng.poisson(n, 3, 2);
        const EnvElement hx = ham(x);
        const EnvElement hy = ham(y);
        const EnvElement ex(x);
        const EnvElement ey(y);
        const auto ctx = [&] { return "x = " + show(x) + ", y = " + show(y); };
        t.check(ham(poisson_bracket(x, y)) == env_mul(hx, hy) - env_mul(hy, hx),
                [&] { return "relation (1): " + ctx(); });
        t.check(ham(x * y) == env_mul(ey, hx) + env_mul(ex, hy), [&] { return "relation (2): " + ctx(); });
        t.check(EnvElement(poisson_bracket(x, y)) == env_mul(hx, ey) - env_mul(ey, hx),
                [&] { return "relation (3): " + ctx(); });
        t.check(env_mul(hx, ey) - env_mul(ey, hx) == env_mul(ex, hy) - env_mul(hy, ex),
                [&] { return "relation (4): " + ctx(); });
    }
    return t.finish();
}

SuiteResult leading_terms(const SuiteOptions& opt)
{
    Tally t("leading-terms");
    Random rng(opt.seed);
    for (int k = 0; k < 300 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 3);
        const EnvElement u = rng.nonzero_env(n, 3, 3, 3);
        const EnvElement v = rng.nonzero_env(n, 3, 3, 3);
        const EnvElement uv = env_mul(u, v);
        const auto ctx = [&] { return "u = " + show(u) + ", v = " + show(v); };
        t.check(!uv.is_zero(), [&] { return "zero product: " + ctx(); });
        if (t.failed())
            break;
        t.check(ldm(uv) == ldm(u) + ldm(v), [&] { return "ldm: " + ctx(); });
        t.check(ldc(uv) == ldc(u) * ldc(v), [&] { return "ldc: " + ctx(); });
        t.check(hdeg(uv) == hdeg(u) + hdeg(v), [&] { return "hdeg: " + ctx(); });
    }
    return t.finish();
}

SuiteResult graded_product_suite(const SuiteOptions& opt)
{
    Tally t("graded-product");
    Random rng(opt.seed);
    for (int k = 0; k < 200 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 3);
        const EnvElement u = rng.nonzero_env(n, 3, 3, 3);
        const EnvElement v = rng.nonzero_env(n, 3, 3, 3);
        t.check(top(env_mul(u, v)) == graded_product(top(u), top(v)),
                [&] { return "u = " + show(u) + ", v = " + show(v); });
    }
    return t.finish();
}

SuiteResult shift(const SuiteOptions& opt)
{
    Tally t("shift");
    Random rng(opt.seed);
    for (int k = 0; k < 200 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 3);
        const PoissonElement lambda = rng.nonzero_poisson(n, 2, 2);
        const EnvElement u = rng.nonzero_env(n, 3, 2, 2);
        const EnvElement lhs = env_mul(EnvElement(lambda.pow(static_cast<int>(hdeg(u)) + 1)), u);
        const EnvElement rhs = env_mul(lambda_shift(lambda, u), EnvElement(lambda));
        t.check(lhs == rhs, [&] { return "lambda = " + show(lambda) + ", u = " + show(u); });
    }
    return t.finish();
}

SuiteResult dependence_corpus(const SuiteOptions& opt)
{
    Tally t("dependence-corpus");
    if (opt.corpus_path.empty())
        throw std::invalid_argument("dependence-corpus needs a corpus path");
    const std::vector<CorpusRecord> corpus = load_corpus(opt.corpus_path);
    t.check(corpus.size() >= 60, [&] { return "corpus has only " + std::to_string(corpus.size()) + " systems"; });
    std::vector<std::size_t> disagreements;
    for (std::size_t r = 0; r < corpus.size() && !t.failed(); ++r) {
        const CorpusRecord& rec = corpus[r];
        std::vector<EnvElement> system;
        for (const std::string& e : rec.elements)
            system.push_back(parse_env(e, rec.n));
        const auto where = [&] { return "record " + std::to_string(r + 1) + ": "; };

        const DependencyVerdict verdict = decide_left_dependence(system);
        t.check(verdict.status != DependencyStatus::BudgetExhausted, [&] { return where() + "budget exhausted"; });
        if (t.failed())
            break;
        const bool dependent = verdict.status == DependencyStatus::Dependent;
        if (dependent)
            t.check(verdict.witness && verify_witness(*verdict.witness, system),
                    [&] { return where() + "witness does not verify"; });
        else
            t.check(pairwise_incomparable(verdict.final_rows),
                    [&] { return where() + "final leading words are comparable"; });

        const bool oracle = brute_force_dependence(system, 4, 6, rec.n).has_value();
        if (oracle != dependent)
            disagreements.push_back(r + 1);
        if (rec.expected)
            t.check(*rec.expected == (dependent ? "dependent" : "independent") || oracle != dependent,
                    [&] { return where() + "expected " + *rec.expected; });
    }
    t.check(disagreements.empty(), [&] {
        std::string list;
        for (std::size_t r : disagreements)
            list += (list.empty() ? "" : ", ") + std::to_string(r);
        return "brute force at (4, 6) disagrees with the decision on record(s) " + list + " of " +
               std::to_string(corpus.size());
    });
    return t.finish();
}

// A random non-constant element of P.
PoissonElement nonconstant(Random& rng, int n, int max_degree, int max_terms)
{
    while (true) {
        PoissonElement a = rng.poisson(n, max_degree, max_terms);
        if (!a.is_zero() && !a.is_constant())
            return a;
    }
}

// c_0 + c_1 a + ... + c_d a^d with c_d != 0 and d >= 1.
PoissonElement polynomial_in(Random& rng, const PoissonElement& a, int max_power)
{
    const int d = rng.uniform(1, max_power);
    PoissonElement out;
    for (int k = 0; k <= d; ++k)
        if (k == d || rng.coin())
            out += Scalar(rng.uniform(1, 3) * (rng.coin() ? 1 : -1)) * a.pow(k);
    return out;
}

SuiteResult commuting_pairs(const SuiteOptions& opt)
{
    Tally t("commuting-pairs");
    Random rng(opt.seed);
    for (int k = 0; k < 50 && !t.failed(); ++k) {
        const PoissonElement a = nonconstant(rng, 2, 3, 2);
        const PoissonElement f = polynomial_in(rng, a, 2);
        const PoissonElement g = polynomial_in(rng, a, 2);
        const auto ctx = [&] { return "f = " + show(f) + ", g = " + show(g); };
        const PairStatus s = pair_status(f, g);
        t.check(s.kind == PairStatus::Kind::Dependent, [&] { return "not dependent: " + ctx(); });
        t.check(s.lambda && s.mu && !(s.lambda->is_zero() && s.mu->is_zero()) &&
                    left_scale(*s.lambda, ham(f)) == left_scale(*s.mu, ham(g)),
                [&] { return "relation lambda h_f = mu h_g fails: " + ctx(); });
    }
    for (int k = 0; k < 50 && !t.failed(); ++k) {
        PoissonElement f, g;
        do {
            f = nonconstant(rng, 2, 2, 2);
            g = nonconstant(rng, 2, 2, 2);
        } while (poisson_bracket(f, g).is_zero());
        const std::vector<EnvElement> system{ham(f), ham(g)};
        const DependencyVerdict v = decide_left_dependence(system);
        t.check(v.status == DependencyStatus::Independent,
                [&] { return "bracket nonzero but not independent: f = " + show(f) + ", g = " + show(g); });
    }
    // Tuples with an explicit Poisson relation: (a, q(a), b) and (a, b, {a, b}).
    for (int k = 0; k < 20 && !t.failed(); ++k) {
        const PoissonElement a = nonconstant(rng, 2, 2, 2);
        const PoissonElement b = nonconstant(rng, 2, 2, 2);
        std::vector<PoissonElement> tuple;
        if (k % 2 == 0)
            tuple = {a, polynomial_in(rng, a, 2), b};
        else
            tuple = {a, b, poisson_bracket(a, b)};
        std::vector<EnvElement> system;
        for (const PoissonElement& p : tuple)
            system.push_back(ham(p));
        const DependencyVerdict v = decide_left_dependence(system);
        t.check(v.status == DependencyStatus::Dependent && v.witness && verify_witness(*v.witness, system),
                [&] { return "Poisson dependent tuple not left dependent: a = " + show(a) + ", b = " + show(b); });
    }
    return t.finish();
}

bool is_two_sided_inverse(const EnvMatrix& v, const EnvMatrix& j)
{
    const EnvMatrix id = identity_matrix(static_cast<int>(j.size()));
    return matrix_mul(v, j) == id && matrix_mul(j, v) == id;
}

SuiteResult tame_inverse(const SuiteOptions& opt)
{
    Tally t("tame-inverse");
    Random rng(opt.seed);
    for (int k = 0; k < 30 && !t.failed(); ++k) {
        const Endomorphism psi = rng.tame_automorphism(3, 3);
        const EnvMatrix j = jacobian(psi);
        const InversionResult r = invert_jacobian_bounded(j, 3, 12);
        const auto ctx = [&] { return "psi = (" + show(psi.images[0]) + ", " + show(psi.images[1]) + ")"; };
        t.check(r.status == InversionResult::Status::Invertible && r.inverse && is_two_sided_inverse(*r.inverse, j),
                [&] { return "no verified inverse: " + ctx(); });
        t.check(has_polynomial_images(psi), [&] { return "images are not polynomial: " + ctx(); });
    }
    const PoissonElement x = PoissonElement::generator(1);
    const Endomorphism square{2, {x * x, PoissonElement::generator(2)}};
    t.check(invert_jacobian_bounded(jacobian(square), 3, 6).status == InversionResult::Status::Unknown,
            [] { return "(x^2, y) reported invertible"; });
    return t.finish();
}

PnEnvElement commutator(const PnEnvElement& a, const PnEnvElement& b)
{
    return pn_env_mul(a, b) - pn_env_mul(b, a);
}

PnEnvElement pn_constant(int n, const Scalar& c)
{
    return PnEnvElement::from_poly(SymplecticPoly::constant(2 * n, c));
}

// A random normal-ordered Weyl monomial.
WeylElement weyl_monomial(Random& rng, int n, int max_degree)
{
    return WeylElement::monomial(rng.multi_index(2 * n, max_degree), Scalar(1));
}

SuiteResult theta_commutators(const SuiteOptions& opt)
{
    Tally t("theta-commutators");
    for (int n = 1; n <= 2; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const Scalar d = i == j ? 1 : 0;
                const auto ctx = [&] {
                    return "n = " + std::to_string(n) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j);
                };
                const auto lx = theta_left(WeylElement::X(n, i)), ly = theta_left(WeylElement::Y(n, j));
                const auto rx = theta_right(WeylElement::X(n, i)), ry = theta_right(WeylElement::Y(n, j));
                t.check(commutator(lx, ly) == pn_constant(n, d), [&] { return "[X_i, Y_j] left: " + ctx(); });
                t.check(commutator(theta_left(WeylElement::X(n, i)), theta_left(WeylElement::X(n, j))).is_zero(),
                        [&] { return "[X_i, X_j] left: " + ctx(); });
                t.check(commutator(theta_left(WeylElement::Y(n, i)), ly).is_zero(),
                        [&] { return "[Y_i, Y_j] left: " + ctx(); });
                t.check(commutator(rx, ry) == pn_constant(n, -d), [&] { return "[X_i, Y_j] right: " + ctx(); });
                t.check(commutator(rx, theta_right(WeylElement::X(n, j))).is_zero(),
                        [&] { return "[X_i, X_j] right: " + ctx(); });
                t.check(commutator(theta_right(WeylElement::Y(n, i)), ry).is_zero(),
                        [&] { return "[Y_i, Y_j] right: " + ctx(); });
                for (const auto& l : {lx, ly})
                    for (const auto& r : {rx, ry})
                        t.check(commutator(l, r).is_zero(), [&] { return "left and right generators: " + ctx(); });
            }
    Random rng(opt.seed);
    for (int k = 0; k < 100 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 2);
        const WeylElement a = weyl_monomial(rng, n, 3);
        const WeylElement b = weyl_monomial(rng, n, 3);
        t.check(commutator(theta_left(a), theta_right(b)).is_zero(),
                [&] { return "left(" + render(a) + ") and right(" + render(b) + ") do not commute"; });
    }
    return t.finish();
}

SuiteResult symmetrization(const SuiteOptions& opt)
{
    Tally t("symmetrization");
    {
        const int n = 1;
        const SymplecticPoly x = sp_x(n, 1), y = sp_y(n, 1);
        const MultiIndex hx{1, 0}, hy{0, 1}, hxy{1, 1};
        PnEnvElement expected = PnEnvElement::from_poly(x * y);
        expected.add_term(hx, Scalar(1, 2) * y);
        expected.add_term(hy, Scalar(1, 2) * x);
        expected.add_term(hxy, SymplecticPoly::constant(2, Scalar(1, 4)));
        t.check(rho_w(x * y) == expected, [] { return "worked value rho_w(x1*y1)"; });
        t.check(theta_left(symmetrize(x * y)) == expected, [] { return "worked value theta_left(w(x1*y1))"; });
    }
    Random rng(opt.seed);
    for (int k = 0; k < 200 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 2);
        const SymplecticPoly f = rng.symplectic(n, 4, 3);
        t.check(rho_w(f) == theta_left(symmetrize(f)), [&] { return "f = " + render(f); });
    }
    return t.finish();
}

SuiteResult commutation_formula(const SuiteOptions& opt)
{
    Tally t("commutation-formula");
    Random rng(opt.seed);
    for (int k = 0; k < 100 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 2);
        const SymplecticPoly f = rng.symplectic(n, 4, 3);
        for (int total = 0; total <= 3 && !t.failed(); ++total)
            for (const MultiIndex& gamma : indices_with_norm(2 * n, total)) {
                PnEnvElement lhs =
                    pn_env_mul(PnEnvElement::term(SymplecticPoly::constant(2 * n, Scalar(1)), gamma),
                               PnEnvElement::from_poly(f));
                lhs *= 1 / factorial(gamma);
                PnEnvElement rhs(n);
                for (const MultiIndex& alpha : indices_below(gamma)) {
                    const MultiIndex beta = gamma - alpha;
                    int alpha2 = 0;
                    for (int i = n; i < 2 * n; ++i)
                        alpha2 += alpha[i];
                    const Scalar c = Scalar(alpha2 % 2 ? -1 : 1) / (factorial(alpha) * factorial(beta));
                    rhs.add_term(beta, c * derivative(f, swap_halves(alpha)));
                }
                t.check(lhs == rhs, [&] {
                    std::string g;
                    for (int e : gamma.entries())
                        g += std::to_string(e) + " ";
                    return "f = " + render(f) + ", gamma = " + g;
                });
            }
    }
    return t.finish();
}

SuiteResult moyal_suite(const SuiteOptions& opt)
{
    Tally t("moyal");
    Random rng(opt.seed);
    for (int k = 0; k < 200 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 2);
        const SymplecticPoly f = rng.symplectic(n, 3, 3);
        const SymplecticPoly g = rng.symplectic(n, 3, 3);
        const SymplecticPoly fg = moyal(f, g);
        const PnEnvElement prod = pn_env_mul(rho_w(f), rho_w(g));
        const auto ctx = [&] { return "f = " + render(f) + ", g = " + render(g); };
        t.check(prod.coefficient(MultiIndex(2 * n)) == fg, [&] { return "constant part: " + ctx(); });
        t.check(prod == rho_w(fg), [&] { return "isomorphism route: " + ctx(); });
    }
    for (int k = 0; k < 100 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 2);
        const SymplecticPoly f = rng.symplectic(n, 3, 2);
        const SymplecticPoly g = rng.symplectic(n, 3, 2);
        const SymplecticPoly h = rng.symplectic(n, 3, 2);
        t.check(moyal(moyal(f, g), h) == moyal(f, moyal(g, h)),
                [&] { return "associativity: f = " + render(f) + ", g = " + render(g) + ", h = " + render(h); });
    }
    const SymplecticPoly x = sp_x(1, 1), y = sp_y(1, 1);
    t.check(moyal(x, y) - moyal(y, x) == SymplecticPoly::constant(2, Scalar(1)), [] { return "x1*y1 - y1*x1 != 1"; });
    for (int k = 0; k < 100 && !t.failed(); ++k) {
        const int n = rng.uniform(1, 2);
        const SymplecticPoly f = rng.symplectic(n, 1, 2) * rng.symplectic(n, 1, 2);
        const SymplecticPoly g = rng.symplectic(n, 1, 2) * rng.symplectic(n, 1, 2);
        t.check(moyal_order(f, g, 1) - moyal_order(g, f, 1) == sp_bracket(f, g),
                [&] { return "skew part: f = " + render(f) + ", g = " + render(g); });
    }
    return t.finish();
}

SuiteResult weyl_relations(const SuiteOptions&)
{
    Tally t("weyl-relations");
    for (int n = 1; n <= 2; ++n) {
        // Images of X_1..X_2n and Y_1..Y_2n in P_n^e.
        std::vector<PnEnvElement> xs, ys;
        for (int i = 1; i <= n; ++i) {
            xs.push_back(PnEnvElement::from_poly(sp_x(n, i)));
            ys.push_back(PnEnvElement::h_y(n, i));
        }
        for (int i = 1; i <= n; ++i) {
            xs.push_back(PnEnvElement::from_poly(sp_y(n, i)));
            ys.push_back(Scalar(-1) * PnEnvElement::h_x(n, i));
        }
        for (int a = 0; a < 2 * n; ++a)
            for (int b = 0; b < 2 * n; ++b) {
                const auto ctx = [&] {
                    return "n = " + std::to_string(n) + ", a = " + std::to_string(a + 1) + ", b = " + std::to_string(b + 1);
                };
                t.check(commutator(xs[a], ys[b]) == pn_constant(n, a == b ? 1 : 0), [&] { return "[X_a, Y_b]: " + ctx(); });
                t.check(commutator(xs[a], xs[b]).is_zero(), [&] { return "[X_a, X_b]: " + ctx(); });
                t.check(commutator(ys[a], ys[b]).is_zero(), [&] { return "[Y_a, Y_b]: " + ctx(); });
            }
    }
    return t.finish();
}

SuiteResult lie_leading_words(const SuiteOptions& opt)
{
    Tally t("lie-leading-words");
    Random rng(opt.seed);
    const int n = 3;
    for (int k = 0; k < 100 && !t.failed(); ++k) {
        const LieElement lie = rng.homogeneous_lie(n, rng.uniform(2, 5), 3);
        const EnvElement f = ham(PoissonElement::from_lie(lie));
        const std::vector<EnvElement> parts = right_cofactors(f, n);
        if (parts[n - 1].is_zero()) {
            t.check(true, [] { return std::string(); });
            continue;
        }
        bool found = false;
        for (int i = 0; i < n - 1; ++i)
            if (!parts[i].is_zero() && HWordOrder{}(ldm(parts[n - 1]), ldm(parts[i])))
                found = true;
        t.check(found, [&] { return "f = " + render(lie); });
    }
    return t.finish();
}

template <class T, class Gen, class Parse>
void roundtrip(Tally& t, const char* type, Gen gen, Parse parse)
{
    for (int k = 0; k < 200 && !t.failed(); ++k) {
        const auto [value, n] = gen();
        const std::string text = render(value);
        bool ok = false;
        try {
            ok = parse(text, n) == value;
        } catch (const std::exception&) {
            ok = false;
        }
        t.check(ok, [&] { return std::string(type) + ": " + text; });
    }
}

SuiteResult roundtrip_suite(const SuiteOptions& opt)
{
    Tally t("roundtrip");
    Random rng(opt.seed);
    roundtrip<PoissonElement>(
        t, "lie",
        [&] {
            const int n = rng.uniform(1, 3);
            return std::pair{PoissonElement::from_lie(rng.lie_element(n, 4, 3)), n};
        },
        parse_poisson);
    roundtrip<PoissonElement>(
        t, "poisson",
        [&] {
            const int n = rng.uniform(1, 3);
            return std::pair{rng.poisson(n, 4, 4), n};
        },
        parse_poisson);
    roundtrip<EnvElement>(
        t, "env",
        [&] {
            const int n = rng.uniform(1, 3);
            return std::pair{rng.env(n, 3, 3, 4), n};
        },
        parse_env);
    roundtrip<SymplecticPoly>(
        t, "symplectic",
        [&] {
            const int n = rng.uniform(1, 2);
            return std::pair{rng.symplectic(n, 4, 4), n};
        },
        parse_symplectic);
    roundtrip<WeylElement>(
        t, "weyl",
        [&] {
            const int n = rng.uniform(1, 2);
            return std::pair{rng.weyl(n, 4, 4), n};
        },
        parse_weyl);
    roundtrip<PnEnvElement>(
        t, "pnenv",
        [&] {
            const int n = rng.uniform(1, 2);
            return std::pair{rng.pnenv(n, 3, 3, 3), n};
        },
        parse_pnenv);
    return t.finish();
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"poisson-axioms", poisson_axioms},
        {"canonical-form", canonical_form},
        {"leading-terms", leading_terms},
        {"graded-product", graded_product_suite},
        {"shift", shift},
        {"dependence-corpus", dependence_corpus},
        {"commuting-pairs", commuting_pairs},
        {"tame-inverse", tame_inverse},
        {"theta-commutators", theta_commutators},
        {"symmetrization", symmetrization},
        {"commutation-formula", commutation_formula},
        {"moyal", moyal_suite},
        {"weyl-relations", weyl_relations},
        {"lie-leading-words", lie_leading_words},
        {"roundtrip", roundtrip_suite},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options)
{
    for (const auto& [suite, fn] : registry())
        if (suite == name)
            return fn(options);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CorpusRecord> load_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open corpus " + path);
    std::vector<CorpusRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        CorpusRecord rec;
        rec.n = j.at("n").get<int>();
        rec.elements = j.at("elements").get<std::vector<std::string>>();
        if (j.contains("expected") && !j["expected"].is_null())
            rec.expected = j["expected"].get<std::string>();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace fpa
