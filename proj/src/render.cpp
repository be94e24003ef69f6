#include "fpa/render.hpp"

#include <vector>

namespace fpa {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string term_text(const Scalar& c, const std::vector<std::string>& factors)
{
    if (factors.empty())
        return to_string(c);
    const std::string body = join(factors, "*");
    if (c == 1)
        return body;
    if (c == -1)
        return "-" + body;
    return to_string(c) + "*" + body;
}

std::string sum_text(const std::vector<std::string>& terms)
{
    if (terms.empty())
        return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i][0] == '-')
            out += " - " + terms[i].substr(1);
        else
            out += " + " + terms[i];
    }
    return out;
}

std::string power(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

std::vector<std::string> monomial_factors(const PoissonMonomial& m)
{
    std::vector<std::string> out;
    for (const auto& [w, e] : m.factors())
        out.push_back(power(bracket_string(w), e));
    return out;
}

std::vector<std::string> symplectic_factors(const MultiIndex& e, const char* xs, const char* ys,
                                            bool as_h = false)
{
    const std::size_t n = e.size() / 2;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (e[i] == 0)
            continue;
        const std::string name = std::string(i < n ? xs : ys) + std::to_string(i < n ? i + 1 : i - n + 1);
        out.push_back(power(as_h ? "h(" + name + ")" : name, e[i]));
    }
    return out;
}

nlohmann::json pmono_json(const PoissonMonomial& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, e] : m.factors())
        out.push_back({{"basis", bracket_string(w)}, {"exp", e}});
    return out;
}

}  // namespace

std::string render(const LieElement& e)
{
    std::vector<std::string> terms;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        terms.push_back(term_text(it->second, {bracket_string(it->first)}));
    return sum_text(terms);
}

std::string render(const PoissonElement& p)
{
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(term_text(it->second, monomial_factors(it->first)));
    return sum_text(terms);
}

std::string render(const HWord& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out += "h(x" + std::to_string(w[i]) + ")";
    return out;
}

std::string render(const EnvElement& u)
{
    std::vector<std::string> terms;
    for (auto wt = u.terms().rbegin(); wt != u.terms().rend(); ++wt)
        for (auto it = wt->second.terms().rbegin(); it != wt->second.terms().rend(); ++it) {
            std::vector<std::string> factors = monomial_factors(it->first);
            if (!wt->first.empty())
                factors.push_back(render(wt->first));
            terms.push_back(term_text(it->second, factors));
        }
    return sum_text(terms);
}

std::string render(const SymplecticPoly& f)
{
    std::vector<std::string> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back(term_text(it->second, symplectic_factors(it->first, "x", "y")));
    return sum_text(terms);
}

std::string render(const WeylElement& w)
{
    std::vector<std::string> terms;
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it)
        terms.push_back(term_text(it->second, symplectic_factors(it->first, "X", "Y")));
    return sum_text(terms);
}

std::string render(const PnEnvElement& u)
{
    std::vector<std::string> terms;
    for (auto gt = u.terms().rbegin(); gt != u.terms().rend(); ++gt) {
        const std::vector<std::string> hs = symplectic_factors(gt->first, "x", "y", true);
        for (auto it = gt->second.terms().rbegin(); it != gt->second.terms().rend(); ++it) {
            std::vector<std::string> factors = symplectic_factors(it->first, "x", "y");
            factors.insert(factors.end(), hs.begin(), hs.end());
            terms.push_back(term_text(it->second, factors));
        }
    }
    return sum_text(terms);
}

nlohmann::json to_json(const PoissonElement& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"coeff", to_string(it->second)}, {"pmono", pmono_json(it->first)}});
    return {{"terms", terms}};
}

nlohmann::json to_json(const EnvElement& u)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto wt = u.terms().rbegin(); wt != u.terms().rend(); ++wt)
        for (auto it = wt->second.terms().rbegin(); it != wt->second.terms().rend(); ++it)
            terms.push_back({{"coeff", to_string(it->second)},
                             {"pmono", pmono_json(it->first)},
                             {"hword", wt->first.letters()}});
    return {{"terms", terms}};
}

nlohmann::json to_json(const SymplecticPoly& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"coeff", to_string(it->second)}, {"exp", it->first.entries()}});
    return {{"terms", terms}};
}

nlohmann::json to_json(const WeylElement& w)
{
    nlohmann::json terms = nlohmann::json::array();
    const auto n = static_cast<std::ptrdiff_t>(w.n());
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        const auto& e = it->first.entries();
        terms.push_back({{"coeff", to_string(it->second)},
                         {"x", std::vector<int>(e.begin(), e.begin() + n)},
                         {"y", std::vector<int>(e.begin() + n, e.end())}});
    }
    return {{"terms", terms}};
}

nlohmann::json to_json(const PnEnvElement& u)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto gt = u.terms().rbegin(); gt != u.terms().rend(); ++gt)
        for (auto it = gt->second.terms().rbegin(); it != gt->second.terms().rend(); ++it)
            terms.push_back({{"coeff", to_string(it->second)},
                             {"exp", it->first.entries()},
                             {"h", gt->first.entries()}});
    return {{"terms", terms}};
}

}  // namespace fpa
