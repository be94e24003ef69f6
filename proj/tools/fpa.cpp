// fpa: command-line front end for the free Poisson algebra engine.
//
// Exit codes: 0 success, 1 parse or usage error, 2 domain error,
// 3 undecided (budget exhausted or nothing found inside the bounds),
// 4 a property suite failed.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpa/calculus.hpp"
#include "fpa/checks.hpp"
#include "fpa/dependence.hpp"
#include "fpa/expression.hpp"
#include "fpa/render.hpp"
#include "fpa/symplectic.hpp"

using namespace fpa;
using nlohmann::json;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitCheckFailed = 4;

struct Globals {
    int n = 0;
    std::string format = "text";
    std::uint64_t seed = SuiteOptions{}.seed;
    std::size_t max_steps = kDefaultMaxSteps;

    bool json() const { return format == "json"; }
    int vars() const
    {
        if (n < 1)
            throw DomainError("-n (variable count, at least 1) is required");
        return n;
    }
};

// Raised to leave with exit code 3 after a message on stderr.
struct Undecided {
    std::string message;
};

template <class T>
void emit(const Globals& g, const T& value)
{
    if (g.json())
        std::cout << to_json(value).dump() << "\n";
    else
        std::cout << render(value) << "\n";
}

json witness_json(const Witness& w)
{
    json out = json::array();
    for (const EnvElement& u : w)
        out.push_back(render(u));
    return out;
}

std::vector<EnvElement> parse_system(const std::vector<std::string>& texts, int n)
{
    std::vector<EnvElement> out;
    for (const std::string& t : texts)
        out.push_back(parse_env(t, n));
    return out;
}

struct DependOptions {
    bool oracle = false;
    int hdeg_bound = 4;
    int coeff_bound = 6;
};

// The verdict as JSON, or nullopt when undecided.
std::optional<json> depend_verdict(const std::vector<EnvElement>& system, int n, const DependOptions& opt,
                                   std::size_t max_steps)
{
    if (opt.oracle) {
        const std::optional<Witness> w = brute_force_dependence(system, opt.hdeg_bound, opt.coeff_bound, n);
        if (!w)
            return std::nullopt;
        return json{{"status", "dependent"}, {"witness", witness_json(*w)}};
    }
    const DependencyVerdict v = decide_left_dependence(system, max_steps);
    switch (v.status) {
    case DependencyStatus::Dependent:
        return json{{"status", "dependent"}, {"witness", witness_json(*v.witness)}};
    case DependencyStatus::Independent:
        return json{{"status", "independent"}};
    case DependencyStatus::BudgetExhausted:
        break;
    }
    return std::nullopt;
}

void print_matrix(const Globals& g, const EnvMatrix& m)
{
    if (g.json()) {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const EnvElement& e : row)
                r.push_back(to_json(e));
            rows.push_back(r);
        }
        std::cout << json{{"matrix", rows}}.dump() << "\n";
        return;
    }
    for (const auto& row : m) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j)
            line += (j ? " ; " : "") + render(row[j]);
        std::cout << line << "\n";
    }
}

// CLI11 reads an argument written "[a,b]" as a list, which would split bracket
// expressions, so operands are taken from the unparsed arguments instead.
std::optional<std::vector<std::string>> operands(const CLI::App& app, CLI::App* cmd, std::size_t least,
                                                std::size_t most)
{
    std::vector<std::string> out = app.remaining(true);
    for (const std::string& s : out)
        if (s.rfind("--", 0) == 0) {
            std::cerr << cmd->get_name() << ": unknown option " << s << "\n";
            return std::nullopt;
        }
    if (out.size() < least || out.size() > most) {
        std::cerr << cmd->get_name() << ": wrong number of operands\n";
        return std::nullopt;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in free Poisson algebras and their enveloping algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras();

    Globals g;
    app.add_option("-n", g.n, "Number of variables");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomised suites");
    app.add_option("--max-steps", g.max_steps, "Reduction step budget");

    // bracket
    std::vector<std::string> bracket_args;
    bool bracket_symplectic = false;
    auto* bracket = app.add_subcommand("bracket", "Evaluate {a,b}, or a single expression, in normal form");
    bracket->allow_extras();
    bracket->footer("Operands: EXPR [EXPR]");
    bracket->add_flag("--symplectic", bracket_symplectic, "Work in k[x1..xn,y1..yn] with {xi,yj} = dij");

    // mul
    std::vector<std::string> mul_args;
    std::string mul_mode = "env";
    auto* mul = app.add_subcommand("mul", "Product of two elements");
    mul->allow_extras();
    mul->footer("Operands: A B");
    mul->add_option("--mode", mul_mode, "poisson, env, symplectic, weyl or pnenv")
        ->check(CLI::IsMember({"poisson", "env", "symplectic", "weyl", "pnenv"}));

    std::string one_arg;
    auto* ham_cmd = app.add_subcommand("ham", "Universal derivation h_p in canonical form");
    ham_cmd->add_option("p", one_arg)->required();

    int fox_index = 0;
    auto* fox_cmd = app.add_subcommand("fox", "Fox derivative of p with respect to x_i");
    fox_cmd->add_option("p", one_arg)->required();
    fox_cmd->add_option("-i", fox_index, "Variable index")->required();

    std::vector<std::string> images;
    bool invert = false;
    int hdeg_bound = 3, coeff_bound = 12;
    auto* jac = app.add_subcommand("jacobian", "Jacobian matrix of x_i -> image_i");
    jac->allow_extras();
    jac->footer("Operands: IMAGE...  (one per variable)");
    jac->add_flag("--invert", invert, "Search for an inverse inside the bounds");
    jac->add_option("--hdeg-bound", hdeg_bound, "Longest h-word in the inverse")->check(CLI::NonNegativeNumber);
    jac->add_option("--coeff-bound", coeff_bound, "Largest coefficient degree in the inverse")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> system_args;
    DependOptions depend_opt;
    std::string corpus;
    auto* depend = app.add_subcommand("depend", "Decide left dependence of elements of P^e");
    depend->allow_extras();
    depend->footer("Operands: ELEMENT...");
    depend->add_flag("--oracle", depend_opt.oracle, "Bounded brute-force search instead of reduction");
    depend->add_option("--hdeg-bound", depend_opt.hdeg_bound, "Oracle word-length bound")
        ->check(CLI::NonNegativeNumber);
    depend->add_option("--coeff-bound", depend_opt.coeff_bound, "Oracle coefficient degree bound")
        ->check(CLI::NonNegativeNumber);
    depend->add_option("--corpus", corpus, "JSON-lines file of systems, one verdict per line");

    std::vector<std::string> pair_args;
    auto* pair = app.add_subcommand("pair-status", "Free or dependent pair; lambda h_f = mu h_g when dependent");
    pair->allow_extras();
    pair->footer("Operands: F G");

    std::vector<std::string> moyal_args;
    auto* moyal_cmd = app.add_subcommand("moyal", "Moyal product in k[x,y]");
    moyal_cmd->allow_extras();
    moyal_cmd->footer("Operands: F G");

    auto* sym = app.add_subcommand("symmetrize", "Symmetrization k[x,y] -> A_n");
    sym->add_option("f", one_arg)->required();
    auto* tl = app.add_subcommand("theta-left", "Image of a Weyl element under X -> x + h(x)/2");
    tl->add_option("a", one_arg)->required();
    auto* tr = app.add_subcommand("theta-right", "Image of a Weyl element under X -> x - h(x)/2, order reversed");
    tr->add_option("a", one_arg)->required();
    auto* rho = app.add_subcommand("rho-w", "Closed form of theta-left(symmetrize(f))");
    rho->add_option("f", one_arg)->required();

    std::vector<std::string> weyl_args;
    auto* wm = app.add_subcommand("weyl-mul", "Product in the Weyl algebra");
    wm->allow_extras();
    wm->footer("Operands: A B");

    std::string suite;
    std::string suite_corpus;
    auto* check = app.add_subcommand("check", "Run a property suite");
    check->add_option("suite", suite, "Suite name, or 'all'")->required();
    check->add_option("--corpus", suite_corpus, "Dependency corpus for dependence-corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }
    const std::vector<std::tuple<CLI::App*, std::vector<std::string>*, std::size_t, std::size_t>> operand_lists{
        {bracket, &bracket_args, 1, 2}, {mul, &mul_args, 2, 2},         {jac, &images, 1, SIZE_MAX},
        {depend, &system_args, 0, SIZE_MAX}, {pair, &pair_args, 2, 2}, {moyal_cmd, &moyal_args, 2, 2},
        {wm, &weyl_args, 2, 2},
    };
    bool has_operands = false;
    for (const auto& [cmd, target, least, most] : operand_lists)
        if (cmd->parsed()) {
            has_operands = true;
            auto list = operands(app, cmd, least, most);
            if (!list)
                return kExitParse;
            *target = std::move(*list);
        }
    if (!has_operands && app.remaining_size(true) > 0) {
        std::cerr << "unexpected argument " << app.remaining(true).front() << "\n";
        return kExitParse;
    }

    try {
        if (bracket->parsed()) {
            const int n = g.vars();
            if (bracket_symplectic) {
                SymplecticPoly r = parse_symplectic(bracket_args[0], n);
                if (bracket_args.size() == 2)
                    r = sp_bracket(r, parse_symplectic(bracket_args[1], n));
                emit(g, r);
            } else {
                PoissonElement r = parse_poisson(bracket_args[0], n);
                if (bracket_args.size() == 2)
                    r = poisson_bracket(r, parse_poisson(bracket_args[1], n));
                emit(g, r);
            }
        } else if (mul->parsed()) {
            const int n = g.vars();
            switch (parse_mode(mul_mode)) {
            case Mode::Poisson:
                emit(g, parse_poisson(mul_args[0], n) * parse_poisson(mul_args[1], n));
                break;
            case Mode::Env:
                emit(g, env_mul(parse_env(mul_args[0], n), parse_env(mul_args[1], n)));
                break;
            case Mode::Symplectic:
                emit(g, parse_symplectic(mul_args[0], n) * parse_symplectic(mul_args[1], n));
                break;
            case Mode::Weyl:
                emit(g, weyl_mul(parse_weyl(mul_args[0], n), parse_weyl(mul_args[1], n)));
                break;
            case Mode::PnEnv:
                emit(g, pn_env_mul(parse_pnenv(mul_args[0], n), parse_pnenv(mul_args[1], n)));
                break;
            }
        } else if (ham_cmd->parsed()) {
            emit(g, ham(parse_poisson(one_arg, g.vars())));
        } else if (fox_cmd->parsed()) {
            const int n = g.vars();
            emit(g, fox(parse_poisson(one_arg, n), fox_index, n));
        } else if (jac->parsed()) {
            const int n = g.vars();
            if (static_cast<int>(images.size()) != n)
                throw DomainError("jacobian needs exactly n images");
            Endomorphism psi{n, {}};
            for (const std::string& s : images)
                psi.images.push_back(parse_poisson(s, n));
            const EnvMatrix j = jacobian(psi);
            if (!invert) {
                print_matrix(g, j);
            } else {
                const InversionResult r = invert_jacobian_bounded(j, hdeg_bound, coeff_bound);
                if (r.status != InversionResult::Status::Invertible)
                    throw Undecided{"no inverse with words of length <= " + std::to_string(hdeg_bound) +
                                    " and coefficient degree <= " + std::to_string(coeff_bound)};
                print_matrix(g, *r.inverse);
            }
        } else if (depend->parsed()) {
            if (!corpus.empty()) {
                bool undecided = false;
                for (const CorpusRecord& rec : load_corpus(corpus)) {
                    const auto v = depend_verdict(parse_system(rec.elements, rec.n), rec.n, depend_opt, g.max_steps);
                    if (v)
                        std::cout << v->dump() << "\n";
                    else {
                        std::cout << json{{"status", "undecided"}}.dump() << "\n";
                        undecided = true;
                    }
                }
                return undecided ? kExitUndecided : 0;
            }
            if (system_args.empty())
                throw DomainError("depend needs at least one element");
            const int n = g.vars();
            const auto v = depend_verdict(parse_system(system_args, n), n, depend_opt, g.max_steps);
            if (!v)
                throw Undecided{depend_opt.oracle ? "no witness inside the bounds" : "step budget exhausted"};
            std::cout << v->dump() << "\n";
        } else if (pair->parsed()) {
            const int n = g.vars();
            const PairStatus s = pair_status(parse_poisson(pair_args[0], n), parse_poisson(pair_args[1], n), g.max_steps);
            json out;
            if (s.kind == PairStatus::Kind::Free) {
                out = {{"status", "free"}};
            } else {
                out = {{"status", "dependent"}};
                out["lambda"] = s.lambda ? json(render(*s.lambda)) : json(nullptr);
                out["mu"] = s.mu ? json(render(*s.mu)) : json(nullptr);
                if (s.witness)
                    out["witness"] = witness_json(*s.witness);
            }
            std::cout << out.dump() << "\n";
        } else if (moyal_cmd->parsed()) {
            const int n = g.vars();
            emit(g, moyal(parse_symplectic(moyal_args[0], n), parse_symplectic(moyal_args[1], n)));
        } else if (sym->parsed()) {
            emit(g, symmetrize(parse_symplectic(one_arg, g.vars())));
        } else if (tl->parsed()) {
            emit(g, theta_left(parse_weyl(one_arg, g.vars())));
        } else if (tr->parsed()) {
            emit(g, theta_right(parse_weyl(one_arg, g.vars())));
        } else if (rho->parsed()) {
            emit(g, rho_w(parse_symplectic(one_arg, g.vars())));
        } else if (wm->parsed()) {
            const int n = g.vars();
            emit(g, weyl_mul(parse_weyl(weyl_args[0], n), parse_weyl(weyl_args[1], n)));
        } else if (check->parsed()) {
            SuiteOptions opt;
            opt.seed = g.seed;
            opt.corpus_path = suite_corpus;
            std::vector<std::string> names;
            if (suite == "all") {
                for (const std::string& s : suite_names())
                    if (s != "dependence-corpus" || !suite_corpus.empty())
                        names.push_back(s);
            } else {
                names.push_back(suite);
            }
            bool all_passed = true;
            for (const std::string& name : names) {
                const SuiteResult r = run_suite(name, opt);
                if (g.json())
                    std::cout << json{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}}
                                     .dump()
                              << "\n";
                else
                    std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
                all_passed = all_passed && r.passed;
            }
            return all_passed ? 0 : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Undecided& e) {
        std::cerr << "undecided: " << e.message << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
