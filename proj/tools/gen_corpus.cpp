// Writes the dependency corpus: systems over k{x1,x2} with 1 to 3 elements of
// hdeg <= 2 and coefficient degree <= 2, one JSON object per line. The
// expected status is whatever the bounded brute-force search at (4, 6)
// finds; the decision procedure is not consulted.
//
//   gen_corpus [output] [seed]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpa/dependence.hpp"
#include "fpa/expression.hpp"
#include "fpa/random.hpp"
#include "fpa/render.hpp"

using namespace fpa;

namespace {

constexpr int kN = 2;

bool within_bounds(const EnvElement& u)
{
    if (u.is_zero() || hdeg(u) > 2)
        return false;
    for (const auto& [w, c] : u.terms())
        if (degree(c) > 2)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string path = argc > 1 ? argv[1] : "dependency_corpus.jsonl";
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
    Random rng(seed);

    const PoissonElement x = PoissonElement::generator(1);
    const PoissonElement y = PoissonElement::generator(2);
    const PoissonElement xy = poisson_bracket(x, y);

    std::vector<std::vector<EnvElement>> systems;
    const auto add = [&](std::vector<EnvElement> s) {
        for (const EnvElement& u : s)
            if (!within_bounds(u))
                return;
        systems.push_back(std::move(s));
    };

    // Differentials of tuples with a Poisson relation among them.
    add({ham(x), ham(x * x)});
    add({ham(x * x), ham(x.pow(3))});
    add({ham(y), ham(y * y - Scalar(2) * y)});
    add({ham(x + y), ham((x + y).pow(2))});
    add({ham(x), ham(y), ham(xy)});
    add({ham(x), ham(y), ham(x * y)});
    add({ham(x), ham(x * x), ham(y)});
    add({ham(x - y), ham((x - y).pow(3)), ham(y)});
    add({ham(x), ham(y), ham(x * x + y)});
    add({ham(xy), ham(xy * xy)});

    // Differentials of pairs with a nonzero bracket.
    add({ham(x), ham(y)});
    add({ham(x * x), ham(y)});
    add({ham(x * y), ham(xy)});
    add({ham(x), ham(x * y)});
    add({ham(x * x), ham(y * y)});
    add({ham(x), ham(xy)});

    // Hand-made systems.
    const EnvElement h1 = EnvElement::h(1), h2 = EnvElement::h(2);
    add({h1});
    add({h1, h2});
    add({h1, EnvElement(x)});
    add({h1, left_scale(x, h1)});
    add({env_mul(h2, h1), h1});
    add({env_mul(h1, h2), env_mul(h2, h1)});
    add({left_scale(y, h1) + h2, left_scale(x, h1)});
    add({left_scale(x, env_mul(h1, h2)), left_scale(y, h2), h1});
    add({EnvElement(x), EnvElement(y)});
    add({EnvElement(x * y), h1});

    // Left combinations of random elements, which are dependent.
    while (systems.size() < 45) {
        const EnvElement u = rng.nonzero_env(kN, 2, 1, 2);
        const EnvElement v = rng.nonzero_env(kN, 1, 1, 2);
        const PoissonElement a = rng.poisson(kN, 1, 2);
        const PoissonElement b = rng.poisson(kN, 1, 2);
        if (rng.coin())
            add({u, left_scale(a, u)});
        else
            add({u, v, left_scale(a, u) + left_scale(b, v)});
    }
    // Random systems.
    while (systems.size() < 72) {
        std::vector<EnvElement> s;
        const int size = rng.uniform(1, 3);
        for (int k = 0; k < size; ++k)
            s.push_back(rng.nonzero_env(kN, 2, 2, 2));
        add(s);
    }

    std::ofstream out(path);
    int dependent = 0;
    for (const auto& s : systems) {
        nlohmann::json rec;
        rec["n"] = kN;
        rec["elements"] = nlohmann::json::array();
        for (const EnvElement& u : s) {
            const std::string text = render(u);
            if (!(parse_env(text, kN) == u)) {
                std::cerr << "render does not parse back: " << text << "\n";
                return 1;
            }
            rec["elements"].push_back(text);
        }
        const bool dep = brute_force_dependence(s, 4, 6, kN).has_value();
        dependent += dep;
        rec["expected"] = dep ? "dependent" : "independent";
        out << rec.dump() << "\n";
    }
    std::cerr << systems.size() << " systems, " << dependent << " dependent\n";
    return 0;
}
