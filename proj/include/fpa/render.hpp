#pragma once

// Canonical text and JSON renderings. Text output parses back to the same
// value in the matching mode; terms appear in decreasing canonical order.

#include <string>

#include <json.hpp>

#include "fpa/envelope.hpp"
#include "fpa/free_lie.hpp"
#include "fpa/poisson.hpp"
#include "fpa/symplectic.hpp"

namespace fpa {

std::string render(const LieElement& e);
std::string render(const PoissonElement& p);
std::string render(const EnvElement& u);
std::string render(const SymplecticPoly& f);
std::string render(const WeylElement& w);
std::string render(const PnEnvElement& u);
std::string render(const HWord& w);  // "1" for the empty word

// {"terms":[{"coeff":"-1/2","pmono":[{"basis":"[x1,x2]","exp":1}]}]}
nlohmann::json to_json(const PoissonElement& p);
// as above with "hword":[1,2] per term
nlohmann::json to_json(const EnvElement& u);
// {"terms":[{"coeff":..,"exp":[x-exponents..., y-exponents...]}]}
nlohmann::json to_json(const SymplecticPoly& f);
// {"terms":[{"coeff":..,"x":[...],"y":[...]}]}
nlohmann::json to_json(const WeylElement& w);
// {"terms":[{"coeff":..,"exp":[...],"h":[...]}]}
nlohmann::json to_json(const PnEnvElement& u);

}  // namespace fpa
