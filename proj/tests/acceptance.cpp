// Acceptance driver: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Criterion 15 also drives the fpa executable.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "fpa/checks.hpp"
#include "fpa/expression.hpp"
#include "fpa/render.hpp"

using namespace fpa;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args)
{
    const std::string cmd = std::string("'") + FPA_CLI_PATH + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe))
        r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct CliCase {
    std::string args;
    int status;
    std::string out;  // exact stdout
};

// Documented invocations and the exit-code contract.
const std::vector<CliCase> kCliCases{
    {R"cmd(bracket -n 3 "{x1, x2*x3}")cmd", 0, "x2*[x1,x3] + x3*[x1,x2]\n"},
    {R"cmd(bracket -n 2 "[x1,x2]" "x1")cmd", 0, "-[x1,[x1,x2]]\n"},
    {R"cmd(moyal -n 1 "x1" "y1")cmd", 0, "x1*y1 + 1/2\n"},
    {R"cmd(depend -n 2 "h(x1)" "x1*h(x1)")cmd", 0, "{\"status\":\"dependent\",\"witness\":[\"x1\",\"-1\"]}\n"},
    {R"cmd(depend -n 2 "h(x1)" "h(x2)")cmd", 0, "{\"status\":\"independent\"}\n"},
    {R"cmd(mul -n 2 --mode env "h(x1)" "x2")cmd", 0, "x2*h(x1) + [x1,x2]\n"},
    {R"cmd(ham -n 2 "x1*x2")cmd", 0, "x1*h(x2) + x2*h(x1)\n"},
    {R"cmd(fox -n 2 -i 1 "[x1,x2]")cmd", 0, "-h(x2)\n"},
    {R"cmd(jacobian -n 2 "x1" "x2 + x1^2")cmd", 0, "1 ; 0\n2*x1 ; 1\n"},
    {R"cmd(jacobian -n 2 --invert --hdeg-bound 1 --coeff-bound 2 "x1" "x2 + x1^2")cmd", 0, "1 ; 0\n-2*x1 ; 1\n"},
    {R"cmd(pair-status -n 2 "x1" "x2")cmd", 0, "{\"status\":\"free\"}\n"},
    {R"cmd(symmetrize -n 1 "x1*y1")cmd", 0, "X1*Y1 - 1/2\n"},
    {R"cmd(rho-w -n 1 "x1*y1")cmd", 0, "1/4*h(x1)*h(y1) + 1/2*y1*h(x1) + 1/2*x1*h(y1) + x1*y1\n"},
    {R"cmd(theta-left -n 1 "X1")cmd", 0, "1/2*h(x1) + x1\n"},
    {R"cmd(theta-right -n 1 "Y1")cmd", 0, "-1/2*h(y1) + y1\n"},
    {R"cmd(weyl-mul -n 1 "Y1" "X1")cmd", 0, "X1*Y1 - 1\n"},
    {R"cmd(bracket -n 2 "{x1,")cmd", 1, ""},
    {R"cmd(bracket -n 2 "x3")cmd", 2, ""},
    {R"cmd(ham -n 2 "h(x1)")cmd", 1, ""},
    {R"cmd(depend -n 2 --max-steps 0 "h(x2)h(x1)" "h(x1)" "x2*h(x1)")cmd", 3, ""},
    {R"cmd(depend -n 2 --oracle --hdeg-bound 1 --coeff-bound 1 "h(x1)" "h(x2)")cmd", 3, ""},
    {R"cmd(jacobian -n 2 --invert --hdeg-bound 1 --coeff-bound 2 "x1^2" "x2")cmd", 3, ""},
};

SuiteResult cli_contract()
{
    SuiteResult r{"cli", true, 0, ""};
    for (const CliCase& c : kCliCases) {
        ++r.cases;
        const Run got = run_cli(c.args);
        if (got.status != c.status || got.out != c.out) {
            r.passed = false;
            r.detail = "fpa " + c.args + " gave exit " + std::to_string(got.status) + " and output '" + got.out + "'";
            return r;
        }
    }
    // The bracket example as written with the factors in the other order is
    // the same element.
    ++r.cases;
    if (!(parse_poisson("[x1,x2]*x3 + x2*[x1,x3]", 3) == parse_poisson("{x1, x2*x3}", 3))) {
        r.passed = false;
        r.detail = "bracket example value";
    }
    // Every property suite is reachable from the command line.
    ++r.cases;
    const Run check = run_cli("check weyl-relations");
    if (check.status != 0 || check.out.rfind("weyl-relations: PASS", 0) != 0) {
        r.passed = false;
        r.detail = "fpa check weyl-relations";
    }
    if (r.passed)
        r.detail = std::to_string(r.cases) + " cases";
    return r;
}

}  // namespace

int main()
{
    const std::vector<std::pair<int, std::string>> criteria{
        {1, "poisson-axioms"},     {2, "canonical-form"},      {3, "leading-terms"},
        {4, "graded-product"},     {5, "shift"},               {6, "dependence-corpus"},
        {7, "commuting-pairs"},    {8, "tame-inverse"},        {9, "theta-commutators"},
        {10, "symmetrization"},    {11, "commutation-formula"}, {12, "moyal"},
        {13, "weyl-relations"},    {14, "lie-leading-words"},  {15, "roundtrip"},
    };
    SuiteOptions opt;
    opt.corpus_path = FPA_CORPUS_PATH;

    int failures = 0;
    for (const auto& [number, suite] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<SuiteResult> parts;
        try {
            parts.push_back(run_suite(suite, opt));
        } catch (const std::exception& e) {
            parts.push_back({suite, false, 0, std::string("exception: ") + e.what()});
        }
        if (number == 15)
            parts.push_back(cli_contract());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool passed = true;
        std::string detail;
        for (const SuiteResult& p : parts) {
            passed = passed && p.passed;
            detail += (detail.empty() ? "" : "; ") + p.name + ": " + p.detail;
        }
        failures += !passed;
        char time[32];
        std::snprintf(time, sizeof time, "%.1fs", secs);
        std::cout << "criterion " << number << ": " << (passed ? "PASS" : "FAIL") << " [" << detail << "] (" << time
                  << ")" << std::endl;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
