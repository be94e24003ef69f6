#pragma once

// Randomised property suites, shared by `fpa check` and the acceptance
// driver. Every suite is exact and deterministic for a given seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpa {

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    // Dependency corpus (JSON lines); used by the dependence-corpus suite.
    std::string corpus_path;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    // First failure, or a short summary.
    std::string detail;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

struct CorpusRecord {
    int n = 0;
    std::vector<std::string> elements;
    std::optional<std::string> expected;  // "dependent" or "independent"
};

std::vector<CorpusRecord> load_corpus(const std::string& path);

}  // namespace fpa
