#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defectlab/generate.hpp"
#include "defectlab/json_io.hpp"
#include "defectlab/morphism.hpp"

namespace defectlab {

/// One expected analysis value; `origin` is "known" for established values
/// and "computed" for values frozen from an independent oracle.
struct Expectation {
    std::string check;
    json params;
    std::string origin;
};

/// Named input (word construction and/or morphism) with its expected values.
struct Fixture {
    std::string name;
    std::optional<WordSpec> word;
    std::optional<Morphism> morphism;
    std::vector<std::int64_t> schedule;
    std::vector<Expectation> expectations;
};

/// Directory: DEFECTLAB_FIXTURES env var, else the build-time default.
std::string default_fixture_dir();

std::vector<std::string> fixture_names(const std::string& dir = default_fixture_dir());
Fixture load_fixture(const std::string& name, const std::string& dir = default_fixture_dir());

struct ExpectationResult {
    std::string check;
    bool pass = false;
    std::string detail;
};

/// Runs every expectation through the corresponding module operation.
std::vector<ExpectationResult> evaluate_fixture(const Fixture& f,
                                                std::int64_t budget = kDefaultBudget);

}  // namespace defectlab
