#pragma once

#include "lmt/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lmt {

// Outcome of running both engines and every checker on one formula.
struct CrossCheck {
    bool theorem = false;
    bool oracle_theorem = false;
    std::uint64_t height = 0;
    std::size_t nodes = 0;
    std::size_t open_leaves = 0;
    bool cap_hit = false;
    std::optional<std::string> problem;
    Json artifact;
};

CrossCheck cross_check(const Formula& f);

// n formulas at evenly spaced ranks of enumerate_upto(max_degree, atoms).
std::vector<Formula> pseudo_sample(std::size_t n, int max_degree, const std::vector<std::string>& atoms);

}  // namespace lmt
