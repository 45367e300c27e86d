#pragma once

#include "lmt/formula.hpp"
#include "lmt/lmt.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lmt {

struct KripkeModel {
    std::vector<std::string> worlds;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::set<std::string>> valuation;
    std::string root;

    // Worlds sorted, edges sorted and deduplicated.
    void normalize();
};

class UnknownWorld : public std::runtime_error {
public:
    explicit UnknownWorld(const std::string& w) : std::runtime_error("unknown world '" + w + "'") {}
};

std::optional<std::string> validate_model(const KripkeModel& m);

// Precomputes the reflexive-transitive closure; the model must outlive the evaluator.
class Forcing {
public:
    explicit Forcing(const KripkeModel& m);

    bool forces(const std::string& w, const Formula& f) const;
    bool forces_all(const std::string& w, const Formulas& fs) const;
    const std::vector<std::string>& above(const std::string& w) const;
    bool leq(const std::string& a, const std::string& b) const;

private:
    std::size_t id(const std::string& w) const;
    bool eval(std::size_t w, const Formula& f) const;

    const KripkeModel& m_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::string>> up_names_;
    mutable std::map<std::pair<std::size_t, Formula>, bool> memo_;
};

bool forces(const KripkeModel& m, const std::string& w, const Formula& f);
bool validates(const KripkeModel& m, const Formula& f);

// Every component (each bag with its label, delta with the goal) fails at some world above w.
bool sequent_invalid_at(const KripkeModel& m, const std::string& w, const Sequent& s);

}  // namespace lmt
