#pragma once

#include "lmt/kripke.hpp"
#include "lmt/lmt.hpp"

#include <stdexcept>
#include <vector>

namespace lmt {

class CountermodelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// w0 below one world per distinct component set (bags and delta), ordered by inclusion.
// Delta's world is w_D; a bag's world is w_U<i> for the first bag i holding that set.
KripkeModel extract_branch_model(const Sequent& top);

// Fresh root w0 over the successors of every input root; input i's other worlds get prefix m<i>_.
KripkeModel merge_models(const std::vector<KripkeModel>& models);

// Counter-model for the root formula of a failed search tree, checked before it is returned.
KripkeModel assemble_countermodel(const ProofTree& t);

}  // namespace lmt
