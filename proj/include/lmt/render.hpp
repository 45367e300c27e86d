#pragma once

#include "lmt/kripke.hpp"
#include "lmt/lj.hpp"
#include "lmt/lmt.hpp"
#include "lmt/nd.hpp"

#include <string>

namespace lmt {

std::string sequent_text(const Sequent& s);
std::string sequent_text(const LJSequent& s);

// Indented trees, conclusion first.
std::string text_tree(const ProofTree& t);
std::string text_tree(const LJProof& p);
std::string text_tree(const NDProof& p);
std::string model_text(const KripkeModel& m);

// bussproofs markup inside a prooftree environment.
std::string latex_tree(const ProofTree& t);
std::string latex_tree(const LJProof& p);
std::string latex_tree(const NDProof& p);

}  // namespace lmt
