#pragma once

#include "lmt/json_io.hpp"

#include <string>

namespace fx {

std::string golden_dir();
lmt::Json golden(const std::string& name);

lmt::NDProof nd(const std::string& name);
lmt::LJProof lj(const std::string& name);
lmt::ProofTree lmt_proof(const std::string& name);
lmt::KripkeModel model(const std::string& name);

inline const char* peirce = "((A -> B) -> A) -> A";
inline const char* twice = "((((A -> B) -> A) -> A) -> B) -> B";
inline const char* permute = "(A -> B -> C) -> B -> A -> C";
inline const char* dummett_a1 = "((A -> B) -> A) -> ((B -> A) -> A) -> C -> A";
inline const char* dummett_a2 = "((A -> B) -> B) -> ((B -> A) -> B) -> C -> B";
lmt::Formula dummett();

}  // namespace fx
