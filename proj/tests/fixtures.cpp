#include "fixtures.hpp"

#include <cstdlib>

namespace fx {

std::string golden_dir()
{
    if (const char* d = std::getenv("LMT_GOLDEN_DIR"))
        return d;
    return LMT_SOURCE_GOLDEN_DIR;
}

lmt::Json golden(const std::string& name) { return lmt::read_json_file(golden_dir() + "/" + name); }

lmt::NDProof nd(const std::string& name) { return lmt::nd_from_json(golden(name)); }
lmt::LJProof lj(const std::string& name) { return lmt::lj_from_json(golden(name)); }
lmt::ProofTree lmt_proof(const std::string& name) { return lmt::lmt_from_json(golden(name)); }
lmt::KripkeModel model(const std::string& name) { return lmt::model_from_json(golden(name)); }

lmt::Formula dummett()
{
    return lmt::parse(std::string("(") + dummett_a1 + ") -> (" + dummett_a2 + ") -> C");
}

}  // namespace fx
