#pragma once

#include "lmt/kripke.hpp"
#include "lmt/lj.hpp"
#include "lmt/lmt.hpp"
#include "lmt/nd.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace lmt {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const LJProof& p);
Json to_json(const NDProof& p);
Json to_json(const ProofTree& t);
Json to_json(const KripkeModel& m);
Json to_json(const Sequent& s);

LJProof lj_from_json(const Json& j);
NDProof nd_from_json(const Json& j);
ProofTree lmt_from_json(const Json& j);
KripkeModel model_from_json(const Json& j);
Sequent sequent_from_json(const Json& j);

// Throws SchemaError on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);
std::string dump(const Json& j);

}  // namespace lmt
