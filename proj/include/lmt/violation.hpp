#pragma once

#include <string>

namespace lmt {

// path is "" for the root, "/i/j" for the j-th premise of the i-th premise.
struct Violation {
    std::string path;
    std::string reason;
};

}  // namespace lmt
