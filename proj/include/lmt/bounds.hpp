#pragma once

#include <string>

namespace lmt {

// Exact decimal values of the closed forms for a formula of the given degree.
std::string nd_bound_exact(unsigned degree);
std::string lmt_bound_exact(unsigned degree);
std::string expansion_bound_exact(unsigned degree);

}  // namespace lmt
