#include "lmt/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace lmt {

using boost::multiprecision::cpp_int;

namespace {

cpp_int pow2(unsigned e) { return cpp_int(1) << e; }

}  // namespace

std::string nd_bound_exact(unsigned degree) { return (cpp_int(degree) * pow2(degree + 1)).str(); }

std::string lmt_bound_exact(unsigned degree)
{
    cpp_int d = degree;
    return (d * d * d * pow2(degree + 1)).str();
}

std::string expansion_bound_exact(unsigned degree) { return (cpp_int(degree) * degree).str(); }

}  // namespace lmt
