#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fano4 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace fano4
