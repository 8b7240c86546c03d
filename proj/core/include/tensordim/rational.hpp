#ifndef TENSORDIM_RATIONAL_HPP
#define TENSORDIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tensordim {

// Exact arbitrary-precision rationals. Floating point never enters the
// oracle path: Buchberger's coefficient growth would corrupt heights.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace tensordim

#endif
