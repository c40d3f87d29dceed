#ifndef YTAB_NUMERIC_HPP
#define YTAB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ytab {

// Exact integer/rational arithmetic for the combinatorial identities.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

} // namespace ytab

#endif
