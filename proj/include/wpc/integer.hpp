#ifndef WPC_INTEGER_HPP
#define WPC_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wpc {

// All exact arithmetic in the library runs on arbitrary-precision
// integers and rationals; intermediate values (characteristic
// polynomials, search invariants) routinely exceed 64 bits.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

/// Euler totient, by trial-division factorization.
long long euler_totient(long long n);

/// "p/q" in lowest terms with q > 0; plain "p" when q == 1.
std::string rat_to_string(const Rat& q);

bool fits_int64(const Int& v);
long long to_int64(const Int& v);

} // namespace wpc

#endif
