#include <wpc/integer.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace wpc {

long long euler_totient(long long n) {
  if (n <= 0) throw std::domain_error("euler_totient: n must be positive");
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  if (denominator(q) == 1) {
    os << numerator(q);
  } else {
    os << numerator(q) << '/' << denominator(q);
  }
  return os.str();
}

bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  return v >= lo && v <= hi;
}

long long to_int64(const Int& v) {
  if (!fits_int64(v)) throw std::overflow_error("to_int64: value out of range");
  return v.convert_to<long long>();
}

} // namespace wpc
