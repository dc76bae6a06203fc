#include <wpc/cyclotomic.hpp>

#include <wpc/errors.hpp>

#include <map>
#include <sstream>
#include <vector>

namespace wpc {

IntPolynomial v_poly(long a) {
  if (a < 1) throw DomainError("v_poly: index must be positive");
  std::vector<Int> coeffs(static_cast<std::size_t>(a), Int(1));
  return IntPolynomial(std::move(coeffs));
}

namespace {

IntPolynomial x_pow_minus_one(long n) {
  IntPolynomial p = IntPolynomial::monomial(1, static_cast<int>(n));
  return p - IntPolynomial::constant(1);
}

std::vector<long> divisors_ascending(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

} // namespace

IntPolynomial cyclotomic(long n) {
  if (n < 1) throw DomainError("cyclotomic: index must be positive");
  // Phi_d for every divisor d of n, built bottom-up.
  std::map<long, IntPolynomial> phi;
  for (long d : divisors_ascending(n)) {
    IntPolynomial cofactor = IntPolynomial::constant(1);
    for (const auto& [e, phi_e] : phi) {
      if (d % e == 0) cofactor = cofactor * phi_e;
    }
    phi.emplace(d, IntPolynomial::divide_exact(x_pow_minus_one(d), cofactor));
  }
  return phi.at(n);
}

IntPolynomial CyclotomicFactorization::reassemble() const {
  IntPolynomial p = remainder;
  for (const auto& [n, mult] : multiplicities) {
    IntPolynomial phi_n = cyclotomic(n);
    for (long i = 0; i < mult; ++i) p = p * phi_n;
  }
  return p;
}

bool CyclotomicFactorization::fully_cyclotomic() const {
  return remainder == IntPolynomial::constant(1);
}

std::string CyclotomicFactorization::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, mult] : multiplicities) {
    if (!first) os << '*';
    os << "Phi" << n;
    if (mult > 1) os << '^' << mult;
    first = false;
  }
  if (!(remainder == IntPolynomial::constant(1))) {
    if (!first) os << '*';
    os << '(' << remainder.to_string(var) << ')';
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

CyclotomicFactorization factor_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("factor_cyclotomic: zero polynomial");
  CyclotomicFactorization out;
  out.remainder = p;
  for (long n : totient_bounded_indices(p.degree())) {
    IntPolynomial phi_n = cyclotomic(n);
    while (phi_n.degree() <= out.remainder.degree()) {
      auto q = IntPolynomial::try_divide(out.remainder, phi_n);
      if (!q) break;
      out.remainder = std::move(*q);
      ++out.multiplicities[n];
    }
  }
  return out;
}

std::vector<long> totient_bounded_indices(long bound) {
  std::vector<long> out;
  if (bound < 1) return out;
  // phi(n) >= sqrt(n/2), so phi(n) <= bound forces n <= 2*bound^2.
  const long limit = 2 * bound * bound + 1;
  for (long n = 1; n <= limit; ++n) {
    if (euler_totient(n) <= bound) out.push_back(n);
  }
  return out;
}

} // namespace wpc
