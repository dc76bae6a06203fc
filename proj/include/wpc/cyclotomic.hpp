#ifndef WPC_CYCLOTOMIC_HPP
#define WPC_CYCLOTOMIC_HPP

#include <wpc/polynomial.hpp>

#include <map>
#include <string>

namespace wpc {

// v_a = 1 + x + ... + x^{a-1} = (x^a - 1)/(x - 1); v_1 = 1.
// Throws DomainError for a < 1.
IntPolynomial v_poly(long a);

// n-th cyclotomic polynomial, from the recursion
// x^n - 1 = prod_{d | n} Phi_d with exact polynomial division.
// Throws DomainError for n < 1.
IntPolynomial cyclotomic(long n);

struct CyclotomicFactorization {
  // n -> multiplicity of Phi_n, ascending in n, positive multiplicities only.
  std::map<long, long> multiplicities;
  // Cyclotomic-free cofactor; p = remainder * prod Phi_n^mult.
  IntPolynomial remainder;

  IntPolynomial reassemble() const;
  bool fully_cyclotomic() const;
  /// "Phi2*Phi6", "Phi2^3", "Phi2*(x^2+3x+1)", "1".
  std::string to_string(const std::string& var = "x") const;
};

// Splits off every cyclotomic factor of p.  Only indices n with
// phi(n) <= deg p can contribute, which makes the trial division finite;
// candidates are scanned in ascending order so the output is deterministic.
// Throws DomainError for the zero polynomial.
CyclotomicFactorization factor_cyclotomic(const IntPolynomial& p);

/// Ascending list of all n >= 1 with phi(n) <= bound.
std::vector<long> totient_bounded_indices(long bound);

} // namespace wpc

#endif
