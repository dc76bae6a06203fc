#ifndef WPC_RATIONAL_FUNCTION_HPP
#define WPC_RATIONAL_FUNCTION_HPP

#include <wpc/polynomial.hpp>

#include <string>
#include <vector>

namespace wpc {

// Quotient of integer polynomials held in canonical form:
//   - the denominator is nonzero,
//   - numerator and denominator have no common factor in Z[x]
//     (integer content included),
//   - the denominator has positive leading coefficient.
// Equality of canonical forms is therefore coefficientwise.
class RationalFunction {
public:
  /// Zero function 0/1.
  RationalFunction();
  /// num/den, canonicalized.  Throws DomainError when den is zero.
  RationalFunction(IntPolynomial num, IntPolynomial den);
  static RationalFunction from_polynomial(IntPolynomial p);
  static RationalFunction constant(Int c);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the canonical denominator is the constant 1.
  bool is_polynomial() const;
  /// The numerator, provided is_polynomial(); throws DomainError otherwise.
  const IntPolynomial& as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  /// Throws DomainError on division by the zero function.
  RationalFunction operator/(const RationalFunction& rhs) const;
  bool operator==(const RationalFunction& rhs) const = default;

  // Coefficients 0..n of the power-series expansion at the origin,
  // as exact rationals.  Requires a nonzero denominator constant term;
  // throws PoleAtOriginError otherwise.
  std::vector<Rat> series(int n) const;

  /// "(x^3+1)/(x^2-2x+1)"; bare numerator when the denominator is 1.
  std::string to_string(const std::string& var = "x") const;

private:
  void canonicalize();

  IntPolynomial num_;
  IntPolynomial den_;
};

/// series() narrowed to integers; throws DomainError if any coefficient
/// fails to be integral.
std::vector<Int> integral_series(const RationalFunction& f, int n);

} // namespace wpc

#endif
