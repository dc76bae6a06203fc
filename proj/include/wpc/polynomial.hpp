#ifndef WPC_POLYNOMIAL_HPP
#define WPC_POLYNOMIAL_HPP

#include <wpc/integer.hpp>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace wpc {

// Dense univariate polynomial with integer coefficients, stored as an
// ascending coefficient list with no trailing zeros (the zero polynomial
// is the empty list).  Values are immutable after construction and all
// operations are pure.
class IntPolynomial {
public:
  // Reported degree of the zero polynomial ("minus infinity").
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> ascending_coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int c);
  /// c * x^k
  static IntPolynomial monomial(Int c, int k);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  /// Coefficient of x^k; zero outside the stored range.
  const Int& coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int leading() const;
  bool is_monic() const;

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Int& scalar) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  /// gcd of all coefficients (non-negative); 0 for the zero polynomial.
  Int content() const;
  IntPolynomial primitive_part() const;

  Int evaluate(const Int& x) const;
  Rat evaluate(const Rat& x) const;

  IntPolynomial derivative() const;
  /// x^deg * p(1/x); reverses the coefficient list.
  IntPolynomial reciprocal() const;
  /// p(-x)
  IntPolynomial negate_variable() const;

  /// Quotient when d divides p exactly over the integers, nullopt otherwise.
  static std::optional<IntPolynomial> try_divide(const IntPolynomial& p,
                                                 const IntPolynomial& d);
  /// As try_divide but throws DomainError when the division is not exact.
  static IntPolynomial divide_exact(const IntPolynomial& p,
                                    const IntPolynomial& d);

  // gcd in Z[x]: gcd of contents times the primitive gcd, normalized to a
  // positive leading coefficient.  Computed by a primitive pseudo-remainder
  // sequence, so coefficients stay small along the way.
  static IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);

  /// Sparse form, descending degree: "x^3-x^2-x+1", "2x^2+1", "0".
  std::string to_string(const std::string& var = "x") const;

private:
  void normalize();

  std::vector<Int> coeffs_;
};

} // namespace wpc

#endif
