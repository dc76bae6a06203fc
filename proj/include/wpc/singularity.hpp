#ifndef WPC_SINGULARITY_HPP
#define WPC_SINGULARITY_HPP

#include <wpc/coxeter.hpp>
#include <wpc/rational_function.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpc {

// Degree data of a graded complete intersection
// k[x_1,...,x_s]/(f_1,...,f_r): the generator degrees d_j and the
// homogeneous relation degrees h_i.  Both lists are kept sorted.
class GradedCI {
public:
  GradedCI(std::vector<long> generator_degrees, std::vector<long> relation_degrees);

  /// Parses "d1,d2,...|h1,h2,..."; the relation list may be empty ("6" or "6|").
  static GradedCI parse(std::string_view text);

  const std::vector<long>& generator_degrees() const { return gens_; }
  const std::vector<long>& relation_degrees() const { return rels_; }

  /// "6,14,21|42"
  std::string to_string() const;

  bool operator==(const GradedCI& rhs) const = default;
  bool operator<(const GradedCI& rhs) const;

private:
  std::vector<long> gens_;
  std::vector<long> rels_;
};

/// Gorenstein parameter: sum of generator degrees minus sum of relation degrees.
Int gorenstein_parameter(const GradedCI& ci);

/// Hilbert series prod_i (1 - t^{h_i}) / prod_j (1 - t^{d_j}), canonical.
RationalFunction hilbert_series(const GradedCI& ci);

// Poincare series of the fuchsian singularity with the given signature
// (dimension generating series of its graded coordinate algebra):
//   [1+(g-2)x+(g-2)x^2+x^3]/(1-x)^2 + x^2/(1-x)^2 * sum_i v_{a_i-1}/v_{a_i},
// in canonical form.  Defined only for chi < 0; throws NonFuchsianError.
RationalFunction poincare_series(const Signature& sig);

/// Coefficients <a, tau^i a> for i = 0..n of the K-theoretic series p_X.
std::vector<Int> ktheoretic_poincare(const Signature& sig, int n);

// Coxeter polynomial of the one-point extension lattice, with the product
// identity phi_T = canonical(p_R * phi_X) asserted against the
// characteristic polynomial (a failure would mean the lattice rules and
// the series disagree and raises logic_error).  Requires chi < 0.
IntPolynomial coxeter_polynomial_extended(const Signature& sig);

// Alternative closed form for the extended Coxeter polynomial, assembled
// from the weight polynomials:
//   prod_i v_{a_i} * [1+(g-2)x+(g-1)x^2+x^3 + sum_i v_{a_i-1}/v_{a_i}].
// Kept for cross-checking only: it disagrees with the characteristic
// polynomial (already at t = 0 the x^2 coefficient differs); the test
// suite reports the comparison.
IntPolynomial coxeter_polynomial_extended_variant(const Signature& sig);

// Numerical hypersurface-candidate test: the Gorenstein parameter is -1
// and the Hilbert series equals the Poincare series of the signature as
// canonical rational functions.  A necessary condition; it does not
// certify a ring isomorphism.  Requires chi < 0.
bool is_fuchsian_match(const GradedCI& ci, const Signature& sig);

struct CyPeriodCheck {
  bool matches = false;          // period exists and divides h
  std::optional<Int> period;     // exact order of the extended Coxeter matrix
};

/// Periodicity check of the extended Coxeter transformation against a
/// candidate order h (e.g. the degree of a defining equation).
CyPeriodCheck fractional_cy_check(const Signature& sig, const Int& h);

} // namespace wpc

#endif
