#ifndef WPC_COXETER_HPP
#define WPC_COXETER_HPP

#include <wpc/cyclotomic.hpp>
#include <wpc/klattice.hpp>

#include <optional>

namespace wpc {

// Coxeter transformation Phi = -C^{-1} C^T of a Cartan matrix.  Throws
// LatticeIntegrityError when the result fails to be integral (the matrix
// does not define a lattice) and DomainError when C is singular.
IntMatrix coxeter_matrix_of(const IntMatrix& cartan);
IntMatrix coxeter_matrix(const KLattice& lattice);

/// Monic characteristic polynomial of the Coxeter transformation.
IntPolynomial coxeter_polynomial(const KLattice& lattice);

// Order of Phi, when finite.  The characteristic polynomial must be a
// product of cyclotomic polynomials for Phi to have finite order; in that
// case let L be the lcm of the orders of the factors.  Phi^L = I is then
// tested explicitly (it can fail even for cyclotomic charpoly when Phi is
// not semisimple), and the minimal period is the smallest divisor d of L
// with Phi^d = I.
std::optional<Int> periodicity(const IntMatrix& phi);

// Largest absolute value of a real root of phi, located by exact sign
// bisection on the cyclotomic-free part; 1.0 when the polynomial is a
// product of cyclotomics.  A floating-point convenience only - nothing
// exact depends on it.
double spectral_radius_estimate(const IntPolynomial& phi);

struct CoxeterReport {
  IntMatrix matrix;
  IntPolynomial polynomial;
  CyclotomicFactorization factorization;
  std::optional<Int> period;
  std::optional<double> spectral_radius;
};

CoxeterReport analyze_coxeter(const KLattice& lattice, bool with_spectral = false);

} // namespace wpc

#endif
