#ifndef WPC_ERRORS_HPP
#define WPC_ERRORS_HPP

#include <stdexcept>

namespace wpc {

// Malformed textual input (signature or complete-intersection grammar,
// coordinate vectors, numeric flags).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid request: a precondition of the theory fails.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Operation requires negative orbifold Euler characteristic.
class NonFuchsianError : public DomainError {
public:
  using DomainError::DomainError;
};

// Power-series expansion requested at a pole of the function.
class PoleAtOriginError : public DomainError {
public:
  using DomainError::DomainError;
};

// Classes from two different lattices were combined.
class LatticeMismatchError : public DomainError {
public:
  using DomainError::DomainError;
};

// The Coxeter transformation of a bilinear form failed to be integral,
// i.e. the given Cartan matrix does not define a valid lattice.
class LatticeIntegrityError : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace wpc

#endif
