#ifndef WPC_MATRIX_HPP
#define WPC_MATRIX_HPP

#include <wpc/integer.hpp>
#include <wpc/polynomial.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wpc {

// Dense matrix over the arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  bool is_identity() const;
  Int trace() const;

  /// Non-negative power by binary exponentiation.
  IntMatrix pow(const Int& e) const;

  /// Exact determinant (fraction-free Bareiss elimination).
  Int determinant() const;

  // Monic characteristic polynomial, computed by the Faddeev-LeVerrier
  // recursion; every internal division is by construction exact over the
  // integers (asserted).
  IntPolynomial charpoly() const;

  // Exact solution X of A X = B over the rationals, reported only when X is
  // integral; nullopt when some entry is a proper fraction.  Throws
  // DomainError when A is singular.
  static std::optional<IntMatrix> solve_integral(const IntMatrix& a,
                                                 const IntMatrix& b);

  /// Rows as space-separated integers, one line per row.
  std::string to_string() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// S(count) = I + T + ... + T^{count-1}, by divide and conquer in
// O(log count) multiplications.
IntMatrix power_sum(const IntMatrix& t, const Int& count);

} // namespace wpc

#endif
