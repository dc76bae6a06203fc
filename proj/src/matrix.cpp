#include <wpc/matrix.hpp>

#include <wpc/errors.hpp>

#include <sstream>
#include <stdexcept>

namespace wpc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::logic_error("matrix shape mismatch");
  }
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::logic_error("matrix shape mismatch");
  }
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::logic_error("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw std::logic_error("matrix/vector shape mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) == 0) continue;
      out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Int IntMatrix::trace() const {
  if (!is_square()) throw std::logic_error("trace of non-square matrix");
  Int t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::pow(const Int& e) const {
  if (!is_square()) throw std::logic_error("power of non-square matrix");
  if (e < 0) throw std::logic_error("negative matrix power");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  Int exp = e;
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return result;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw std::logic_error("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPolynomial IntMatrix::charpoly() const {
  if (!is_square()) throw std::logic_error("charpoly of non-square matrix");
  const std::size_t n = rows_;
  std::vector<Int> coeffs(n + 1, Int(0));
  coeffs[n] = 1;
  if (n == 0) return IntPolynomial(std::move(coeffs));
  IntMatrix m = *this;
  Int c = -m.trace();
  coeffs[n - 1] = c;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
    m = *this * m;
    Int t = m.trace();
    if (t % Int(k) != 0) {
      throw std::logic_error("Faddeev-LeVerrier: non-exact division");
    }
    c = -t / Int(k);
    coeffs[n - k] = c;
  }
  return IntPolynomial(std::move(coeffs));
}

std::optional<IntMatrix> IntMatrix::solve_integral(const IntMatrix& a,
                                                   const IntMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows()) {
    throw std::logic_error("solve_integral: shape mismatch");
  }
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  // Gauss-Jordan over exact rationals on the augmented system.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a(i, j));
    for (std::size_t j = 0; j < m; ++j) w[i][n + j] = Rat(b(i, j));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w[pivot][k] == 0) ++pivot;
    if (pivot == n) throw DomainError("solve_integral: singular matrix");
    if (pivot != k) std::swap(w[pivot], w[k]);
    const Rat inv = Rat(1) / w[k][k];
    for (std::size_t j = k; j < n + m; ++j) w[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      const Rat f = w[i][k];
      for (std::size_t j = k; j < n + m; ++j) w[i][j] -= f * w[k][j];
    }
  }
  IntMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!is_integral(w[i][n + j])) return std::nullopt;
      out(i, j) = numerator(w[i][n + j]);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix power_sum(const IntMatrix& t, const Int& count) {
  if (!t.is_square()) throw std::logic_error("power_sum of non-square matrix");
  if (count <= 0) throw std::logic_error("power_sum: count must be positive");
  if (count == 1) return IntMatrix::identity(t.rows());
  const Int half = count / 2;
  IntMatrix s_half = power_sum(t, half);
  IntMatrix t_half = t.pow(half);
  IntMatrix s = s_half + t_half * s_half;
  if ((count & 1) != 0) {
    s = IntMatrix::identity(t.rows()) + t * s;
  }
  return s;
}

} // namespace wpc
