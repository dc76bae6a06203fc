#include <wpc/rational_function.hpp>

#include <wpc/errors.hpp>

#include <sstream>
#include <utility>

namespace wpc {

RationalFunction::RationalFunction()
    : num_(), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::from_polynomial(IntPolynomial p) {
  return RationalFunction(std::move(p), IntPolynomial::constant(1));
}

RationalFunction RationalFunction::constant(Int c) {
  return from_polynomial(IntPolynomial::constant(std::move(c)));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = IntPolynomial::gcd(num_, den_);
  num_ = IntPolynomial::divide_exact(num_, g);
  den_ = IntPolynomial::divide_exact(den_, g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_polynomial() const {
  return den_ == IntPolynomial::constant(1);
}

const IntPolynomial& RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw DomainError("rational function is not a polynomial");
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw DomainError("division by the zero function");
  return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

std::vector<Rat> RationalFunction::series(int n) const {
  if (n < 0) throw DomainError("series: negative length");
  const Int d0 = den_.coeff(0);
  if (d0 == 0) throw PoleAtOriginError("series expansion at a pole of the function");
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  const int den_deg = den_.degree();
  for (int k = 0; k <= n; ++k) {
    Rat acc(num_.coeff(k));
    for (int j = 1; j <= std::min(k, den_deg); ++j) {
      if (den_.coeff(j) == 0) continue;
      acc -= Rat(den_.coeff(j)) * out[static_cast<std::size_t>(k - j)];
    }
    out[static_cast<std::size_t>(k)] = acc / Rat(d0);
  }
  return out;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  std::ostringstream os;
  os << '(' << num_.to_string(var) << ")/(" << den_.to_string(var) << ')';
  return os.str();
}

std::vector<Int> integral_series(const RationalFunction& f, int n) {
  std::vector<Rat> coeffs = f.series(n);
  std::vector<Int> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!is_integral(c)) {
      throw DomainError("series coefficient is not an integer: " + rat_to_string(c));
    }
    out.push_back(numerator(c));
  }
  return out;
}

} // namespace wpc
