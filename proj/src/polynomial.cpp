#include <wpc/polynomial.hpp>

#include <wpc/errors.hpp>

#include <algorithm>
#include <sstream>

namespace wpc {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(Int c, int k) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, kZero);
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

int IntPolynomial::degree() const {
  if (coeffs_.empty()) return kMinusInfinity;
  return static_cast<int>(coeffs_.size()) - 1;
}

const Int& IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

Int IntPolynomial::leading() const {
  return coeffs_.empty() ? Int(0) : coeffs_.back();
}

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
  if (scalar == 0) return IntPolynomial();
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c *= scalar;
  return r;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    g = wpc::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rat(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Int(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<Int> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::negate_variable() const {
  IntPolynomial r(*this);
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) {
    r.coeffs_[i] = -r.coeffs_[i];
  }
  return r;
}

std::optional<IntPolynomial> IntPolynomial::try_divide(const IntPolynomial& p,
                                                       const IntPolynomial& d) {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (p.is_zero()) return IntPolynomial();
  if (p.degree() < d.degree()) return std::nullopt;

  const Int& lead = d.coeffs_.back();
  std::vector<Int> rem = p.coeffs_;
  std::vector<Int> quot(p.coeffs_.size() - d.coeffs_.size() + 1, kZero);
  for (std::size_t k = rem.size(); k-- >= d.coeffs_.size();) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) return std::nullopt;
    Int q = rem[k] / lead;
    std::size_t shift = k - (d.coeffs_.size() - 1);
    quot[shift] = q;
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) {
      rem[shift + i] -= q * d.coeffs_[i];
    }
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& p,
                                          const IntPolynomial& d) {
  auto q = try_divide(p, d);
  if (!q) throw DomainError("polynomial division is not exact");
  return *q;
}

namespace {

// Pseudo-remainder: the remainder of lc(d)^(deg p - deg d + 1) * p by d,
// which stays in Z[x] for arbitrary divisors.
IntPolynomial pseudo_remainder(IntPolynomial p, const IntPolynomial& d) {
  const Int lead = d.leading();
  const int dd = d.degree();
  while (!p.is_zero() && p.degree() >= dd) {
    IntPolynomial t = IntPolynomial::monomial(p.leading(), p.degree() - dd) * d;
    p = p * lead - t;
  }
  return p;
}

} // namespace

IntPolynomial IntPolynomial::gcd(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) return IntPolynomial();
  if (p.is_zero() || q.is_zero()) {
    IntPolynomial r = p.is_zero() ? q : p;
    if (r.leading() < 0) r = -r;
    return r;
  }
  Int content_gcd = wpc::gcd(p.content(), q.content());
  IntPolynomial a = p.primitive_part();
  IntPolynomial b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a * content_gcd;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    Int a = abs(c);
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

} // namespace wpc
