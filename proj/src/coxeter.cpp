#include <wpc/coxeter.hpp>

#include <wpc/errors.hpp>

#include <algorithm>

namespace wpc {

IntMatrix coxeter_matrix_of(const IntMatrix& cartan) {
  if (!cartan.is_square()) throw DomainError("Cartan matrix must be square");
  auto solved = IntMatrix::solve_integral(cartan, -cartan.transpose());
  if (!solved) {
    throw LatticeIntegrityError("Coxeter transformation is not integral");
  }
  return *solved;
}

IntMatrix coxeter_matrix(const KLattice& lattice) {
  return coxeter_matrix_of(lattice.cartan());
}

IntPolynomial coxeter_polynomial(const KLattice& lattice) {
  return coxeter_matrix(lattice).charpoly();
}

namespace {

std::vector<Int> divisors_ascending(const Int& n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

} // namespace

std::optional<Int> periodicity(const IntMatrix& phi) {
  if (!phi.is_square()) throw DomainError("periodicity of non-square matrix");
  if (phi.rows() == 0) return Int(1);
  CyclotomicFactorization f = factor_cyclotomic(phi.charpoly());
  if (!f.fully_cyclotomic()) return std::nullopt;
  Int l = 1;
  for (const auto& [n, mult] : f.multiplicities) l = lcm(l, Int(n));
  if (!phi.pow(l).is_identity()) return std::nullopt;
  for (const Int& d : divisors_ascending(l)) {
    if (phi.pow(d).is_identity()) return d;
  }
  return l;
}

namespace {

int sign_at(const IntPolynomial& p, const Rat& x) {
  const Rat v = p.evaluate(x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

// Largest root of p inside (1, bound], assuming p(bound) != 0; 0.0 when no
// sign change is found on the scan grid.
double largest_root_above_one(const IntPolynomial& p, const Rat& bound) {
  const Rat step(1, 8);
  Rat hi = bound;
  int sign_hi = sign_at(p, hi);
  Rat lo = hi - step;
  bool found = false;
  while (lo > 1) {
    const int sign_lo = sign_at(p, lo);
    if (sign_lo == 0) return lo.convert_to<double>();
    if (sign_lo != sign_hi) {
      found = true;
      break;
    }
    hi = lo;
    sign_hi = sign_lo;
    lo -= step;
  }
  if (!found) {
    lo = 1;
    const int sign_lo = sign_at(p, lo);
    if (sign_lo == 0 || sign_lo == sign_hi) return 0.0;
  }
  for (int iter = 0; iter < 80; ++iter) {
    const Rat mid = (lo + hi) / 2;
    const int s = sign_at(p, mid);
    if (s == 0) return mid.convert_to<double>();
    if (s == sign_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return ((lo + hi) / 2).convert_to<double>();
}

} // namespace

double spectral_radius_estimate(const IntPolynomial& phi) {
  if (phi.is_zero()) throw DomainError("spectral radius of the zero polynomial");
  CyclotomicFactorization f = factor_cyclotomic(phi);
  IntPolynomial s = f.remainder;
  if (s.degree() <= 0) return 1.0;
  // Square-free part, so that every real root produces a sign change.
  s = IntPolynomial::divide_exact(s, IntPolynomial::gcd(s, s.derivative()));
  // Cauchy bound: every root has |z| < 1 + max |c_i| / |lc|.
  Int max_abs = 0;
  for (const auto& c : s.coeffs()) {
    Int a = abs(c);
    if (a > max_abs) max_abs = std::move(a);
  }
  const Rat bound = Rat(2) + Rat(max_abs, abs(s.leading()));
  const double plus = largest_root_above_one(s, bound);
  const double minus = largest_root_above_one(s.negate_variable(), bound);
  return std::max({plus, minus, 1.0});
}

CoxeterReport analyze_coxeter(const KLattice& lattice, bool with_spectral) {
  CoxeterReport report;
  report.matrix = coxeter_matrix(lattice);
  report.polynomial = report.matrix.charpoly();
  report.factorization = factor_cyclotomic(report.polynomial);
  report.period = periodicity(report.matrix);
  if (with_spectral) {
    report.spectral_radius = spectral_radius_estimate(report.polynomial);
  }
  return report;
}

} // namespace wpc
