#include <wpc/singularity.hpp>

#include <wpc/errors.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wpc {

namespace {

std::vector<long> parse_degree_list(std::string_view text, const char* what) {
  std::vector<long> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw ParseError(std::string("invalid ") + what + ": '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

} // namespace

GradedCI::GradedCI(std::vector<long> generator_degrees,
                   std::vector<long> relation_degrees)
    : gens_(std::move(generator_degrees)), rels_(std::move(relation_degrees)) {
  for (long d : gens_) {
    if (d < 1) throw ParseError("generator degrees must be positive");
  }
  for (long h : rels_) {
    if (h < 1) throw ParseError("relation degrees must be positive");
  }
  if (rels_.size() > gens_.size()) {
    throw ParseError("more relations than generators");
  }
  std::sort(gens_.begin(), gens_.end());
  std::sort(rels_.begin(), rels_.end());
}

GradedCI GradedCI::parse(std::string_view text) {
  const auto bar = text.find('|');
  std::vector<long> gens = parse_degree_list(text.substr(0, bar), "generator degree");
  if (gens.empty()) throw ParseError("empty generator degree list");
  std::vector<long> rels;
  if (bar != std::string_view::npos) {
    rels = parse_degree_list(text.substr(bar + 1), "relation degree");
  }
  return GradedCI(std::move(gens), std::move(rels));
}

std::string GradedCI::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) os << ',';
    os << gens_[i];
  }
  os << '|';
  for (std::size_t i = 0; i < rels_.size(); ++i) {
    if (i > 0) os << ',';
    os << rels_[i];
  }
  return os.str();
}

bool GradedCI::operator<(const GradedCI& rhs) const {
  if (gens_ != rhs.gens_) return gens_ < rhs.gens_;
  return rels_ < rhs.rels_;
}

Int gorenstein_parameter(const GradedCI& ci) {
  Int a = 0;
  for (long d : ci.generator_degrees()) a += d;
  for (long h : ci.relation_degrees()) a -= h;
  return a;
}

namespace {

IntPolynomial one_minus_t_pow(long n) {
  return IntPolynomial::constant(1) - IntPolynomial::monomial(1, static_cast<int>(n));
}

void require_fuchsian(const Signature& sig) {
  if (!sig.is_fuchsian()) {
    throw NonFuchsianError("signature " + sig.to_string() +
                           " has non-negative orbifold Euler characteristic");
  }
}

} // namespace

RationalFunction hilbert_series(const GradedCI& ci) {
  IntPolynomial num = IntPolynomial::constant(1);
  for (long h : ci.relation_degrees()) num = num * one_minus_t_pow(h);
  IntPolynomial den = IntPolynomial::constant(1);
  for (long d : ci.generator_degrees()) den = den * one_minus_t_pow(d);
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction poincare_series(const Signature& sig) {
  require_fuchsian(sig);
  const long g = sig.genus();
  // Assembled as a single fraction over (1-x)^2 prod_i v_{a_i}.
  IntPolynomial base_num(std::vector<Int>{1, g - 2, g - 2, 1});
  std::vector<IntPolynomial> v;
  for (long a : sig.weights()) v.push_back(v_poly(a));
  IntPolynomial v_prod = IntPolynomial::constant(1);
  for (const auto& vi : v) v_prod = v_prod * vi;

  IntPolynomial num = base_num * v_prod;
  const IntPolynomial x2 = IntPolynomial::monomial(1, 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    IntPolynomial cofactor = v_poly(sig.weights()[i] - 1);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i) cofactor = cofactor * v[j];
    }
    num = num + x2 * cofactor;
  }
  IntPolynomial one_minus_x = one_minus_t_pow(1);
  return RationalFunction(std::move(num), one_minus_x * one_minus_x * v_prod);
}

std::vector<Int> ktheoretic_poincare(const Signature& sig, int n) {
  if (n < 0) throw DomainError("ktheoretic_poincare: negative length");
  LatticePtr lattice = build_lattice(sig);
  const IntMatrix t = tau_matrix(*lattice);
  const KClass a = structure_class(lattice);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  KClass z = a;
  for (int i = 0; i <= n; ++i) {
    out.push_back(euler_form(a, z));
    if (i < n) z.coords = t.apply(z.coords);
  }
  return out;
}

IntPolynomial coxeter_polynomial_extended(const Signature& sig) {
  require_fuchsian(sig);
  IntPolynomial charpoly = coxeter_polynomial(*extended_lattice(sig));
  // Product identity: the same polynomial must come out of the series route.
  RationalFunction product =
      poincare_series(sig) *
      RationalFunction::from_polynomial(coxeter_polynomial(*build_lattice(sig)));
  if (!product.is_polynomial() || !(product.as_polynomial() == charpoly)) {
    throw std::logic_error(
        "extended Coxeter polynomial disagrees with the series product for " +
        sig.to_string());
  }
  return charpoly;
}

IntPolynomial coxeter_polynomial_extended_variant(const Signature& sig) {
  const long g = sig.genus();
  IntPolynomial bracket_poly(std::vector<Int>{1, g - 2, g - 1, 1});
  std::vector<IntPolynomial> v;
  for (long a : sig.weights()) v.push_back(v_poly(a));
  IntPolynomial v_prod = IntPolynomial::constant(1);
  for (const auto& vi : v) v_prod = v_prod * vi;
  IntPolynomial out = bracket_poly * v_prod;
  for (std::size_t i = 0; i < v.size(); ++i) {
    IntPolynomial cofactor = v_poly(sig.weights()[i] - 1);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i) cofactor = cofactor * v[j];
    }
    out = out + cofactor;
  }
  return out;
}

bool is_fuchsian_match(const GradedCI& ci, const Signature& sig) {
  require_fuchsian(sig);
  if (gorenstein_parameter(ci) != -1) return false;
  return hilbert_series(ci) == poincare_series(sig);
}

CyPeriodCheck fractional_cy_check(const Signature& sig, const Int& h) {
  require_fuchsian(sig);
  if (h < 1) throw DomainError("fractional_cy_check: h must be positive");
  CyPeriodCheck out;
  out.period = periodicity(coxeter_matrix(*extended_lattice(sig)));
  out.matches = out.period.has_value() && h % *out.period == 0;
  return out;
}

} // namespace wpc
