#include <wpc/klattice.hpp>

#include <wpc/errors.hpp>

#include <sstream>
#include <utility>

namespace wpc {

namespace {

std::vector<std::string> make_labels(const Signature& sig, bool extended) {
  std::vector<std::string> labels;
  labels.emplace_back("O");
  labels.emplace_back("s0");
  for (long i = 1; i <= sig.weight_count(); ++i) {
    const long a = sig.weights()[static_cast<std::size_t>(i - 1)];
    for (long j = 0; j + 1 < a; ++j) {
      std::ostringstream os;
      os << 's' << i << '.' << j;
      labels.push_back(os.str());
    }
  }
  if (extended) labels.emplace_back("e");
  return labels;
}

} // namespace

KLattice::KLattice(Signature sig, bool extended)
    : sig_(std::move(sig)), extended_(extended) {
  labels_ = make_labels(sig_, extended_);
  const long base_rank = sig_.rank();
  const long n = base_rank + (extended_ ? 1 : 0);
  cartan_ = IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  auto& c = cartan_;
  const long g = sig_.genus();

  c(0, 0) = 1 - g;
  c(0, 1) = 1;
  c(1, 0) = -1;
  // <s0,s0> = 0 and all tube-vs-s0 pairings vanish.
  long col = 2;
  for (long i = 1; i <= sig_.weight_count(); ++i) {
    const long a = sig_.weights()[static_cast<std::size_t>(i - 1)];
    const long base = col;
    for (long j = 0; j + 1 < a; ++j) {
      if (j == 0) c(0, static_cast<std::size_t>(base)) = 1;
      // <tau^j s_i, a> = -[j == -1 mod a_i] never fires for j <= a_i-2.
      for (long k = 0; k + 1 < a; ++k) {
        Int value = 0;
        if (j == k) value += 1;
        if (k == j + 1) value -= 1;
        if (value != 0) {
          c(static_cast<std::size_t>(base + j), static_cast<std::size_t>(base + k)) =
              value;
        }
      }
    }
    col += a - 1;
  }

  if (extended_) {
    const std::size_t e = static_cast<std::size_t>(base_rank);
    // <x,e> = <x,a> for base classes, <e,x> = 0, <e,e> = 1.
    for (long i = 0; i < base_rank; ++i) {
      c(static_cast<std::size_t>(i), e) = c(static_cast<std::size_t>(i), 0);
    }
    c(e, e) = 1;
  }
}

long KLattice::tube_index(long i, long j) const {
  if (i < 1 || i > sig_.weight_count()) throw DomainError("tube index out of range");
  const long a = sig_.weights()[static_cast<std::size_t>(i - 1)];
  if (j < 0 || j > a - 2) throw DomainError("tube power out of range");
  long idx = 2;
  for (long k = 1; k < i; ++k) {
    idx += sig_.weights()[static_cast<std::size_t>(k - 1)] - 1;
  }
  return idx + j;
}

long KLattice::extension_index() const {
  if (!extended_) throw DomainError("extension_index on a base lattice");
  return rank() - 1;
}

LatticePtr build_lattice(const Signature& sig) {
  return LatticePtr(new KLattice(sig, false));
}

LatticePtr extended_lattice(const Signature& sig) {
  return LatticePtr(new KLattice(sig, true));
}

bool KClass::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

KClass make_class(LatticePtr lattice, std::vector<Int> coords) {
  if (!lattice) throw DomainError("null lattice");
  if (static_cast<long>(coords.size()) != lattice->rank()) {
    throw LatticeMismatchError("coordinate length does not match lattice rank");
  }
  return KClass{std::move(lattice), std::move(coords)};
}

KClass zero_class(LatticePtr lattice) {
  std::vector<Int> coords(static_cast<std::size_t>(lattice->rank()), Int(0));
  return make_class(std::move(lattice), std::move(coords));
}

KClass basis_class(LatticePtr lattice, long index) {
  if (index < 0 || index >= lattice->rank()) {
    throw DomainError("basis index out of range");
  }
  KClass x = zero_class(std::move(lattice));
  x.coords[static_cast<std::size_t>(index)] = 1;
  return x;
}

KClass structure_class(LatticePtr lattice) {
  return basis_class(std::move(lattice), 0);
}

KClass ordinary_simple_class(LatticePtr lattice) {
  return basis_class(std::move(lattice), 1);
}

KClass tube_simple_class(LatticePtr lattice, long i, long j) {
  const auto& sig = lattice->signature();
  if (i < 1 || i > sig.weight_count()) throw DomainError("tube index out of range");
  const long a = sig.weights()[static_cast<std::size_t>(i - 1)];
  long jm = j % a;
  if (jm < 0) jm += a;
  if (jm <= a - 2) return basis_class(std::move(lattice), lattice->tube_index(i, jm));
  // tau^{a-1} s_i = s0 - sum_{j<=a-2} tau^j s_i.
  KClass x = ordinary_simple_class(lattice);
  for (long k = 0; k + 1 < a; ++k) {
    x.coords[static_cast<std::size_t>(lattice->tube_index(i, k))] -= 1;
  }
  return x;
}

namespace {

void require_same_lattice(const KClass& x, const KClass& y) {
  if (!x.lattice || !y.lattice) throw DomainError("null lattice");
  if (!(*x.lattice == *y.lattice)) {
    throw LatticeMismatchError("classes live in different lattices");
  }
}

void require_base(const KLattice& lattice, const char* op) {
  if (lattice.extended()) {
    throw DomainError(std::string(op) + " is defined on base lattices only");
  }
}

} // namespace

Int euler_form(const KClass& x, const KClass& y) {
  require_same_lattice(x, y);
  const IntMatrix& c = x.lattice->cartan();
  std::vector<Int> cy = c.apply(y.coords);
  Int acc = 0;
  for (std::size_t i = 0; i < cy.size(); ++i) acc += x.coords[i] * cy[i];
  return acc;
}

IntMatrix tau_matrix(const KLattice& lattice) {
  require_base(lattice, "tau_matrix");
  const Signature& sig = lattice.signature();
  const long n = lattice.rank();
  const long g = sig.genus();
  const long t = sig.weight_count();
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));

  // tau a = a - sum_i s_i^{(0)} + (t - (2-2g)) s0.
  m(0, 0) = 1;
  m(1, 0) = t - (2 - 2 * g);
  for (long i = 1; i <= t; ++i) {
    m(static_cast<std::size_t>(lattice.tube_index(i, 0)), 0) = -1;
  }
  // tau s0 = s0.
  m(1, 1) = 1;
  // Tube columns shift, folding the last power back through the relation.
  for (long i = 1; i <= t; ++i) {
    const long a = sig.weights()[static_cast<std::size_t>(i - 1)];
    for (long j = 0; j + 1 < a; ++j) {
      const std::size_t col = static_cast<std::size_t>(lattice.tube_index(i, j));
      if (j + 1 <= a - 2) {
        m(static_cast<std::size_t>(lattice.tube_index(i, j + 1)), col) = 1;
      } else {
        m(1, col) = 1;
        for (long k = 0; k + 1 < a; ++k) {
          m(static_cast<std::size_t>(lattice.tube_index(i, k)), col) = -1;
        }
      }
    }
  }
  return m;
}

IntMatrix tau_matrix(const Signature& sig) {
  return tau_matrix(*build_lattice(sig));
}

KClass tau_apply(const KClass& x) {
  if (!x.lattice) throw DomainError("null lattice");
  IntMatrix t = tau_matrix(*x.lattice);
  return KClass{x.lattice, t.apply(x.coords)};
}

Int rank_of(const KClass& x) {
  if (!x.lattice) throw DomainError("null lattice");
  return euler_form(x, ordinary_simple_class(x.lattice));
}

Int degree_of(const KClass& x) {
  if (!x.lattice) throw DomainError("null lattice");
  const KLattice& lattice = *x.lattice;
  require_base(lattice, "degree_of");
  const Signature& sig = lattice.signature();
  const Int abar = sig.lcm_bar();
  Int deg = x.coords[1] * abar;
  for (long i = 1; i <= sig.weight_count(); ++i) {
    const long a = sig.weights()[static_cast<std::size_t>(i - 1)];
    const Int share = abar / a;
    for (long j = 0; j + 1 < a; ++j) {
      deg += x.coords[static_cast<std::size_t>(lattice.tube_index(i, j))] * share;
    }
  }
  return deg;
}

std::optional<Rat> slope_of(const KClass& x) {
  if (x.is_zero()) throw DomainError("slope of the zero class");
  const Int r = rank_of(x);
  if (r == 0) return std::nullopt;
  return Rat(degree_of(x)) / Rat(r);
}

Rat orbifold_euler_char(const Signature& sig) {
  return sig.orbifold_euler_char();
}

Rat averaged_euler_form(const KClass& x, const KClass& y) {
  require_same_lattice(x, y);
  const KLattice& lattice = *x.lattice;
  require_base(lattice, "averaged_euler_form");
  const Int abar = lattice.signature().lcm_bar();
  IntMatrix sum = power_sum(tau_matrix(lattice), abar);
  std::vector<Int> cy = lattice.cartan().apply(y.coords);
  std::vector<Int> sx = sum.apply(x.coords);
  // sum_j <T^j x, y> = (S x)^T C y with S = sum_j T^j.
  Int acc = 0;
  for (std::size_t i = 0; i < cy.size(); ++i) acc += sx[i] * cy[i];
  return Rat(acc, abar);
}

Rat riemann_roch_rhs(const KClass& x, const KClass& y) {
  require_same_lattice(x, y);
  require_base(*x.lattice, "riemann_roch_rhs");
  const Signature& sig = x.lattice->signature();
  const Int abar = sig.lcm_bar();
  const Rat avg_oo = sig.orbifold_euler_char() * Rat(abar, 2);
  const Int rx = rank_of(x);
  const Int ry = rank_of(y);
  const Int dx = degree_of(x);
  const Int dy = degree_of(y);
  return avg_oo * Rat(rx * ry) + Rat(rx * dy - ry * dx, abar);
}

bool hom_existence(const Rat& mu_a, const Rat& mu_b, long genus) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  return mu_b - mu_a > Rat(genus - 1);
}

GroupPresentation fundamental_group_presentation(const Signature& sig) {
  GroupPresentation p;
  const long g = sig.genus();
  const long t = sig.weight_count();
  for (long i = 1; i <= g; ++i) {
    p.generators.push_back("a" + std::to_string(i));
    p.generators.push_back("b" + std::to_string(i));
  }
  for (long i = 1; i <= t; ++i) {
    p.generators.push_back("s" + std::to_string(i));
  }
  for (long i = 1; i <= t; ++i) {
    p.relations.push_back(
        "s" + std::to_string(i) + "^" +
        std::to_string(sig.weights()[static_cast<std::size_t>(i - 1)]));
  }
  std::ostringstream word;
  bool first = true;
  for (long i = 1; i <= t; ++i) {
    if (!first) word << '*';
    word << 's' << i;
    first = false;
  }
  for (long i = 1; i <= g; ++i) {
    if (!first) word << '*';
    word << "[a" << i << ",b" << i << ']';
    first = false;
  }
  if (!first) p.relations.push_back(word.str());
  return p;
}

} // namespace wpc
