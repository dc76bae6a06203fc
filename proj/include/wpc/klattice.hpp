#ifndef WPC_KLATTICE_HPP
#define WPC_KLATTICE_HPP

#include <wpc/matrix.hpp>
#include <wpc/signature.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wpc {

class KLattice;
using LatticePtr = std::shared_ptr<const KLattice>;

// Reduced Grothendieck group of a weighted projective curve: a free
// abelian group of rank 2 + sum(a_i - 1) together with the Euler form,
// stored as the Cartan matrix C[i][j] = <b_i, b_j>.
//
// Basis order: index 0 is a = [O] (structure sheaf), index 1 is
// s0 = [ordinary simple], then for each weight i (ascending) the classes
// [tau^j s_i] for j = 0..a_i-2.  The missing tube class tau^{a_i-1} s_i
// is expressed through the tube relation sum_{j in Z_{a_i}} tau^j s_i = s0.
//
// The Euler form on the basis:
//   <a,a> = 1-g,  <a,s0> = 1,  <s0,a> = -1,  <s0,s0> = 0,
//   <a, tau^j s_i>       = [j == 0 (mod a_i)],
//   <tau^j s_i, a>       = -[j == -1 (mod a_i)],
//   <tau^j s_i, tau^k s_i> = [j == k] - [k == j+1]   (mod a_i),
// and every cross-tube or tube-vs-s0 pairing vanishes.  The in-tube rule
// is Serre duality for tube simples: Ext^1(S_j, S_k) = DHom(S_k, S_{j+1}).
//
// The one-point extension appends a final basis class e with
//   <e,e> = 1,  <e,x> = 0,  <x,e> = <x,a>
// for every base class x.
//
// Lattices are immutable; share them through LatticePtr.
class KLattice {
public:
  const Signature& signature() const { return sig_; }
  bool extended() const { return extended_; }
  long rank() const { return static_cast<long>(cartan_.rows()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const IntMatrix& cartan() const { return cartan_; }

  long structure_index() const { return 0; }
  long ordinary_simple_index() const { return 1; }
  /// Basis index of tau^j s_i (i is 1-based, 0 <= j <= a_i-2).
  long tube_index(long i, long j) const;
  /// Index of the extending class e; throws DomainError on base lattices.
  long extension_index() const;

  bool operator==(const KLattice& rhs) const {
    return sig_ == rhs.sig_ && extended_ == rhs.extended_;
  }

  friend LatticePtr build_lattice(const Signature& sig);
  friend LatticePtr extended_lattice(const Signature& sig);

private:
  KLattice(Signature sig, bool extended);

  Signature sig_;
  bool extended_;
  std::vector<std::string> labels_;
  IntMatrix cartan_;
};

/// Lattice of the reduced Grothendieck group for a signature.
LatticePtr build_lattice(const Signature& sig);

/// K-theoretic one-point extension of build_lattice(sig) by the class e.
LatticePtr extended_lattice(const Signature& sig);

// Element of a lattice: an integer coordinate vector in the canonical
// basis, tagged with the lattice it lives in.
struct KClass {
  LatticePtr lattice;
  std::vector<Int> coords;

  bool is_zero() const;
};

/// Checked constructor; coords length must equal the lattice rank.
KClass make_class(LatticePtr lattice, std::vector<Int> coords);
KClass zero_class(LatticePtr lattice);
KClass basis_class(LatticePtr lattice, long index);
KClass structure_class(LatticePtr lattice);
KClass ordinary_simple_class(LatticePtr lattice);
/// Class of tau^j s_i for any j (reduced mod a_i); the excluded power
/// a_i-1 is rewritten through the tube relation.
KClass tube_simple_class(LatticePtr lattice, long i, long j);

/// <x,y> = x^T C y.  Throws LatticeMismatchError when the lattices differ.
Int euler_form(const KClass& x, const KClass& y);

// Matrix of the tau-action in the canonical basis:
//   tau a   = a - sum_i s_i^{(0)} + (t - (2-2g)) s0,
//   tau s0  = s0,
//   tau(tau^j s_i) = tau^{j+1} s_i, with tau^{a_i-1} s_i rewritten as
//                    s0 - sum_{j<=a_i-2} tau^j s_i.
// Base lattices only.
IntMatrix tau_matrix(const KLattice& lattice);
IntMatrix tau_matrix(const Signature& sig);

KClass tau_apply(const KClass& x);

/// rank(x) = <x, s0>.
Int rank_of(const KClass& x);
/// Degree linear form: deg a = 0, deg s0 = lcm_bar, deg tau^j s_i = lcm_bar/a_i.
/// Base lattices only.
Int degree_of(const KClass& x);
/// degree/rank; nullopt encodes the infinite slope of a nonzero class of
/// rank 0.  Throws DomainError on the zero class.
std::optional<Rat> slope_of(const KClass& x);

Rat orbifold_euler_char(const Signature& sig);

/// (1/lcm_bar) * sum_{j<lcm_bar} <tau^j x, y>, via tau_matrix powers.
Rat averaged_euler_form(const KClass& x, const KClass& y);

// Right-hand side of weighted Riemann-Roch:
//   <<O,O>> rk(x) rk(y) + (1/lcm_bar) | rk(x) rk(y) ; deg(x) deg(y) |,
// with <<O,O>> = chi * lcm_bar / 2.
Rat riemann_roch_rhs(const KClass& x, const KClass& y);

/// Existence bound for maps between vector bundles on an unweighted curve:
/// true iff mu_b - mu_a > g - 1.
bool hom_existence(const Rat& mu_a, const Rat& mu_b, long genus);

// Presentation of the orbifold fundamental group: generators
// a1,b1,...,ag,bg (handles) and s1..st (one per weighted point), relations
// s_i^{a_i} and s1*...*st*[a1,b1]*...*[ag,bg].
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
};

GroupPresentation fundamental_group_presentation(const Signature& sig);

} // namespace wpc

#endif
