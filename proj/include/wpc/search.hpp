#ifndef WPC_SEARCH_HPP
#define WPC_SEARCH_HPP

#include <wpc/singularity.hpp>

#include <vector>

namespace wpc {

// Bounds for the signature enumeration and the hypersurface search.  The
// defaults cover the known genus-zero classification with room to spare;
// they are empirical, chosen so that widening them does not change the
// result (the test suite checks this for the generator-degree bound).
struct SearchBounds {
  long max_genus = 3;
  long max_weight_count = 6;
  long max_weight = 12;
  long max_generator_degree = 25;

  void validate() const;
};

// All signatures with chi < 0 inside the bounds, weights as sorted
// multisets, without duplicates, ordered by genus, then weight count,
// then lexicographic weights.
std::vector<Signature> enumerate_fuchsian_signatures(const SearchBounds& bounds);

enum class PruneMode {
  on,  // reject triples early on a low-order series coefficient mismatch
  off, // run the full rational-function comparison on every triple
};

// All generator triples d1 <= d2 <= d3 <= max_generator_degree whose
// hypersurface degree data (d1,d2,d3 | d1+d2+d3+1) matches the Poincare
// series of the signature; the relation degree is forced by Gorenstein
// parameter -1.  Pruning is a pure optimization: both modes return the
// same set.  Requires chi < 0.
std::vector<GradedCI> find_hypersurfaces(const Signature& sig,
                                         const SearchBounds& bounds,
                                         PruneMode prune = PruneMode::on);

struct ClassificationEntry {
  Signature signature;
  std::vector<GradedCI> presentations;
};

struct ClassificationReport {
  SearchBounds bounds;
  // Genus-zero fuchsian signatures admitting a hypersurface candidate.
  std::vector<ClassificationEntry> entries;

  long total() const { return static_cast<long>(entries.size()); }
  long three_weight_count() const;
};

/// Scans every genus-zero fuchsian signature within the bounds for
/// hypersurface presentations.  Internally parallel, deterministic output.
ClassificationReport classify_genus_zero(const SearchBounds& bounds);

} // namespace wpc

#endif
