#ifndef WPC_TESTS_GRIDS_HPP
#define WPC_TESTS_GRIDS_HPP

#include <wpc/klattice.hpp>

#include <random>
#include <vector>

namespace grids {

inline void extend(long genus, long max_t, long max_weight, long min_next,
                   std::vector<long>& current, std::vector<wpc::Signature>& out) {
  out.emplace_back(genus, current);
  if (static_cast<long>(current.size()) == max_t) return;
  for (long w = min_next; w <= max_weight; ++w) {
    current.push_back(w);
    extend(genus, max_t, max_weight, w, current, out);
    current.pop_back();
  }
}

/// Every signature with genus <= max_genus, at most max_t weights, weights
/// between 2 and max_weight.
inline std::vector<wpc::Signature> signature_grid(long max_genus, long max_t,
                                                  long max_weight) {
  std::vector<wpc::Signature> out;
  for (long g = 0; g <= max_genus; ++g) {
    std::vector<long> current;
    extend(g, max_t, max_weight, 2, current, out);
  }
  return out;
}

inline std::vector<wpc::Signature> fuchsian_grid(long max_genus, long max_t,
                                                 long max_weight) {
  std::vector<wpc::Signature> out;
  for (auto& sig : signature_grid(max_genus, max_t, max_weight)) {
    if (sig.is_fuchsian()) out.push_back(std::move(sig));
  }
  return out;
}

inline wpc::KClass random_class(std::mt19937& rng, wpc::LatticePtr lattice,
                                long long lo = -9, long long hi = 9) {
  std::uniform_int_distribution<long long> coeff(lo, hi);
  std::vector<wpc::Int> coords(static_cast<std::size_t>(lattice->rank()));
  for (auto& c : coords) c = coeff(rng);
  return wpc::make_class(std::move(lattice), std::move(coords));
}

} // namespace grids

#endif
