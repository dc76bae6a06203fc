#include <wpc/search.hpp>

#include <wpc/errors.hpp>
#include <wpc/parallel.hpp>

#include <algorithm>

namespace wpc {

void SearchBounds::validate() const {
  if (max_genus < 0) throw DomainError("max_genus must be >= 0");
  if (max_weight_count < 0) throw DomainError("max_weight_count must be >= 0");
  if (max_weight < 2) throw DomainError("max_weight must be >= 2");
  if (max_generator_degree < 1) throw DomainError("max_generator_degree must be >= 1");
}

namespace {

void extend_weights(long genus, long max_count, long max_weight, long min_next,
                    std::vector<long>& current, std::vector<Signature>& out) {
  Signature sig(genus, current);
  if (sig.is_fuchsian()) out.push_back(std::move(sig));
  if (static_cast<long>(current.size()) == max_count) return;
  for (long w = min_next; w <= max_weight; ++w) {
    current.push_back(w);
    extend_weights(genus, max_count, max_weight, w, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Signature> enumerate_fuchsian_signatures(const SearchBounds& bounds) {
  bounds.validate();
  std::vector<Signature> out;
  for (long g = 0; g <= bounds.max_genus; ++g) {
    std::vector<Signature> per_genus;
    std::vector<long> current;
    extend_weights(g, bounds.max_weight_count, bounds.max_weight, 2, current,
                   per_genus);
    std::sort(per_genus.begin(), per_genus.end());
    out.insert(out.end(), per_genus.begin(), per_genus.end());
  }
  return out;
}

namespace {

// Candidate series coefficients c_0..c_top of
// (1 - t^h) / ((1-t^d1)(1-t^d2)(1-t^d3)) against the target, with early
// exit on the first mismatch.  Coefficient growth up to degree
// 3*max_degree+2 stays far below 2^63.
bool series_prefix_matches(long d1, long d2, long d3, long h,
                           const std::vector<long long>& target, long top) {
  std::vector<long long> p(static_cast<std::size_t>(top) + 1, 0);
  auto p_at = [&](long n) -> long long { return n < 0 ? 0 : p[static_cast<std::size_t>(n)]; };
  for (long n = 0; n <= top; ++n) {
    long long value = n == 0 ? 1 : 0;
    value += p_at(n - d1) + p_at(n - d2) + p_at(n - d3);
    value -= p_at(n - d1 - d2) + p_at(n - d1 - d3) + p_at(n - d2 - d3);
    value += p_at(n - d1 - d2 - d3);
    p[static_cast<std::size_t>(n)] = value;
    const long long coeff = value - p_at(n - h);
    if (coeff != target[static_cast<std::size_t>(n)]) return false;
  }
  return true;
}

} // namespace

std::vector<GradedCI> find_hypersurfaces(const Signature& sig,
                                         const SearchBounds& bounds,
                                         PruneMode prune) {
  bounds.validate();
  if (!sig.is_fuchsian()) {
    throw NonFuchsianError("hypersurface search requires chi < 0");
  }
  const long maxd = bounds.max_generator_degree;

  std::vector<long long> target;
  if (prune == PruneMode::on) {
    const int top = static_cast<int>(3 * maxd + 2);
    for (const Int& c : integral_series(poincare_series(sig), top)) {
      target.push_back(to_int64(c));
    }
  }

  std::vector<GradedCI> out;
  for (long d1 = 1; d1 <= maxd; ++d1) {
    for (long d2 = d1; d2 <= maxd; ++d2) {
      for (long d3 = d2; d3 <= maxd; ++d3) {
        const long h = d1 + d2 + d3 + 1;
        if (prune == PruneMode::on &&
            !series_prefix_matches(d1, d2, d3, h, target, h + 1)) {
          continue;
        }
        GradedCI ci({d1, d2, d3}, {h});
        if (is_fuchsian_match(ci, sig)) out.push_back(std::move(ci));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long ClassificationReport::three_weight_count() const {
  long count = 0;
  for (const auto& entry : entries) {
    if (entry.signature.weight_count() == 3) ++count;
  }
  return count;
}

ClassificationReport classify_genus_zero(const SearchBounds& bounds) {
  bounds.validate();
  SearchBounds genus_zero = bounds;
  genus_zero.max_genus = 0;
  const std::vector<Signature> sigs = enumerate_fuchsian_signatures(genus_zero);

  std::vector<std::vector<GradedCI>> found(sigs.size());
  parallel_for(sigs.size(), [&](std::size_t i) {
    found[i] = find_hypersurfaces(sigs[i], genus_zero);
  });

  ClassificationReport report;
  report.bounds = bounds;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (!found[i].empty()) {
      report.entries.push_back({sigs[i], std::move(found[i])});
    }
  }
  return report;
}

} // namespace wpc
