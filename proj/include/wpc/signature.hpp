#ifndef WPC_SIGNATURE_HPP
#define WPC_SIGNATURE_HPP

#include <wpc/integer.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace wpc {

// Signature (g; a_1,...,a_t) of a weighted projective curve: the genus of
// the underlying curve plus the multiset of weights.  Weights are kept
// sorted ascending and are all >= 2; weight-1 entries describe ordinary
// points and are dropped on construction (the record keeps a flag saying
// that this happened).
class Signature {
public:
  Signature(long genus, std::vector<long> weights);

  /// Parses "g;a1,a2,...,at"; the weight list may be empty ("2;" or "2").
  static Signature parse(std::string_view text);

  long genus() const { return genus_; }
  const std::vector<long>& weights() const { return weights_; }
  long weight_count() const { return static_cast<long>(weights_.size()); }
  bool dropped_weight_one() const { return dropped_weight_one_; }

  /// lcm of the weights; 1 when there are none.
  Int lcm_bar() const;

  /// chi = (2 - 2g) - sum_i (1 - 1/a_i), exact.
  Rat orbifold_euler_char() const;
  bool is_fuchsian() const { return orbifold_euler_char() < 0; }

  /// Rank of the reduced Grothendieck group: 2 + sum_i (a_i - 1).
  long rank() const;

  /// "0;2,3,7" or "2;" when there are no weights.
  std::string to_string() const;

  bool operator==(const Signature& rhs) const {
    return genus_ == rhs.genus_ && weights_ == rhs.weights_;
  }
  /// Orders by genus, then weight count, then lexicographic weights.
  bool operator<(const Signature& rhs) const;

private:
  long genus_;
  std::vector<long> weights_;
  bool dropped_weight_one_ = false;
};

} // namespace wpc

#endif
