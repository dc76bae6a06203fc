#include <wpc/signature.hpp>

#include <wpc/errors.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wpc {

namespace {

long parse_long(std::string_view text, const char* what) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

} // namespace

Signature::Signature(long genus, std::vector<long> weights) : genus_(genus) {
  if (genus < 0) throw ParseError("genus must be non-negative");
  for (long w : weights) {
    if (w < 1) throw ParseError("weights must be >= 1");
    if (w == 1) {
      dropped_weight_one_ = true;
      continue;
    }
    weights_.push_back(w);
  }
  std::sort(weights_.begin(), weights_.end());
}

Signature Signature::parse(std::string_view text) {
  const auto semi = text.find(';');
  std::string_view genus_part = text.substr(0, semi);
  long genus = parse_long(genus_part, "genus");
  std::vector<long> weights;
  if (semi != std::string_view::npos) {
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      weights.push_back(parse_long(item, "weight"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return Signature(genus, std::move(weights));
}

Int Signature::lcm_bar() const {
  Int l = 1;
  for (long w : weights_) l = lcm(l, Int(w));
  return l;
}

Rat Signature::orbifold_euler_char() const {
  Rat chi = 2 - 2 * genus_;
  for (long w : weights_) chi -= Rat(w - 1, w);
  return chi;
}

long Signature::rank() const {
  long r = 2;
  for (long w : weights_) r += w - 1;
  return r;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << genus_ << ';';
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i > 0) os << ',';
    os << weights_[i];
  }
  return os.str();
}

bool Signature::operator<(const Signature& rhs) const {
  if (genus_ != rhs.genus_) return genus_ < rhs.genus_;
  if (weights_.size() != rhs.weights_.size()) {
    return weights_.size() < rhs.weights_.size();
  }
  return weights_ < rhs.weights_;
}

} // namespace wpc
