#ifndef MATROIDLAB_GROUND_HPP
#define MATROIDLAB_GROUND_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace matroidlab {

// Subsets of a ground set are bitmasks over ground positions.
using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr bool has(Mask m, int i) { return (m >> i) & Mask{1}; }
inline constexpr int card(Mask m) { return std::popcount(m); }
inline constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(i) for every set bit of m, in increasing position order.
template <typename F>
inline void for_bits(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Calls f(sub) for every submask of m, including 0 and m itself.
template <typename F>
inline void for_submasks(Mask m, F&& f) {
  Mask sub = m;
  for (;;) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

inline std::vector<int> positions(Mask m) {
  std::vector<int> out;
  out.reserve(card(m));
  for_bits(m, [&](int i) { out.push_back(i); });
  return out;
}

/// An ordered finite carrier set of named elements. Position order is the
/// universal tie-breaker everywhere (greedy, search, reports).
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
    if (ids_.size() > 64) throw std::invalid_argument("ground set limited to 64 elements");
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      const std::string& id = ids_[i];
      if (id.empty()) throw std::invalid_argument("empty element id");
      for (char c : id)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
          throw std::invalid_argument("element id contains whitespace: '" + id + "'");
      if (!index_.emplace(id, static_cast<int>(i)).second)
        throw std::invalid_argument("duplicate element id: '" + id + "'");
    }
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  Mask full() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown element id: '" + id + "'");
    return it->second;
  }

  const std::string& id(int i) const { return ids_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& ids() const { return ids_; }

  Mask mask_of(std::span<const std::string> names) const {
    Mask m = 0;
    for (const auto& n : names) m |= bit(index_of(n));
    return m;
  }

  /// Element names of a subset, in ground (position) order.
  std::vector<std::string> names(Mask m) const {
    std::vector<std::string> out;
    for_bits(m, [&](int i) { out.push_back(id(i)); });
    return out;
  }

  bool operator==(const GroundSet& o) const { return ids_ == o.ids_; }
  bool operator!=(const GroundSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace matroidlab

#endif
