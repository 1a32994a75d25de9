#ifndef MATROIDLAB_MATROID_HPP
#define MATROIDLAB_MATROID_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "matroidlab/ground.hpp"

namespace matroidlab {

using json = nlohmann::json;

struct GraphEdge {
  std::string id;
  std::string tail;
  std::string head;
};

/// A finite matroid as an independence oracle over a named ground set.
///
/// Instances are immutable and cheap to copy (shared state). The oracle is
/// pure and deterministic; results are memoized behind a lock, so sharing a
/// matroid across threads is safe.
class Matroid {
 public:
  using Oracle = std::function<bool(Mask)>;

  Matroid() = default;
  Matroid(GroundSet ground, Oracle oracle, json descriptor);

  const GroundSet& ground() const { return s_->ground; }
  int size() const { return s_->ground.size(); }
  const json& descriptor() const { return s_->descriptor; }

  bool indep(Mask x) const;
  bool dep(Mask x) const { return !indep(x); }

  /// Greedy rank in ground order; equals the size of any maximal independent
  /// subset of x.
  int rank(Mask x) const;
  int rank() const;  // rank of the full ground set, cached

  /// r(A|B): extends a maximal independent subset of B to one of A and
  /// reports the gain. Requires B ⊆ A.
  int relative_rank(Mask a, Mask b) const;

  /// Greedy maximal independent subset of x containing seed (seed must be
  /// independent). Deterministic in ground order.
  Mask max_independent_subset(Mask x, Mask seed = 0) const;

  /// The unique circuit inside I+y when that set is dependent. I must be
  /// independent. Returns nullopt when I+y is independent (including y ∈ I).
  std::optional<Mask> fundamental_circuit(Mask indep_set, int y) const;

  std::vector<Mask> circuits() const;  // exhaustive, requires small ground
  std::vector<Mask> bases() const;
  std::vector<Mask> independent_sets() const;
  Mask loops() const;

  // --- constructors -------------------------------------------------------

  static Matroid uniform(int k, GroundSet ground);
  static Matroid circuit(GroundSet ground);           // unique circuit = whole ground
  static Matroid free_on(GroundSet ground);
  static Matroid loops_on(GroundSet ground);
  static Matroid graphic(std::vector<std::string> vertices, std::vector<GraphEdge> edges);
  static Matroid dual(const Matroid& m);
  static Matroid direct_sum(const std::vector<Matroid>& parts);
  /// Restriction to x: the ground set shrinks to the elements of x.
  static Matroid restriction(const Matroid& m, Mask x);
  /// Contraction onto y (contract everything outside y); defined through the
  /// dual: dual(restriction(dual(m), y)).
  static Matroid contraction_onto(const Matroid& m, Mask y);
  /// Independent sets of size at most r.
  static Matroid truncation(const Matroid& m, int r);
  static Matroid from_oracle(GroundSet ground, Oracle oracle, json descriptor);

 private:
  struct State {
    GroundSet ground;
    Oracle oracle;
    json descriptor;
    mutable std::mutex mu;
    mutable std::unordered_map<Mask, bool> memo;
    mutable int full_rank = -1;
  };
  std::shared_ptr<State> s_;

  void require_small(const char* op) const;
};

/// Number of subsets enumerable exhaustively; guards circuits()/bases().
inline constexpr int kEnumerationCap = 20;

}  // namespace matroidlab

#endif
