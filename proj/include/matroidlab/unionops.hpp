#ifndef MATROIDLAB_UNIONOPS_HPP
#define MATROIDLAB_UNIONOPS_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// A certified witness for membership in the union system: i1 independent in
/// the first matroid, i2 in the second, and i1 ∪ i2 is the represented set.
struct Representation {
  Mask i1 = 0;
  Mask i2 = 0;
  Mask set() const { return i1 | i2; }
};

/// An alternating exchange chain (y_0,…,y_n). For an even chain, link i uses
/// the first matroid when i is even and the second when i is odd; the
/// certificate for link i is the fundamental circuit of y_i on that side,
/// which must contain y_{i+1}. Odd chains swap the roles.
struct ExchangeChain {
  bool even = true;
  std::vector<int> nodes;   // y_0 … y_n as ground positions
  std::vector<Mask> certs;  // one circuit per link (size = nodes.size() - 1)

  int length() const { return static_cast<int>(nodes.size()) - 1; }
  /// Which matroid certifies link i: 0 = first, 1 = second.
  int side(int link) const { return (link % 2 == 0) == even ? 0 : 1; }
  ExchangeChain subchain(int from, int to) const;  // nodes [from..to]
};

struct ChainVerdict {
  bool valid = true;
  int bad_link = -1;  // -1 when the problem is not tied to a link
  std::string reason;
};

/// A(I1,I2,x): all elements from which an exchange chain reaches x, with one
/// shortest witness chain per member (breadth-first, ties by element order).
struct ReachabilitySet {
  Representation base;
  int target = -1;
  Mask members = 0;
  std::map<int, ExchangeChain> witness;  // keyed by chain start
};

ChainVerdict validate_chain(const Matroid& m1, const Matroid& m2, const ExchangeChain& ch,
                            Mask i1, Mask i2);

/// Applies a chain from y to x per the single-swap induction; returns a
/// representation of (I + y) − x, or of I + y when x stays covered by the
/// other side (then the result set is one element larger). Throws on an
/// invalid chain.
Representation apply_chain(const Matroid& m1, const Matroid& m2, const ExchangeChain& ch,
                           Mask i1, Mask i2);

ReachabilitySet reachability(const Matroid& m1, const Matroid& m2, Mask i1, Mask i2, int x);

/// Chains with the first element fixed: all ends reachable from y, with
/// shortest witnesses.
ReachabilitySet forward_reachability(const Matroid& m1, const Matroid& m2, Mask i1, Mask i2,
                                     int y);

/// Property of the reachability set: every y outside it either extends I1
/// independently or has its fundamental circuit disjoint from the set.
bool reachability_property2(const Matroid& m1, const ReachabilitySet& a);

struct Exchange {
  int y = -1;
  Representation rep;  // of (I + y) − x
  std::optional<ExchangeChain> chain;  // absent when y was absorbed directly
};

/// Returned instead of an exchange when no chain from I reaches B \ I: the
/// rebuilt pair certifies B + x as union-independent, contradicting the
/// claimed maximality of B.
struct ImprovementWitness {
  Mask b1_new = 0;
  Mask b2_new = 0;
};

using AugmentOutcome = std::variant<Exchange, ImprovementWitness>;

/// Exchange step against a maximal union set B: finds y in B \ I such that
/// (I + y) − x stays union-independent. x must lie in I.
AugmentOutcome augment(const Matroid& m1, const Matroid& m2, Mask b, Representation brep,
                       Mask i, Representation irep, int x);

struct CochainResult {
  bool grew = false;       // I + y was already union-independent
  int x = -1;              // removed element when !grew
  Representation rep;      // of I + y (grew) or (I + y) − x
  std::optional<ExchangeChain> chain;
};

/// Mirror step with the chain start fixed at y ∈ J \ I.
CochainResult cochain_augment(const Matroid& m1, const Matroid& m2, Mask i, Representation irep,
                              Mask j, int y);

std::optional<Representation> union_membership(const Matroid& m1, const Matroid& m2, Mask x);

/// Greedy maximal union-independent subset of `within`, with representation.
std::pair<Mask, Representation> union_base(const Matroid& m1, const Matroid& m2, Mask within);

// --- k-fold unions ----------------------------------------------------------

/// Membership with a k-way split; parts are pairwise disjoint.
std::optional<std::vector<Mask>> k_fold_membership(const std::vector<Matroid>& ms, Mask x);

std::pair<Mask, std::vector<Mask>> k_fold_base(const std::vector<Matroid>& ms, Mask within);

/// The union as a matroid-valued object backed by the augmentation oracle.
Matroid union_matroid(const std::vector<Matroid>& ms);

}  // namespace matroidlab

#endif
