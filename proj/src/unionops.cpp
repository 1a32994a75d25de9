#include "matroidlab/unionops.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace matroidlab {

namespace {

void require_shared_ground(const Matroid& m1, const Matroid& m2) {
  if (m1.ground() != m2.ground()) throw std::invalid_argument("matroids must share a ground set");
}

void require_rep(const Matroid& m1, const Matroid& m2, const Representation& r, Mask claimed,
                 const char* who) {
  if (!m1.indep(r.i1) || !m2.indep(r.i2) || r.set() != claimed)
    throw std::invalid_argument(std::string(who) + ": invalid representation");
}

// Arcs of the exchange digraph for a (possibly overlapping) pair of
// independents: u -> v on side s whenever I_s + u is dependent and v lies in
// the fundamental circuit of u minus u itself.
struct PairDigraph {
  const Matroid& m1;
  const Matroid& m2;
  Mask i1, i2;

  const Matroid& side(int s) const { return s == 0 ? m1 : m2; }
  Mask part(int s) const { return s == 0 ? i1 : i2; }

  // Fundamental circuit of u on side s, or 0 when I_s + u is independent
  // (including u already in I_s).
  Mask circ(int s, int u) const {
    Mask p = part(s);
    if (has(p, u)) return 0;
    auto c = side(s).fundamental_circuit(p, u);
    return c ? *c : 0;
  }
};

struct BfsTree {
  std::vector<int> parent;  // predecessor on a shortest path from the root
  std::vector<int> side;    // side of the arc parent -> node
  std::vector<int> dist;
  std::vector<int> order;   // pop order
};

// Forward BFS from root over the pair digraph, deterministic: FIFO queue,
// neighbours in ground order, sides 0 then 1.
BfsTree bfs_forward(const PairDigraph& d, int root) {
  const int n = d.m1.size();
  BfsTree t{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  std::deque<int> q;
  t.dist[root] = 0;
  q.push_back(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    t.order.push_back(u);
    for (int s = 0; s < 2; ++s) {
      Mask c = d.circ(s, u);
      for_bits(c & ~bit(u), [&](int v) {
        if (t.dist[v] < 0) {
          t.dist[v] = t.dist[u] + 1;
          t.parent[v] = u;
          t.side[v] = s;
          q.push_back(v);
        }
      });
    }
  }
  return t;
}

ExchangeChain chain_from_path(const PairDigraph& d, const std::vector<int>& nodes,
                              const std::vector<int>& sides) {
  ExchangeChain ch;
  ch.nodes = nodes;
  ch.even = sides.empty() ? true : sides.front() == 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) ch.certs.push_back(d.circ(sides[i], nodes[i]));
  return ch;
}

// Path root..goal from a forward BFS tree, with arc sides.
std::pair<std::vector<int>, std::vector<int>> path_to(const BfsTree& t, int root, int goal) {
  std::vector<int> nodes{goal};
  std::vector<int> sides;
  int cur = goal;
  while (cur != root) {
    sides.push_back(t.side[cur]);
    cur = t.parent[cur];
    nodes.push_back(cur);
  }
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(sides.begin(), sides.end());
  return {nodes, sides};
}

}  // namespace

ExchangeChain ExchangeChain::subchain(int from, int to) const {
  ExchangeChain out;
  out.nodes.assign(nodes.begin() + from, nodes.begin() + to + 1);
  out.certs.assign(certs.begin() + from, certs.begin() + to);
  // Parity of the subchain keeps link sides aligned with the parent chain.
  out.even = (from % 2 == 0) ? even : !even;
  return out;
}

ChainVerdict validate_chain(const Matroid& m1, const Matroid& m2, const ExchangeChain& ch,
                            Mask i1, Mask i2) {
  require_shared_ground(m1, m2);
  if (!m1.indep(i1) || !m2.indep(i2)) return {false, -1, "I1 or I2 not independent"};
  if (ch.nodes.empty()) return {false, -1, "empty chain"};
  if (ch.certs.size() + 1 != ch.nodes.size()) return {false, -1, "certificate count mismatch"};
  const Mask both = i1 | i2;
  const int n = ch.length();
  if (!has(both, ch.nodes.back())) return {false, -1, "terminal element outside I1 ∪ I2"};
  for (int l = 0; l < n; ++l) {
    const Matroid& m = ch.side(l) == 0 ? m1 : m2;
    Mask part = ch.side(l) == 0 ? i1 : i2;
    int yi = ch.nodes[l];
    int yn = ch.nodes[l + 1];
    if (has(part, yi)) return {false, l, "link tail already in its side"};
    auto fc = m.fundamental_circuit(part, yi);
    if (!fc) return {false, l, "no circuit on this side"};
    if (ch.certs[l] != *fc) return {false, l, "certificate is not the fundamental circuit"};
    if (!has(*fc, yn)) return {false, l, "next element not in certificate circuit"};
    if (yi == yn) return {false, l, "degenerate link"};
  }
  // Alternation: interior elements lie in exactly one of I1, I2, matching the
  // side they entered from; the terminal may sit in the overlap.
  for (int p = 1; p < n; ++p) {
    int prev_side = ch.side(p - 1);
    Mask inside = prev_side == 0 ? i1 : i2;
    Mask other = prev_side == 0 ? i2 : i1;
    if (!has(inside, ch.nodes[p]) || has(other, ch.nodes[p]))
      return {false, p - 1, "alternation violated"};
  }
  return {};
}

Representation apply_chain(const Matroid& m1, const Matroid& m2, const ExchangeChain& ch,
                           Mask i1, Mask i2) {
  ChainVerdict v = validate_chain(m1, m2, ch, i1, i2);
  if (!v.valid) throw std::invalid_argument("apply_chain: invalid chain (" + v.reason + ")");
  const int x = ch.nodes.back();

  // Single-element swaps along a shortest chain, re-deriving the remaining
  // chain against the updated sets each time; the shortest length strictly
  // drops, which bounds the loop.
  int y = ch.nodes.front();
  Mask c1 = i1, c2 = i2;
  int last_len = ch.length() + 1;
  for (;;) {
    if (y == x) break;
    PairDigraph d{m1, m2, c1, c2};
    BfsTree t = bfs_forward(d, y);
    if (t.dist[x] < 0 || t.dist[x] >= last_len)
      throw std::logic_error("apply_chain: chain re-derivation failed");
    last_len = t.dist[x];
    auto [nodes, sides] = path_to(t, y, x);
    int s = sides.front();
    int out = nodes[1];
    Mask& part = s == 0 ? c1 : c2;
    part = (part | bit(y)) & ~bit(out);
    if (!(s == 0 ? m1 : m2).indep(part)) throw std::logic_error("apply_chain: swap broke independence");
    y = out;
  }
  return {c1, c2};
}

namespace {

ReachabilitySet reach_impl(const Matroid& m1, const Matroid& m2, Mask i1, Mask i2, int pivot,
                           bool fixed_start) {
  require_shared_ground(m1, m2);
  if (!m1.indep(i1) || !m2.indep(i2))
    throw std::invalid_argument("reachability: sets not independent");

  ReachabilitySet out;
  out.base = {i1, i2};
  out.target = pivot;
  PairDigraph d{m1, m2, i1, i2};
  const int n = m1.size();

  if (fixed_start) {
    // Chains (y, …, z): plain forward BFS; ends must land inside I1 ∪ I2.
    BfsTree t = bfs_forward(d, pivot);
    for (int z = 0; z < n; ++z) {
      if (t.dist[z] < 0) continue;
      if (!has(i1 | i2, z)) continue;  // chain ends must land inside I1 ∪ I2
      out.members |= bit(z);
      auto [nodes, sides] = path_to(t, pivot, z);
      out.witness[z] = chain_from_path(d, nodes, sides);
    }
    return out;
  }

  if (!has(i1 | i2, pivot)) throw std::invalid_argument("reachability: x outside I1 ∪ I2");

  // Chains (a, …, x): breadth-first over reversed arcs. dist[u] = shortest
  // chain length from u to x; next[u] = successor on one such chain.
  std::vector<int> dist(n, -1), next(n, -1), aside(n, -1);
  std::deque<int> q;
  dist[pivot] = 0;
  q.push_back(pivot);
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int u = 0; u < n; ++u) {
      if (dist[u] >= 0 || u == w) continue;
      for (int s = 0; s < 2; ++s) {
        Mask c = d.circ(s, u);
        if (c != 0 && has(c, w)) {
          dist[u] = dist[w] + 1;
          next[u] = w;
          aside[u] = s;
          q.push_back(u);
          break;
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (dist[a] < 0) continue;
    out.members |= bit(a);
    std::vector<int> nodes;
    std::vector<int> sides;
    int cur = a;
    nodes.push_back(cur);
    while (cur != pivot) {
      sides.push_back(aside[cur]);
      cur = next[cur];
      nodes.push_back(cur);
    }
    out.witness[a] = chain_from_path(d, nodes, sides);
  }
  return out;
}

}  // namespace

ReachabilitySet reachability(const Matroid& m1, const Matroid& m2, Mask i1, Mask i2, int x) {
  return reach_impl(m1, m2, i1, i2, x, false);
}

ReachabilitySet forward_reachability(const Matroid& m1, const Matroid& m2, Mask i1, Mask i2,
                                     int y) {
  return reach_impl(m1, m2, i1, i2, y, true);
}

bool reachability_property2(const Matroid& m1, const ReachabilitySet& a) {
  const int n = m1.size();
  for (int y = 0; y < n; ++y) {
    if (has(a.members, y) || has(a.base.i1, y)) continue;
    auto c = m1.fundamental_circuit(a.base.i1, y);
    if (c && (*c & a.members) != 0) return false;
  }
  return true;
}

namespace {

// Maximal representation of I: grow i1 to a base of m1|I, then i2 to a base
// of m2|I, preserving i1 ∪ i2 = I.
Representation maximalize(const Matroid& m1, const Matroid& m2, Mask i, Representation r) {
  r.i1 = m1.max_independent_subset(i, r.i1);
  r.i2 = m2.max_independent_subset(i, r.i2);
  return r;
}

Representation strip(Representation r, int x) {
  r.i1 &= ~bit(x);
  r.i2 &= ~bit(x);
  return r;
}

}  // namespace

AugmentOutcome augment(const Matroid& m1, const Matroid& m2, Mask b, Representation brep, Mask i,
                       Representation irep, int x) {
  require_shared_ground(m1, m2);
  require_rep(m1, m2, brep, b, "augment(B)");
  require_rep(m1, m2, irep, i, "augment(I)");
  if (!has(i, x)) throw std::invalid_argument("augment: x must lie in I");

  Representation r = maximalize(m1, m2, i, irep);

  // Directly absorbable elements of B \ I certify I + y immediately.
  Mask candidates = b & ~i;
  {
    std::optional<Exchange> direct;
    for_bits(candidates, [&](int y) {
      if (direct) return;
      if (m1.indep(r.i1 | bit(y))) {
        direct = Exchange{y, strip({r.i1 | bit(y), r.i2}, x), std::nullopt};
      } else if (m2.indep(r.i2 | bit(y))) {
        direct = Exchange{y, strip({r.i1, r.i2 | bit(y)}, x), std::nullopt};
      }
    });
    if (direct) return *direct;
  }

  ReachabilitySet a = reachability(m1, m2, r.i1, r.i2, x);
  Mask hit = a.members & candidates;
  if (hit != 0) {
    // Shortest chain, ties by element order.
    int y = -1, best = -1;
    for_bits(hit, [&](int cand) {
      int len = a.witness.at(cand).length();
      if (best < 0 || len < best) {
        best = len;
        y = cand;
      }
    });
    Representation res = apply_chain(m1, m2, a.witness.at(y), r.i1, r.i2);
    return Exchange{y, strip(res, x), a.witness.at(y)};
  }

  // No chain reaches B \ I: rebuild a pair certifying B + x, which
  // contradicts maximality of B.
  Mask b1p = (brep.i1 & ~a.members) | (r.i1 & a.members);
  Mask b2p = (brep.i2 & ~a.members) | (r.i2 & a.members);
  if (!m1.indep(b1p) || !m2.indep(b2p) || ((b | bit(x)) & ~(b1p | b2p)) != 0)
    throw std::logic_error("augment: improvement witness failed verification");
  return ImprovementWitness{b1p, b2p};
}

CochainResult cochain_augment(const Matroid& m1, const Matroid& m2, Mask i, Representation irep,
                              Mask j, int y) {
  require_shared_ground(m1, m2);
  require_rep(m1, m2, irep, i, "cochain_augment(I)");
  if (!has(j & ~i, y)) throw std::invalid_argument("cochain_augment: y must lie in J \\ I");

  Representation r = maximalize(m1, m2, i, irep);
  if (m1.indep(r.i1 | bit(y))) return {true, -1, {r.i1 | bit(y), r.i2}, std::nullopt};
  if (m2.indep(r.i2 | bit(y))) return {true, -1, {r.i1, r.i2 | bit(y)}, std::nullopt};

  ReachabilitySet fwd = forward_reachability(m1, m2, r.i1, r.i2, y);
  Mask hit = fwd.members & (i & ~j);
  if (hit == 0) throw std::logic_error("cochain_augment: no exchange found");
  int x = -1, best = -1;
  for_bits(hit, [&](int cand) {
    int len = fwd.witness.at(cand).length();
    if (best < 0 || len < best) {
      best = len;
      x = cand;
    }
  });
  Representation res = apply_chain(m1, m2, fwd.witness.at(x), r.i1, r.i2);
  return {false, x, strip(res, x), fwd.witness.at(x)};
}

// --- k-part augmentation engine ---------------------------------------------

namespace {

struct KEngine {
  const std::vector<Matroid>& ms;
  std::vector<Mask>& parts;  // pairwise disjoint

  bool part_has(int j, int e) const { return has(parts[j], e); }

  // One augmentation: extend the represented union by e, keeping parts
  // disjoint. Walks absorb-or-swap steps; each swap follows the first arc of
  // a shortest success path.
  bool extend(int e) {
    const int n = ms[0].size();
    const int k = static_cast<int>(ms.size());
    int g = e;
    for (int guard = 0; guard <= 2 * n * k + 4; ++guard) {
      for (int j = 0; j < k; ++j) {
        if (!part_has(j, g) && ms[j].indep(parts[j] | bit(g))) {
          parts[j] |= bit(g);
          return true;
        }
      }
      // BFS from g for an absorbable node.
      std::vector<int> parent(n, -1), aside(n, -1), dist(n, -1);
      std::deque<int> q;
      dist[g] = 0;
      q.push_back(g);
      int goal = -1;
      while (!q.empty() && goal < 0) {
        int u = q.front();
        q.pop_front();
        if (u != g) {
          for (int j = 0; j < k && goal < 0; ++j)
            if (!part_has(j, u) && ms[j].indep(parts[j] | bit(u))) goal = u;
          if (goal >= 0) break;
        }
        for (int j = 0; j < k; ++j) {
          if (part_has(j, u)) continue;
          auto c = ms[j].fundamental_circuit(parts[j], u);
          if (!c) continue;
          for_bits(*c & ~bit(u), [&](int v) {
            if (dist[v] < 0) {
              dist[v] = dist[u] + 1;
              parent[v] = u;
              aside[v] = j;
              q.push_back(v);
            }
          });
        }
      }
      if (goal < 0) return false;  // certified: union + g is not a member
      // First hop of the shortest path g -> goal.
      int hop = goal;
      while (parent[hop] != g) hop = parent[hop];
      int s = aside[hop];
      parts[s] = (parts[s] | bit(g)) & ~bit(hop);
      if (!ms[s].indep(parts[s])) throw std::logic_error("k-fold extend: swap broke independence");
      g = hop;
    }
    throw std::logic_error("k-fold extend: did not converge");
  }
};

void require_klist(const std::vector<Matroid>& ms) {
  if (ms.empty()) throw std::invalid_argument("union: empty matroid list");
  for (const auto& m : ms)
    if (m.ground() != ms[0].ground()) throw std::invalid_argument("union: ground sets differ");
}

}  // namespace

std::optional<std::vector<Mask>> k_fold_membership(const std::vector<Matroid>& ms, Mask x) {
  require_klist(ms);
  std::vector<Mask> parts(ms.size(), 0);
  KEngine eng{ms, parts};
  bool ok = true;
  for_bits(x, [&](int e) {
    if (ok && !eng.extend(e)) ok = false;
  });
  if (!ok) return std::nullopt;
  return parts;
}

std::pair<Mask, std::vector<Mask>> k_fold_base(const std::vector<Matroid>& ms, Mask within) {
  require_klist(ms);
  std::vector<Mask> parts(ms.size(), 0);
  KEngine eng{ms, parts};
  Mask got = 0;
  for_bits(within, [&](int e) {
    if (eng.extend(e)) got |= bit(e);
  });
  return {got, parts};
}

Matroid union_matroid(const std::vector<Matroid>& ms) {
  require_klist(ms);
  json parts = json::array();
  for (const auto& m : ms) parts.push_back(m.descriptor());
  json d = {{"type", "union"}, {"parts", parts}};
  auto oracle = [ms](Mask x) { return k_fold_membership(ms, x).has_value(); };
  return Matroid::from_oracle(ms[0].ground(), std::move(oracle), std::move(d));
}

std::optional<Representation> union_membership(const Matroid& m1, const Matroid& m2, Mask x) {
  require_shared_ground(m1, m2);
  auto parts = k_fold_membership({m1, m2}, x);
  if (!parts) return std::nullopt;
  return Representation{(*parts)[0], (*parts)[1]};
}

std::pair<Mask, Representation> union_base(const Matroid& m1, const Matroid& m2, Mask within) {
  require_shared_ground(m1, m2);
  auto [got, parts] = k_fold_base({m1, m2}, within);
  return {got, Representation{parts[0], parts[1]}};
}

}  // namespace matroidlab
