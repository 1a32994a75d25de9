#include "matroidlab/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace matroidlab {

namespace {

// Disjoint-set over vertex indices, used by the graphic oracle.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Matroid::Matroid(GroundSet ground, Oracle oracle, json descriptor)
    : s_(std::make_shared<State>()) {
  s_->ground = std::move(ground);
  s_->oracle = std::move(oracle);
  s_->descriptor = std::move(descriptor);
}

bool Matroid::indep(Mask x) const {
  State& st = *s_;
  {
    std::lock_guard<std::mutex> lock(st.mu);
    auto it = st.memo.find(x);
    if (it != st.memo.end()) return it->second;
  }
  bool v = st.oracle(x);
  std::lock_guard<std::mutex> lock(st.mu);
  st.memo.emplace(x, v);
  return v;
}

Mask Matroid::max_independent_subset(Mask x, Mask seed) const {
  Mask j = seed;
  for_bits(x & ~seed, [&](int i) {
    if (indep(j | bit(i))) j |= bit(i);
  });
  return j;
}

int Matroid::rank(Mask x) const { return card(max_independent_subset(x)); }

int Matroid::rank() const {
  {
    std::lock_guard<std::mutex> lock(s_->mu);
    if (s_->full_rank >= 0) return s_->full_rank;
  }
  int r = rank(ground().full());
  std::lock_guard<std::mutex> lock(s_->mu);
  s_->full_rank = r;
  return r;
}

int Matroid::relative_rank(Mask a, Mask b) const {
  if ((b & ~a) != 0) throw std::invalid_argument("relative_rank: B not contained in A");
  Mask j = max_independent_subset(b);
  Mask i = max_independent_subset(a, j);
  return card(i) - card(j);
}

std::optional<Mask> Matroid::fundamental_circuit(Mask indep_set, int y) const {
  if (!indep(indep_set)) throw std::invalid_argument("fundamental_circuit: set not independent");
  Mask iy = indep_set | bit(y);
  if (indep(iy)) return std::nullopt;
  Mask c = 0;
  for_bits(iy, [&](int e) {
    if (indep(iy & ~bit(e))) c |= bit(e);
  });
  return c;
}

void Matroid::require_small(const char* op) const {
  if (size() > kEnumerationCap)
    throw std::invalid_argument(std::string(op) + ": ground set too large for exhaustive enumeration");
}

std::vector<Mask> Matroid::circuits() const {
  require_small("circuits");
  std::vector<Mask> out;
  const Mask full = ground().full();
  for (Mask m = 0; m <= full; ++m) {
    if (indep(m)) continue;
    bool minimal = true;
    for_bits(m, [&](int e) {
      if (minimal && !indep(m & ~bit(e))) minimal = false;
    });
    if (minimal) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

std::vector<Mask> Matroid::bases() const {
  require_small("bases");
  std::vector<Mask> out;
  const Mask full = ground().full();
  for (Mask m = 0; m <= full; ++m) {
    if (!indep(m)) {
      if (m == full) break;
      continue;
    }
    bool maximal = true;
    for_bits(full & ~m, [&](int e) {
      if (maximal && indep(m | bit(e))) maximal = false;
    });
    if (maximal) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

std::vector<Mask> Matroid::independent_sets() const {
  require_small("independent_sets");
  std::vector<Mask> out;
  const Mask full = ground().full();
  for (Mask m = 0;; ++m) {
    if (indep(m)) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

Mask Matroid::loops() const {
  Mask out = 0;
  for (int i = 0; i < size(); ++i)
    if (!indep(bit(i))) out |= bit(i);
  return out;
}

// --- constructors ----------------------------------------------------------

Matroid Matroid::uniform(int k, GroundSet ground) {
  if (k < 0) throw std::invalid_argument("uniform: k must be nonnegative");
  json d = {{"type", "uniform"}, {"k", k}, {"ground", ground.ids()}};
  return Matroid(std::move(ground), [k](Mask x) { return card(x) <= k; }, std::move(d));
}

Matroid Matroid::circuit(GroundSet ground) {
  if (ground.empty()) throw std::invalid_argument("circuit: ground set must be nonempty");
  const Mask full = ground.full();
  json d = {{"type", "circuit"}, {"ground", ground.ids()}};
  return Matroid(std::move(ground), [full](Mask x) { return x != full; }, std::move(d));
}

Matroid Matroid::free_on(GroundSet ground) {
  json d = {{"type", "free"}, {"ground", ground.ids()}};
  return Matroid(std::move(ground), [](Mask) { return true; }, std::move(d));
}

Matroid Matroid::loops_on(GroundSet ground) {
  json d = {{"type", "loops"}, {"ground", ground.ids()}};
  return Matroid(std::move(ground), [](Mask x) { return x == 0; }, std::move(d));
}

Matroid Matroid::graphic(std::vector<std::string> vertices, std::vector<GraphEdge> edges) {
  std::unordered_map<std::string, int> vindex;
  for (const auto& v : vertices) {
    if (!vindex.emplace(v, static_cast<int>(vindex.size())).second)
      throw std::invalid_argument("graphic: duplicate vertex '" + v + "'");
  }
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> ends;
  ids.reserve(edges.size());
  ends.reserve(edges.size());
  json jedges = json::array();
  for (const auto& e : edges) {
    auto t = vindex.find(e.tail);
    auto h = vindex.find(e.head);
    if (t == vindex.end()) throw std::invalid_argument("graphic: unknown endpoint '" + e.tail + "'");
    if (h == vindex.end()) throw std::invalid_argument("graphic: unknown endpoint '" + e.head + "'");
    ids.push_back(e.id);
    ends.emplace_back(t->second, h->second);
    jedges.push_back(json::array({e.id, e.tail, e.head}));
  }
  const int nv = static_cast<int>(vertices.size());
  json d = {{"type", "graphic"}, {"vertices", vertices}, {"edges", jedges}};
  GroundSet g(std::move(ids));
  auto oracle = [ends, nv](Mask x) {
    Dsu dsu(nv);
    bool acyclic = true;
    for_bits(x, [&](int i) {
      if (acyclic && !dsu.unite(ends[i].first, ends[i].second)) acyclic = false;
    });
    return acyclic;
  };
  return Matroid(std::move(g), std::move(oracle), std::move(d));
}

Matroid Matroid::dual(const Matroid& m) {
  json d = {{"type", "dual"}, {"of", m.descriptor()}};
  const Mask full = m.ground().full();
  auto oracle = [m, full](Mask x) { return m.rank(full & ~x) == m.rank(); };
  return Matroid(m.ground(), std::move(oracle), std::move(d));
}

Matroid Matroid::direct_sum(const std::vector<Matroid>& parts) {
  std::vector<std::string> ids;
  json jparts = json::array();
  for (const auto& p : parts) {
    for (const auto& id : p.ground().ids()) ids.push_back(id);
    jparts.push_back(p.descriptor());
  }
  GroundSet g(std::move(ids));  // rejects overlapping grounds (duplicate ids)
  // Position ranges of each summand inside the sum.
  std::vector<std::pair<int, int>> spans;
  int at = 0;
  for (const auto& p : parts) {
    spans.emplace_back(at, p.size());
    at += p.size();
  }
  json d = {{"type", "sum"}, {"parts", jparts}};
  auto oracle = [parts, spans](Mask x) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Mask span = parts[i].ground().full() << spans[i].first;
      Mask proj = (x & span) >> spans[i].first;
      if (!parts[i].indep(proj)) return false;
    }
    return true;
  };
  return Matroid(std::move(g), std::move(oracle), std::move(d));
}

Matroid Matroid::restriction(const Matroid& m, Mask x) {
  if ((x & ~m.ground().full()) != 0) throw std::invalid_argument("restriction: set outside ground");
  std::vector<std::string> ids = m.ground().names(x);
  std::vector<int> embed = positions(x);  // sub position -> super position
  json d = {{"type", "restrict"}, {"of", m.descriptor()}, {"set", ids}};
  GroundSet g(std::move(ids));
  auto oracle = [m, embed](Mask sub) {
    Mask sup = 0;
    for_bits(sub, [&](int i) { sup |= bit(embed[static_cast<std::size_t>(i)]); });
    return m.indep(sup);
  };
  return Matroid(std::move(g), std::move(oracle), std::move(d));
}

Matroid Matroid::contraction_onto(const Matroid& m, Mask y) {
  if ((y & ~m.ground().full()) != 0) throw std::invalid_argument("contraction: set outside ground");
  Matroid inner = restriction(dual(m), y);
  Matroid result = dual(inner);
  json d = {{"type", "contract"}, {"of", m.descriptor()}, {"set", m.ground().names(y)}};
  return Matroid(result.ground(), [result](Mask x) { return result.indep(x); }, std::move(d));
}

Matroid Matroid::truncation(const Matroid& m, int r) {
  if (r < 0) throw std::invalid_argument("truncation: negative rank bound");
  json d = {{"type", "truncation"}, {"of", m.descriptor()}, {"r", r}};
  auto oracle = [m, r](Mask x) { return card(x) <= r && m.indep(x); };
  return Matroid(m.ground(), std::move(oracle), std::move(d));
}

Matroid Matroid::from_oracle(GroundSet ground, Oracle oracle, json descriptor) {
  return Matroid(std::move(ground), std::move(oracle), std::move(descriptor));
}

}  // namespace matroidlab
