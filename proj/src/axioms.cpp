#include "matroidlab/axioms.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace matroidlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::sampled_pass: return "sampled-pass";
    case Verdict::fail: return "fail";
  }
  return "?";
}

SetSystem::SetSystem(GroundSet g, std::vector<Mask> m) : ground(std::move(g)), members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Mask x : members)
    if ((x & ~ground.full()) != 0) throw std::invalid_argument("member outside ground");
}

SetSystem SetSystem::from_matroid(const Matroid& m) {
  return SetSystem(m.ground(), m.independent_sets());
}

SetSystem SetSystem::union_family(const Matroid& m1, const Matroid& m2) {
  if (m1.ground() != m2.ground()) throw std::invalid_argument("union_family: ground sets differ");
  auto a = m1.independent_sets();
  auto b = m2.independent_sets();
  std::vector<Mask> out;
  out.reserve(a.size() * 4);
  for (Mask x : a)
    for (Mask y : b) out.push_back(x | y);
  return SetSystem(m1.ground(), std::move(out));
}

SetSystem SetSystem::k_fold_union_family(const std::vector<Matroid>& ms) {
  if (ms.empty()) throw std::invalid_argument("k_fold_union_family: empty list");
  std::vector<Mask> cur = ms[0].independent_sets();
  for (std::size_t i = 1; i < ms.size(); ++i) {
    if (ms[i].ground() != ms[0].ground())
      throw std::invalid_argument("k_fold_union_family: ground sets differ");
    auto next = ms[i].independent_sets();
    std::vector<Mask> out;
    out.reserve(cur.size() * 2);
    for (Mask x : cur)
      for (Mask y : next) out.push_back(x | y);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    cur = std::move(out);
  }
  return SetSystem(ms[0].ground(), std::move(cur));
}

bool SetSystem::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

bool SetSystem::is_maximal(Mask m) const {
  if (!contains(m)) return false;
  bool maximal = true;
  for_bits(ground.full() & ~m, [&](int e) {
    if (maximal && contains(m | bit(e))) maximal = false;
  });
  // Single-element extensions are not enough for arbitrary families; scan for
  // any proper superset as well.
  if (maximal) {
    for (Mask x : members)
      if (x != m && (m & ~x) == 0) return false;
  }
  return maximal;
}

std::vector<Mask> SetSystem::maximal_members() const {
  std::vector<Mask> out;
  for (Mask m : members)
    if (is_maximal(m)) out.push_back(m);
  return out;
}

std::vector<Mask> SetSystem::family_circuits() const {
  std::vector<Mask> out;
  const Mask full = ground.full();
  if (ground.size() > kEnumerationCap)
    throw std::invalid_argument("family_circuits: ground too large");
  for (Mask m = 0;; ++m) {
    if (!contains(m)) {
      bool minimal = true;
      for_bits(m, [&](int e) {
        if (minimal && !contains(m & ~bit(e))) minimal = false;
      });
      if (minimal) out.push_back(m);
    }
    if (m == full) break;
  }
  return out;
}

namespace {

json names_of(const GroundSet& g, Mask m) {
  auto v = g.names(m);
  std::sort(v.begin(), v.end());
  return json(v);
}

}  // namespace

bool AxiomReport::ok() const {
  for (const AxiomResult* r : {&i1, &i2, &i3, &i3prime, &im, &c})
    if (r->verdict == Verdict::fail) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  if (i1.verdict == Verdict::fail) return "I1";
  if (i2.verdict == Verdict::fail) return "I2";
  if (i3.verdict == Verdict::fail) return "I3";
  if (i3prime.verdict == Verdict::fail) return "I3prime";
  if (im.verdict == Verdict::fail) return "IM";
  if (c.verdict == Verdict::fail) return "C";
  return "";
}

json AxiomReport::to_json() const {
  json out = {{"I1", to_string(i1.verdict)},   {"I2", to_string(i2.verdict)},
              {"I3", to_string(i3.verdict)},   {"I3prime", to_string(i3prime.verdict)},
              {"IM", to_string(im.verdict)},   {"C", to_string(c.verdict)}};
  json w;  // first failing witness in canonical order
  for (const AxiomResult* r : {&i1, &i2, &i3, &i3prime, &im, &c})
    if (r->verdict == Verdict::fail && w.is_null()) w = r->witness;
  out["witness"] = w;
  return out;
}

AxiomResult check_I1(const SetSystem& s) {
  if (s.contains(0)) return {};
  return {Verdict::fail, {{"axiom", "I1"}, {"missing", json::array()}}};
}

AxiomResult check_I2(const SetSystem& s) {
  for (Mask m : s.members) {
    AxiomResult bad;
    bool found = false;
    for_bits(m, [&](int e) {
      if (!found && !s.contains(m & ~bit(e))) {
        bad = {Verdict::fail,
               {{"axiom", "I2"},
                {"member", names_of(s.ground, m)},
                {"missing_subset", names_of(s.ground, m & ~bit(e))}}};
        found = true;
      }
    });
    if (found) return bad;
  }
  return {};
}

AxiomResult check_I3(const SetSystem& s, const AxiomCheckOptions&) {
  auto maximal = s.maximal_members();
  std::vector<Mask> nonmax;
  for (Mask m : s.members)
    if (!std::binary_search(maximal.begin(), maximal.end(), m)) nonmax.push_back(m);
  for (Mask big : maximal) {
    for (Mask small : nonmax) {
      bool ok = false;
      for_bits(big & ~small, [&](int x) {
        if (!ok && s.contains(small | bit(x))) ok = true;
      });
      if (!ok)
        return {Verdict::fail,
                {{"axiom", "I3"},
                 {"maximal", names_of(s.ground, big)},
                 {"nonmaximal", names_of(s.ground, small)}}};
    }
  }
  return {};
}

AxiomResult check_I3prime(const SetSystem& s, const AxiomCheckOptions&) {
  auto maximal = s.maximal_members();
  for (Mask b : maximal) {
    for (Mask i : s.members) {
      AxiomResult bad;
      bool found = false;
      for_bits(i & ~b, [&](int x) {
        if (found) return;
        bool ok = false;
        for_bits(b & ~i, [&](int y) {
          if (!ok && s.contains((i | bit(y)) & ~bit(x))) ok = true;
        });
        if (!ok) {
          bad = {Verdict::fail,
                 {{"axiom", "I3prime"},
                  {"maximal", names_of(s.ground, b)},
                  {"member", names_of(s.ground, i)},
                  {"x", s.ground.id(x)}}};
          found = true;
        }
      });
      if (found) return bad;
    }
  }
  return {};
}

namespace {

// Finds an inclusion-maximal member of { m in family : lo ⊆ m ⊆ hi }.
// Greedy single-element growth suffices when the family is subset-closed;
// otherwise falls back to a full scan.
std::optional<Mask> maximal_in_interval(const SetSystem& s, Mask lo, Mask hi, bool subset_closed) {
  if (!s.contains(lo)) return std::nullopt;
  if (subset_closed) {
    Mask cur = lo;
    bool grew = true;
    while (grew) {
      grew = false;
      for_bits(hi & ~cur, [&](int e) {
        if (!grew && s.contains(cur | bit(e))) {
          cur |= bit(e);
          grew = true;
        }
      });
    }
    return cur;
  }
  std::optional<Mask> best;
  for (Mask m : s.members) {
    if ((lo & ~m) != 0 || (m & ~hi) != 0) continue;
    if (!best) best = m;
    bool dominated = false;
    for (Mask other : s.members)
      if (other != m && (lo & ~other) == 0 && (other & ~hi) == 0 && (m & ~other) == 0)
        dominated = true;
    if (!dominated) return m;
  }
  return best;
}

}  // namespace

AxiomResult check_IM(const SetSystem& s, const AxiomCheckOptions& opt) {
  const bool subset_closed = check_I2(s).verdict == Verdict::pass;
  const int n = s.ground.size();
  const bool exhaustive = n <= opt.exhaustive_cap;
  std::mt19937 rng(opt.seed);

  auto verify_pair = [&](Mask i, Mask x) -> bool {
    auto m = maximal_in_interval(s, i, x, subset_closed);
    return m.has_value();
  };

  if (exhaustive) {
    for (Mask i : s.members) {
      Mask rest = s.ground.full() & ~i;
      bool bad = false;
      Mask bad_x = 0;
      for_submasks(rest, [&](Mask extra) {
        if (!bad && !verify_pair(i, i | extra)) {
          bad = true;
          bad_x = i | extra;
        }
      });
      if (bad)
        return {Verdict::fail,
                {{"axiom", "IM"},
                 {"member", names_of(s.ground, i)},
                 {"X", names_of(s.ground, bad_x)}}};
    }
    return {};
  }

  if (s.members.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, s.members.size() - 1);
  for (std::uint64_t t = 0; t < opt.sample_budget; ++t) {
    Mask i = s.members[pick(rng)];
    Mask extra = 0;
    for_bits(s.ground.full() & ~i, [&](int e) {
      if (rng() & 1u) extra |= bit(e);
    });
    if (!verify_pair(i, i | extra))
      return {Verdict::fail,
              {{"axiom", "IM"}, {"member", names_of(s.ground, i)}, {"X", names_of(s.ground, i | extra)}}};
  }
  return {Verdict::sampled_pass, nullptr};
}

namespace {

struct CircuitSweep {
  const GroundSet& ground;
  const std::vector<Mask>& circuits;

  bool has_circuit_inside(Mask area, int z) const {
    for (Mask c : circuits)
      if (has(c, z) && (c & ~area) == 0) return true;
    return false;
  }
};

}  // namespace

static AxiomResult circuit_elimination_over(const GroundSet& ground,
                                            const std::vector<Mask>& circuits,
                                            const AxiomCheckOptions& opt) {
  CircuitSweep sweep{ground, circuits};
  std::mt19937 rng(opt.seed);
  bool sampled = false;

  for (Mask c : circuits) {
    std::vector<Mask> xs;
    for_submasks(c, [&](Mask x) {
      if (x != 0 && card(x) <= opt.circuit_exchange_max_x) xs.push_back(x);
    });
    for (Mask x : xs) {
      // Candidate C_e families: for each e in X, circuits containing e and
      // avoiding the rest of X.
      std::vector<int> xelems = positions(x);
      std::vector<std::vector<Mask>> cands(xelems.size());
      bool feasible = true;
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < xelems.size(); ++i) {
        for (Mask cc : circuits)
          if (has(cc, xelems[i]) && (cc & x & ~bit(xelems[i])) == 0) cands[i].push_back(cc);
        if (cands[i].empty()) {
          feasible = false;
          break;
        }
        combos *= cands[i].size();
      }
      if (!feasible) continue;

      auto test_family = [&](const std::vector<Mask>& family) -> std::optional<json> {
        Mask cup = 0;
        for (Mask f : family) cup |= f;
        Mask area = (c | cup) & ~x;
        Mask zs = c & ~cup;
        std::optional<json> witness;
        for_bits(zs, [&](int z) {
          if (!witness && !sweep.has_circuit_inside(area, z)) {
            json fam = json::array();
            for (Mask f : family) fam.push_back(names_of(ground, f));
            witness = json{{"axiom", "C"},
                           {"circuit", names_of(ground, c)},
                           {"X", names_of(ground, x)},
                           {"family", fam},
                           {"z", ground.id(z)}};
          }
        });
        return witness;
      };

      if (combos <= opt.circuit_family_budget) {
        std::vector<std::size_t> idx(xelems.size(), 0);
        for (;;) {
          std::vector<Mask> family(xelems.size());
          for (std::size_t i = 0; i < xelems.size(); ++i) family[i] = cands[i][idx[i]];
          if (auto w = test_family(family)) return {Verdict::fail, *w};
          std::size_t p = 0;
          while (p < idx.size() && ++idx[p] == cands[p].size()) idx[p++] = 0;
          if (p == idx.size()) break;
        }
      } else {
        sampled = true;
        for (std::uint64_t t = 0; t < opt.circuit_family_budget; ++t) {
          std::vector<Mask> family(xelems.size());
          for (std::size_t i = 0; i < xelems.size(); ++i)
            family[i] = cands[i][rng() % cands[i].size()];
          if (auto w = test_family(family)) return {Verdict::fail, *w};
        }
      }
    }
  }
  return {sampled ? Verdict::sampled_pass : Verdict::pass, nullptr};
}

AxiomResult check_circuit_elimination(const SetSystem& s, const AxiomCheckOptions& opt) {
  return circuit_elimination_over(s.ground, s.family_circuits(), opt);
}

AxiomResult check_circuit_elimination(const Matroid& m, const AxiomCheckOptions& opt) {
  return circuit_elimination_over(m.ground(), m.circuits(), opt);
}

AxiomReport is_matroid(const SetSystem& s, const AxiomCheckOptions& opt) {
  AxiomReport r;
  r.i1 = check_I1(s);
  r.i2 = check_I2(s);
  r.i3 = check_I3(s, opt);
  r.i3prime = check_I3prime(s, opt);
  r.im = check_IM(s, opt);
  r.c = check_circuit_elimination(s, opt);
  return r;
}

AxiomReport is_matroid(const Matroid& m, const AxiomCheckOptions& opt) {
  return is_matroid(SetSystem::from_matroid(m), opt);
}

bool witness_violates(const SetSystem& s, const json& w) {
  if (!w.is_object() || !w.contains("axiom")) return false;
  const std::string axiom = w["axiom"].get<std::string>();
  auto mask_of = [&](const json& names) {
    std::vector<std::string> v = names.get<std::vector<std::string>>();
    return s.ground.mask_of(v);
  };
  if (axiom == "I1") return !s.contains(0);
  if (axiom == "I2") {
    Mask member = mask_of(w["member"]);
    Mask missing = mask_of(w["missing_subset"]);
    return s.contains(member) && (missing & ~member) == 0 && !s.contains(missing);
  }
  if (axiom == "I3") {
    Mask big = mask_of(w["maximal"]);
    Mask small = mask_of(w["nonmaximal"]);
    if (!s.is_maximal(big) || !s.contains(small) || s.is_maximal(small)) return false;
    bool ok = false;
    for_bits(big & ~small, [&](int x) {
      if (s.contains(small | bit(x))) ok = true;
    });
    return !ok;
  }
  if (axiom == "I3prime") {
    Mask b = mask_of(w["maximal"]);
    Mask i = mask_of(w["member"]);
    int x = s.ground.index_of(w["x"].get<std::string>());
    if (!s.is_maximal(b) || !s.contains(i) || !has(i & ~b, x)) return false;
    bool ok = false;
    for_bits(b & ~i, [&](int y) {
      if (s.contains((i | bit(y)) & ~bit(x))) ok = true;
    });
    return !ok;
  }
  if (axiom == "IM") {
    Mask i = mask_of(w["member"]);
    Mask x = mask_of(w["X"]);
    bool subset_closed = check_I2(s).verdict == Verdict::pass;
    return s.contains(i) && (i & ~x) == 0 && !maximal_in_interval(s, i, x, subset_closed).has_value();
  }
  if (axiom == "C") {
    auto circuits = s.family_circuits();
    auto is_circ = [&](Mask m) {
      return std::find(circuits.begin(), circuits.end(), m) != circuits.end();
    };
    Mask c = mask_of(w["circuit"]);
    Mask x = mask_of(w["X"]);
    if (!is_circ(c) || (x & ~c) != 0) return false;
    Mask cup = 0;
    std::vector<Mask> family;
    for (const auto& f : w["family"]) {
      Mask fm = mask_of(f);
      if (!is_circ(fm)) return false;
      family.push_back(fm);
      cup |= fm;
    }
    // legality: e ∈ C_f exactly on the diagonal
    std::vector<int> xe = positions(x);
    if (xe.size() != family.size()) return false;
    for (std::size_t a = 0; a < xe.size(); ++a)
      for (std::size_t b = 0; b < family.size(); ++b)
        if (has(family[b], xe[a]) != (a == b)) return false;
    int z = s.ground.index_of(w["z"].get<std::string>());
    if (!has(c & ~cup, z)) return false;
    Mask area = (c | cup) & ~x;
    for (Mask cc : circuits)
      if (has(cc, z) && (cc & ~area) == 0) return false;
    return true;
  }
  return false;
}

}  // namespace matroidlab
