#ifndef MATROIDLAB_AXIOMS_HPP
#define MATROIDLAB_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// An explicit family of subsets over a ground set.
struct SetSystem {
  GroundSet ground;
  std::vector<Mask> members;  // sorted, deduplicated

  SetSystem() = default;
  SetSystem(GroundSet g, std::vector<Mask> m);

  static SetSystem from_matroid(const Matroid& m);
  /// The union system { I1 ∪ I2 : Ii independent in mi }. Grounds must match.
  static SetSystem union_family(const Matroid& m1, const Matroid& m2);
  static SetSystem k_fold_union_family(const std::vector<Matroid>& ms);

  bool contains(Mask m) const;
  bool is_maximal(Mask m) const;  // no proper superset in the family
  std::vector<Mask> maximal_members() const;
  /// Minimal subsets of the ground NOT in the family.
  std::vector<Mask> family_circuits() const;
};

enum class Verdict { pass, sampled_pass, fail };

std::string to_string(Verdict v);

struct AxiomCheckOptions {
  int exhaustive_cap = 12;          // ground size beyond which sweeps sample
  std::uint64_t sample_budget = 20000;  // per-axiom sampled tuples past the cap
  std::uint32_t seed = 12345;
  int circuit_exchange_max_x = 3;   // |X| cap in the circuit-elimination sweep
  std::uint64_t circuit_family_budget = 400;  // {C_x} combinations per (C, X)
  int threads = 0;                  // 0 = read MATROIDLAB_THREADS, else 1
};

struct AxiomResult {
  Verdict verdict = Verdict::pass;
  json witness;  // null unless fail; re-checkable from its fields
};

struct AxiomReport {
  AxiomResult i1, i2, i3, i3prime, im, c;
  bool ok() const;
  /// First failing axiom name, empty when all pass.
  std::string first_failure() const;
  json to_json() const;
};

AxiomResult check_I1(const SetSystem& s);
AxiomResult check_I2(const SetSystem& s);
AxiomResult check_I3(const SetSystem& s, const AxiomCheckOptions& opt = {});
AxiomResult check_I3prime(const SetSystem& s, const AxiomCheckOptions& opt = {});
AxiomResult check_IM(const SetSystem& s, const AxiomCheckOptions& opt = {});
/// Finite instantiation of the circuit-elimination axiom over the family's
/// circuits (minimal non-members).
AxiomResult check_circuit_elimination(const SetSystem& s, const AxiomCheckOptions& opt = {});
AxiomResult check_circuit_elimination(const Matroid& m, const AxiomCheckOptions& opt = {});

AxiomReport is_matroid(const SetSystem& s, const AxiomCheckOptions& opt = {});
AxiomReport is_matroid(const Matroid& m, const AxiomCheckOptions& opt = {});

/// Re-evaluates a witness produced by any checker against the family it was
/// produced from; true when the witness indeed violates the named axiom.
bool witness_violates(const SetSystem& s, const json& witness);

}  // namespace matroidlab

#endif
