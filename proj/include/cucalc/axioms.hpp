#pragma once

#include <cstdint>

#include "cucalc/semigroup.hpp"
#include "cucalc/semimodule.hpp"

namespace cucalc {

// Outcome of one named law inside a verification run.
struct AxiomResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample, element literals only
};

// Deterministic verification report. The structured rendering is byte-stable
// for a fixed (suite, seed, samples) triple: no floating point, no pointers,
// no timing.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<std::pair<std::string, std::string>> keys;
  std::vector<AxiomResult> axioms;

  bool pass() const;
  std::string structured() const;
  std::string human() const;
};

// Parameters of the independent chain-supremum verifier: `upper_terms` chain
// terms are checked below the claimed supremum, and for each approximation
// level j < `least_levels` some probed term must dominate the j-th canonical
// approximant of the claimed supremum. Probe indices grow geometrically up to
// k_max, which is sound because chains are increasing.
struct OracleParams {
  int upper_terms = 8;
  int least_levels = 4;
  int k_max = 8192;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int samples = 100;
  OracleParams oracle;
  // Debug mutation: evaluate every way-below query as the plain order. The
  // non-compactness probe must then fail, demonstrating the suite's teeth.
  bool mutate_wb_to_leq = false;
};

// "" when the chain's claimed supremum verifies; otherwise a counterexample
// description.
std::string chain_sup_oracle(const SemigroupPtr& S, const Chain& chain, const Elem& claimed,
                             const OracleParams& p);

Report check_axioms(const SemigroupPtr& S, const CheckOptions& opts);
Report check_semimodule(const SemimodulePtr& M, const CheckOptions& opts);
Report check_morphism(const MorphismPtr& f, const CheckOptions& opts);

}  // namespace cucalc
