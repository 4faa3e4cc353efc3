#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "glc/glc.hpp"

namespace glc {

// A checkable configuration (R, M, N, a); provenance names a builtin
// instance or records the generator family, seed and index.
struct Instance {
  RingPtr R;
  ModPtr M, N;
  Ideal a;
  std::string provenance;
};

enum class CheckStatus { Verified, HypothesisNotMet, Failed, Inconclusive };
std::string status_str(CheckStatus s);

struct TheoremReport {
  std::string theorem_id;
  std::string instance;
  CheckStatus status = CheckStatus::HypothesisNotMet;
  std::vector<std::pair<std::string, std::string>> witnesses;
  bool proxy = false;  // isomorphisms certified by the Hilbert/annihilator proxy
  double runtime_ms = 0;
};

// P1.2 C1.5 C1.6 C2.3 C2.4 R2.5 C2.6 C3.1 C3.2 T3.5 C3.6 T3.7 C3.8 P3.9
// C3.10 D4.3 P4.5b P4.5c P4.6 P4.7m T5.1 C5.2 C5.4/C5.5 EX5
const std::vector<std::string>& theorem_ids();

// evaluates the hypotheses of the named claim on inst; if they hold, checks
// the conclusion.  FAILED carries the divergent values; inconclusive comes
// only from non-stabilized colimits.  Throws on an unknown id.
TheoremReport check(const std::string& theorem_id, const Instance& inst);

struct GenParams {
  int nvars = 2;       // clamped to [1, 4]
  int max_degree = 3;  // clamped to [1, 4]
  int count = 5;
};

// EX5, the Ext(k,k) pair over k[x]/(x^2) and k[x], and the non-CM ring
// k[x,y,z]/(xz,yz)
std::vector<Instance> builtin_instances();

// family in {monomial, binomial-hypersurface, ci, random-matrix};
// deterministic per (family, seed); the builtins are always prepended
std::vector<Instance> gen_instances(const std::string& family, const GenParams& params,
                                    std::uint64_t seed);

struct SuiteResult {
  std::vector<TheoremReport> reports;
  bool any_failed = false;
};

// runs every id on every instance; instances fan out across threads,
// reports come back in (instance, id) order
SuiteResult run_suite(const std::vector<std::string>& ids,
                      const std::vector<Instance>& instances);

}  // namespace glc
