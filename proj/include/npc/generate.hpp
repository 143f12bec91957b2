#pragma once

#include <cstdint>
#include <random>

#include "npc/prover.hpp"

namespace npc {

/// Deterministic RNG for seeded checks; raw modulo keeps the stream
/// platform-independent (mt19937_64 output is standard-specified,
/// distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t raw() { return g_(); }
  int below(int k) { return static_cast<int>(g_() % static_cast<std::uint64_t>(k)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 0; }

 private:
  std::mt19937_64 g_;
};

Perm random_perm(Rng& rng, int n);
Formula random_formula(Rng& rng, int n, const std::vector<std::string>& vars, int max_depth);

/// Random sequent with per-formula and per-sequent q-node caps, so the
/// saturation fan-out stays at desk scale.
Sequent random_sequent(Rng& rng, int n, const std::vector<std::string>& vars, int max_depth,
                       int max_side, int max_q_per_formula = 2, int max_q_total = 4);

/// The deterministic formula pool behind the exhaustive family: all atoms
/// (constants; each variable with the identity and the adjacent exchanges),
/// then capped strata of depth-1 and depth-2 compounds, fixed by (n, vars,
/// caps) alone.
std::vector<Formula> build_pool(int n, const std::vector<std::string>& vars, int depth_cap,
                                int depth1_cap = 32, int depth2_cap = 12);

struct FamilyConfig {
  int n = 2;
  std::vector<std::string> vars = {"X", "Y"};
  int depth_cap = 2;
  int max_total = 3;  // |left| + |right|
  int depth1_cap = 32;
  int depth2_cap = 12;
  long budget = kDefaultBudget;
};

/// Prover-vs-oracle agreement tallies. The run is clean when the prover
/// verdict matched the oracle on every instance, every proof re-checked,
/// every witness falsified its sequent, no proof used Cut, and nothing ran
/// out of budget.
struct AgreementStats {
  long long total = 0;
  long long proved_valid = 0;
  long long refuted_invalid = 0;
  long long disagreements = 0;
  long long kernel_failures = 0;
  long long witness_failures = 0;
  long long cut_violations = 0;
  long long out_of_budget = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool clean() const {
    return disagreements == 0 && kernel_failures == 0 && witness_failures == 0 &&
           cut_violations == 0 && out_of_budget == 0;
  }
  void note_failure(const std::string& what) {
    if (failures.size() < 10) failures.push_back(what);
  }
};

/// Runs the prover and the oracle on one sequent and tallies the outcome,
/// re-checking proofs and witnesses independently.
void agree_on(const Sequent& s, long budget, AgreementStats& stats);

/// Every sequent whose sides are multisets over the deterministic pool with
/// |left| + |right| <= max_total, at every turnstile.
AgreementStats exhaustive_family_run(const FamilyConfig& config);

/// Seeded random sequents at dimension n.
AgreementStats random_family_run(int n, long long count, std::uint64_t seed,
                                 long budget = kDefaultBudget);

/// Number of sequents exhaustive_family_run would visit.
long long exhaustive_family_size(const FamilyConfig& config);

}  // namespace npc
