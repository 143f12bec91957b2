#include "npc/generate.hpp"

#include "npc/parse.hpp"

namespace npc {

Perm random_perm(Rng& rng, int n) {
  std::vector<int> image(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) image[static_cast<size_t>(t)] = t + 1;
  for (int t = n - 1; t > 0; --t)
    std::swap(image[static_cast<size_t>(t)], image[static_cast<size_t>(rng.below(t + 1))]);
  return Perm(std::move(image));
}

Formula random_formula(Rng& rng, int n, const std::vector<std::string>& vars, int max_depth) {
  const bool atom = max_depth <= 0 || rng.below(3) != 0;  // 2/3 atoms keeps trees sparse
  if (atom) {
    switch (rng.below(3)) {
      case 0: return Formula::constant(rng.range(1, n));
      case 1: return Formula::var(vars[static_cast<size_t>(rng.below(static_cast<int>(vars.size())))], n);
      default:
        return Formula::var(vars[static_cast<size_t>(rng.below(static_cast<int>(vars.size())))],
                            random_perm(rng, n));
    }
  }
  Formula test = random_formula(rng, n, vars, max_depth - 1);
  std::vector<Formula> branches;
  branches.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) branches.push_back(random_formula(rng, n, vars, max_depth - 1));
  return Formula::q(std::move(test), std::move(branches));
}

Sequent random_sequent(Rng& rng, int n, const std::vector<std::string>& vars, int max_depth,
                       int max_side, int max_q_per_formula, int max_q_total) {
  const int turnstile = rng.range(1, n);
  int q_budget = max_q_total;
  auto draw = [&] {
    for (;;) {
      Formula f = random_formula(rng, n, vars, max_depth);
      if (f.q_count() <= std::min(max_q_per_formula, q_budget)) {
        q_budget -= f.q_count();
        return f;
      }
    }
  };
  Context left, right;
  const int l = rng.below(max_side + 1);
  const int r = rng.below(max_side + 1 - l);
  for (int t = 0; t < l; ++t) left.insert(draw());
  for (int t = 0; t < r; ++t) right.insert(draw());
  return Sequent(std::move(left), n, turnstile, std::move(right));
}

std::vector<Formula> build_pool(int n, const std::vector<std::string>& vars, int depth_cap,
                                int depth1_cap, int depth2_cap) {
  std::vector<Formula> atoms;
  for (int k = 1; k <= n; ++k) atoms.push_back(Formula::constant(k));
  std::vector<Formula> var_atoms;
  for (const std::string& v : vars) {
    var_atoms.push_back(Formula::var(v, n));
    for (int k = 1; k < n; ++k) var_atoms.push_back(Formula::var(v, Perm::exchange(k, k + 1, n)));
  }
  std::vector<Formula> pool = atoms;
  pool.insert(pool.end(), var_atoms.begin(), var_atoms.end());
  const std::vector<Formula> all_atoms = pool;
  if (depth_cap < 1) return pool;

  // Depth-1 stratum: identity-decorated variables as tests, branches over
  // the first four atoms, mixed-radix order, capped.
  std::vector<Formula> branch_set(all_atoms.begin(),
                                  all_atoms.begin() + std::min<size_t>(4, all_atoms.size()));
  std::vector<Formula> depth1;
  for (const std::string& v : vars) {
    if (static_cast<int>(depth1.size()) >= depth1_cap) break;
    const Formula test = Formula::var(v, n);
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    bool done = false;
    while (!done && static_cast<int>(depth1.size()) < depth1_cap) {
      std::vector<Formula> branches;
      for (size_t t = 0; t < idx.size(); ++t) branches.push_back(branch_set[idx[t]]);
      depth1.push_back(Formula::q(test, std::move(branches)));
      done = true;
      for (size_t t = idx.size(); t-- > 0;) {
        if (++idx[t] < branch_set.size()) {
          done = false;
          break;
        }
        idx[t] = 0;
      }
    }
  }
  pool.insert(pool.end(), depth1.begin(), depth1.end());
  if (depth_cap < 2 || depth1.empty()) return pool;

  // Depth-2 stratum: one depth-1 formula per compound, in a rotating branch
  // slot, the rest constants.
  std::vector<Formula> depth2;
  for (int t = 0; static_cast<int>(depth2.size()) < depth2_cap && t < depth2_cap; ++t) {
    const Formula& inner = depth1[static_cast<size_t>(t) % depth1.size()];
    const Formula test = var_atoms[static_cast<size_t>(t) % var_atoms.size()];
    const int slot = t % n;
    std::vector<Formula> branches;
    for (int b = 0; b < n; ++b)
      branches.push_back(b == slot ? inner : Formula::constant((t + b) % n + 1));
    depth2.push_back(Formula::q(test, std::move(branches)));
  }
  pool.insert(pool.end(), depth2.begin(), depth2.end());
  return pool;
}

void agree_on(const Sequent& s, long budget, AgreementStats& stats) {
  ++stats.total;
  const Verdict oracle = holds(s);
  ProveResult result;
  try {
    result = prove(s, budget);
  } catch (const internal_synthesis_failure& e) {
    ++stats.kernel_failures;
    stats.note_failure(std::string(e.what()) + " on '" + render(s) + "'");
    return;
  }

  switch (result.status) {
    case ProveResult::Status::OutOfBudget:
      ++stats.out_of_budget;
      stats.note_failure("out of budget on '" + render(s) + "'");
      return;
    case ProveResult::Status::Proved: {
      if (!oracle.valid) {
        ++stats.disagreements;
        stats.note_failure("prover proved, oracle refutes: '" + render(s) + "'");
        return;
      }
      if (result.tree->uses_rule(Rule::Cut)) {
        ++stats.cut_violations;
        stats.note_failure("proof of '" + render(s) + "' contains Cut");
        return;
      }
      CheckResult chk = check(*result.tree);
      if (!chk.ok || !(result.tree->conclusion == s)) {
        ++stats.kernel_failures;
        stats.note_failure("kernel rejected proof of '" + render(s) + "': " + chk.reason);
        return;
      }
      ++stats.proved_valid;
      return;
    }
    case ProveResult::Status::Refuted: {
      if (oracle.valid) {
        ++stats.disagreements;
        stats.note_failure("prover refuted, oracle validates: '" + render(s) + "'");
        return;
      }
      const Environment& w = *result.witness;
      bool falsifies = true;
      for (const Formula& f : s.left)
        if (eval(f, w) != s.turnstile) falsifies = false;
      for (const Formula& f : s.right)
        if (eval(f, w) == s.turnstile) falsifies = false;
      if (!falsifies) {
        ++stats.witness_failures;
        stats.note_failure("witness " + render_env(w) + " does not falsify '" + render(s) + "'");
        return;
      }
      ++stats.refuted_invalid;
      return;
    }
  }
}

namespace {

/// Calls fn with every nondecreasing index tuple of the given length over
/// [0, pool_size).
template <typename Fn>
void for_multisets(int pool_size, int length, std::vector<int>& tuple, Fn&& fn) {
  if (length == 0) {
    fn(tuple);
    return;
  }
  const int start = tuple.empty() ? 0 : tuple.back();
  for (int t = start; t < pool_size; ++t) {
    tuple.push_back(t);
    for_multisets(pool_size, length - 1, tuple, fn);
    tuple.pop_back();
  }
}

long long multiset_count(long long pool, int length) {
  // C(pool + length - 1, length)
  long long num = 1, den = 1;
  for (int t = 0; t < length; ++t) {
    num *= pool + t;
    den *= t + 1;
  }
  return num / den;
}

}  // namespace

long long exhaustive_family_size(const FamilyConfig& config) {
  const long long p = static_cast<long long>(
      build_pool(config.n, config.vars, config.depth_cap, config.depth1_cap, config.depth2_cap)
          .size());
  long long sequents = 0;
  for (int total = 0; total <= config.max_total; ++total)
    for (int l = 0; l <= total; ++l)
      sequents += multiset_count(p, l) * multiset_count(p, total - l);
  return sequents * config.n;
}

AgreementStats exhaustive_family_run(const FamilyConfig& config) {
  const std::vector<Formula> pool =
      build_pool(config.n, config.vars, config.depth_cap, config.depth1_cap, config.depth2_cap);
  AgreementStats stats;
  const int p = static_cast<int>(pool.size());
  std::vector<int> left_idx, right_idx;
  for (int total = 0; total <= config.max_total; ++total) {
    for (int l = 0; l <= total; ++l) {
      const int r = total - l;
      for_multisets(p, l, left_idx, [&](const std::vector<int>& li) {
        for_multisets(p, r, right_idx, [&](const std::vector<int>& ri) {
          std::vector<Formula> lf, rf;
          lf.reserve(li.size());
          rf.reserve(ri.size());
          for (int t : li) lf.push_back(pool[static_cast<size_t>(t)]);
          for (int t : ri) rf.push_back(pool[static_cast<size_t>(t)]);
          for (int i = 1; i <= config.n; ++i)
            agree_on(Sequent(Context(lf), config.n, i, Context(rf)), config.budget, stats);
        });
      });
    }
  }
  return stats;
}

AgreementStats random_family_run(int n, long long count, std::uint64_t seed, long budget) {
  Rng rng(seed);
  const std::vector<std::string> vars = {"X", "Y", "Z"};
  AgreementStats stats;
  for (long long t = 0; t < count; ++t)
    agree_on(random_sequent(rng, n, vars, 2, 3), budget, stats);
  return stats;
}

}  // namespace npc
