#pragma once

// Exhaustive formula corpora over two variables, shared by the classical
// tests and the acceptance suite.

#include "npc/classical.hpp"

namespace npc::corpus {

inline std::vector<PCFormula> pc_atoms() {
  return {PCFormula::zero(), PCFormula::one(), PCFormula::var("X"), PCFormula::var("Y")};
}

/// strata[d] = all PC formulas of depth exactly d over {0, 1, X, Y}.
/// Sizes: 4, 36, 3204, ...
inline std::vector<std::vector<PCFormula>> pc_strata(int depth) {
  std::vector<std::vector<PCFormula>> strata;
  strata.push_back(pc_atoms());
  std::vector<PCFormula> shallow;  // depth <= d-2 while building level d
  for (int d = 1; d <= depth; ++d) {
    const std::vector<PCFormula>& prev = strata.back();
    std::vector<PCFormula> level;
    for (const PCFormula& f : prev) level.push_back(PCFormula::negation(f));
    // Binary nodes of depth d pair a depth-(d-1) formula with anything of
    // depth <= d-1; count each unordered role split once per ordered pair.
    for (const PCFormula& f : prev) {
      for (const PCFormula& g : shallow) {
        level.push_back(PCFormula::conj(f, g));
        level.push_back(PCFormula::conj(g, f));
        level.push_back(PCFormula::disj(f, g));
        level.push_back(PCFormula::disj(g, f));
      }
      for (const PCFormula& g : prev) {
        level.push_back(PCFormula::conj(f, g));
        level.push_back(PCFormula::disj(f, g));
      }
    }
    shallow.insert(shallow.end(), prev.begin(), prev.end());
    strata.push_back(std::move(level));
  }
  return strata;
}

inline std::vector<PCFormula> pc_depth_le(int depth) {
  std::vector<PCFormula> out;
  for (const auto& level : pc_strata(depth)) out.insert(out.end(), level.begin(), level.end());
  return out;
}

inline std::vector<Formula> two_pc_atoms() {
  std::vector<Formula> atoms;
  for (int k = 1; k <= 2; ++k) atoms.push_back(Formula::constant(k));
  for (const char* v : {"X", "Y"}) {
    atoms.push_back(Formula::var(v, 2));
    atoms.push_back(Formula::var(v, Perm({2, 1})));
  }
  return atoms;
}

/// All 222 two-dimensional formulas of depth <= 1 over {X, Y}.
inline std::vector<Formula> two_pc_depth_le_1() {
  std::vector<Formula> atoms = two_pc_atoms();
  std::vector<Formula> out = atoms;
  for (const Formula& t : atoms)
    for (const Formula& g : atoms)
      for (const Formula& h : atoms) out.push_back(Formula::q(t, {g, h}));
  return out;
}

}  // namespace npc::corpus
