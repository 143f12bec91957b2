#pragma once

#include "npc/kernel.hpp"

namespace npc {

// Small node builders shared by the derived schemes and the prover. They
// assemble literal rule instances; check() remains the arbiter.

/// |-i e_i
ProofTree axiom_const(int n, int i);
/// X^pi |-i X^rho, requires pi^-1(i) = rho^-1(i).
ProofTree axiom_id(const std::string& name, Perm pi, Perm rho, int i);
/// Extends the base tree's conclusion with iterated WeakL/WeakR nodes, left
/// additions first, each side in canonical order.
ProofTree weak_plus(ProofTree base, const Context& add_left, const Context& add_right);

// Derived schemes. Each returns a tree with the stated conclusion that
// passes check; preconditions are reported as std::invalid_argument.

/// F |-i F, by induction on F.
ProofTree derive_identity(const Formula& f, int i, int n);

/// e_k |-i, for k != i.
ProofTree derive_const_left(int k, int i, int n);

/// F^(ij), F^(kj) |-j, for i != k.
ProofTree derive_pair_clash(const Formula& f, int i, int j, int k, int n);

/// F^pi |-i F^rho, for pi^-1(i) = rho^-1(i).
ProofTree derive_perm_axiom(const Formula& f, const Perm& pi, const Perm& rho, int i);

/// The two halves of H^pi ~ q(H, e_{pi(1)}, ..., e_{pi(n)}).
enum class PermEqDir { QToPerm, PermToQ };
ProofTree derive_perm_eq(const Formula& h, const Perm& pi, int i, PermEqDir dir);

}  // namespace npc
