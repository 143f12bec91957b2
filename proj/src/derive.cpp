#include "npc/derive.hpp"

namespace npc {

ProofTree axiom_const(int n, int i) {
  return ProofTree{Rule::Const, RuleParams{}, Sequent({}, n, i, {Formula::constant(i)}), {}};
}

ProofTree axiom_id(const std::string& name, Perm pi, Perm rho, int i) {
  const int n = pi.n();
  Sequent concl({Formula::var(name, pi)}, n, i, {Formula::var(name, rho)});
  RuleParams params;
  params.pi = std::move(pi);
  params.rho = std::move(rho);
  return ProofTree{Rule::Id, std::move(params), std::move(concl), {}};
}

ProofTree weak_plus(ProofTree base, const Context& add_left, const Context& add_right) {
  for (const Formula& f : add_left) {
    Sequent concl(base.conclusion.left.with(f), base.conclusion.n, base.conclusion.turnstile,
                  base.conclusion.right);
    RuleParams params;
    params.principal = f;
    base = ProofTree{Rule::WeakL, std::move(params), std::move(concl), {std::move(base)}};
  }
  for (const Formula& f : add_right) {
    Sequent concl(base.conclusion.left, base.conclusion.n, base.conclusion.turnstile,
                  base.conclusion.right.with(f));
    RuleParams params;
    params.principal = f;
    base = ProofTree{Rule::WeakR, std::move(params), std::move(concl), {std::move(base)}};
  }
  return base;
}

namespace {

/// Gamma^(kj), G |-k, closed through Neg1 from G |-j G (j != k).
ProofTree clash_with_self(const Formula& g, int j, int k, int n) {
  RuleParams params;
  params.i = j;
  params.k = k;
  params.principal = g;
  Sequent concl({act_exchange(g, k, j, n), g}, n, k, {});
  return ProofTree{Rule::Neg1, std::move(params), std::move(concl),
                   {derive_identity(g, j, n)}};
}

}  // namespace

ProofTree derive_const_left(int k, int i, int n) {
  if (k == i) throw std::invalid_argument("derive_const_left: requires k != i");
  if (k < 1 || k > n || i < 1 || i > n)
    throw std::invalid_argument("derive_const_left: index out of range");
  RuleParams params;
  params.i = k;  // premise |-k e_k
  params.k = i;  // exchange (i,i) keeps the principal in place
  params.principal = Formula::constant(k);
  Sequent concl({Formula::constant(k)}, n, i, {});
  return ProofTree{Rule::Neg1, std::move(params), std::move(concl), {axiom_const(n, k)}};
}

ProofTree derive_identity(const Formula& f, int i, int n) {
  if (!f.dim_ok(n)) throw std::invalid_argument("derive_identity: formula not at dimension n");
  switch (f.kind()) {
    case Formula::Kind::Var:
      return axiom_id(f.var_name(), f.var_decoration(), f.var_decoration(), i);
    case Formula::Kind::Const: {
      int k = f.const_index();
      if (k == i) return weak_plus(axiom_const(n, i), Context{f}, {});
      return weak_plus(derive_const_left(k, i, n), {}, Context{f});
    }
    case Formula::Kind::Q: {
      const Formula& g = f.test();
      std::vector<ProofTree> outer_premises;
      for (int j = 1; j <= n; ++j) {
        const Formula hj = act_exchange(f.branches()[static_cast<size_t>(j - 1)], j, i, n);
        const Formula fj = act_exchange(f, j, i, n);
        // Premise j of qL: G, H_j^(ji) |-j q(G, H^(ji)); closed by qR.
        std::vector<ProofTree> inner_premises;
        for (int k = 1; k <= n; ++k) {
          if (k == j) {
            inner_premises.push_back(
                weak_plus(derive_identity(hj, j, n), Context{g, g}, {}));
          } else {
            inner_premises.push_back(weak_plus(clash_with_self(g, j, k, n),
                                               Context{act_exchange(hj, k, j, n)},
                                               Context{act_exchange(fj.branches()[static_cast<size_t>(k - 1)], k, j, n)}));
          }
        }
        RuleParams qr_params;
        qr_params.principal = fj;
        Sequent qr_concl({g, hj}, n, j, {fj});
        outer_premises.push_back(
            ProofTree{Rule::QR, std::move(qr_params), std::move(qr_concl), std::move(inner_premises)});
      }
      RuleParams ql_params;
      ql_params.principal = f;
      Sequent concl({f}, n, i, {f});
      return ProofTree{Rule::QL, std::move(ql_params), std::move(concl), std::move(outer_premises)};
    }
  }
  throw std::logic_error("derive_identity: unreachable");
}

ProofTree derive_pair_clash(const Formula& f, int i, int j, int k, int n) {
  if (i == k) throw std::invalid_argument("derive_pair_clash: requires i != k");
  if (!f.dim_ok(n)) throw std::invalid_argument("derive_pair_clash: formula not at dimension n");
  const Formula fij = act_exchange(f, i, j, n);
  const Formula fkj = act_exchange(f, k, j, n);
  RuleParams params;
  params.i = i;
  params.k = k;
  params.principal = fkj;
  Sequent concl({fij, fkj}, n, j, {});
  return ProofTree{Rule::Neg1, std::move(params), std::move(concl),
                   {derive_identity(f, i, n)}};
}

ProofTree derive_perm_axiom(const Formula& f, const Perm& pi, const Perm& rho, int i) {
  const int n = pi.n();
  if (rho.n() != n) throw dimension_mismatch("derive_perm_axiom: permutation dimensions differ");
  if (pi.inverse_at(i) != rho.inverse_at(i))
    throw std::invalid_argument("derive_perm_axiom: requires pi^-1(i) = rho^-1(i)");
  if (!f.dim_ok(n)) throw std::invalid_argument("derive_perm_axiom: formula not at dimension n");

  switch (f.kind()) {
    case Formula::Kind::Var:
      return axiom_id(f.var_name(), compose(pi, f.var_decoration()),
                      compose(rho, f.var_decoration()), i);
    case Formula::Kind::Const: {
      int k = f.const_index();
      if (pi(k) == i)  // then also rho(k) == i, both sides are e_i
        return weak_plus(axiom_const(n, i), Context{Formula::constant(i)}, {});
      return weak_plus(derive_const_left(pi(k), i, n), {},
                       Context{Formula::constant(rho(k))});
    }
    case Formula::Kind::Q: {
      const Formula& g = f.test();
      const Formula f_pi = act(f, pi);
      const Formula f_rho = act(f, rho);
      std::vector<ProofTree> outer_premises;
      for (int j = 1; j <= n; ++j) {
        const Perm ex_ji = Perm::exchange(j, i, n);
        const Perm sig_pi = compose(ex_ji, pi);
        const Perm sig_rho = compose(ex_ji, rho);
        const Formula f_sig_pi = act(f, sig_pi);  // q(G, H^(ji)opi)
        const Formula hj_rho = act(f.branches()[static_cast<size_t>(j - 1)], sig_rho);
        // Premise j of the outer qR: q(G, H^sig_pi), G |-j H_j^sig_rho.
        std::vector<ProofTree> inner_premises;
        for (int k = 1; k <= n; ++k) {
          if (k == j) {
            inner_premises.push_back(weak_plus(
                derive_perm_axiom(f.branches()[static_cast<size_t>(j - 1)], sig_pi, sig_rho, j),
                Context{g, g}, {}));
          } else {
            const Perm ex_kj = Perm::exchange(k, j, n);
            inner_premises.push_back(weak_plus(
                clash_with_self(g, j, k, n),
                Context{act(f.branches()[static_cast<size_t>(k - 1)], compose(ex_kj, sig_pi))},
                Context{act(f.branches()[static_cast<size_t>(j - 1)], compose(ex_kj, sig_rho))}));
          }
        }
        RuleParams ql_params;
        ql_params.principal = f_sig_pi;
        Sequent ql_concl({f_sig_pi, g}, n, j, {hj_rho});
        outer_premises.push_back(
            ProofTree{Rule::QL, std::move(ql_params), std::move(ql_concl), std::move(inner_premises)});
      }
      RuleParams qr_params;
      qr_params.principal = f_rho;
      Sequent concl({f_pi}, n, i, {f_rho});
      return ProofTree{Rule::QR, std::move(qr_params), std::move(concl), std::move(outer_premises)};
    }
  }
  throw std::logic_error("derive_perm_axiom: unreachable");
}

ProofTree derive_perm_eq(const Formula& h, const Perm& pi, int i, PermEqDir dir) {
  const int n = pi.n();
  if (!h.dim_ok(n)) throw std::invalid_argument("derive_perm_eq: formula not at dimension n");
  std::vector<Formula> consts;
  consts.reserve(static_cast<size_t>(n));
  for (int t = 1; t <= n; ++t) consts.push_back(Formula::constant(pi(t)));
  const Formula q_form = Formula::q(h, std::move(consts));
  const Formula h_pi = act(h, pi);

  if (dir == PermEqDir::QToPerm) {
    // q(H, e_pi(1..n)) |-i H^pi by qL.
    std::vector<ProofTree> premises;
    for (int j = 1; j <= n; ++j) {
      const Perm ex_ji = Perm::exchange(j, i, n);
      const Formula h_sig = act(h, compose(ex_ji, pi));
      if (pi(j) == i) {
        // e_pi(j)^(ji) = e_j: H, e_j |-j H^((ji)opi) via the permutation axiom.
        premises.push_back(weak_plus(derive_perm_axiom(h, Perm::identity(n), compose(ex_ji, pi), j),
                                     Context{Formula::constant(j)}, {}));
      } else {
        int m = ex_ji(pi(j));
        premises.push_back(
            weak_plus(derive_const_left(m, j, n), Context{h}, Context{h_sig}));
      }
    }
    RuleParams params;
    params.principal = q_form;
    Sequent concl({q_form}, n, i, {h_pi});
    return ProofTree{Rule::QL, std::move(params), std::move(concl), std::move(premises)};
  }

  // H^pi |-i q(H, e_pi(1..n)) by qR.
  std::vector<ProofTree> premises;
  for (int j = 1; j <= n; ++j) {
    const Perm ex_ji = Perm::exchange(j, i, n);
    const Perm sigma = compose(ex_ji, pi);
    const Formula h_sig = act(h, sigma);
    if (pi(j) == i) {
      premises.push_back(weak_plus(axiom_const(n, j), Context{h_sig, h}, {}));
    } else {
      const int r = sigma(j);
      RuleParams neg_params;
      neg_params.i = r;
      neg_params.k = j;
      neg_params.principal = h_sig;
      Sequent neg_concl({h_sig, h}, n, j, {});
      ProofTree neg{Rule::Neg1, std::move(neg_params), std::move(neg_concl),
                    {derive_perm_axiom(h, Perm::exchange(r, j, n), sigma, r)}};
      premises.push_back(weak_plus(std::move(neg), {}, Context{Formula::constant(ex_ji(pi(j)))}));
    }
  }
  RuleParams params;
  params.principal = q_form;
  Sequent concl({h_pi}, n, i, {q_form});
  return ProofTree{Rule::QR, std::move(params), std::move(concl), std::move(premises)};
}

}  // namespace npc
