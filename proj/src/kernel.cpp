#include "npc/kernel.hpp"

#include "npc/parse.hpp"

namespace npc {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Const: return "Const";
    case Rule::Id: return "Id";
    case Rule::Sym: return "Sym";
    case Rule::Neg1: return "Neg1";
    case Rule::Neg2: return "Neg2";
    case Rule::Neg3: return "Neg3";
    case Rule::QL: return "qL";
    case Rule::QR: return "qR";
    case Rule::Cut: return "Cut";
    case Rule::WeakL: return "WeakL";
    case Rule::WeakR: return "WeakR";
    case Rule::ConL: return "ConL";
    case Rule::ConR: return "ConR";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  static const std::pair<const char*, Rule> table[] = {
      {"Const", Rule::Const}, {"Id", Rule::Id},       {"Sym", Rule::Sym},
      {"Neg1", Rule::Neg1},   {"Neg2", Rule::Neg2},   {"Neg3", Rule::Neg3},
      {"qL", Rule::QL},       {"qR", Rule::QR},       {"Cut", Rule::Cut},
      {"WeakL", Rule::WeakL}, {"WeakR", Rule::WeakR}, {"ConL", Rule::ConL},
      {"ConR", Rule::ConR},
  };
  for (const auto& [n, r] : table)
    if (name == n) return r;
  return std::nullopt;
}

int rule_arity(Rule r, int n) {
  switch (r) {
    case Rule::Const:
    case Rule::Id: return 0;
    case Rule::Sym:
    case Rule::Neg1:
    case Rule::Neg2:
    case Rule::WeakL:
    case Rule::WeakR:
    case Rule::ConL:
    case Rule::ConR: return 1;
    case Rule::Cut: return 2;
    case Rule::Neg3: return n - 1;
    case Rule::QL:
    case Rule::QR: return n;
  }
  return -1;
}

namespace {

[[noreturn]] void fail(Rule r, const std::string& why) {
  throw kernel_error(std::string(rule_name(r)) + ": " + why);
}

int need_dim(Rule r, const std::optional<int>& d, const char* what, int n) {
  if (!d) fail(r, std::string("missing parameter ") + what);
  if (*d < 1 || *d > n) fail(r, std::string("parameter ") + what + " out of range 1..n");
  return *d;
}

const Formula& need_principal(Rule r, const RuleParams& p, const Context& ctx, const char* side) {
  if (!p.principal) fail(r, "missing principal formula");
  if (!ctx.contains(*p.principal))
    fail(r, std::string("principal formula not present in the ") + side + " context: " +
                render(*p.principal));
  return *p.principal;
}

void forbid(Rule r, const RuleParams& p, bool allow_i, bool allow_j, bool allow_k,
            bool allow_perms, bool allow_principal, bool allow_cut) {
  if (p.i && !allow_i) fail(r, "unexpected parameter i");
  if (p.j && !allow_j) fail(r, "unexpected parameter j");
  if (p.k && !allow_k) fail(r, "unexpected parameter k");
  if ((p.pi || p.rho) && !allow_perms) fail(r, "unexpected decoration parameters");
  if (p.principal && !allow_principal) fail(r, "unexpected principal parameter");
  if (p.cut && !allow_cut) fail(r, "unexpected cut-formula parameter");
}

}  // namespace

std::vector<Sequent> instantiate(Rule rule, const RuleParams& params, const Sequent& concl) {
  const int n = concl.n;
  const int i_c = concl.turnstile;
  if (!concl.dim_ok()) fail(rule, "conclusion is not well-formed at dimension n");

  switch (rule) {
    case Rule::Const: {
      forbid(rule, params, false, false, false, false, false, false);
      if (!concl.left.empty() || concl.right.size() != 1 ||
          concl.right.items()[0] != Formula::constant(i_c))
        fail(rule, "conclusion must be exactly |-i e_i");
      return {};
    }

    case Rule::Id: {
      forbid(rule, params, false, false, false, true, false, false);
      if (!params.pi || !params.rho) fail(rule, "missing decoration parameters");
      if (concl.left.size() != 1 || concl.right.size() != 1)
        fail(rule, "conclusion must be exactly X^pi |-i X^rho");
      const Formula& l = concl.left.items()[0];
      const Formula& r = concl.right.items()[0];
      if (!l.is_var() || !r.is_var()) fail(rule, "conclusion formulas must be variables");
      if (l.var_name() != r.var_name()) fail(rule, "variable names differ");
      if (l.var_decoration() != *params.pi || r.var_decoration() != *params.rho)
        fail(rule, "decoration parameters do not match the conclusion");
      if (params.pi->inverse_at(i_c) != params.rho->inverse_at(i_c))
        fail(rule, "side condition pi^-1(i) = rho^-1(i) violated");
      return {};
    }

    case Rule::Sym: {
      forbid(rule, params, true, true, false, false, false, false);
      int i = need_dim(rule, params.i, "i", n);
      int j = need_dim(rule, params.j, "j", n);
      if (j != i_c) fail(rule, "parameter j must equal the conclusion turnstile");
      return {Sequent(act_ctx_exchange(concl.left, i, j, n), n, i,
                      act_ctx_exchange(concl.right, i, j, n))};
    }

    case Rule::Neg1: {
      forbid(rule, params, true, false, true, false, true, false);
      int i = need_dim(rule, params.i, "i", n);
      int k = need_dim(rule, params.k, "k", n);
      if (i == k) fail(rule, "side condition i != k violated");
      const int j = i_c;
      const Formula& p = need_principal(rule, params, concl.left, "left");
      Formula f = act_exchange(p, j, k, n);  // principal is F^(jk)
      Context gamma = concl.left.without(p);
      Context prem_right = act_ctx_exchange(concl.right, i, j, n);
      prem_right.insert(f);
      return {Sequent(act_ctx_exchange(gamma, i, j, n), n, i, std::move(prem_right))};
    }

    case Rule::Neg2: {
      forbid(rule, params, true, false, true, false, true, false);
      int i = need_dim(rule, params.i, "i", n);
      int k = need_dim(rule, params.k, "k", n);
      const int j = i_c;
      if (j == k) fail(rule, "side condition j != k violated");
      const Formula& p = need_principal(rule, params, concl.left, "left");
      Formula f = act_exchange(p, i, k, n);  // principal is F^(ik)
      Context gamma = concl.left.without(p);
      Context prem_right = act_ctx_exchange(concl.right, i, j, n);
      prem_right.insert(f);
      return {Sequent(act_ctx_exchange(gamma, i, j, n), n, i, std::move(prem_right))};
    }

    case Rule::Neg3: {
      forbid(rule, params, false, false, false, false, true, false);
      const int j = i_c;
      const Formula& f = need_principal(rule, params, concl.right, "right");
      Context delta = concl.right.without(f);
      std::vector<Sequent> prems;
      for (int i = 1; i <= n; ++i) {
        if (i == j) continue;
        Context prem_left = act_ctx_exchange(concl.left, i, j, n);
        prem_left.insert(f);
        prems.emplace_back(std::move(prem_left), n, i, act_ctx_exchange(delta, i, j, n));
      }
      return prems;
    }

    case Rule::QL: {
      forbid(rule, params, false, false, false, false, true, false);
      const Formula& p = need_principal(rule, params, concl.left, "left");
      if (!p.is_q()) fail(rule, "principal formula must be a q-compound");
      Context gamma = concl.left.without(p);
      std::vector<Sequent> prems;
      for (int j = 1; j <= n; ++j) {
        Context prem_left = act_ctx_exchange(gamma, j, i_c, n);
        prem_left.insert(p.test());
        prem_left.insert(act_exchange(p.branches()[static_cast<size_t>(j - 1)], j, i_c, n));
        prems.emplace_back(std::move(prem_left), n, j, act_ctx_exchange(concl.right, j, i_c, n));
      }
      return prems;
    }

    case Rule::QR: {
      forbid(rule, params, false, false, false, false, true, false);
      const Formula& p = need_principal(rule, params, concl.right, "right");
      if (!p.is_q()) fail(rule, "principal formula must be a q-compound");
      Context delta = concl.right.without(p);
      std::vector<Sequent> prems;
      for (int j = 1; j <= n; ++j) {
        Context prem_left = act_ctx_exchange(concl.left, j, i_c, n);
        prem_left.insert(p.test());
        Context prem_right = act_ctx_exchange(delta, j, i_c, n);
        prem_right.insert(act_exchange(p.branches()[static_cast<size_t>(j - 1)], j, i_c, n));
        prems.emplace_back(std::move(prem_left), n, j, std::move(prem_right));
      }
      return prems;
    }

    case Rule::Cut: {
      forbid(rule, params, false, false, false, false, false, true);
      if (!params.cut) fail(rule, "missing cut formula");
      if (!params.cut->dim_ok(n)) fail(rule, "cut formula not well-formed at dimension n");
      return {Sequent(concl.left.with(*params.cut), n, i_c, concl.right),
              Sequent(concl.left, n, i_c, concl.right.with(*params.cut))};
    }

    case Rule::WeakL: {
      forbid(rule, params, false, false, false, false, true, false);
      const Formula& p = need_principal(rule, params, concl.left, "left");
      return {Sequent(concl.left.without(p), n, i_c, concl.right)};
    }

    case Rule::WeakR: {
      forbid(rule, params, false, false, false, false, true, false);
      const Formula& p = need_principal(rule, params, concl.right, "right");
      return {Sequent(concl.left, n, i_c, concl.right.without(p))};
    }

    case Rule::ConL: {
      forbid(rule, params, false, false, false, false, true, false);
      const Formula& p = need_principal(rule, params, concl.left, "left");
      return {Sequent(concl.left.with(p), n, i_c, concl.right)};
    }

    case Rule::ConR: {
      forbid(rule, params, false, false, false, false, true, false);
      const Formula& p = need_principal(rule, params, concl.right, "right");
      return {Sequent(concl.left, n, i_c, concl.right.with(p))};
    }
  }
  fail(rule, "unknown rule");
}

std::string CheckResult::path_string() const {
  std::string s = "root";
  for (int c : path) s += "." + std::to_string(c);
  return s;
}

namespace {

bool check_node(const ProofTree& t, std::vector<int>& path, CheckResult& out) {
  std::vector<Sequent> expected;
  try {
    expected = instantiate(t.rule, t.params, t.conclusion);
  } catch (const kernel_error& e) {
    out.ok = false;
    out.path = path;
    out.reason = e.what();
    return false;
  }
  if (expected.size() != t.premises.size()) {
    out.ok = false;
    out.path = path;
    out.reason = std::string(rule_name(t.rule)) + ": expected " +
                 std::to_string(expected.size()) + " premises, tree has " +
                 std::to_string(t.premises.size());
    return false;
  }
  for (size_t c = 0; c < expected.size(); ++c) {
    if (!(t.premises[c].conclusion == expected[c])) {
      out.ok = false;
      out.path = path;
      out.reason = std::string(rule_name(t.rule)) + ": premise " + std::to_string(c) +
                   " must conclude '" + render(expected[c]) + "', found '" +
                   render(t.premises[c].conclusion) + "'";
      return false;
    }
  }
  for (size_t c = 0; c < t.premises.size(); ++c) {
    path.push_back(static_cast<int>(c));
    if (!check_node(t.premises[c], path, out)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

CheckResult check(const ProofTree& t) {
  CheckResult out;
  std::vector<int> path;
  check_node(t, path, out);
  return out;
}

}  // namespace npc
