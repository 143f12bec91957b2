#include "npc/prover.hpp"

#include <map>

#include "npc/parse.hpp"

namespace npc {

const char* atomic_case_name(AtomicCase c) {
  switch (c) {
    case AtomicCase::C1: return "C1";
    case AtomicCase::C2: return "C2";
    case AtomicCase::C3: return "C3";
    case AtomicCase::C4: return "C4";
    case AtomicCase::C5: return "C5";
  }
  return "?";
}

namespace {

struct LeftOcc {
  // First decoration seen per variable, in canonical left-context order.
  std::map<std::string, Perm> first;
};

}  // namespace

AtomicVerdict atomic_verdict(const Sequent& s) {
  if (!s.is_atomic()) throw std::invalid_argument("atomic_verdict: sequent contains a q-compound");
  const int i = s.turnstile;
  const int n = s.n;

  // C1: a left constant other than e_i.
  for (const Formula& f : s.left)
    if (f.is_const() && f.const_index() != i) return {true, AtomicCase::C1, {}};

  // C2: e_i on the right.
  for (const Formula& f : s.right)
    if (f.is_const() && f.const_index() == i) return {true, AtomicCase::C2, {}};

  // Left variable occurrences force v(X) = pi^-1(i).
  std::map<std::string, Perm> forced;
  for (const Formula& f : s.left) {
    if (!f.is_var()) continue;
    auto [it, fresh] = forced.try_emplace(f.var_name(), f.var_decoration());
    if (!fresh && it->second.inverse_at(i) != f.var_decoration().inverse_at(i))
      return {true, AtomicCase::C3, {}};
  }

  // C4: a right occurrence matching its variable's forced value.
  for (const Formula& f : s.right) {
    if (!f.is_var()) continue;
    auto it = forced.find(f.var_name());
    if (it != forced.end() &&
        it->second.inverse_at(i) == f.var_decoration().inverse_at(i))
      return {true, AtomicCase::C4, {}};
  }

  // Right-occurrence trigger values per variable.
  std::map<std::string, std::set<int>> triggers;
  for (const Formula& f : s.right)
    if (f.is_var()) triggers[f.var_name()].insert(f.var_decoration().inverse_at(i));

  // C5: a left-unconstrained variable whose triggers cover every value.
  for (const auto& [name, ts] : triggers)
    if (!forced.count(name) && static_cast<int>(ts.size()) == n)
      return {true, AtomicCase::C5, {}};

  // Invalid: forced values for constrained variables, smallest dodging value
  // for the rest.
  AtomicVerdict out;
  out.valid = false;
  for (const std::string& name : s.vars()) {
    auto it = forced.find(name);
    if (it != forced.end()) {
      out.witness[name] = it->second.inverse_at(i);
      continue;
    }
    const std::set<int>* ts = triggers.count(name) ? &triggers.at(name) : nullptr;
    for (int v = 1; v <= n; ++v) {
      if (!ts || !ts->count(v)) {
        out.witness[name] = v;
        break;
      }
    }
  }
  return out;
}

namespace {

ProofTree close_valid_atomic(const Sequent& s);

ProofTree close_atomic_unchecked(const Sequent& s, AtomicCase c) {
  const int i = s.turnstile;
  const int n = s.n;
  switch (c) {
    case AtomicCase::C1: {
      for (const Formula& f : s.left) {
        if (f.is_const() && f.const_index() != i) {
          ProofTree base = derive_const_left(f.const_index(), i, n);
          return weak_plus(std::move(base), s.left.without(f), s.right);
        }
      }
      break;
    }
    case AtomicCase::C2: {
      for (const Formula& f : s.right) {
        if (f.is_const() && f.const_index() == i)
          return weak_plus(axiom_const(n, i), s.left, s.right.without(f));
      }
      break;
    }
    case AtomicCase::C3: {
      std::map<std::string, Formula> first;
      for (const Formula& f : s.left) {
        if (!f.is_var()) continue;
        auto [it, fresh] = first.try_emplace(f.var_name(), f);
        if (fresh) continue;
        const Perm& pi = it->second.var_decoration();
        const Perm& sigma = f.var_decoration();
        if (pi.inverse_at(i) == sigma.inverse_at(i)) continue;
        // X^pi, X^sigma |-i closes through Neg1 over an Id axiom transported
        // to dimension sigma(pi^-1(i)).
        const int ip = sigma(pi.inverse_at(i));
        RuleParams params;
        params.i = ip;
        params.k = i;  // exchange (i,i): the principal stays in place
        params.principal = f;
        Sequent base_concl({it->second, f}, n, i, {});
        ProofTree id = axiom_id(f.var_name(), compose(Perm::exchange(ip, i, n), pi), sigma, ip);
        ProofTree base{Rule::Neg1, std::move(params), std::move(base_concl), {std::move(id)}};
        Context rest = s.left.without(it->second);
        rest.erase_one(f);
        return weak_plus(std::move(base), rest, s.right);
      }
      break;
    }
    case AtomicCase::C4: {
      std::map<std::string, Perm> forced;
      for (const Formula& f : s.left)
        if (f.is_var()) forced.try_emplace(f.var_name(), f.var_decoration());
      for (const Formula& f : s.right) {
        if (!f.is_var()) continue;
        auto it = forced.find(f.var_name());
        if (it == forced.end() ||
            it->second.inverse_at(i) != f.var_decoration().inverse_at(i))
          continue;
        ProofTree base = axiom_id(f.var_name(), it->second, f.var_decoration(), i);
        Context rest_left = s.left.without(Formula::var(f.var_name(), it->second));
        return weak_plus(std::move(base), rest_left, s.right.without(f));
      }
      break;
    }
    case AtomicCase::C5: {
      std::map<std::string, Perm> forced;
      for (const Formula& f : s.left)
        if (f.is_var()) forced.try_emplace(f.var_name(), f.var_decoration());
      std::map<std::string, std::set<int>> triggers;
      for (const Formula& f : s.right)
        if (f.is_var()) triggers[f.var_name()].insert(f.var_decoration().inverse_at(i));
      for (const auto& [name, ts] : triggers) {
        if (forced.count(name) || static_cast<int>(ts.size()) != n) continue;
        // Move the first right occurrence of the covering variable to the
        // left with Neg3; each premise is again valid and atomic.
        for (const Formula& f : s.right) {
          if (!f.is_var() || f.var_name() != name) continue;
          RuleParams params;
          params.principal = f;
          std::vector<Sequent> prem_seqs = instantiate(Rule::Neg3, params, s);
          std::vector<ProofTree> children;
          children.reserve(prem_seqs.size());
          for (const Sequent& p : prem_seqs) children.push_back(close_valid_atomic(p));
          return ProofTree{Rule::Neg3, std::move(params), s, std::move(children)};
        }
      }
      break;
    }
  }
  throw internal_synthesis_failure(std::string("close_atomic: case ") + atomic_case_name(c) +
                                   " does not apply to '" + render(s) + "'");
}

ProofTree close_valid_atomic(const Sequent& s) {
  AtomicVerdict v = atomic_verdict(s);
  if (!v.valid)
    throw internal_synthesis_failure("close_atomic: subgoal is not valid: '" + render(s) + "'");
  return close_atomic_unchecked(s, v.closure_case);
}

}  // namespace

ProofTree close_atomic(const Sequent& s, AtomicCase c) {
  ProofTree t = close_atomic_unchecked(s, c);
  if (!(t.conclusion == s))
    throw internal_synthesis_failure("close_atomic: built a tree for the wrong conclusion");
  if (CheckResult r = check(t); !r.ok)
    throw internal_synthesis_failure("close_atomic: tree fails the kernel: " + r.reason);
  return t;
}

Decomposition decompose(const Sequent& s) {
  Decomposition d;
  for (const Formula& f : s.left) {
    if (f.is_q()) {
      d.rule = Rule::QL;
      d.params.principal = f;
      d.premises = instantiate(Rule::QL, d.params, s);
      return d;
    }
  }
  for (const Formula& f : s.right) {
    if (f.is_q()) {
      d.rule = Rule::QR;
      d.params.principal = f;
      d.premises = instantiate(Rule::QR, d.params, s);
      return d;
    }
  }
  throw std::invalid_argument("decompose: no compound formula present");
}

namespace {

class budget_exceeded {};  // internal control flow

struct Search {
  long budget;
  long steps = 0;
  std::optional<Environment> refutation;

  void charge(long cost) {
    steps += cost;
    if (steps > budget) throw budget_exceeded{};
  }

  // Returns the subproof, or nullopt once a refutation has been found.
  std::optional<ProofTree> run(const Sequent& s) {
    if (s.is_atomic()) {
      AtomicVerdict v = atomic_verdict(s);
      if (!v.valid) {
        refutation = std::move(v.witness);
        return std::nullopt;
      }
      ProofTree t = close_atomic_unchecked(s, v.closure_case);
      charge(t.node_count());
      return t;
    }
    Decomposition d = decompose(s);
    charge(1);
    std::vector<ProofTree> children;
    children.reserve(d.premises.size());
    for (const Sequent& p : d.premises) {
      std::optional<ProofTree> sub = run(p);
      if (!sub) return std::nullopt;  // first failing branch wins
      children.push_back(std::move(*sub));
    }
    return ProofTree{d.rule, std::move(d.params), s, std::move(children)};
  }
};

}  // namespace

ProveResult prove(const Sequent& s, long budget) {
  if (budget <= 0) throw std::invalid_argument("prove: budget must be positive");
  if (!s.dim_ok()) throw std::invalid_argument("prove: sequent not well-formed at dimension n");

  Search search{budget};
  std::optional<ProofTree> tree;
  try {
    tree = search.run(s);
  } catch (const budget_exceeded&) {
    ProveResult out;
    out.status = ProveResult::Status::OutOfBudget;
    out.steps = search.steps;
    return out;
  }

  ProveResult out;
  out.steps = search.steps;
  if (tree) {
    if (!(tree->conclusion == s))
      throw internal_synthesis_failure("prove: tree concludes the wrong sequent");
    if (tree->uses_rule(Rule::Cut))
      throw internal_synthesis_failure("prove: emitted tree contains a Cut node");
    if (CheckResult r = check(*tree); !r.ok)
      throw internal_synthesis_failure("prove: emitted tree fails the kernel at " +
                                       r.path_string() + ": " + r.reason);
    out.status = ProveResult::Status::Proved;
    out.tree = std::move(*tree);
    return out;
  }

  // The leaf witness falsifies the root: qL/qR/Neg3 steps transport the same
  // environment (the exchanges cancel through the symmetry lemma). Extend it
  // over variables dropped by branch selection and re-validate.
  Environment w = std::move(*search.refutation);
  for (const std::string& name : s.vars()) w.try_emplace(name, 1);
  for (const Formula& f : s.left)
    if (eval(f, w) != s.turnstile)
      throw internal_synthesis_failure("prove: refutation witness does not satisfy the left context");
  for (const Formula& f : s.right)
    if (eval(f, w) == s.turnstile)
      throw internal_synthesis_failure("prove: refutation witness does not dodge the right context");
  out.status = ProveResult::Status::Refuted;
  out.witness = std::move(w);
  return out;
}

}  // namespace npc
