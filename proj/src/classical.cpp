#include "npc/classical.hpp"

#include <algorithm>
#include <cctype>

#include "npc/kernel.hpp"
#include "npc/parse.hpp"

namespace npc {

PCFormula PCFormula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return PCFormula(std::move(node));
}

PCFormula PCFormula::negation(PCFormula p) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->sub.push_back(std::move(p));
  return PCFormula(std::move(node));
}

PCFormula PCFormula::conj(PCFormula p, PCFormula q) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->sub.push_back(std::move(p));
  node->sub.push_back(std::move(q));
  return PCFormula(std::move(node));
}

PCFormula PCFormula::disj(PCFormula p, PCFormula q) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->sub.push_back(std::move(p));
  node->sub.push_back(std::move(q));
  return PCFormula(std::move(node));
}

int PCFormula::depth() const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Var: return 0;
    case Kind::Not: return 1 + sub().depth();
    case Kind::And:
    case Kind::Or: return 1 + std::max(lhs().depth(), rhs().depth());
  }
  return 0;
}

void PCFormula::collect_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::One: return;
    case Kind::Var: out.insert(var_name()); return;
    case Kind::Not: sub().collect_vars(out); return;
    case Kind::And:
    case Kind::Or:
      lhs().collect_vars(out);
      rhs().collect_vars(out);
      return;
  }
}

int PCFormula::compare(const PCFormula& a, const PCFormula& b) {
  if (a.node_ == b.node_) return 0;
  auto rank = [](Kind k) {
    switch (k) {
      case Kind::Zero: return 0;
      case Kind::One: return 1;
      case Kind::Var: return 2;
      case Kind::Not: return 3;
      case Kind::And: return 4;
      case Kind::Or: return 5;
    }
    return 6;
  };
  if (int r = rank(a.kind()) - rank(b.kind()); r != 0) return r < 0 ? -1 : 1;
  switch (a.kind()) {
    case Kind::Zero:
    case Kind::One: return 0;
    case Kind::Var: {
      int c = a.var_name().compare(b.var_name());
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case Kind::Not: return compare(a.sub(), b.sub());
    case Kind::And:
    case Kind::Or:
      if (int c = compare(a.lhs(), b.lhs()); c != 0) return c;
      return compare(a.rhs(), b.rhs());
  }
  return 0;
}

bool pc_eval(const PCFormula& p, const Environment& v) {
  switch (p.kind()) {
    case PCFormula::Kind::Zero: return false;
    case PCFormula::Kind::One: return true;
    case PCFormula::Kind::Var: {
      auto it = v.find(p.var_name());
      if (it == v.end()) throw unbound_variable(p.var_name());
      return pc_truth(it->second);
    }
    case PCFormula::Kind::Not: return !pc_eval(p.sub(), v);
    case PCFormula::Kind::And: return pc_eval(p.lhs(), v) && pc_eval(p.rhs(), v);
    case PCFormula::Kind::Or: return pc_eval(p.lhs(), v) || pc_eval(p.rhs(), v);
  }
  throw std::logic_error("pc_eval: unreachable");
}

Formula to_2pc(const PCFormula& p) {
  switch (p.kind()) {
    case PCFormula::Kind::Zero: return Formula::constant(2);
    case PCFormula::Kind::One: return Formula::constant(1);
    case PCFormula::Kind::Var: return Formula::var(p.var_name(), 2);
    case PCFormula::Kind::Not: return act(to_2pc(p.sub()), Perm::exchange(1, 2, 2));
    case PCFormula::Kind::And:
      return Formula::q(to_2pc(p.lhs()), {to_2pc(p.rhs()), Formula::constant(2)});
    case PCFormula::Kind::Or:
      return Formula::q(to_2pc(p.lhs()), {Formula::constant(1), to_2pc(p.rhs())});
  }
  throw std::logic_error("to_2pc: unreachable");
}

PCFormula to_pc(const Formula& f) {
  if (!f.dim_ok(2)) throw dimension_mismatch("to_pc: defined for n = 2 only");
  switch (f.kind()) {
    case Formula::Kind::Const:
      return f.const_index() == 1 ? PCFormula::one() : PCFormula::zero();
    case Formula::Kind::Var:
      if (f.var_decoration().is_identity()) return PCFormula::var(f.var_name());
      return PCFormula::negation(PCFormula::var(f.var_name()));
    case Formula::Kind::Q: {
      PCFormula t = to_pc(f.test());
      PCFormula g = to_pc(f.branches()[0]);
      PCFormula h = to_pc(f.branches()[1]);
      return PCFormula::disj(PCFormula::conj(t, std::move(g)),
                             PCFormula::conj(PCFormula::negation(t), std::move(h)));
    }
  }
  throw std::logic_error("to_pc: unreachable");
}

namespace {

class PCCursor {
 public:
  explicit PCCursor(std::string_view text) : text_(text) {}

  PCFormula parse() {
    PCFormula f = disjunction();
    skip_ws();
    if (pos_ < text_.size()) throw parse_error("trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PCFormula disjunction() {
    PCFormula f = conjunction();
    while (try_consume('|')) f = PCFormula::disj(std::move(f), conjunction());
    return f;
  }

  PCFormula conjunction() {
    PCFormula f = unary();
    while (try_consume('&')) f = PCFormula::conj(std::move(f), unary());
    return f;
  }

  PCFormula unary() {
    skip_ws();
    if (try_consume('~')) return PCFormula::negation(unary());
    if (try_consume('(')) {
      PCFormula f = disjunction();
      if (!try_consume(')')) throw parse_error("expected ')'", pos_);
      return f;
    }
    if (pos_ >= text_.size()) throw parse_error("expected a formula", pos_);
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return PCFormula::zero();
    }
    if (c == '1') {
      ++pos_;
      return PCFormula::one();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        ++pos_;
      return PCFormula::var(std::string(text_.substr(start, pos_ - start)));
    }
    throw parse_error("expected a formula", pos_);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

PCFormula parse_pc(std::string_view text) { return PCCursor(text).parse(); }

std::string render_pc(const PCFormula& p) {
  // Parenthesize by precedence: ~ > & > |.
  switch (p.kind()) {
    case PCFormula::Kind::Zero: return "0";
    case PCFormula::Kind::One: return "1";
    case PCFormula::Kind::Var: return p.var_name();
    case PCFormula::Kind::Not: {
      const PCFormula& s = p.sub();
      if (s.kind() == PCFormula::Kind::And || s.kind() == PCFormula::Kind::Or)
        return "~(" + render_pc(s) + ")";
      return "~" + render_pc(s);
    }
    case PCFormula::Kind::And: {
      auto wrap = [](const PCFormula& f, bool right) {
        const bool parens = f.kind() == PCFormula::Kind::Or ||
                            (right && f.kind() == PCFormula::Kind::And);
        return parens ? "(" + render_pc(f) + ")" : render_pc(f);
      };
      return wrap(p.lhs(), false) + " & " + wrap(p.rhs(), true);
    }
    case PCFormula::Kind::Or: {
      auto wrap = [](const PCFormula& f, bool right) {
        return right && f.kind() == PCFormula::Kind::Or ? "(" + render_pc(f) + ")" : render_pc(f);
      };
      return wrap(p.lhs(), false) + " | " + wrap(p.rhs(), true);
    }
  }
  return {};
}

void PCContext::insert(const PCFormula& f) {
  items_.insert(std::upper_bound(items_.begin(), items_.end(), f), f);
}

bool PCContext::erase_one(const PCFormula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it == items_.end() || !(*it == f)) return false;
  items_.erase(it);
  return true;
}

bool PCContext::contains(const PCFormula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

PCContext PCContext::with(const PCFormula& f) const {
  PCContext c = *this;
  c.insert(f);
  return c;
}

PCContext PCContext::without(const PCFormula& f) const {
  PCContext c = *this;
  if (!c.erase_one(f)) throw std::invalid_argument("PCContext::without: formula not present");
  return c;
}

void PCContext::collect_vars(std::set<std::string>& out) const {
  for (const PCFormula& f : items_) f.collect_vars(out);
}

std::set<std::string> PCSequent::vars() const {
  std::set<std::string> out;
  left.collect_vars(out);
  right.collect_vars(out);
  return out;
}

std::string render_pc(const PCSequent& s) {
  std::string out;
  bool first = true;
  for (const PCFormula& f : s.left) {
    if (!first) out += ", ";
    out += render_pc(f);
    first = false;
  }
  if (!out.empty()) out += ' ';
  out += "|-";
  first = true;
  for (const PCFormula& f : s.right) {
    out += first ? " " : ", ";
    out += render_pc(f);
    first = false;
  }
  return out;
}

Verdict pc_holds(const PCSequent& s) {
  EnvEnumerator envs(s.vars(), 2);
  for (const Environment& v : envs) {
    bool all_left = true;
    for (const PCFormula& f : s.left)
      if (!pc_eval(f, v)) {
        all_left = false;
        break;
      }
    if (!all_left) continue;
    bool some_right = false;
    for (const PCFormula& f : s.right)
      if (pc_eval(f, v)) {
        some_right = true;
        break;
      }
    if (!some_right) return Verdict::Invalid(v);
  }
  return Verdict::Valid();
}

const char* pc_rule_name(PCRule r) {
  switch (r) {
    case PCRule::Const1: return "Const1";
    case PCRule::Const0: return "Const0";
    case PCRule::Id: return "Id";
    case PCRule::AndL: return "AndL";
    case PCRule::AndR: return "AndR";
    case PCRule::OrL: return "OrL";
    case PCRule::OrR: return "OrR";
    case PCRule::NotL: return "NotL";
    case PCRule::NotR: return "NotR";
    case PCRule::Cut: return "Cut";
    case PCRule::WeakL: return "WeakL";
    case PCRule::WeakR: return "WeakR";
    case PCRule::ConL: return "ConL";
    case PCRule::ConR: return "ConR";
  }
  return "?";
}

namespace {

[[noreturn]] void pc_fail(PCRule r, const std::string& why) {
  throw kernel_error(std::string(pc_rule_name(r)) + ": " + why);
}

const PCFormula& pc_principal(PCRule r, const PCRuleParams& p, const PCContext& ctx,
                              const char* side) {
  if (!p.principal) pc_fail(r, "missing principal formula");
  if (!ctx.contains(*p.principal))
    pc_fail(r, std::string("principal formula not present in the ") + side + " context");
  return *p.principal;
}

}  // namespace

std::vector<PCSequent> pc_instantiate(PCRule rule, const PCRuleParams& params,
                                      const PCSequent& concl) {
  switch (rule) {
    case PCRule::Const1:
      if (params.principal || params.cut) pc_fail(rule, "unexpected parameters");
      if (!concl.left.empty() || concl.right.size() != 1 ||
          !(*concl.right.begin() == PCFormula::one()))
        pc_fail(rule, "conclusion must be exactly |- 1");
      return {};
    case PCRule::Const0:
      if (params.principal || params.cut) pc_fail(rule, "unexpected parameters");
      if (!concl.right.empty() || concl.left.size() != 1 ||
          !(*concl.left.begin() == PCFormula::zero()))
        pc_fail(rule, "conclusion must be exactly 0 |-");
      return {};
    case PCRule::Id: {
      if (params.principal || params.cut) pc_fail(rule, "unexpected parameters");
      if (concl.left.size() != 1 || concl.right.size() != 1 ||
          !(*concl.left.begin() == *concl.right.begin()))
        pc_fail(rule, "conclusion must be exactly P |- P");
      return {};
    }
    case PCRule::AndL: {
      const PCFormula& p = pc_principal(rule, params, concl.left, "left");
      if (p.kind() != PCFormula::Kind::And) pc_fail(rule, "principal must be a conjunction");
      PCContext prem_left = concl.left.without(p);
      prem_left.insert(p.lhs());
      prem_left.insert(p.rhs());
      return {PCSequent{std::move(prem_left), concl.right}};
    }
    case PCRule::AndR: {
      const PCFormula& p = pc_principal(rule, params, concl.right, "right");
      if (p.kind() != PCFormula::Kind::And) pc_fail(rule, "principal must be a conjunction");
      PCContext delta = concl.right.without(p);
      return {PCSequent{concl.left, delta.with(p.lhs())},
              PCSequent{concl.left, delta.with(p.rhs())}};
    }
    case PCRule::OrL: {
      const PCFormula& p = pc_principal(rule, params, concl.left, "left");
      if (p.kind() != PCFormula::Kind::Or) pc_fail(rule, "principal must be a disjunction");
      PCContext gamma = concl.left.without(p);
      return {PCSequent{gamma.with(p.lhs()), concl.right},
              PCSequent{gamma.with(p.rhs()), concl.right}};
    }
    case PCRule::OrR: {
      const PCFormula& p = pc_principal(rule, params, concl.right, "right");
      if (p.kind() != PCFormula::Kind::Or) pc_fail(rule, "principal must be a disjunction");
      PCContext prem_right = concl.right.without(p);
      prem_right.insert(p.lhs());
      prem_right.insert(p.rhs());
      return {PCSequent{concl.left, std::move(prem_right)}};
    }
    case PCRule::NotL: {
      const PCFormula& p = pc_principal(rule, params, concl.left, "left");
      if (p.kind() != PCFormula::Kind::Not) pc_fail(rule, "principal must be a negation");
      return {PCSequent{concl.left.without(p), concl.right.with(p.sub())}};
    }
    case PCRule::NotR: {
      const PCFormula& p = pc_principal(rule, params, concl.right, "right");
      if (p.kind() != PCFormula::Kind::Not) pc_fail(rule, "principal must be a negation");
      return {PCSequent{concl.left.with(p.sub()), concl.right.without(p)}};
    }
    case PCRule::Cut: {
      if (!params.cut) pc_fail(rule, "missing cut formula");
      return {PCSequent{concl.left.with(*params.cut), concl.right},
              PCSequent{concl.left, concl.right.with(*params.cut)}};
    }
    case PCRule::WeakL: {
      const PCFormula& p = pc_principal(rule, params, concl.left, "left");
      return {PCSequent{concl.left.without(p), concl.right}};
    }
    case PCRule::WeakR: {
      const PCFormula& p = pc_principal(rule, params, concl.right, "right");
      return {PCSequent{concl.left, concl.right.without(p)}};
    }
    case PCRule::ConL: {
      const PCFormula& p = pc_principal(rule, params, concl.left, "left");
      return {PCSequent{concl.left.with(p), concl.right}};
    }
    case PCRule::ConR: {
      const PCFormula& p = pc_principal(rule, params, concl.right, "right");
      return {PCSequent{concl.left, concl.right.with(p)}};
    }
  }
  pc_fail(rule, "unknown rule");
}

namespace {

bool pc_check_node(const PCProofTree& t, std::vector<int>& path, PCCheckResult& out) {
  std::vector<PCSequent> expected;
  try {
    expected = pc_instantiate(t.rule, t.params, t.conclusion);
  } catch (const kernel_error& e) {
    out.ok = false;
    out.path = path;
    out.reason = e.what();
    return false;
  }
  if (expected.size() != t.premises.size()) {
    out.ok = false;
    out.path = path;
    out.reason = std::string(pc_rule_name(t.rule)) + ": premise count mismatch";
    return false;
  }
  for (size_t c = 0; c < expected.size(); ++c) {
    if (!(t.premises[c].conclusion == expected[c])) {
      out.ok = false;
      out.path = path;
      out.reason = std::string(pc_rule_name(t.rule)) + ": premise " + std::to_string(c) +
                   " must conclude '" + render_pc(expected[c]) + "', found '" +
                   render_pc(t.premises[c].conclusion) + "'";
      return false;
    }
  }
  for (size_t c = 0; c < t.premises.size(); ++c) {
    path.push_back(static_cast<int>(c));
    if (!pc_check_node(t.premises[c], path, out)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

PCCheckResult pc_check(const PCProofTree& t) {
  PCCheckResult out;
  std::vector<int> path;
  pc_check_node(t, path, out);
  return out;
}

RoundtripReport roundtrip_reports(const std::vector<PCFormula>& pc_corpus,
                                  const std::vector<Formula>& two_pc_corpus) {
  RoundtripReport report;
  auto fail = [&](const std::string& what) {
    ++report.failures;
    if (report.first_failure.empty()) report.first_failure = what;
  };

  for (const PCFormula& p : pc_corpus) {
    std::set<std::string> vars;
    p.collect_vars(vars);
    const Formula translated = to_2pc(p);
    const PCFormula back = to_pc(translated);
    ++report.pc_to_2pc_checked;
    ++report.roundtrip_pc_checked;
    for (const Environment& v : EnvEnumerator(vars, 2)) {
      if (pc_eval(p, v) != pc_truth(eval(translated, v)))
        fail("translation changed the truth value of " + render_pc(p) + " at " + render_env(v));
      if (pc_eval(p, v) != pc_eval(back, v))
        fail("round-trip changed the truth value of " + render_pc(p) + " at " + render_env(v));
    }
  }

  for (const Formula& f : two_pc_corpus) {
    const PCFormula translated = to_pc(f);
    const Formula back = to_2pc(translated);
    ++report.two_pc_to_pc_checked;
    ++report.roundtrip_2pc_checked;
    for (const Environment& v : EnvEnumerator(f.vars(), 2)) {
      if (pc_truth(eval(f, v)) != pc_eval(translated, v))
        fail("translation changed the truth value of " + render(f) + " at " + render_env(v));
      if (eval(f, v) != eval(back, v))
        fail("round-trip changed the value of " + render(f) + " at " + render_env(v));
    }
  }
  return report;
}

}  // namespace npc
