#include "npc/semantics.hpp"

#include <algorithm>
#include <cctype>

namespace npc {

int eval(const Formula& f, const Environment& v) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return f.const_index();
    case Formula::Kind::Var: {
      auto it = v.find(f.var_name());
      if (it == v.end()) throw unbound_variable(f.var_name());
      return f.var_decoration()(it->second);
    }
    case Formula::Kind::Q: {
      int i = eval(f.test(), v);
      if (i < 1 || i > static_cast<int>(f.branches().size()))
        throw std::invalid_argument("q test value out of branch range");
      return eval(f.branches()[static_cast<size_t>(i - 1)], v);
    }
  }
  throw std::logic_error("eval: unreachable");
}

EnvEnumerator::EnvEnumerator(const std::set<std::string>& vars, int n)
    : vars_(vars.begin(), vars.end()), n_(n) {
  total_ = 1;
  for (size_t t = 0; t < vars_.size(); ++t) {
    total_ *= n_;
    if (total_ > kGuard)
      throw explosion_guard_error("environment enumeration exceeds guard of 10^7");
  }
}

Environment EnvEnumerator::at(long long index) const {
  Environment env;
  // Base-n digits, last variable varying fastest.
  for (size_t t = vars_.size(); t-- > 0;) {
    env[vars_[t]] = static_cast<int>(index % n_) + 1;
    index /= n_;
  }
  return env;
}

Verdict holds(const Context& gamma, int i, const Context& delta, int n) {
  std::set<std::string> vars;
  gamma.collect_vars(vars);
  delta.collect_vars(vars);
  EnvEnumerator envs(vars, n);
  for (const Environment& v : envs) {
    bool all_left = true;
    for (const Formula& g : gamma)
      if (eval(g, v) != i) {
        all_left = false;
        break;
      }
    if (!all_left) continue;
    bool some_right = false;
    for (const Formula& d : delta)
      if (eval(d, v) == i) {
        some_right = true;
        break;
      }
    if (!some_right) return Verdict::Invalid(v);
  }
  return Verdict::Valid();
}

Verdict holds(const Sequent& s) { return holds(s.left, s.turnstile, s.right, s.n); }

bool equivalent(const Formula& f, const Formula& g, int n) {
  std::set<std::string> vars = f.vars();
  g.collect_vars(vars);
  for (const Environment& v : EnvEnumerator(vars, n))
    if (eval(f, v) != eval(g, v)) return false;
  return true;
}

std::string render_env(const Environment& v) {
  std::string s;
  for (const auto& [name, val] : v) {
    if (!s.empty()) s += ',';
    s += name + "=" + std::to_string(val);
  }
  return s;
}

Environment parse_env(const std::string& text, int n) {
  Environment env;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string entry = text.substr(pos, comma - pos);
    size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("environment entry '" + entry + "' is not NAME=VALUE");
    std::string name = entry.substr(0, eq);
    // Trim surrounding whitespace.
    auto trim = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    trim(name);
    std::string value = entry.substr(eq + 1);
    trim(value);
    if (name.empty()) throw std::invalid_argument("empty variable name in environment");
    int val = std::stoi(value);
    if (val < 1 || val > n)
      throw std::invalid_argument("environment value for " + name + " out of range 1.." +
                                  std::to_string(n));
    env[name] = val;
    pos = comma + 1;
  }
  return env;
}

}  // namespace npc
