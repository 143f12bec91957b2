#include "npc/parse.hpp"

#include <cctype>

namespace npc {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int n) : text_(text), n_(n) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw parse_error(std::string("expected '") + c + "'", pos_);
  }

  bool try_consume_turnstile() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '|' && text_[pos_ + 1] == '-') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  int nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("expected a number", pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw parse_error("number too large", pos_);
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("expected a formula", pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '\''))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Perm perm() {
    size_t at = pos_;
    expect('[');
    std::vector<int> image;
    image.push_back(nat());
    while (try_consume(',')) image.push_back(nat());
    expect(']');
    if (static_cast<int>(image.size()) != n_)
      throw parse_error("decoration has " + std::to_string(image.size()) +
                            " entries, expected " + std::to_string(n_),
                        at);
    try {
      return Perm(std::move(image));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), at);
    }
  }

  Formula formula() {
    skip_ws();
    size_t at = pos_;
    char c = peek();
    if (c == '\0') throw parse_error("expected a formula", pos_);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // 'e' NAT is a constant; 'q' '(' opens a compound; anything else is a
      // variable, optionally decorated.
      if (c == 'e' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        int k = nat();
        if (k < 1 || k > n_)
          throw parse_error("constant index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(n_),
                            at);
        return Formula::constant(k);
      }
      std::string name = ident();
      if (name == "q" && peek() == '(') {
        expect('(');
        Formula test = formula();
        std::vector<Formula> branches;
        while (try_consume(',')) branches.push_back(formula());
        expect(')');
        if (static_cast<int>(branches.size()) != n_)
          throw parse_error("q takes " + std::to_string(n_ + 1) + " arguments at n=" +
                                std::to_string(n_) + ", got " +
                                std::to_string(branches.size() + 1),
                            at);
        return Formula::q(std::move(test), std::move(branches));
      }
      if (try_consume('^')) return Formula::var(std::move(name), perm());
      return Formula::var(std::move(name), Perm::identity(n_));
    }
    throw parse_error("expected a formula", pos_);
  }

  Context context_until_turnstile_or_end() {
    Context ctx;
    skip_ws();
    if (eof()) return ctx;
    if (peek() == '|') return ctx;
    ctx.insert(formula());
    while (try_consume(',')) ctx.insert(formula());
    return ctx;
  }

  Sequent sequent() {
    Context left = context_until_turnstile_or_end();
    skip_ws();
    size_t at = pos_;
    if (!try_consume_turnstile()) throw parse_error("expected '|-'", at);
    int i = nat();
    if (i < 1 || i > n_)
      throw parse_error("turnstile dimension " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n_),
                        at);
    Context right;
    if (!eof()) {
      right.insert(formula());
      while (try_consume(',')) right.insert(formula());
    }
    return Sequent(std::move(left), n_, i, std::move(right));
  }

  void expect_eof() {
    if (!eof()) throw parse_error("trailing input", pos_);
  }

 private:
  std::string_view text_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  Cursor c(text, n);
  Formula f = c.formula();
  c.expect_eof();
  return f;
}

Sequent parse_sequent(std::string_view text, int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  Cursor c(text, n);
  Sequent s = c.sequent();
  c.expect_eof();
  return s;
}

std::string render(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return "e" + std::to_string(f.const_index());
    case Formula::Kind::Var:
      if (f.var_decoration().is_identity()) return f.var_name();
      return f.var_name() + "^" + to_string(f.var_decoration());
    case Formula::Kind::Q: {
      std::string s = "q(" + render(f.test());
      for (const Formula& b : f.branches()) s += ", " + render(b);
      s += ')';
      return s;
    }
  }
  return {};
}

std::string render(const Context& c) {
  std::string s;
  bool first = true;
  for (const Formula& f : c) {
    if (!first) s += ", ";
    s += render(f);
    first = false;
  }
  return s;
}

std::string render(const Sequent& s) {
  std::string out = render(s.left);
  if (!out.empty()) out += ' ';
  out += "|-" + std::to_string(s.turnstile);
  std::string rhs = render(s.right);
  if (!rhs.empty()) out += ' ' + rhs;
  return out;
}

}  // namespace npc
