#pragma once

#include <string>
#include <string_view>

#include "npc/sequent.hpp"

namespace npc {

/// Syntax error with the byte offset it was detected at.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Concrete syntax (whitespace insignificant, NAT indices 1-based):
///   formula := 'e' NAT | IDENT ('^[' NAT (',' NAT)* ']')? | 'q(' formula (',' formula){n} ')'
///   sequent := ctx? '|-' NAT ctx?      ctx := formula (',' formula)*
Formula parse_formula(std::string_view text, int n);
Sequent parse_sequent(std::string_view text, int n);

std::string render(const Formula& f);
std::string render(const Sequent& s);
std::string render(const Context& c);

}  // namespace npc
