#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace propkit {

// A propositional variable. Equality is structural on the name.
struct VarName {
  std::string name;

  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName&, const VarName&) = default;
};

// ASCII letter followed by letters, digits or underscores; "bot" and "top"
// are reserved keywords.
bool is_valid_var_name(std::string_view s);

// Immutable formula tree over Var | Bot | Conj | Disj | Impl.
//
// Negation and truth are abbreviations, never constructors:
//   ~A  stands for  A -> bot
//   top stands for  ~bot
// neg() and top() build the expansion directly, so they are normalized away
// by construction.
class Formula {
 public:
  enum class Kind : unsigned char { Var, Bot, Conj, Disj, Impl };

  Formula();  // bot

  static Formula var(VarName v);
  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula impl(Formula lhs, Formula rhs);
  static Formula neg(Formula a);

  Kind kind() const;
  const VarName& var_name() const;  // requires kind() == Var
  Formula lhs() const;              // requires a binary kind
  Formula rhs() const;

  bool is_var() const { return kind() == Kind::Var; }
  bool is_bot() const { return kind() == Kind::Bot; }
  bool is_neg() const;  // Impl(_, bot)
  bool is_top() const;  // Impl(bot, bot)

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static const std::shared_ptr<const Node>& bot_node();

  std::shared_ptr<const Node> node_;
};

// Parses the ASCII grammar
//   formula := imp
//   imp     := or ("->" imp)?
//   or      := and ("|" or)?
//   and     := unary ("&" and)?
//   unary   := "~" unary | atom
//   atom    := ident | "bot" | "top" | "(" formula ")"
// Throws ParseError with the byte offset of the first offending token.
Formula parse(std::string_view text);

// Inverse of parse up to redundant parentheses; parse(to_string(f)) == f.
// Impl(A, bot) renders as ~A and Impl(bot, bot) as top.
std::string to_string(const Formula& f);

// Variables occurring in f, deduplicated, in first-occurrence order.
std::vector<VarName> variables_of(const Formula& f);

}  // namespace propkit
