#include "propkit/formula.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "propkit/errors.hpp"

namespace propkit {

struct Formula::Node {
  Kind kind;
  VarName var;                            // Kind::Var only
  std::shared_ptr<const Node> lhs, rhs;   // binary kinds only

  Node(Kind k, VarName v, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : kind(k), var(std::move(v)), lhs(std::move(l)), rhs(std::move(r)) {}
};

const std::shared_ptr<const Formula::Node>& Formula::bot_node() {
  static const auto node =
      std::make_shared<const Node>(Kind::Bot, VarName{}, nullptr, nullptr);
  return node;
}

bool is_valid_var_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return s != "bot" && s != "top";
}

Formula::Formula() : node_(bot_node()) {}

Formula Formula::var(VarName v) {
  if (!is_valid_var_name(v.name))
    throw std::invalid_argument("bad variable name: '" + v.name + "'");
  return Formula(std::make_shared<const Node>(Kind::Var, std::move(v), nullptr, nullptr));
}

Formula Formula::var(std::string name) { return var(VarName{std::move(name)}); }

Formula Formula::bot() { return Formula(); }

Formula Formula::top() { return neg(bot()); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::Conj, VarName{}, std::move(lhs.node_),
                                              std::move(rhs.node_)));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::Disj, VarName{}, std::move(lhs.node_),
                                              std::move(rhs.node_)));
}

Formula Formula::impl(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::Impl, VarName{}, std::move(lhs.node_),
                                              std::move(rhs.node_)));
}

Formula Formula::neg(Formula a) { return impl(std::move(a), bot()); }

Formula::Kind Formula::kind() const { return node_->kind; }

const VarName& Formula::var_name() const { return node_->var; }

Formula Formula::lhs() const { return Formula(node_->lhs); }

Formula Formula::rhs() const { return Formula(node_->rhs); }

bool Formula::is_neg() const { return kind() == Kind::Impl && rhs().is_bot(); }

bool Formula::is_top() const { return is_neg() && lhs().is_bot(); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Var: return a.var_name() == b.var_name();
    case Formula::Kind::Bot: return true;
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, BotKw, TopKw, And, Or, Imp, Not, LParen, RParen, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::BotKw: return "'bot'";
    case Tok::TopKw: return "'top'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Not: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  Tok tok() const { return tok_; }
  std::size_t tok_offset() const { return tok_offset_; }
  const std::string& ident() const { return ident_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_offset_ = pos_;
    if (pos_ >= text_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '&': tok_ = Tok::And; ++pos_; return;
      case '|': tok_ = Tok::Or; ++pos_; return;
      case '~': tok_ = Tok::Not; ++pos_; return;
      case '(': tok_ = Tok::LParen; ++pos_; return;
      case ')': tok_ = Tok::RParen; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          tok_ = Tok::Imp;
          pos_ += 2;
          return;
        }
        throw ParseError(pos_, "stray '-' (did you mean '->'?)");
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      ident_ = std::string(text_.substr(start, pos_ - start));
      tok_ = ident_ == "bot" ? Tok::BotKw : ident_ == "top" ? Tok::TopKw : Tok::Ident;
      return;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t tok_offset_ = 0;
  Tok tok_ = Tok::End;
  std::string ident_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse_all() {
    if (lex_.tok() == Tok::End) throw ParseError(0, "empty input, expected a formula");
    Formula f = parse_imp();
    if (lex_.tok() != Tok::End)
      throw ParseError(lex_.tok_offset(),
                       std::string("expected end of input, found ") + tok_name(lex_.tok()));
    return f;
  }

 private:
  Formula parse_imp() {
    Formula l = parse_or();
    if (lex_.tok() == Tok::Imp) {
      lex_.advance();
      return Formula::impl(std::move(l), parse_imp());
    }
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    if (lex_.tok() == Tok::Or) {
      lex_.advance();
      return Formula::disj(std::move(l), parse_or());
    }
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    if (lex_.tok() == Tok::And) {
      lex_.advance();
      return Formula::conj(std::move(l), parse_and());
    }
    return l;
  }

  Formula parse_unary() {
    if (lex_.tok() == Tok::Not) {
      lex_.advance();
      return Formula::neg(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (lex_.tok()) {
      case Tok::Ident: {
        Formula f = Formula::var(lex_.ident());
        lex_.advance();
        return f;
      }
      case Tok::BotKw: lex_.advance(); return Formula::bot();
      case Tok::TopKw: lex_.advance(); return Formula::top();
      case Tok::LParen: {
        lex_.advance();
        Formula f = parse_imp();
        if (lex_.tok() != Tok::RParen)
          throw ParseError(lex_.tok_offset(),
                           std::string("expected ')', found ") + tok_name(lex_.tok()));
        lex_.advance();
        return f;
      }
      default:
        throw ParseError(lex_.tok_offset(),
                         std::string("expected identifier, 'bot', 'top', '~' or '(', found ") +
                             tok_name(lex_.tok()));
    }
  }

  Lexer lex_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Grammar levels, loosest to tightest: imp(0) < or(1) < and(2) < unary(3).
// Atoms sit above all of them.
constexpr int kImp = 0, kOr = 1, kAnd = 2, kUnary = 3, kAtom = 4;

void print_rec(const Formula& f, int required, std::string& out) {
  if (f.is_bot()) {
    out += "bot";
    return;
  }
  if (f.is_var()) {
    out += f.var_name().name;
    return;
  }
  if (f.is_top()) {
    out += "top";
    return;
  }
  if (f.is_neg()) {
    out += '~';
    print_rec(f.lhs(), kUnary, out);
    return;
  }
  int level;
  const char* op;
  int left_level, right_level;
  switch (f.kind()) {
    case Formula::Kind::Conj: level = kAnd; op = " & "; left_level = kUnary; right_level = kAnd; break;
    case Formula::Kind::Disj: level = kOr; op = " | "; left_level = kAnd; right_level = kOr; break;
    default: level = kImp; op = " -> "; left_level = kOr; right_level = kImp; break;
  }
  bool parens = level < required;
  if (parens) out += '(';
  print_rec(f.lhs(), left_level, out);
  out += op;
  print_rec(f.rhs(), right_level, out);
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_rec(f, kImp, out);
  return out;
}

namespace {

void collect_vars(const Formula& f, std::vector<VarName>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      for (const VarName& v : out)
        if (v == f.var_name()) return;
      out.push_back(f.var_name());
      return;
    }
    case Formula::Kind::Bot: return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
  }
}

}  // namespace

std::vector<VarName> variables_of(const Formula& f) {
  std::vector<VarName> out;
  collect_vars(f, out);
  return out;
}

}  // namespace propkit
