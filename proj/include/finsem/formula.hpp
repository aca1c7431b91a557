#pragma once

// Formula AST for intuitionistic modal logic and its concrete syntax.
//
// Grammar:
//   formula := or ('->' formula)?          right associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := ('box' | 'dia' | '~') unary | atom
//   atom    := 'true' | 'false' | ident | '(' formula ')'
//
// box and dia bind tightest; '~p' is sugar for 'p -> false'.

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "finsem/errors.hpp"
#include "finsem/util.hpp"

namespace finsem {

enum class Conn { Bottom, Top, Var, And, Or, Imp, Box, DiaBlack };

class Formula {
 public:
  static Formula bottom();
  static Formula top();
  static Formula var(std::string name);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula dia(Formula a);

  Conn kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula child() const { return Formula(node_->left); }

  bool is_modal() const;
  std::size_t depth() const;
  std::set<std::string> variables() const;
  std::string to_string() const;

  bool operator==(const Formula& o) const;

  // stable identity for memo tables
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Conn kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula parse_formula(const std::string& text);

// Deterministic exhaustive enumeration of formulas with the given
// variables up to the given depth (atoms have depth 0).
std::vector<Formula> all_formulas(std::size_t max_depth, const std::vector<std::string>& vars,
                                  std::size_t limit = 2'000'000);

Formula random_formula(Rng& rng, std::size_t max_depth, const std::vector<std::string>& vars,
                       bool allow_modal = true);

}  // namespace finsem
