#include "finsem/formula.hpp"

#include <algorithm>
#include <cctype>

namespace finsem {

Formula Formula::bottom() {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Bottom;
  return Formula(std::move(n));
}

Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Top;
  return Formula(std::move(n));
}

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Var;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::And;
  n->left = a.node_;
  n->right = b.node_;
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Or;
  n->left = a.node_;
  n->right = b.node_;
  return Formula(std::move(n));
}

Formula Formula::imp(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Imp;
  n->left = a.node_;
  n->right = b.node_;
  return Formula(std::move(n));
}

Formula Formula::box(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::Box;
  n->left = a.node_;
  return Formula(std::move(n));
}

Formula Formula::dia(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Conn::DiaBlack;
  n->left = a.node_;
  return Formula(std::move(n));
}

bool Formula::is_modal() const {
  switch (kind()) {
    case Conn::Bottom:
    case Conn::Top:
    case Conn::Var:
      return false;
    case Conn::Box:
    case Conn::DiaBlack:
      return true;
    default:
      return left().is_modal() || right().is_modal();
  }
}

std::size_t Formula::depth() const {
  switch (kind()) {
    case Conn::Bottom:
    case Conn::Top:
    case Conn::Var:
      return 0;
    case Conn::Box:
    case Conn::DiaBlack:
      return 1 + child().depth();
    default:
      return 1 + std::max(left().depth(), right().depth());
  }
}

static void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Conn::Bottom:
    case Conn::Top:
      return;
    case Conn::Var:
      out.insert(f.var_name());
      return;
    case Conn::Box:
    case Conn::DiaBlack:
      collect_vars(f.child(), out);
      return;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
  }
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  collect_vars(*this, out);
  return out;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Conn::Bottom:
    case Conn::Top:
      return true;
    case Conn::Var:
      return var_name() == o.var_name();
    case Conn::Box:
    case Conn::DiaBlack:
      return child() == o.child();
    default:
      return left() == o.left() && right() == o.right();
  }
}

// precedence levels: imp 0, or 1, and 2, unary 3, atom 4
static int prec(Conn k) {
  switch (k) {
    case Conn::Imp: return 0;
    case Conn::Or: return 1;
    case Conn::And: return 2;
    case Conn::Box:
    case Conn::DiaBlack: return 3;
    default: return 4;
  }
}

static void print(const Formula& f, int context, std::string& out) {
  const int p = prec(f.kind());
  const bool parens = p < context;
  if (parens) out += "(";
  switch (f.kind()) {
    case Conn::Bottom: out += "false"; break;
    case Conn::Top: out += "true"; break;
    case Conn::Var: out += f.var_name(); break;
    case Conn::And:
      print(f.left(), 2, out);
      out += " & ";
      print(f.right(), 3, out);
      break;
    case Conn::Or:
      print(f.left(), 1, out);
      out += " | ";
      print(f.right(), 2, out);
      break;
    case Conn::Imp:
      print(f.left(), 1, out);   // '->' is right associative
      out += " -> ";
      print(f.right(), 0, out);
      break;
    case Conn::Box:
    case Conn::DiaBlack: {
      out += f.kind() == Conn::Box ? "box" : "dia";
      const Formula c = f.child();
      if (prec(c.kind()) >= 3) {
        out += " ";
        print(c, 3, out);
      } else {
        out += "(";
        print(c, 0, out);
        out += ")";
      }
      break;
    }
  }
  if (parens) out += ")";
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string peek_word() {
    skip_ws();
    std::size_t end = pos;
    while (end < text.size() && ident_char(text[end])) ++end;
    return text.substr(pos, end - pos);
  }

  Formula parse_formula() {
    Formula lhs = parse_or();
    skip_ws();
    if (eat("->")) return Formula::imp(std::move(lhs), parse_formula());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (true) {
      skip_ws();
      // '|' but make sure we are not at '->' handled above
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        lhs = Formula::disj(std::move(lhs), parse_and());
      } else {
        return lhs;
      }
    }
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '&') {
        ++pos;
        lhs = Formula::conj(std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    const std::string word = peek_word();
    if (word == "box") {
      pos += 3;
      return Formula::box(parse_unary());
    }
    if (word == "dia") {
      pos += 3;
      return Formula::dia(parse_unary());
    }
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      return Formula::imp(parse_unary(), Formula::bottom());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of formula", pos);
    if (text[pos] == '(') {
      ++pos;
      Formula inner = parse_formula();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')'", pos);
      ++pos;
      return inner;
    }
    const std::string word = peek_word();
    if (word.empty())
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    if (std::isdigit(static_cast<unsigned char>(word[0])))
      throw ParseError("identifier cannot start with a digit", pos);
    pos += word.size();
    if (word == "true") return Formula::top();
    if (word == "false") return Formula::bottom();
    return Formula::var(word);
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p{text};
  Formula f = p.parse_formula();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input after formula", p.pos);
  return f;
}

std::vector<Formula> all_formulas(std::size_t max_depth, const std::vector<std::string>& vars,
                                  std::size_t limit) {
  std::vector<Formula> atoms;
  atoms.push_back(Formula::bottom());
  atoms.push_back(Formula::top());
  for (const auto& v : vars) atoms.push_back(Formula::var(v));
  std::vector<Formula> current = atoms;  // every formula of depth <= d
  for (std::size_t d = 0; d < max_depth; ++d) {
    std::vector<Formula> next = atoms;
    for (const Formula& f : current) {
      next.push_back(Formula::box(f));
      next.push_back(Formula::dia(f));
    }
    for (const Formula& a : current)
      for (const Formula& b : current) {
        next.push_back(Formula::conj(a, b));
        next.push_back(Formula::disj(a, b));
        next.push_back(Formula::imp(a, b));
        if (next.size() > limit)
          throw SizeCapExceeded("all_formulas exceeds " + std::to_string(limit) + " formulas");
      }
    current = std::move(next);
  }
  return current;
}

Formula random_formula(Rng& rng, std::size_t max_depth, const std::vector<std::string>& vars,
                       bool allow_modal) {
  const std::uint64_t leaf = rand_below(rng, max_depth == 0 ? 1 : 3);
  if (max_depth == 0 || leaf == 0) {
    const std::uint64_t k = rand_below(rng, vars.size() + 2);
    if (k == 0) return Formula::bottom();
    if (k == 1) return Formula::top();
    return Formula::var(vars[k - 2]);
  }
  const std::uint64_t k = rand_below(rng, allow_modal ? 5 : 3);
  switch (k) {
    case 0:
      return Formula::conj(random_formula(rng, max_depth - 1, vars, allow_modal),
                           random_formula(rng, max_depth - 1, vars, allow_modal));
    case 1:
      return Formula::disj(random_formula(rng, max_depth - 1, vars, allow_modal),
                           random_formula(rng, max_depth - 1, vars, allow_modal));
    case 2:
      return Formula::imp(random_formula(rng, max_depth - 1, vars, allow_modal),
                          random_formula(rng, max_depth - 1, vars, allow_modal));
    case 3:
      return Formula::box(random_formula(rng, max_depth - 1, vars, allow_modal));
    default:
      return Formula::dia(random_formula(rng, max_depth - 1, vars, allow_modal));
  }
}

}  // namespace finsem
