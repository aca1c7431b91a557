#include "finsem/kripke.hpp"

#include <unordered_map>

namespace finsem {

KripkeModel::KripkeModel(PosetPtr frame, std::optional<Bimodule> rel,
                         std::map<std::string, Mask> valuation)
    : frame_(std::move(frame)), rel_(std::move(rel)), valuation_(std::move(valuation)) {
  if (rel_ && !(same_poset(rel_->source(), frame_) && same_poset(rel_->target(), frame_)))
    throw BaseMismatch("accessibility relation lives on a different frame");
  for (const auto& [var, val] : valuation_) {
    if (!subset_of(val, frame_->carrier()))
      throw UnknownElement("valuation of '" + var + "' mentions unknown worlds");
    if (!frame_->is_upper(val))
      throw Error("valuation of '" + var + "' is not up-closed");
  }
}

Mask KripkeModel::value_of(const std::string& var) const {
  auto it = valuation_.find(var);
  if (it == valuation_.end()) throw UnknownVariable("no valuation for variable '" + var + "'");
  return it->second;
}

int KripkeModel::world(const std::string& name) const {
  auto i = frame_->find(name);
  if (!i) throw UnknownWorld("unknown world '" + name + "'");
  return *i;
}

namespace {

struct SatMemo {
  const KripkeModel& m;
  std::unordered_map<const void*, std::vector<signed char>> memo;

  bool eval(int w, const Formula& f) {
    auto& row = memo[f.id()];
    if (row.empty()) row.assign(m.frame()->size(), -1);
    if (row[w] >= 0) return row[w] != 0;
    const bool out = compute(w, f);
    row[w] = out ? 1 : 0;
    return out;
  }

  bool compute(int w, const Formula& f) {
    const Poset& frame = *m.frame();
    switch (f.kind()) {
      case Conn::Bottom: return false;
      case Conn::Top: return true;
      case Conn::Var: return has_bit(m.value_of(f.var_name()), w);
      case Conn::And: return eval(w, f.left()) && eval(w, f.right());
      case Conn::Or: return eval(w, f.left()) || eval(w, f.right());
      case Conn::Imp: {
        const Formula a = f.left(), b = f.right();
        const Mask above = frame.up_of(w);
        for (std::size_t v = 0; v < frame.size(); ++v)
          if (has_bit(above, v) && eval(static_cast<int>(v), a) && !eval(static_cast<int>(v), b))
            return false;
        return true;
      }
      case Conn::Box: {
        const Bimodule& r = require_rel();
        const Formula a = f.child();
        const Mask successors = r.row(w);
        for (std::size_t v = 0; v < frame.size(); ++v)
          if (has_bit(successors, v) && !eval(static_cast<int>(v), a)) return false;
        return true;
      }
      case Conn::DiaBlack: {
        const Bimodule& r = require_rel();
        const Formula a = f.child();
        for (std::size_t v = 0; v < frame.size(); ++v)
          if (r.rel(static_cast<int>(v), w) && eval(static_cast<int>(v), a)) return true;
        return false;
      }
    }
    throw Error("unreachable formula kind");
  }

  const Bimodule& require_rel() {
    if (!m.rel())
      throw NoAccessibilityRelation("modal connective evaluated on a model without a relation");
    return *m.rel();
  }
};

}  // namespace

bool kripke_sat(const KripkeModel& m, int world, const Formula& f) {
  if (world < 0 || static_cast<std::size_t>(world) >= m.frame()->size())
    throw UnknownWorld("world index out of range");
  SatMemo memo{m, {}};
  return memo.eval(world, f);
}

bool kripke_sat(const KripkeModel& m, const std::string& world, const Formula& f) {
  return kripke_sat(m, m.world(world), f);
}

Mask interpret_mask(const KripkeModel& m, const Formula& f) {
  const Poset& w = *m.frame();
  switch (f.kind()) {
    case Conn::Bottom: return 0;
    case Conn::Top: return w.carrier();
    case Conn::Var: return m.value_of(f.var_name());
    case Conn::And: return interpret_mask(m, f.left()) & interpret_mask(m, f.right());
    case Conn::Or: return interpret_mask(m, f.left()) | interpret_mask(m, f.right());
    case Conn::Imp: return up_imp(w, interpret_mask(m, f.left()), interpret_mask(m, f.right()));
    case Conn::Box:
      if (!m.rel()) throw NoAccessibilityRelation("□ interpreted without a relation");
      return box_mask(*m.rel(), interpret_mask(m, f.child()));
    case Conn::DiaBlack:
      if (!m.rel()) throw NoAccessibilityRelation("♦ interpreted without a relation");
      return dia_black_mask(*m.rel(), interpret_mask(m, f.child()));
  }
  throw Error("unreachable formula kind");
}

UpperSet interpret(const KripkeModel& m, const Formula& f) {
  return UpperSet(m.frame(), interpret_mask(m, f));
}

bool theorem_equiv_check(const KripkeModel& m, const Formula& f) {
  const Mask algebraic = interpret_mask(m, f);
  for (std::size_t w = 0; w < m.frame()->size(); ++w)
    if (kripke_sat(m, static_cast<int>(w), f) != has_bit(algebraic, w))
      throw EquivalenceFailure("satisfaction and interpretation disagree at world " +
                               m.frame()->name(static_cast<int>(w)) + " for " + f.to_string());
  return true;
}

bool frame_valid(const PosetPtr& w, const std::optional<Bimodule>& rel, const Formula& f,
                 std::size_t cap) {
  if (w->size() > cap) throw SizeCapExceeded("frame_valid: frame exceeds cap");
  const std::set<std::string> vars = f.variables();
  if (vars.size() > 4) throw SizeCapExceeded("frame_valid: too many variables");
  const UpsetLattice up = upper_sets(w, cap);
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::size_t> choice(names.size(), 0);
  while (true) {
    std::map<std::string, Mask> valuation;
    for (std::size_t i = 0; i < names.size(); ++i)
      valuation[names[i]] = up.at(static_cast<int>(choice[i]));
    const KripkeModel m(w, rel, std::move(valuation));
    for (std::size_t world = 0; world < w->size(); ++world)
      if (!kripke_sat(m, static_cast<int>(world), f)) return false;
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < up.size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return true;
}

bool kripke_sat_pss(const KripkeModel& m, int world, const Formula& f) {
  const Poset& frame = *m.frame();
  switch (f.kind()) {
    case Conn::Bottom: return false;
    case Conn::Top: return true;
    case Conn::Var: return has_bit(m.value_of(f.var_name()), world);
    case Conn::And: return kripke_sat_pss(m, world, f.left()) && kripke_sat_pss(m, world, f.right());
    case Conn::Or: return kripke_sat_pss(m, world, f.left()) || kripke_sat_pss(m, world, f.right());
    case Conn::Imp: {
      const Mask above = frame.up_of(world);
      for (std::size_t v = 0; v < frame.size(); ++v)
        if (has_bit(above, v) && kripke_sat_pss(m, static_cast<int>(v), f.left()) &&
            !kripke_sat_pss(m, static_cast<int>(v), f.right()))
          return false;
      return true;
    }
    case Conn::Box: {
      if (!m.rel()) throw NoAccessibilityRelation("□ evaluated without a relation");
      const Mask above = frame.up_of(world);
      for (std::size_t wp = 0; wp < frame.size(); ++wp) {
        if (!has_bit(above, wp)) continue;
        const Mask successors = m.rel()->row(static_cast<int>(wp));
        for (std::size_t v = 0; v < frame.size(); ++v)
          if (has_bit(successors, v) && !kripke_sat_pss(m, static_cast<int>(v), f.child()))
            return false;
      }
      return true;
    }
    case Conn::DiaBlack: {
      if (!m.rel()) throw NoAccessibilityRelation("♦ evaluated without a relation");
      for (std::size_t v = 0; v < frame.size(); ++v)
        if (m.rel()->rel(static_cast<int>(v), world) && kripke_sat_pss(m, static_cast<int>(v), f.child()))
          return true;
      return false;
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace finsem
