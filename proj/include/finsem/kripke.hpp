#pragma once

// One-dimensional Kripke models: pointwise satisfaction, the algebraic
// interpretation in Up(W), and the cross-checks tying the two together.

#include <map>
#include <optional>

#include "finsem/bimodule.hpp"
#include "finsem/formula.hpp"

namespace finsem {

class KripkeModel {
 public:
  KripkeModel(PosetPtr frame, std::optional<Bimodule> rel,
              std::map<std::string, Mask> valuation);

  const PosetPtr& frame() const { return frame_; }
  const std::optional<Bimodule>& rel() const { return rel_; }
  const std::map<std::string, Mask>& valuation() const { return valuation_; }
  Mask value_of(const std::string& var) const;   // throws UnknownVariable
  int world(const std::string& name) const;      // throws UnknownWorld

 private:
  PosetPtr frame_;
  std::optional<Bimodule> rel_;
  std::map<std::string, Mask> valuation_;
};

// The inductive satisfaction relation, evaluated pointwise with the
// quantifier clauses (not through Up(W)); memoized per (world,
// subformula) within one query.
bool kripke_sat(const KripkeModel& m, int world, const Formula& f);
bool kripke_sat(const KripkeModel& m, const std::string& world, const Formula& f);

// Compositional evaluation in Up(W) through the Heyting and modal
// operations.
Mask interpret_mask(const KripkeModel& m, const Formula& f);
UpperSet interpret(const KripkeModel& m, const Formula& f);

// Asserts that pointwise satisfaction matches membership in the
// interpretation at every world.  A failure is an implementation bug,
// reported as EquivalenceFailure with the offending world.
bool theorem_equiv_check(const KripkeModel& m, const Formula& f);

// Truth at all worlds under all valuations of the variables occurring
// in the formula (valuations range over upper sets per variable).
bool frame_valid(const PosetPtr& w, const std::optional<Bimodule>& rel, const Formula& f,
                 std::size_t cap = kDefaultSizeCap);

// Alternate box clause in the style of Plotkin-Stirling-Simpson:
// w ⊨ □φ iff every v with w' R v for some w' ⊒ w satisfies φ.
// Exercised by the experimental pss-equiv suite only.
bool kripke_sat_pss(const KripkeModel& m, int world, const Formula& f);

}  // namespace finsem
