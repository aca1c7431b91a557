#pragma once

// The complete Heyting algebra Up(W) of upper sets of a finite poset,
// plus the three order-level Kan-extension constructions along a
// monotone map: preimage f*, its adjoints f_! and f_*, and Lan along
// principal upper sets.

#include <functional>
#include <vector>

#include "finsem/poset.hpp"

namespace finsem {

// Heyting implication in Up(W): {w | ∀v ⊒ w, v ∈ x implies v ∈ y}.
inline Mask up_imp(const Poset& w, Mask x, Mask y) {
  Mask out = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if ((w.up_of(static_cast<int>(i)) & x & ~y) == 0) out |= bit(i);
  return out;
}

// All upper sets of a poset, ordered by inclusion.  Element order is
// ascending mask order, which is deterministic in the carrier order.
class UpsetLattice {
 public:
  static UpsetLattice enumerate(PosetPtr base, std::size_t cap = kDefaultSizeCap);

  const PosetPtr& base() const { return base_; }
  const std::vector<Mask>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  Mask at(int i) const { return elems_[i]; }
  int index_of(Mask s) const;               // throws UnknownElement

  Mask top() const { return base_->carrier(); }
  static Mask bottom() { return 0; }
  static Mask meet(Mask x, Mask y) { return x & y; }
  static Mask join(Mask x, Mask y) { return x | y; }
  Mask imp(Mask x, Mask y) const { return up_imp(*base_, x, y); }

 private:
  UpsetLattice(PosetPtr base, std::vector<Mask> elems)
      : base_(std::move(base)), elems_(std::move(elems)) {}
  PosetPtr base_;
  std::vector<Mask> elems_;
};

UpsetLattice upper_sets(PosetPtr w, std::size_t cap = kDefaultSizeCap);

// preimage(f): Up(W') -> Up(W), S' -> f⁻¹(S').
Mask preimage_mask(const MonotoneMap& f, Mask s2);

// f_!(S) = up-closure of the image f(S).
Mask direct_image_mask(const MonotoneMap& f, Mask s);

// f_*(S) = {v' | f⁻¹(↑v') ⊆ S}.
Mask universal_image_mask(const MonotoneMap& f, Mask s);

// The essential triple f_! ⊣ f* ⊣ f_* over enumerated lattices;
// adjunction inequalities are verified at construction.
struct AdjointTriple {
  UpsetLattice dom;                 // Up(W)
  UpsetLattice cod;                 // Up(W')
  std::vector<Mask> lower;          // f_! by dom index
  std::vector<Mask> middle;         // f*  by cod index
  std::vector<Mask> upper;          // f_* by dom index
};

AdjointTriple adjoint_triple(const MonotoneMap& f, std::size_t cap = kDefaultSizeCap);

// Lan of a monotone f : Op(W) -> L along principal upper sets, with its
// right adjoint.  `values` maps carrier index w to a lattice element of
// L given by an abstract join operation; this header only needs the
// Up(W)-valued special case, the general lattice case lives with
// FiniteLattice in lattice.hpp.

// Lemma double route: returns (open?, surjective?) where each verdict
// is computed both relationally and through f*; route disagreement
// raises LemmaCheckFailure.
std::pair<bool, bool> open_iff_exponential_check(const MonotoneMap& f,
                                                 std::size_t cap = kDefaultSizeCap);

}  // namespace finsem
