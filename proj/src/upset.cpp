#include "finsem/upset.hpp"

#include <algorithm>

namespace finsem {

UpsetLattice UpsetLattice::enumerate(PosetPtr base, std::size_t cap) {
  if (base->size() > cap)
    throw SizeCapExceeded("upper_sets: |W| = " + std::to_string(base->size()) +
                          " exceeds cap " + std::to_string(cap));
  std::vector<Mask> elems;
  const Mask full = base->carrier();
  for (Mask s = 0;; ++s) {
    if (base->is_upper(s)) elems.push_back(s);
    if (s == full) break;
  }
  return UpsetLattice(std::move(base), std::move(elems));
}

UpsetLattice upper_sets(PosetPtr w, std::size_t cap) {
  return UpsetLattice::enumerate(std::move(w), cap);
}

int UpsetLattice::index_of(Mask s) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), s);
  if (it == elems_.end() || *it != s)
    throw UnknownElement("not an upper set of the base: " + base_->mask_to_string(s));
  return static_cast<int>(it - elems_.begin());
}

Mask preimage_mask(const MonotoneMap& f, Mask s2) {
  Mask out = 0;
  for (std::size_t w = 0; w < f.source()->size(); ++w)
    if (has_bit(s2, f(static_cast<int>(w)))) out |= bit(w);
  return out;
}

Mask direct_image_mask(const MonotoneMap& f, Mask s) {
  Mask image = 0;
  for (std::size_t w = 0; w < f.source()->size(); ++w)
    if (has_bit(s, w)) image |= bit(f(static_cast<int>(w)));
  return f.target()->up_closure(image);
}

Mask universal_image_mask(const MonotoneMap& f, Mask s) {
  Mask out = 0;
  for (std::size_t v = 0; v < f.target()->size(); ++v)
    if (subset_of(preimage_mask(f, f.target()->up_of(static_cast<int>(v))), s)) out |= bit(v);
  return out;
}

AdjointTriple adjoint_triple(const MonotoneMap& f, std::size_t cap) {
  AdjointTriple t{upper_sets(f.source(), cap), upper_sets(f.target(), cap), {}, {}, {}};
  for (Mask s : t.dom.elements()) {
    t.lower.push_back(direct_image_mask(f, s));
    t.upper.push_back(universal_image_mask(f, s));
  }
  for (Mask s2 : t.cod.elements()) t.middle.push_back(preimage_mask(f, s2));
  // f_! ⊣ f* and f* ⊣ f_*, pointwise over both lattices.
  for (std::size_t i = 0; i < t.dom.size(); ++i)
    for (std::size_t j = 0; j < t.cod.size(); ++j) {
      const Mask s = t.dom.at(static_cast<int>(i)), s2 = t.cod.at(static_cast<int>(j));
      if (subset_of(t.lower[i], s2) != subset_of(s, t.middle[j]))
        throw LemmaCheckFailure("f_! ⊣ f* fails at " + f.source()->mask_to_string(s));
      if (subset_of(t.middle[j], s) != subset_of(s2, t.upper[i]))
        throw LemmaCheckFailure("f* ⊣ f_* fails at " + f.target()->mask_to_string(s2));
    }
  return t;
}

std::pair<bool, bool> open_iff_exponential_check(const MonotoneMap& f, std::size_t cap) {
  const bool open_direct = is_open_map(f);
  const bool surj_direct = is_surjective(f);

  const UpsetLattice up2 = upper_sets(f.target(), cap);
  bool preserves_imp = true;
  for (Mask x : up2.elements()) {
    for (Mask y : up2.elements()) {
      const Mask lhs = preimage_mask(f, up_imp(*f.target(), x, y));
      const Mask rhs = up_imp(*f.source(), preimage_mask(f, x), preimage_mask(f, y));
      if (lhs != rhs) { preserves_imp = false; break; }
    }
    if (!preserves_imp) break;
  }
  bool injective = true;
  for (std::size_t i = 0; i < up2.size() && injective; ++i)
    for (std::size_t j = i + 1; j < up2.size() && injective; ++j)
      if (preimage_mask(f, up2.at(static_cast<int>(i))) ==
          preimage_mask(f, up2.at(static_cast<int>(j))))
        injective = false;

  if (open_direct != preserves_imp)
    throw LemmaCheckFailure("open-map lemma routes disagree: direct=" +
                            std::to_string(open_direct) + " exponential=" +
                            std::to_string(preserves_imp));
  if (surj_direct != injective)
    throw LemmaCheckFailure("surjectivity lemma routes disagree");
  return {open_direct, surj_direct};
}

}  // namespace finsem
