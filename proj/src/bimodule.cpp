#include "finsem/bimodule.hpp"

namespace finsem {

static void validate_rows(const Poset& w1, const Poset& w2, const std::vector<Mask>& rows) {
  for (std::size_t w = 0; w < w1.size(); ++w) {
    if (!subset_of(rows[w], w2.carrier())) throw UnknownElement("bimodule row out of range");
    for (std::size_t v = 0; v < w2.size(); ++v) {
      if (!has_bit(rows[w], v)) continue;
      for (std::size_t wp = 0; wp < w1.size(); ++wp) {
        if (!w1.leq(static_cast<int>(wp), static_cast<int>(w))) continue;
        for (std::size_t vp = 0; vp < w2.size(); ++vp) {
          if (w2.leq(static_cast<int>(v), static_cast<int>(vp)) && !has_bit(rows[wp], vp))
            throw BimoduleLawViolation(
                "bimodule law fails: " + w1.name(static_cast<int>(wp)) + " ⊑ " +
                w1.name(static_cast<int>(w)) + " R " + w2.name(static_cast<int>(v)) + " ⊑ " +
                w2.name(static_cast<int>(vp)) + " requires " + w1.name(static_cast<int>(wp)) +
                " R " + w2.name(static_cast<int>(vp)));
        }
      }
    }
  }
}

static std::vector<Mask> rows_of_pairs(const Poset& w1, const Poset& w2,
                                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Mask> rows(w1.size(), 0);
  for (const auto& [a, b] : pairs) rows[w1.index_of(a)] |= bit(w2.index_of(b));
  return rows;
}

Bimodule Bimodule::make(PosetPtr source, PosetPtr target,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto rows = rows_of_pairs(*source, *target, pairs);
  validate_rows(*source, *target, rows);
  return Bimodule(std::move(source), std::move(target), std::move(rows));
}

Bimodule Bimodule::closure(PosetPtr source, PosetPtr target,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto seed = rows_of_pairs(*source, *target, pairs);
  std::vector<Mask> rows(source->size(), 0);
  for (std::size_t w = 0; w < source->size(); ++w)
    if (seed[w]) {
      const Mask up = target->up_closure(seed[w]);
      for (std::size_t wp = 0; wp < source->size(); ++wp)
        if (source->leq(static_cast<int>(wp), static_cast<int>(w))) rows[wp] |= up;
    }
  return Bimodule(std::move(source), std::move(target), std::move(rows));
}

Bimodule Bimodule::from_rows(PosetPtr source, PosetPtr target, std::vector<Mask> rows) {
  if (rows.size() != source->size()) throw Error("bimodule row count mismatch");
  validate_rows(*source, *target, rows);
  return Bimodule(std::move(source), std::move(target), std::move(rows));
}

Bimodule Bimodule::order(PosetPtr w) {
  std::vector<Mask> rows(w->size());
  for (std::size_t i = 0; i < w->size(); ++i) rows[i] = w->up_of(static_cast<int>(i));
  return Bimodule(w, w, std::move(rows));
}

Bimodule Bimodule::full(PosetPtr source, PosetPtr target) {
  std::vector<Mask> rows(source->size(), target->carrier());
  return Bimodule(std::move(source), target, std::move(rows));
}

Bimodule Bimodule::none(PosetPtr source, PosetPtr target) {
  std::vector<Mask> rows(source->size(), 0);
  return Bimodule(std::move(source), std::move(target), std::move(rows));
}

std::vector<std::pair<std::string, std::string>> Bimodule::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t w = 0; w < source_->size(); ++w)
    for (std::size_t v = 0; v < target_->size(); ++v)
      if (rel(static_cast<int>(w), static_cast<int>(v)))
        out.push_back({source_->name(static_cast<int>(w)), target_->name(static_cast<int>(v))});
  return out;
}

Mask dia_black_mask(const Bimodule& r, Mask s) {
  Mask out = 0;
  for (std::size_t v = 0; v < r.source()->size(); ++v)
    if (has_bit(s, v)) out |= r.row(static_cast<int>(v));
  return out;
}

Mask box_mask(const Bimodule& r, Mask s) {
  Mask out = 0;
  for (std::size_t w = 0; w < r.source()->size(); ++w)
    if (subset_of(r.row(static_cast<int>(w)), s)) out |= bit(w);
  return out;
}

static void require_endo_base(const Bimodule& r, const UpperSet& s) {
  if (!same_poset(s.carrier(), r.source()) || !same_poset(s.carrier(), r.target()))
    throw BaseMismatch("upper set lives on a different carrier than the bimodule");
}

UpperSet dia_black(const Bimodule& r, const UpperSet& s) {
  require_endo_base(r, s);
  return UpperSet(r.target(), dia_black_mask(r, s.bits()));
}

UpperSet box(const Bimodule& r, const UpperSet& s) {
  require_endo_base(r, s);
  return UpperSet(r.source(), box_mask(r, s.bits()));
}

Bimodule bimodule_from_adjunction(const UpsetLattice& up, const std::vector<int>& dia) {
  if (dia.size() != up.size()) throw Error("dia table size mismatch");
  if (up.at(dia[up.index_of(0)]) != 0)
    throw NotJoinPreserving("♦ does not preserve the empty join");
  for (std::size_t i = 0; i < up.size(); ++i)
    for (std::size_t j = 0; j < up.size(); ++j) {
      const Mask u = up.at(static_cast<int>(i)) | up.at(static_cast<int>(j));
      if (up.at(dia[up.index_of(u)]) !=
          (up.at(dia[i]) | up.at(dia[j])))
        throw NotJoinPreserving("♦ does not preserve a binary join");
    }
  const PosetPtr& w = up.base();
  std::vector<Mask> rows(w->size());
  for (std::size_t i = 0; i < w->size(); ++i)
    rows[i] = up.at(dia[up.index_of(w->up_of(static_cast<int>(i)))]);
  return Bimodule::from_rows(w, w, std::move(rows));
}

bool is_bimodule_morphism(const MonotoneMap& f, const Bimodule& r, const Bimodule& r2) {
  if (!same_poset(f.source(), r.source()) || !same_poset(f.target(), r2.source()))
    throw BaseMismatch("morphism carriers do not match the bimodules");
  for (std::size_t w = 0; w < r.source()->size(); ++w)
    for (std::size_t v = 0; v < r.target()->size(); ++v)
      if (r.rel(static_cast<int>(w), static_cast<int>(v)) &&
          !r2.rel(f(static_cast<int>(w)), f(static_cast<int>(v))))
        return false;
  return true;
}

bool box_morphism_route(const MonotoneMap& f, const Bimodule& r, const Bimodule& r2,
                        std::size_t cap) {
  // f*(□_{R'} T) ⊆ □_R(f* T) for all upper T.
  const UpsetLattice up2 = upper_sets(f.target(), cap);
  for (Mask t : up2.elements())
    if (!subset_of(preimage_mask(f, box_mask(r2, t)), box_mask(r, preimage_mask(f, t))))
      return false;
  return true;
}

bool modally_open_direct(const MonotoneMap& f, const Bimodule& r, const Bimodule& r2) {
  for (std::size_t w = 0; w < r.source()->size(); ++w)
    for (std::size_t v = 0; v < r2.target()->size(); ++v) {
      if (!r2.rel(f(static_cast<int>(w)), static_cast<int>(v))) continue;
      bool witnessed = false;
      const Mask successors = r.row(static_cast<int>(w));
      for (std::size_t wp = 0; wp < r.target()->size() && !witnessed; ++wp)
        if (has_bit(successors, wp) &&
            r2.target()->leq(f(static_cast<int>(wp)), static_cast<int>(v)))
          witnessed = true;
      if (!witnessed) return false;
    }
  return true;
}

bool modally_open_box_route(const MonotoneMap& f, const Bimodule& r, const Bimodule& r2,
                            std::size_t cap) {
  const UpsetLattice up2 = upper_sets(f.target(), cap);
  for (Mask t : up2.elements())
    if (box_mask(r, preimage_mask(f, t)) != preimage_mask(f, box_mask(r2, t))) return false;
  return true;
}

bool modally_open_dia_route(const MonotoneMap& f, const Bimodule& r, const Bimodule& r2,
                            std::size_t cap) {
  const UpsetLattice up1 = upper_sets(f.source(), cap);
  for (Mask s : up1.elements())
    if (direct_image_mask(f, dia_black_mask(r, s)) !=
        dia_black_mask(r2, direct_image_mask(f, s)))
      return false;
  return true;
}

bool is_modally_open(const MonotoneMap& f, const Bimodule& r, const Bimodule& r2,
                     std::size_t cap) {
  if (!is_bimodule_morphism(f, r, r2))
    throw NotABimoduleMorphism("modal openness asked of a map that is not a bimodule morphism");
  const bool direct = modally_open_direct(f, r, r2);
  const bool via_box = modally_open_box_route(f, r, r2, cap);
  const bool via_dia = modally_open_dia_route(f, r, r2, cap);
  if (direct != via_box || direct != via_dia)
    throw LemmaCheckFailure("modal openness characterizations disagree: direct=" +
                            std::to_string(direct) + " box=" + std::to_string(via_box) +
                            " dia=" + std::to_string(via_dia));
  return direct;
}

std::vector<Bimodule> enumerate_bimodules(const PosetPtr& w1, const PosetPtr& w2,
                                          std::size_t cap) {
  if (w1->size() > cap || w2->size() > cap)
    throw SizeCapExceeded("enumerate_bimodules: carrier exceeds cap " + std::to_string(cap));
  if (w1->size() * w2->size() > 25)
    throw SizeCapExceeded("enumerate_bimodules walks 2^(|W1|·|W2|) subsets; product too large");
  const PosetPtr prod = product_poset(opposite(w1), w2);
  const UpsetLattice subsets = upper_sets(prod, 25);
  std::vector<Bimodule> out;
  out.reserve(subsets.size());
  const std::size_t m = w2->size();
  for (Mask s : subsets.elements()) {
    std::vector<Mask> rows(w1->size(), 0);
    for (std::size_t w = 0; w < w1->size(); ++w)
      for (std::size_t v = 0; v < m; ++v)
        if (has_bit(s, w * m + v)) rows[w] |= bit(v);
    out.push_back(Bimodule::from_rows(w1, w2, std::move(rows)));
  }
  return out;
}

Bimodule random_bimodule(Rng& rng, const PosetPtr& w) {
  std::vector<Mask> seed(w->size());
  for (std::size_t i = 0; i < w->size(); ++i)
    seed[i] = rand_below(rng, w->carrier() + 1) & rand_below(rng, w->carrier() + 1);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < w->size(); ++a)
    for (std::size_t b = 0; b < w->size(); ++b)
      if (has_bit(seed[a], b)) pairs.push_back({w->name(static_cast<int>(a)), w->name(static_cast<int>(b))});
  return Bimodule::closure(w, w, pairs);
}

}  // namespace finsem
