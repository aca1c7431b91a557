#include "finsem/poset.hpp"

#include <algorithm>
#include <map>

namespace finsem {

Poset::Poset(std::vector<std::string> names, std::vector<Mask> up)
    : names_(std::move(names)), up_(std::move(up)), down_(names_.size(), 0) {
  for (std::size_t w = 0; w < names_.size(); ++w)
    for (std::size_t v = 0; v < names_.size(); ++v)
      if (has_bit(up_[w], v)) down_[v] |= bit(w);
}

static void check_distinct(const std::vector<std::string>& names) {
  if (names.size() > kMaxElements)
    throw SizeCapExceeded("poset carrier exceeds " + std::to_string(kMaxElements) + " elements");
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw DuplicateElement("duplicate element '" + *dup + "'");
}

PosetPtr Poset::make(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers) {
  check_distinct(elements);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  const std::size_t n = elements.size();
  std::vector<Mask> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw UnknownElement("unknown element '" + a + "' in cover");
    if (ib == index.end()) throw UnknownElement("unknown element '" + b + "' in cover");
    up[ia->second] |= bit(ib->second);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (has_bit(up[i], k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (has_bit(up[i], j) && has_bit(up[j], i))
        throw AntisymmetryViolation("closure relates " + elements[i] + " ⊑ " + elements[j] +
                                    " ⊑ " + elements[i]);
  return PosetPtr(new Poset(std::move(elements), std::move(up)));
}

PosetPtr Poset::from_leq(std::vector<std::string> elements, std::vector<Mask> up_rows) {
  check_distinct(elements);
  const std::size_t n = elements.size();
  if (up_rows.size() != n) throw Error("leq row count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!subset_of(up_rows[i], full_mask(n))) throw Error("leq row out of range");
    if (!has_bit(up_rows[i], i)) throw Error("leq not reflexive at " + elements[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (has_bit(up_rows[i], j) && !subset_of(up_rows[j], up_rows[i]))
        throw Error("leq not transitive at " + elements[i] + " ⊑ " + elements[j]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (has_bit(up_rows[i], j) && has_bit(up_rows[j], i))
        throw AntisymmetryViolation("relation relates " + elements[i] + " ⊑ " + elements[j] +
                                    " ⊑ " + elements[i]);
  return PosetPtr(new Poset(std::move(elements), std::move(up_rows)));
}

PosetPtr Poset::two() { return make({"0", "1"}, {{"0", "1"}}); }
PosetPtr Poset::point() { return make({"*"}, {}); }

static std::string nth_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "w" + std::to_string(i);
}

PosetPtr Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) names.push_back(nth_name(i));
  for (std::size_t i = 0; i + 1 < n; ++i) covers.push_back({names[i], names[i + 1]});
  return make(std::move(names), covers);
}

PosetPtr Poset::discrete(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(nth_name(i));
  return make(std::move(names), {});
}

int Poset::index_of(const std::string& e) const {
  auto i = find(e);
  if (!i) throw UnknownElement("unknown element '" + e + "'");
  return *i;
}

std::optional<int> Poset::find(const std::string& e) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == e) return static_cast<int>(i);
  return std::nullopt;
}

bool Poset::is_upper(Mask s) const {
  for (std::size_t w = 0; w < size(); ++w)
    if (has_bit(s, w) && !subset_of(up_[w], s)) return false;
  return true;
}

Mask Poset::up_closure(Mask s) const {
  Mask out = 0;
  for (std::size_t w = 0; w < size(); ++w)
    if (has_bit(s, w)) out |= up_[w];
  return out;
}

std::string Poset::mask_to_string(Mask s) const {
  std::vector<std::string> xs;
  for (std::size_t w = 0; w < size(); ++w)
    if (has_bit(s, w)) xs.push_back(names_[w]);
  return "{" + join_strings(xs, ",") + "}";
}

UpperSet::UpperSet(PosetPtr carrier, Mask bits) : carrier_(std::move(carrier)), bits_(bits) {
  if (!subset_of(bits_, carrier_->carrier()))
    throw UnknownElement("upper set mentions elements outside the carrier");
  if (!carrier_->is_upper(bits_))
    throw Error("subset " + carrier_->mask_to_string(bits_) + " is not up-closed");
}

MonotoneMap::MonotoneMap(PosetPtr source, PosetPtr target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
  if (map_.size() != source_->size()) throw Error("assignment size mismatch");
  for (int v : map_)
    if (v < 0 || static_cast<std::size_t>(v) >= target_->size())
      throw UnknownElement("assignment hits element outside the target");
  for (std::size_t w = 0; w < source_->size(); ++w)
    for (std::size_t v = 0; v < source_->size(); ++v)
      if (source_->leq(static_cast<int>(w), static_cast<int>(v)) && !target_->leq(map_[w], map_[v]))
        throw NotMonotone("map is not monotone at " + source_->name(static_cast<int>(w)) +
                          " ⊑ " + source_->name(static_cast<int>(v)));
}

MonotoneMap MonotoneMap::identity(PosetPtr w) {
  std::vector<int> id(w->size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  return MonotoneMap(w, w, std::move(id));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!same_poset(f.target(), g.source())) throw BaseMismatch("composite of non-composable maps");
  std::vector<int> h(f.source()->size());
  for (std::size_t w = 0; w < h.size(); ++w) h[w] = g(f(static_cast<int>(w)));
  return MonotoneMap(f.source(), g.target(), std::move(h));
}

PosetPtr opposite(const PosetPtr& w) {
  std::vector<Mask> up(w->size());
  for (std::size_t i = 0; i < w->size(); ++i) up[i] = w->down_of(static_cast<int>(i));
  return Poset::from_leq(w->elements(), std::move(up));
}

PosetPtr product_poset(const PosetPtr& a, const PosetPtr& b) {
  const std::size_t n = a->size(), m = b->size();
  if (n * m > kMaxElements) throw SizeCapExceeded("product poset exceeds 64 elements");
  std::vector<std::string> names;
  names.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      names.push_back("(" + a->name(static_cast<int>(i)) + "," + b->name(static_cast<int>(j)) + ")");
  std::vector<Mask> up(n * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (a->leq(static_cast<int>(i), static_cast<int>(k)) &&
              b->leq(static_cast<int>(j), static_cast<int>(l)))
            up[i * m + j] |= bit(k * m + l);
  return Poset::from_leq(std::move(names), std::move(up));
}

Mask principal_upset_mask(const Poset& w, int e) { return w.up_of(e); }

UpperSet principal_upset(const PosetPtr& w, const std::string& e) {
  return UpperSet(w, w->up_of(w->index_of(e)));
}

bool is_open_map(const MonotoneMap& f) {
  const Poset& w = *f.source();
  const Poset& w2 = *f.target();
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t v = 0; v < w2.size(); ++v) {
      if (!w2.leq(f(static_cast<int>(a)), static_cast<int>(v))) continue;
      bool lifted = false;
      Mask above = w.up_of(static_cast<int>(a));
      for (std::size_t b = 0; b < w.size() && !lifted; ++b)
        if (has_bit(above, b) && f(static_cast<int>(b)) == static_cast<int>(v)) lifted = true;
      if (!lifted) return false;
    }
  }
  return true;
}

bool is_surjective(const MonotoneMap& f) {
  Mask image = 0;
  for (std::size_t w = 0; w < f.source()->size(); ++w) image |= bit(f(static_cast<int>(w)));
  return image == f.target()->carrier();
}

std::vector<MonotoneMap> enumerate_monotone_maps(const PosetPtr& w, const PosetPtr& w2,
                                                 std::size_t cap) {
  if (w->size() > cap || w2->size() > cap)
    throw SizeCapExceeded("enumerate_monotone_maps: carrier exceeds cap " + std::to_string(cap));
  std::vector<MonotoneMap> out;
  std::vector<int> image(w->size(), -1);
  const std::size_t n = w->size(), m = w2->size();
  if (m == 0) {
    if (n == 0) out.push_back(MonotoneMap(w, w2, {}));
    return out;
  }
  // Backtracking in element order; monotonicity checked against
  // already-assigned positions.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(MonotoneMap(w, w2, image));
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      image[i] = static_cast<int>(v);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (w->leq(static_cast<int>(j), static_cast<int>(i)) &&
            !w2->leq(image[j], image[i])) ok = false;
        if (w->leq(static_cast<int>(i), static_cast<int>(j)) &&
            !w2->leq(image[i], image[j])) ok = false;
      }
      if (ok) self(self, i + 1);
    }
    image[i] = -1;
  };
  rec(rec, 0);
  return out;
}

std::vector<PosetPtr> all_posets(std::size_t n) {
  if (n > 5) throw SizeCapExceeded("all_posets is exhaustive only up to 5 elements");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(nth_name(i));
  std::vector<PosetPtr> out;
  if (n == 0) {
    out.push_back(Poset::from_leq({}, {}));
    return out;
  }
  const std::size_t pairs = n * (n - 1);
  std::vector<std::pair<int, int>> pair_at;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pair_at.push_back({static_cast<int>(i), static_cast<int>(j)});
  for (Mask rel = 0; rel < (Mask{1} << pairs); ++rel) {
    std::vector<Mask> up(n, 0);
    for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
    bool antisym = true;
    for (std::size_t p = 0; p < pairs && antisym; ++p) {
      if (!has_bit(rel, p)) continue;
      auto [i, j] = pair_at[p];
      if (has_bit(up[j], i)) antisym = false;
      up[i] |= bit(j);
    }
    if (!antisym) continue;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if (has_bit(up[i], j) && !subset_of(up[j], up[i])) transitive = false;
    if (!transitive) continue;
    out.push_back(Poset::from_leq(names, std::move(up)));
  }
  return out;
}

PosetPtr random_poset(Rng& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(nth_name(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rand_bool(rng, 1, 3)) covers.push_back({names[i], names[j]});
  return Poset::make(std::move(names), covers);
}

Mask random_upper_set(Rng& rng, const Poset& w) {
  return w.up_closure(rand_below(rng, w.carrier() + 1));
}

}  // namespace finsem
