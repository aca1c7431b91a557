#pragma once

// Finite posets, monotone maps and upper sets: the order layer every
// other module builds on.  Carriers are index-based with a stable order
// fixed by input order; element identifiers are strings.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsem/errors.hpp"
#include "finsem/util.hpp"

namespace finsem {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

class Poset {
 public:
  // Reflexive-transitive closure of the given cover pairs; rejects
  // closures that violate antisymmetry.
  static PosetPtr make(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& covers);

  // Adopts a full relation, validating reflexivity, transitivity and
  // antisymmetry as given.
  static PosetPtr from_leq(std::vector<std::string> elements,
                           std::vector<Mask> up_rows);

  static PosetPtr two();                  // the chain 0 ⊑ 1
  static PosetPtr point();
  static PosetPtr chain(std::size_t n);
  static PosetPtr discrete(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& e) const;          // throws UnknownElement
  std::optional<int> find(const std::string& e) const;

  bool leq(int a, int b) const { return has_bit(up_[a], b); }
  Mask up_of(int w) const { return up_[w]; }          // {v | w ⊑ v}
  Mask down_of(int w) const { return down_[w]; }      // {v | v ⊑ w}
  Mask carrier() const { return full_mask(size()); }

  bool is_upper(Mask s) const;
  Mask up_closure(Mask s) const;
  std::string mask_to_string(Mask s) const;           // e.g. {a,b}

  bool operator==(const Poset& o) const {
    return names_ == o.names_ && up_ == o.up_;
  }

 private:
  Poset(std::vector<std::string> names, std::vector<Mask> up);

  std::vector<std::string> names_;
  std::vector<Mask> up_;    // up_[w] = {v | w ⊑ v}
  std::vector<Mask> down_;  // transpose
};

inline bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  return a == b || *a == *b;
}

// Up-closed subset of a poset.
class UpperSet {
 public:
  UpperSet(PosetPtr carrier, Mask bits);   // validates up-closure
  const PosetPtr& carrier() const { return carrier_; }
  Mask bits() const { return bits_; }
  bool contains(int w) const { return has_bit(bits_, w); }
  std::string to_string() const { return carrier_->mask_to_string(bits_); }
  bool operator==(const UpperSet& o) const {
    return bits_ == o.bits_ && same_poset(carrier_, o.carrier_);
  }

 private:
  PosetPtr carrier_;
  Mask bits_;
};

class MonotoneMap {
 public:
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<int> assignment);
  static MonotoneMap identity(PosetPtr w);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  int operator()(int w) const { return map_[w]; }
  const std::vector<int>& assignment() const { return map_; }

 private:
  PosetPtr source_, target_;
  std::vector<int> map_;
};

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

PosetPtr opposite(const PosetPtr& w);
PosetPtr product_poset(const PosetPtr& a, const PosetPtr& b);  // pairs (a,b), componentwise order

UpperSet principal_upset(const PosetPtr& w, const std::string& e);
Mask principal_upset_mask(const Poset& w, int e);

// f is open iff whenever f(w) ⊑ v' there is w' ⊒ w with f(w') = v'.
bool is_open_map(const MonotoneMap& f);
bool is_surjective(const MonotoneMap& f);

std::vector<MonotoneMap> enumerate_monotone_maps(const PosetPtr& w, const PosetPtr& w2,
                                                 std::size_t cap = kDefaultSizeCap);

// All partial orders on n named elements (input order a, b, c, ...).
// Brute force over relation bitmasks; guarded at n <= 5.
std::vector<PosetPtr> all_posets(std::size_t n);

PosetPtr random_poset(Rng& rng, std::size_t n);
Mask random_upper_set(Rng& rng, const Poset& w);

}  // namespace finsem
