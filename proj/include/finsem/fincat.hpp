#pragma once

// Finite categories with named arrows and an explicit composition
// table, functors between them, and the idempotent analysis (Karoubi
// envelope, Hemelaer condition, spacelike, retractional surjectivity).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "finsem/poset.hpp"

namespace finsem {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

struct ArrowSpec {
  std::string name;
  std::string src, dst;
};

class FinCategory {
 public:
  // Validates identity laws, totality of composition on composable
  // pairs, and associativity, each with a witness on failure.  When
  // `ids` is empty, identity arrows named id_<obj> are created.
  static CatPtr make(std::vector<std::string> objects, std::vector<ArrowSpec> arrows,
                     const std::map<std::string, std::string>& ids,
                     const std::vector<std::array<std::string, 3>>& compose);

  std::size_t objects() const { return object_names_.size(); }
  std::size_t arrows() const { return arrow_names_.size(); }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& arrow_names() const { return arrow_names_; }
  const std::string& object_name(int o) const { return object_names_[o]; }
  const std::string& arrow_name(int a) const { return arrow_names_[a]; }
  int object_index(const std::string& name) const;   // throws UnknownObject
  int arrow_index(const std::string& name) const;    // throws UnknownArrow

  int src(int a) const { return src_[a]; }
  int dst(int a) const { return dst_[a]; }
  int id_of(int o) const { return id_[o]; }
  bool is_identity(int a) const { return id_[src_[a]] == a; }

  // g ∘ f, defined when dst(f) = src(g)
  int compose(int g, int f) const;
  const std::vector<int>& hom(int w, int v) const { return hom_[w][v]; }

  bool operator==(const FinCategory& o) const {
    return object_names_ == o.object_names_ && arrow_names_ == o.arrow_names_ &&
           src_ == o.src_ && dst_ == o.dst_ && id_ == o.id_ && table_ == o.table_;
  }

 private:
  FinCategory() = default;
  void validate() const;
  void build_hom();

  std::vector<std::string> object_names_, arrow_names_;
  std::vector<int> src_, dst_, id_;
  std::vector<std::vector<int>> table_;              // table_[g][f] = g∘f or -1
  std::vector<std::vector<std::vector<int>>> hom_;   // hom_[w][v] = arrow indices

  friend CatPtr make_category_raw(std::vector<std::string>, std::vector<std::string>,
                                  std::vector<int>, std::vector<int>, std::vector<int>,
                                  std::vector<std::vector<int>>);
};

CatPtr make_category_raw(std::vector<std::string> objects, std::vector<std::string> arrows,
                         std::vector<int> src, std::vector<int> dst, std::vector<int> id,
                         std::vector<std::vector<int>> table);

inline bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || *a == *b; }

CatPtr opposite_category(const CatPtr& c);
CatPtr product_category(const CatPtr& a, const CatPtr& b);   // objects/arrows are pairs

// A poset as a thin category with one arrow per related pair.
CatPtr poset_as_category(const PosetPtr& w);

class FinFunctor {
 public:
  FinFunctor(CatPtr source, CatPtr target, std::vector<int> obj_map, std::vector<int> arr_map);
  static FinFunctor identity(CatPtr c);

  const CatPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  int on_object(int o) const { return obj_map_[o]; }
  int on_arrow(int a) const { return arr_map_[a]; }
  const std::vector<int>& object_map() const { return obj_map_; }
  const std::vector<int>& arrow_map() const { return arr_map_; }

  bool is_full() const;
  bool is_faithful() const;
  bool is_essentially_surjective() const;

 private:
  CatPtr source_, target_;
  std::vector<int> obj_map_, arr_map_;
};

FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

// Functor between product categories built componentwise.
FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g);

// Monotone map as a functor between the poset categories.
FinFunctor monotone_as_functor(const MonotoneMap& f, const CatPtr& src_cat, const CatPtr& dst_cat);

std::vector<int> idempotents(const FinCategory& c);
bool is_cauchy_complete(const FinCategory& c);
bool hemelaer_check(const FinCategory& c);
bool is_spacelike(const FinCategory& c);

struct Karoubi {
  CatPtr envelope;
  FinFunctor embedding;                      // w -> id_w
  std::vector<int> object_idempotent;        // envelope object -> arrow of the base
};

// Karoubi envelope: objects are idempotents, Hom(p,q) = {a | q∘a∘p = a}.
Karoubi cauchy_completion(const CatPtr& c);

bool is_retractionally_surjective(const FinFunctor& f);

// All functors C -> D; bounded backtracking over object and arrow
// assignments.  Exponential in the source size.
std::vector<FinFunctor> enumerate_functors(const CatPtr& c, const CatPtr& d,
                                           std::size_t budget = 4'000'000);

// Equivalence by bounded search for a full, faithful, retractionally
// surjective functor; exact for Cauchy-complete categories.
bool equivalent_by_search(const CatPtr& c, const CatPtr& d, std::size_t budget = 4'000'000);

// All isomorphisms pairing hom-sets; used by fixture checks.
bool isomorphic_categories(const CatPtr& c, const CatPtr& d, std::size_t budget = 4'000'000);

}  // namespace finsem
