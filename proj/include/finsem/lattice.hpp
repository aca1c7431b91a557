#pragma once

// Abstract finite lattices with explicit meet/join tables, prime
// elements, prime algebraicity, and the Raney-style reconstruction of
// a prime algebraic lattice as an upper-set lattice.

#include <memory>
#include <string>
#include <vector>

#include "finsem/upset.hpp"

namespace finsem {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

class FiniteLattice {
 public:
  // Derives meet/join from the order; rejects orders where some pair
  // lacks a least upper or greatest lower bound.
  static LatticePtr from_leq(std::vector<std::string> elements, std::vector<Mask> up_rows);

  // Explicit tables, validated against the lattice laws and the order
  // they induce.
  static LatticePtr from_tables(std::vector<std::string> elements,
                                std::vector<std::vector<int>> meet,
                                std::vector<std::vector<int>> join);

  static LatticePtr of_upsets(const UpsetLattice& l);   // names are {a,b,...} strings

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& e) const;

  bool leq(int a, int b) const { return has_bit(up_[a], b); }
  Mask up_of(int d) const { return up_[d]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int join_of(Mask subset) const;
  int meet_of(Mask subset) const;

 private:
  FiniteLattice() = default;
  void finish_and_validate();

  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<std::vector<int>> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

// d is prime iff d ⊑ ⋁X forces d ⊑ x for some x ∈ X.  Equivalently
// (finite case): not d ⊑ ⋁{x | not d ⊑ x}; the subset form is kept as
// a test oracle.
bool is_prime(const FiniteLattice& l, int d);

// Prime elements as a poset under the *reverse* of the lattice order,
// so that primes(upper_sets(W)) is isomorphic to W on the nose.
PosetPtr primes(const FiniteLattice& l);

bool is_prime_algebraic(const FiniteLattice& l);

struct Reconstruction {
  PosetPtr prime_poset;             // primes(L)
  UpsetLattice upsets;              // Up(primes(L))
  std::vector<Mask> iso;            // lattice index -> upper set of primes
  std::vector<int> inverse;         // upset index -> lattice index
};

// Raney/NPW: every prime algebraic lattice is an upper-set lattice.
// Throws NotPrimeAlgebraic otherwise.
Reconstruction reconstruct(const FiniteLattice& l);

// Lan of a monotone f : Op(W) -> L along principal upper sets:
// Lan f(S) = ⋁{f(w) | w ∈ S}, with right adjoint d -> {w | f(w) ⊑ d}.
// Requires w ⊑ v to imply f(v) ⊑ f(w).
struct LanPair {
  UpsetLattice dom;                 // Up(W)
  std::vector<int> lan;             // by upset index, into L
  std::vector<Mask> nerve;          // by lattice index, upper set of W
};

LanPair lan_along_upset(const PosetPtr& w, const FiniteLattice& l,
                        const std::vector<int>& f, std::size_t cap = kDefaultSizeCap);

// Fixture lattices for negative tests.
LatticePtr diamond_m3();
LatticePtr pentagon_n5();
LatticePtr boolean_algebra(std::size_t atoms);

}  // namespace finsem
