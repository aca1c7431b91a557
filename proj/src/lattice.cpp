#include "finsem/lattice.hpp"

#include <algorithm>

namespace finsem {

static std::vector<Mask> order_from_tables(const std::vector<std::vector<int>>& meet,
                                           std::size_t n) {
  std::vector<Mask> up(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (meet[a][b] == static_cast<int>(a)) up[a] |= bit(b);
  return up;
}

void FiniteLattice::finish_and_validate() {
  const std::size_t n = names_.size();
  if (n == 0) throw LatticeLawViolation("empty lattice");
  if (n > kMaxElements) throw SizeCapExceeded("lattice exceeds 64 elements");
  for (std::size_t a = 0; a < n; ++a) {
    if (!has_bit(up_[a], a)) throw LatticeLawViolation("order not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (has_bit(up_[a], b) && has_bit(up_[b], a) && a != b)
        throw LatticeLawViolation("order not antisymmetric");
      if (has_bit(up_[a], b) && !subset_of(up_[b], up_[a]))
        throw LatticeLawViolation("order not transitive");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int m = meet_[a][b], j = join_[a][b];
      // glb / lub against the order.
      if (!leq(m, static_cast<int>(a)) || !leq(m, static_cast<int>(b)))
        throw LatticeLawViolation("meet(" + names_[a] + "," + names_[b] + ") not a lower bound");
      if (!leq(static_cast<int>(a), j) || !leq(static_cast<int>(b), j))
        throw LatticeLawViolation("join(" + names_[a] + "," + names_[b] + ") not an upper bound");
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(static_cast<int>(c), static_cast<int>(a)) &&
            leq(static_cast<int>(c), static_cast<int>(b)) && !leq(static_cast<int>(c), m))
          throw LatticeLawViolation("meet(" + names_[a] + "," + names_[b] + ") not greatest");
        if (leq(static_cast<int>(a), static_cast<int>(c)) &&
            leq(static_cast<int>(b), static_cast<int>(c)) && !leq(j, static_cast<int>(c)))
          throw LatticeLawViolation("join(" + names_[a] + "," + names_[b] + ") not least");
      }
      if (meet_[b][a] != m || join_[b][a] != j)
        throw LatticeLawViolation("tables not commutative");
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (meet_[meet_[a][b]][c] != meet_[a][meet_[b][c]])
          throw LatticeLawViolation("meet not associative");
        if (join_[join_[a][b]][c] != join_[a][join_[b][c]])
          throw LatticeLawViolation("join not associative");
        // absorption comes with glb/lub correctness
      }
  // finite and validated, hence bounded
  int bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = meet_[bot][a];
    top = join_[top][a];
  }
  bottom_ = bot;
  top_ = top;
}

LatticePtr FiniteLattice::from_leq(std::vector<std::string> elements, std::vector<Mask> up_rows) {
  const std::size_t n = elements.size();
  auto l = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  l->names_ = std::move(elements);
  l->up_ = std::move(up_rows);
  l->meet_.assign(n, std::vector<int>(n, -1));
  l->join_.assign(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int m = -1, j = -1;
      for (std::size_t c = 0; c < n; ++c) {
        const bool lb = l->leq(static_cast<int>(c), static_cast<int>(a)) &&
                        l->leq(static_cast<int>(c), static_cast<int>(b));
        const bool ub = l->leq(static_cast<int>(a), static_cast<int>(c)) &&
                        l->leq(static_cast<int>(b), static_cast<int>(c));
        if (lb && (m < 0 || l->leq(m, static_cast<int>(c)))) m = static_cast<int>(c);
        if (ub && (j < 0 || l->leq(static_cast<int>(c), j))) j = static_cast<int>(c);
      }
      if (m < 0 || j < 0)
        throw LatticeLawViolation("pair (" + l->names_[a] + "," + l->names_[b] +
                                  ") lacks a meet or join");
      l->meet_[a][b] = m;
      l->join_[a][b] = j;
    }
  l->finish_and_validate();
  return l;
}

LatticePtr FiniteLattice::from_tables(std::vector<std::string> elements,
                                      std::vector<std::vector<int>> meet,
                                      std::vector<std::vector<int>> join) {
  auto l = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  const std::size_t n = elements.size();
  l->names_ = std::move(elements);
  l->meet_ = std::move(meet);
  l->join_ = std::move(join);
  if (l->meet_.size() != n || l->join_.size() != n)
    throw LatticeLawViolation("table size mismatch");
  l->up_ = order_from_tables(l->meet_, n);
  l->finish_and_validate();
  return l;
}

LatticePtr FiniteLattice::of_upsets(const UpsetLattice& u) {
  std::vector<std::string> names;
  std::vector<Mask> up(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    names.push_back(u.base()->mask_to_string(u.at(static_cast<int>(i))));
    for (std::size_t j = 0; j < u.size(); ++j)
      if (subset_of(u.at(static_cast<int>(i)), u.at(static_cast<int>(j)))) up[i] |= bit(j);
  }
  return from_leq(std::move(names), std::move(up));
}

int FiniteLattice::index_of(const std::string& e) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == e) return static_cast<int>(i);
  throw UnknownElement("unknown lattice element '" + e + "'");
}

int FiniteLattice::join_of(Mask subset) const {
  int acc = bottom_;
  for (std::size_t i = 0; i < size(); ++i)
    if (has_bit(subset, i)) acc = join_[acc][i];
  return acc;
}

int FiniteLattice::meet_of(Mask subset) const {
  int acc = top_;
  for (std::size_t i = 0; i < size(); ++i)
    if (has_bit(subset, i)) acc = meet_[acc][i];
  return acc;
}

bool is_prime(const FiniteLattice& l, int d) {
  if (d < 0 || static_cast<std::size_t>(d) >= l.size())
    throw UnknownElement("prime test on unknown element");
  Mask not_above = 0;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (!l.leq(d, static_cast<int>(x))) not_above |= bit(x);
  return !l.leq(d, l.join_of(not_above));
}

PosetPtr primes(const FiniteLattice& l) {
  std::vector<int> ps;
  for (std::size_t d = 0; d < l.size(); ++d)
    if (is_prime(l, static_cast<int>(d))) ps.push_back(static_cast<int>(d));
  std::vector<std::string> names;
  for (int p : ps) names.push_back(l.name(p));
  std::vector<Mask> up(ps.size(), 0);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (l.leq(ps[j], ps[i])) up[i] |= bit(j);   // reversed
  return Poset::from_leq(std::move(names), std::move(up));
}

static Mask primes_below(const FiniteLattice& l, const std::vector<int>& ps, int d) {
  Mask below = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (l.leq(ps[i], d)) below |= bit(i);
  return below;
}

bool is_prime_algebraic(const FiniteLattice& l) {
  std::vector<int> ps;
  for (std::size_t d = 0; d < l.size(); ++d)
    if (is_prime(l, static_cast<int>(d))) ps.push_back(static_cast<int>(d));
  for (std::size_t d = 0; d < l.size(); ++d) {
    Mask below = 0;
    for (int p : ps)
      if (l.leq(p, static_cast<int>(d))) below |= bit(p);
    if (l.join_of(below) != static_cast<int>(d)) return false;
  }
  return true;
}

Reconstruction reconstruct(const FiniteLattice& l) {
  if (!is_prime_algebraic(l))
    throw NotPrimeAlgebraic("lattice has an element that is not a join of primes");
  // 2^|primes| upper sets get enumerated; 20 primes is already far past
  // desk scale.
  Reconstruction r{primes(l), upper_sets(primes(l), 20), {}, {}};
  std::vector<int> ps;
  for (std::size_t d = 0; d < l.size(); ++d)
    if (is_prime(l, static_cast<int>(d))) ps.push_back(static_cast<int>(d));
  r.iso.resize(l.size());
  r.inverse.assign(r.upsets.size(), -1);
  for (std::size_t d = 0; d < l.size(); ++d) {
    const Mask s = primes_below(l, ps, static_cast<int>(d));
    if (!r.prime_poset->is_upper(s))
      throw LemmaCheckFailure("primes below an element fail to be up-closed");
    r.iso[d] = s;
    const int idx = r.upsets.index_of(s);
    if (r.inverse[idx] != -1) throw NotPrimeAlgebraic("reconstruction map is not injective");
    r.inverse[idx] = static_cast<int>(d);
  }
  for (int back : r.inverse)
    if (back < 0) throw NotPrimeAlgebraic("reconstruction map is not surjective");
  // order preserved both ways
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(static_cast<int>(a), static_cast<int>(b)) != subset_of(r.iso[a], r.iso[b]))
        throw NotPrimeAlgebraic("reconstruction is not an order isomorphism");
  return r;
}

LanPair lan_along_upset(const PosetPtr& w, const FiniteLattice& l,
                        const std::vector<int>& f, std::size_t cap) {
  if (f.size() != w->size()) throw Error("lan_along_upset: assignment size mismatch");
  for (std::size_t a = 0; a < w->size(); ++a)
    for (std::size_t b = 0; b < w->size(); ++b)
      if (w->leq(static_cast<int>(a), static_cast<int>(b)) && !l.leq(f[b], f[a]))
        throw NotMonotone("lan_along_upset: f is not monotone from Op(W)");
  LanPair out{upper_sets(w, cap), {}, {}};
  for (Mask s : out.dom.elements()) {
    Mask values = 0;
    for (std::size_t i = 0; i < w->size(); ++i)
      if (has_bit(s, i)) values |= bit(f[i]);
    out.lan.push_back(l.join_of(values));
  }
  out.nerve.resize(l.size());
  for (std::size_t d = 0; d < l.size(); ++d) {
    Mask s = 0;
    for (std::size_t i = 0; i < w->size(); ++i)
      if (l.leq(f[i], static_cast<int>(d))) s |= bit(i);
    out.nerve[d] = s;
  }
  // Lan f(↑w) = f(w) and the adjunction, exhaustively.
  for (std::size_t i = 0; i < w->size(); ++i)
    if (out.lan[out.dom.index_of(w->up_of(static_cast<int>(i)))] != f[i])
      throw LemmaCheckFailure("Lan f(↑w) differs from f(w)");
  for (std::size_t si = 0; si < out.dom.size(); ++si)
    for (std::size_t d = 0; d < l.size(); ++d)
      if (l.leq(out.lan[si], static_cast<int>(d)) !=
          subset_of(out.dom.at(static_cast<int>(si)), out.nerve[d]))
        throw LemmaCheckFailure("Lan ⊣ nerve adjunction fails");
  return out;
}

LatticePtr diamond_m3() {
  //      1
  //    / | \
  //   x  y  z
  //    \ | /
  //      0
  std::vector<std::string> names{"0", "x", "y", "z", "1"};
  std::vector<Mask> up(5, 0);
  up[0] = full_mask(5);
  up[1] = bit(1) | bit(4);
  up[2] = bit(2) | bit(4);
  up[3] = bit(3) | bit(4);
  up[4] = bit(4);
  return FiniteLattice::from_leq(std::move(names), std::move(up));
}

LatticePtr pentagon_n5() {
  // 0 < a < c < 1 and 0 < b < 1, with a,b and b,c incomparable.
  std::vector<std::string> names{"0", "a", "b", "c", "1"};
  std::vector<Mask> up(5, 0);
  up[0] = full_mask(5);
  up[1] = bit(1) | bit(3) | bit(4);
  up[2] = bit(2) | bit(4);
  up[3] = bit(3) | bit(4);
  up[4] = bit(4);
  return FiniteLattice::from_leq(std::move(names), std::move(up));
}

LatticePtr boolean_algebra(std::size_t atoms) {
  if (atoms > 5) throw SizeCapExceeded("boolean_algebra fixture capped at 2^5 elements");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> names;
  std::vector<Mask> up(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    names.push_back("s" + std::to_string(s));
    for (std::size_t t = 0; t < n; ++t)
      if ((s & ~t) == 0) up[s] |= bit(t);
  }
  return FiniteLattice::from_leq(std::move(names), std::move(up));
}

}  // namespace finsem
