#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace finsem {

// Subsets of carriers with at most 64 elements.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;
inline constexpr std::size_t kDefaultSizeCap = 6;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, std::size_t i) { return (m >> i) & 1u; }
constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

using Rng = std::mt19937_64;

// std::uniform_int_distribution is not reproducible across standard
// libraries; reports must be byte-identical under a fixed seed.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
  return n <= 1 ? 0 : rng() % n;
}

inline bool rand_bool(Rng& rng, std::uint32_t num, std::uint32_t den) {
  return rand_below(rng, den) < num;
}

// Union-find with least-index canonical representatives.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a; else parent_[a] = b;
  }

  std::size_t size() const { return parent_.size(); }

  // Representatives in increasing order plus element -> class index.
  std::pair<std::vector<int>, std::vector<int>> classes() const {
    std::vector<int> reps;
    std::vector<int> cls(parent_.size(), -1);
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(static_cast<int>(i)) == static_cast<int>(i)) {
        cls[i] = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
      }
    }
    for (std::size_t i = 0; i < parent_.size(); ++i)
      cls[i] = cls[find(static_cast<int>(i))];
    return {reps, cls};
  }

 private:
  mutable std::vector<int> parent_;
};

inline std::string join_strings(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace finsem
