#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "itriple/numtheory.hpp"

namespace itriple {

// Permutation of {0, ..., degree-1}, stored as its image table.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::uint32_t degree);
  // Cycle notation helper: points not mentioned are fixed.
  static Perm from_cycles(std::uint32_t degree,
                          const std::vector<std::vector<std::uint32_t>> &cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t> &images() const { return img_; }
  Perm inverse() const;
  bool is_identity() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  std::vector<std::uint32_t> img_;
};

// (compose(p, q))(x) = p(q(x)).
Perm compose(const Perm &p, const Perm &q);

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept;
};

// Explicit finite permutation group: generators plus the full element closure
// in deterministic breadth-first order (identity first, generators in given
// order). A cap on the element count guards runaway closures.
class PermGroup {
public:
  PermGroup() = default;

  static PermGroup closure(std::uint32_t degree, std::vector<Perm> generators, u64 cap);
  // Builds a group from an explicit element set (must be closed); finds a
  // small generating set greedily.
  static PermGroup from_elements(std::uint32_t degree, const std::vector<Perm> &elements,
                                 u64 cap);

  std::uint32_t degree() const { return degree_; }
  u64 order() const { return elems_.size(); }
  const std::vector<Perm> &elements() const { return elems_; }
  const std::vector<Perm> &generators() const { return gens_; }
  bool contains(const Perm &p) const { return index_.count(p) != 0; }
  bool is_subgroup_of(const PermGroup &other) const;

private:
  std::uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_set<Perm, PermHash> index_;
};

// Ordered triple of subgroup indices; the decision problem's instance.
struct Triple {
  u64 a = 1, b = 1, c = 1;
  friend bool operator==(const Triple &, const Triple &) = default;
  friend auto operator<=>(const Triple &, const Triple &) = default;
};

std::string to_string(const Triple &t);

// (G, H, K) with H, K subgroups of G on the same point set.
struct GroupTriple {
  PermGroup G, H, K;
};

void validate_group_triple(const GroupTriple &t);
Triple triple_indices(const GroupTriple &t);

PermGroup trivial_group(std::uint32_t degree);
PermGroup symmetric_group(unsigned n, u64 cap);
PermGroup cyclic_group(unsigned n, u64 cap);
PermGroup subgroup_generated(const PermGroup &G, const std::vector<Perm> &gens, u64 cap);
PermGroup subgroup_intersection(const PermGroup &H, const PermGroup &K, u64 cap);
PermGroup stabilizer(const PermGroup &G, std::uint32_t point, u64 cap);
std::vector<std::uint32_t> orbit_of(const PermGroup &G, std::uint32_t point);

GroupTriple direct_product(const GroupTriple &t1, const GroupTriple &t2, u64 cap);

// G = Z/n ⋊ Z/p as affine maps x -> u^i x + j on Z/n, with u the smallest
// unit of multiplicative order p; H = Stab(0), K = Stab(1). Requires p prime
// with p | phi(n); indices come out as (n, n, np).
GroupTriple semidirect_affine(unsigned n, unsigned p, u64 cap);

// Action of G on sorted k-subsets of its point set, subsets ordered
// lexicographically.
PermGroup induced_action_on_ksubsets(const PermGroup &G, unsigned k, u64 cap);
// Lexicographic rank of a k-subset among all k-subsets of {0..degree-1}.
std::uint32_t ksubset_index(std::uint32_t degree, std::vector<std::uint32_t> subset);

} // namespace itriple
