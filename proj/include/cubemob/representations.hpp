#pragma once

#include <cstdint>
#include <vector>

#include "cubemob/face.hpp"

namespace cubemob {

// A signed subset of {1..n}: two disjoint coordinate sets. Ordered by
// reverse pointwise inclusion, this poset is another copy of the face
// semilattice (pos/neg collect the Plus/Minus coordinates).
struct SignedSet {
  int n = 0;
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;

  std::vector<int> pos_coords() const;
  std::vector<int> neg_coords() const;

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

SignedSet to_signed_set(const Face& x);
Face from_signed_set(const SignedSet& s);

// Reverse pointwise inclusion: a <= b iff a.pos >= b.pos and a.neg >= b.neg.
bool signed_set_leq(const SignedSet& a, const SignedSet& b);

// The pair representation over the Boolean lattice of subsets of {1..n}:
// pairs <a, b> with a v b = 1, ordered componentwise. A face maps to the
// pair of complements of its Plus set and of its Minus set.
struct IntervalPair {
  int n = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

IntervalPair to_interval_pair(const Face& x);
Face from_interval_pair(const IntervalPair& p);

bool interval_leq(const IntervalPair& p, const IntervalPair& q);

// The reflection on pairs: for q <= p,
//   delta(p, q) = <a /\ (b -> d), b /\ (a -> c)>
// with p = <a,b>, q = <c,d> and -> Boolean implication.
IntervalPair interval_delta(const IntervalPair& p, const IntervalPair& q);

}  // namespace cubemob
