#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cubemob/face.hpp"

namespace cubemob {

// One block of a signed partial partition: a set of coordinates that move
// together, with a sign pattern. `plus` is the subset of `coords` carrying
// Plus; the pattern is canonical when the lowest coordinate carries Plus
// (a block and its negation describe the same coatom pair).
struct Block {
  std::uint32_t coords = 0;
  std::uint32_t plus = 0;

  friend bool operator==(const Block&, const Block&) = default;
  friend bool operator<(const Block& a, const Block& b) {
    return a.coords != b.coords ? a.coords < b.coords : a.plus < b.plus;
  }
};

// An MR-subalgebra of the face semilattice, stored structurally as a signed
// partial partition of the coordinates. Its materialization has 3^k faces
// (k = number of blocks) and is closed under join, delta and caret.
class MRSubalgebra {
 public:
  MRSubalgebra() = default;

  static MRSubalgebra trivial(int n) { return MRSubalgebra(n, {}); }
  static MRSubalgebra full(int n);
  static MRSubalgebra from_blocks(int n, std::vector<Block> blocks);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(blocks_.size()); }  // k
  std::uint32_t support() const;
  int corank() const { return __builtin_popcount(support()); }  // r
  const std::vector<Block>& blocks() const { return blocks_; }

  // Compact text form, e.g. "12:+-|3:+"; the trivial subalgebra is "{1}".
  std::string str() const;

  friend bool operator==(const MRSubalgebra&, const MRSubalgebra&) = default;
  friend bool operator<(const MRSubalgebra& a, const MRSubalgebra& b);

 private:
  MRSubalgebra(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;  // disjoint, canonical signs, sorted by lowest coordinate
};

// The type of a subalgebra: t[i-1] counts blocks of size i. Derived
// quantities: r = sum i*t_i (vertex corank), k = sum t_i (dimension).
struct TypeVector {
  int n = 0;
  std::vector<int> t;  // length n, index i-1 for block size i

  int r() const;
  int k() const;
  std::string str() const;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend bool operator<(const TypeVector& a, const TypeVector& b) {
    return a.n != b.n ? a.n < b.n : a.t < b.t;
  }
};

TypeVector type_of(const MRSubalgebra& alg);

// All type vectors with r <= n, canonically ordered.
std::vector<TypeVector> all_types(int n);

// A canonical representative subalgebra of the given type (blocks packed
// onto the lowest coordinates, all-Plus sign patterns).
MRSubalgebra representative_of_type(const TypeVector& type);

// The 3^k faces of the subalgebra, sorted canonically.
std::vector<Face> materialize(const MRSubalgebra& alg);

// Least superset of G u {top} closed under join, delta (comparable pairs)
// and caret.
std::set<Face> generated_closure(const std::set<Face>& generators);

// All MR-subalgebras, duplicate-free in canonical order. Structural; n <= 6.
std::vector<MRSubalgebra> enumerate_subalgebras(int n);

// Independent oracle: the distinct generated closures over small face
// subsets (all subsets for n <= 2, subsets of size <= 3 for n = 3; every
// subalgebra is generated by at most dim-many of its vertices). n <= 3.
std::vector<std::vector<Face>> enumerate_by_closure(int n);

// Structural recovery of a subalgebra from its (closed) face set.
MRSubalgebra subalgebra_from_faces(int n, const std::set<Face>& faces);

// inner subset of outer, decided structurally: every inner block splits as
// a disjoint union of outer blocks with matching signs up to block negation.
bool includes(const MRSubalgebra& inner, const MRSubalgebra& outer);

// Boolean sum of (c v a) and (d v a) inside the Boolean interval [a, 1].
Face plus_in_interval(const Face& c, const Face& d, const Face& a);

// An implication sublattice of the lower interval [0, 1] (0 = all-Minus
// vertex): a Boolean subalgebra of [min B, 1], stored as the fixed support
// of its minimum plus the partition of that support into atom blocks.
class ImpSublattice {
 public:
  ImpSublattice() = default;
  ImpSublattice(int n, std::uint32_t support, std::vector<std::uint32_t> parts);

  static ImpSublattice trivial(int n) { return ImpSublattice(n, 0u, {}); }
  static ImpSublattice boolean_full(int n);

  int ambient_dim() const { return n_; }
  std::uint32_t support() const { return support_; }
  const std::vector<std::uint32_t>& parts() const { return parts_; }
  int dim() const { return static_cast<int>(parts_.size()); }
  bool is_boolean() const { return support_ == Face::full_mask(n_); }

  Face min_face() const { return Face::from_masks(n_, 0u, support_); }
  bool contains(const Face& x) const;
  std::vector<Face> materialize() const;  // 2^dim faces, sorted

  std::string str() const;  // e.g. "12|3"; the trivial sublattice is "{1}"

  friend bool operator==(const ImpSublattice&, const ImpSublattice&) = default;
  friend bool operator<(const ImpSublattice& a, const ImpSublattice& b);

 private:
  int n_ = 0;
  std::uint32_t support_ = 0;
  std::vector<std::uint32_t> parts_;  // disjoint, nonempty, union = support, sorted
};

// Structural inclusion test (every part of inner is a union of outer parts);
// agrees with inclusion of the materialized sets.
bool imp_includes(const ImpSublattice& inner, const ImpSublattice& outer);

// All implication sublattices of [0, 1], canonically ordered. n <= 5.
std::vector<ImpSublattice> enumerate_imp_sublattices(int n);

// Boolean implication inside [0, 1].
Face impl_arrow(const Face& x, const Face& y);

// Closure of a nonempty subset of [0, 1] under -> and /\ (the test oracle
// for the structural representation).
std::set<Face> impl_closure(const std::set<Face>& generators);

// A face c >= min B together with an implication sublattice B. Locator
// pairs name MR-subalgebras, non-uniquely.
struct LocatorPair {
  Face c;
  ImpSublattice B;

  std::string str() const;
};

LocatorPair make_locator(const Face& c, const ImpSublattice& B);  // validates

// The subalgebra named by a pair: translate B toward the vertex
// a = delta(c, min B) and close.
MRSubalgebra locate(const LocatorPair& pair);

// The canonical pair locating a given subalgebra (least vertex in face
// order). locate(locator_of(A)) == A.
LocatorPair locator_of(const MRSubalgebra& alg);

// Inclusion of the located subalgebras, decided on the pairs themselves:
// B1 included in B2 and c1 +_{min B1} c2 a member of B2.
bool pair_leq(const LocatorPair& p1, const LocatorPair& p2);
bool pair_equiv(const LocatorPair& p1, const LocatorPair& p2);

// <c, B> |-> <c, B*>, B* the subalgebra of [min B, 1] generated by B u {c}
// (each atom block of B splits along the support of c).
LocatorPair pair_closure(const LocatorPair& pair);
bool is_closed(const LocatorPair& pair);

}  // namespace cubemob
