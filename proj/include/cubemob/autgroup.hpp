#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubemob/face.hpp"
#include "cubemob/int_math.hpp"

namespace cubemob {

// An automorphism of the face semilattice: a coordinate permutation combined
// with per-coordinate sign flips (the hyperoctahedral group, 2^n n! elements).
//
// Convention: signs act before the permutation, so coordinate perm(i) of
// the image carries sign(i) * x_i. All derived counts are
// convention-independent.
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(std::vector<std::uint8_t> perm, std::uint32_t flip_mask);

  static SignedPerm identity(int n);

  int dim() const { return static_cast<int>(perm_.size()); }
  int image(int coord) const { return perm_[coord - 1]; }          // 1-based
  int sign(int coord) const { return (flip_ >> (coord - 1)) & 1u ? -1 : +1; }
  std::uint32_t flip_mask() const { return flip_; }

  Face apply(const Face& x) const;

  // Text form for CLI echo, e.g. "pi=[2,1,3]; s=[+,-,+]".
  std::string str() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.perm_ != b.perm_ ? a.perm_ < b.perm_ : a.flip_ < b.flip_;
  }

 private:
  std::vector<std::uint8_t> perm_;  // perm_[i-1] = image of coordinate i
  std::uint32_t flip_ = 0;          // bit i-1 set: sign -1 on coordinate i
};

inline Face apply(const SignedPerm& phi, const Face& x) { return phi.apply(x); }

// apply(compose(phi, psi), x) == apply(phi, apply(psi, x)).
SignedPerm compose(const SignedPerm& phi, const SignedPerm& psi);
SignedPerm inverse(const SignedPerm& phi);

// All 2^n n! automorphisms, ordered lexicographically by (one-line
// permutation, sign word). Guarded to n <= 6.
std::vector<SignedPerm> enumerate_aut(int n);

// The 2n coatoms (corank-1 faces) in canonical order.
std::vector<Face> coatoms(int n);

// Canonical extension of an antipode-preserving bijection of the coatoms to
// a full automorphism. Throws if the map is not such a bijection.
SignedPerm extend_coatom_map(const std::map<Face, Face>& m);

// An automorphism taking v1 to v2; requires equal coranks.
SignedPerm corank_transitive_witness(const Face& v1, const Face& v2);

// For a partition of the coatom set into antipode-closed blocks, the number
// of automorphisms preserving every block: prod over blocks of 2^(|X|/2) (|X|/2)!.
BigInt aut_partition_product(const std::vector<std::vector<Face>>& partition, int n);

}  // namespace cubemob
