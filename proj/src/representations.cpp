#include "cubemob/representations.hpp"

#include <stdexcept>

namespace cubemob {

namespace {

std::vector<int> mask_coords(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

}  // namespace

std::vector<int> SignedSet::pos_coords() const { return mask_coords(pos); }
std::vector<int> SignedSet::neg_coords() const { return mask_coords(neg); }

SignedSet to_signed_set(const Face& x) { return SignedSet{x.dim(), x.pos_mask(), x.neg_mask()}; }

Face from_signed_set(const SignedSet& s) {
  if (s.pos & s.neg) throw std::invalid_argument("from_signed_set: pos and neg must be disjoint");
  return Face::from_masks(s.n, s.pos, s.neg);
}

bool signed_set_leq(const SignedSet& a, const SignedSet& b) {
  if (a.n != b.n) throw std::invalid_argument("signed_set_leq: dimension mismatch");
  return (b.pos & ~a.pos) == 0 && (b.neg & ~a.neg) == 0;
}

IntervalPair to_interval_pair(const Face& x) {
  std::uint32_t full = Face::full_mask(x.dim());
  return IntervalPair{x.dim(), full & ~x.pos_mask(), full & ~x.neg_mask()};
}

Face from_interval_pair(const IntervalPair& p) {
  std::uint32_t full = Face::full_mask(p.n);
  if ((p.a | p.b) != full) throw std::invalid_argument("from_interval_pair: a v b must be the top");
  return Face::from_masks(p.n, full & ~p.a, full & ~p.b);
}

bool interval_leq(const IntervalPair& p, const IntervalPair& q) {
  if (p.n != q.n) throw std::invalid_argument("interval_leq: dimension mismatch");
  return (p.a & ~q.a) == 0 && (p.b & ~q.b) == 0;
}

IntervalPair interval_delta(const IntervalPair& p, const IntervalPair& q) {
  if (!interval_leq(q, p)) throw std::invalid_argument("interval_delta: second pair must lie below the first");
  std::uint32_t full = Face::full_mask(p.n);
  auto impl = [full](std::uint32_t u, std::uint32_t v) { return (full & ~u) | v; };
  return IntervalPair{p.n, p.a & impl(p.b, q.b), p.b & impl(p.a, q.a)};
}

}  // namespace cubemob
