#include "cubemob/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cubemob {

SignedPerm::SignedPerm(std::vector<std::uint8_t> perm, std::uint32_t flip_mask)
    : perm_(std::move(perm)), flip_(flip_mask) {
  int n = static_cast<int>(perm_.size());
  if (n > Face::kMaxDim) throw std::invalid_argument("SignedPerm: dimension out of range");
  std::uint32_t seen = 0;
  for (std::uint8_t v : perm_) {
    if (v < 1 || v > n || (seen & (1u << (v - 1)))) throw std::invalid_argument("SignedPerm: not a permutation");
    seen |= 1u << (v - 1);
  }
  if ((flip_ & ~Face::full_mask(n)) != 0) throw std::invalid_argument("SignedPerm: flip mask out of range");
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), static_cast<std::uint8_t>(1));
  return SignedPerm(std::move(p), 0u);
}

Face SignedPerm::apply(const Face& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("SignedPerm::apply: dimension mismatch");
  std::uint32_t pos = 0, neg = 0;
  for (int i = 1; i <= dim(); ++i) {
    State s = x.at(i);
    if (s == State::Free) continue;
    bool plus = (s == State::Plus) == (sign(i) > 0);
    (plus ? pos : neg) |= 1u << (image(i) - 1);
  }
  return Face::from_masks(dim(), pos, neg);
}

std::string SignedPerm::str() const {
  std::string out = "pi=[";
  for (int i = 1; i <= dim(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(image(i));
  }
  out += "]; s=[";
  for (int i = 1; i <= dim(); ++i) {
    if (i > 1) out += ',';
    out += sign(i) > 0 ? '+' : '-';
  }
  out += ']';
  return out;
}

SignedPerm compose(const SignedPerm& phi, const SignedPerm& psi) {
  if (phi.dim() != psi.dim()) throw std::invalid_argument("compose: dimension mismatch");
  int n = phi.dim();
  std::vector<std::uint8_t> perm(n);
  std::uint32_t flip = 0;
  for (int i = 1; i <= n; ++i) {
    perm[i - 1] = static_cast<std::uint8_t>(phi.image(psi.image(i)));
    if (psi.sign(i) * phi.sign(psi.image(i)) < 0) flip |= 1u << (i - 1);
  }
  return SignedPerm(std::move(perm), flip);
}

SignedPerm inverse(const SignedPerm& phi) {
  int n = phi.dim();
  std::vector<std::uint8_t> perm(n);
  std::uint32_t flip = 0;
  for (int i = 1; i <= n; ++i) {
    perm[phi.image(i) - 1] = static_cast<std::uint8_t>(i);
    if (phi.sign(i) < 0) flip |= 1u << (phi.image(i) - 1);
  }
  return SignedPerm(std::move(perm), flip);
}

std::vector<SignedPerm> enumerate_aut(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_aut: supported range is 1 <= n <= 6");
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), static_cast<std::uint8_t>(1));
  std::vector<SignedPerm> out;
  do {
    for (std::uint32_t flip = 0; flip < (1u << n); ++flip) out.emplace_back(p, flip);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Face> coatoms(int n) {
  std::vector<Face> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(Face::from_masks(n, 0u, 1u << i));
    out.push_back(Face::from_masks(n, 1u << i, 0u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPerm extend_coatom_map(const std::map<Face, Face>& m) {
  if (m.empty()) throw std::invalid_argument("extend_coatom_map: empty map");
  int n = m.begin()->first.dim();
  auto all = coatoms(n);
  if (m.size() != all.size()) throw std::invalid_argument("extend_coatom_map: map must cover all 2n coatoms");

  std::set<Face> images;
  for (const Face& c : all) {
    auto it = m.find(c);
    if (it == m.end()) throw std::invalid_argument("extend_coatom_map: map must cover all 2n coatoms");
    if (it->second.dim() != n || it->second.corank() != 1)
      throw std::invalid_argument("extend_coatom_map: image is not a coatom");
    images.insert(it->second);
  }
  if (images.size() != all.size()) throw std::invalid_argument("extend_coatom_map: not a bijection");
  for (const Face& c : all)
    if (m.at(antipode(c)) != antipode(m.at(c)))
      throw std::invalid_argument("extend_coatom_map: map does not commute with the antipode");

  // The coatom fixing coordinate i to Plus determines where coordinate i
  // goes and with which sign; antipode-preservation makes this coherent.
  std::vector<std::uint8_t> perm(n);
  std::uint32_t flip = 0;
  for (int i = 1; i <= n; ++i) {
    Face img = m.at(Face::from_masks(n, 1u << (i - 1), 0u));
    int j = 1 + __builtin_ctz(img.fixed_mask());
    perm[i - 1] = static_cast<std::uint8_t>(j);
    if (img.at(j) == State::Minus) flip |= 1u << (i - 1);
  }
  return SignedPerm(std::move(perm), flip);
}

SignedPerm corank_transitive_witness(const Face& v1, const Face& v2) {
  if (v1.dim() != v2.dim()) throw std::invalid_argument("corank_transitive_witness: dimension mismatch");
  if (v1.corank() != v2.corank()) throw std::invalid_argument("corank_transitive_witness: corank mismatch");
  int n = v1.dim();

  // Match fixed supports in increasing coordinate order, free parts likewise.
  std::vector<int> src_fixed, src_free, dst_fixed, dst_free;
  for (int i = 1; i <= n; ++i) {
    (v1.at(i) == State::Free ? src_free : src_fixed).push_back(i);
    (v2.at(i) == State::Free ? dst_free : dst_fixed).push_back(i);
  }
  std::vector<std::uint8_t> perm(n);
  std::uint32_t flip = 0;
  for (std::size_t k = 0; k < src_fixed.size(); ++k) {
    int i = src_fixed[k], j = dst_fixed[k];
    perm[i - 1] = static_cast<std::uint8_t>(j);
    if (v1.at(i) != v2.at(j)) flip |= 1u << (i - 1);
  }
  for (std::size_t k = 0; k < src_free.size(); ++k)
    perm[src_free[k] - 1] = static_cast<std::uint8_t>(dst_free[k]);
  return SignedPerm(std::move(perm), flip);
}

BigInt aut_partition_product(const std::vector<std::vector<Face>>& partition, int n) {
  std::set<Face> seen;
  for (const auto& block : partition) {
    if (block.empty()) throw std::invalid_argument("aut_partition_product: empty block");
    std::set<Face> bs(block.begin(), block.end());
    for (const Face& c : bs) {
      if (c.dim() != n || c.corank() != 1) throw std::invalid_argument("aut_partition_product: not a coatom");
      if (!seen.insert(c).second) throw std::invalid_argument("aut_partition_product: blocks overlap");
      if (!bs.count(antipode(c))) throw std::invalid_argument("aut_partition_product: block not antipode-closed");
    }
  }
  if (seen.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("aut_partition_product: blocks do not cover the coatoms");

  BigInt result = 1;
  for (const auto& block : partition) {
    int half = static_cast<int>(std::set<Face>(block.begin(), block.end()).size()) / 2;
    result *= pow2(half) * factorial(half);
  }
  return result;
}

}  // namespace cubemob
