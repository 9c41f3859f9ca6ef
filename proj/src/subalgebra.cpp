#include "cubemob/subalgebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cubemob {

namespace {

std::string mask_digits(std::uint32_t mask) {
  std::string s;
  for (int i = 1; mask; ++i, mask >>= 1)
    if (mask & 1u) s += std::to_string(i);
  return s;
}

// All set partitions of the coordinates in `mask`, deterministic order:
// the block containing the lowest remaining coordinate is extended by every
// subset of the rest, ascending.
void partitions_of(std::uint32_t mask, std::vector<std::uint32_t>& acc,
                   const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
  if (mask == 0) {
    emit(acc);
    return;
  }
  std::uint32_t low = mask & (~mask + 1);
  std::uint32_t rest = mask ^ low;
  // iterate subsets of `rest` ascending, including 0
  std::uint32_t sub = 0;
  while (true) {
    acc.push_back(low | sub);
    partitions_of(rest ^ sub, acc, emit);
    acc.pop_back();
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
}

}  // namespace

MRSubalgebra MRSubalgebra::full(int n) {
  std::vector<Block> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(Block{1u << i, 1u << i});
  return MRSubalgebra(n, std::move(blocks));
}

MRSubalgebra MRSubalgebra::from_blocks(int n, std::vector<Block> blocks) {
  std::uint32_t seen = 0;
  for (auto& b : blocks) {
    if (b.coords == 0 || (b.coords & ~Face::full_mask(n)))
      throw std::invalid_argument("MRSubalgebra: block out of range");
    if (b.coords & seen) throw std::invalid_argument("MRSubalgebra: blocks overlap");
    if (b.plus & ~b.coords) throw std::invalid_argument("MRSubalgebra: sign pattern outside block");
    seen |= b.coords;
    // canonicalize: Plus at the lowest coordinate of the block
    std::uint32_t low = b.coords & (~b.coords + 1);
    if (!(b.plus & low)) b.plus = b.coords & ~b.plus;
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return (a.coords & (~a.coords + 1)) < (b.coords & (~b.coords + 1)); });
  return MRSubalgebra(n, std::move(blocks));
}

std::uint32_t MRSubalgebra::support() const {
  std::uint32_t s = 0;
  for (const auto& b : blocks_) s |= b.coords;
  return s;
}

std::string MRSubalgebra::str() const {
  if (blocks_.empty()) return "{1}";
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += '|';
    out += mask_digits(b.coords);
    out += ':';
    for (std::uint32_t m = b.coords; m;) {
      std::uint32_t low = m & (~m + 1);
      out += (b.plus & low) ? '+' : '-';
      m ^= low;
    }
  }
  return out;
}

bool operator<(const MRSubalgebra& a, const MRSubalgebra& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.corank() != b.corank()) return a.corank() < b.corank();
  if (a.support() != b.support()) return a.support() < b.support();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.blocks_ < b.blocks_;
}

int TypeVector::r() const {
  int sum = 0;
  for (int i = 1; i <= n; ++i) sum += i * t[i - 1];
  return sum;
}

int TypeVector::k() const {
  int sum = 0;
  for (int v : t) sum += v;
  return sum;
}

std::string TypeVector::str() const {
  std::string out = "(";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

TypeVector type_of(const MRSubalgebra& alg) {
  TypeVector tv{alg.ambient_dim(), std::vector<int>(alg.ambient_dim(), 0)};
  for (const auto& b : alg.blocks()) tv.t[__builtin_popcount(b.coords) - 1] += 1;
  return tv;
}

std::vector<TypeVector> all_types(int n) {
  std::vector<TypeVector> out;
  TypeVector cur{n, std::vector<int>(n, 0)};
  // enumerate t_1..t_n with sum i*t_i <= n
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c * i <= budget; ++c) {
      cur.t[i - 1] = c;
      rec(i + 1, budget - c * i);
    }
    cur.t[i - 1] = 0;
  };
  rec(1, n);
  std::sort(out.begin(), out.end());
  return out;
}

MRSubalgebra representative_of_type(const TypeVector& type) {
  std::vector<Block> blocks;
  int next = 0;
  for (int size = 1; size <= type.n; ++size)
    for (int c = 0; c < type.t[size - 1]; ++c) {
      std::uint32_t coords = ((1u << size) - 1u) << next;
      blocks.push_back(Block{coords, coords});
      next += size;
    }
  if (next > type.n) throw std::invalid_argument("representative_of_type: type does not fit the ambient cube");
  return MRSubalgebra::from_blocks(type.n, std::move(blocks));
}

std::vector<Face> materialize(const MRSubalgebra& alg) {
  const auto& blocks = alg.blocks();
  int k = alg.dim();
  std::vector<Face> out;
  for (std::uint32_t chosen = 0; chosen < (1u << k); ++chosen) {
    int picks = __builtin_popcount(chosen);
    for (std::uint32_t eps = 0; eps < (1u << picks); ++eps) {
      std::uint32_t pos = 0, neg = 0;
      int bit = 0;
      for (int j = 0; j < k; ++j) {
        if (!(chosen & (1u << j))) continue;
        bool negate = eps & (1u << bit);
        ++bit;
        std::uint32_t p = negate ? (blocks[j].coords & ~blocks[j].plus) : blocks[j].plus;
        pos |= p;
        neg |= blocks[j].coords & ~p;
      }
      out.push_back(Face::from_masks(alg.ambient_dim(), pos, neg));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Face> generated_closure(const std::set<Face>& generators) {
  if (generators.empty()) throw std::invalid_argument("generated_closure: empty generator set");
  int n = generators.begin()->dim();
  std::set<Face> closed(generators);
  closed.insert(Face::top(n));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Face> snapshot(closed.begin(), closed.end());
    for (const Face& x : snapshot)
      for (const Face& y : snapshot) {
        grew |= closed.insert(join(x, y)).second;
        if (leq(y, x)) grew |= closed.insert(delta(x, y)).second;
        grew |= closed.insert(caret(x, y)).second;
      }
  }
  return closed;
}

std::vector<MRSubalgebra> enumerate_subalgebras(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_subalgebras: supported range is 1 <= n <= 6");
  std::vector<MRSubalgebra> out;
  std::uint32_t full = Face::full_mask(n);
  for (std::uint32_t support = 0; support <= full; ++support) {
    std::vector<std::uint32_t> acc;
    partitions_of(support, acc, [&](const std::vector<std::uint32_t>& parts) {
      // one sign pattern per block, Plus pinned at the lowest coordinate
      std::vector<Block> blocks(parts.size());
      std::function<void(std::size_t)> assign = [&](std::size_t j) {
        if (j == parts.size()) {
          out.push_back(MRSubalgebra::from_blocks(n, blocks));
          return;
        }
        std::uint32_t low = parts[j] & (~parts[j] + 1);
        std::uint32_t rest = parts[j] ^ low;
        std::uint32_t sub = 0;
        while (true) {
          blocks[j] = Block{parts[j], low | sub};
          assign(j + 1);
          if (sub == rest) break;
          sub = (sub - rest) & rest;
        }
      };
      assign(0);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Face>> enumerate_by_closure(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("enumerate_by_closure: supported range is 1 <= n <= 3");
  auto faces = all_faces(n);
  std::set<std::vector<Face>> distinct;
  distinct.insert({Face::top(n)});

  auto close = [&](const std::set<Face>& gens) {
    auto c = generated_closure(gens);
    distinct.insert(std::vector<Face>(c.begin(), c.end()));
  };

  if (n <= 2) {
    // all nonempty face subsets
    std::size_t total = faces.size();
    for (std::uint32_t pick = 1; pick < (1u << total); ++pick) {
      std::set<Face> gens;
      for (std::size_t i = 0; i < total; ++i)
        if (pick & (1u << i)) gens.insert(faces[i]);
      close(gens);
    }
  } else {
    // subsets of size <= 3; sufficient because a k-dimensional subalgebra
    // is generated by k of its vertices and k <= 3 here
    std::size_t m = faces.size();
    for (std::size_t i = 0; i < m; ++i) {
      close({faces[i]});
      for (std::size_t j = i + 1; j < m; ++j) {
        close({faces[i], faces[j]});
        for (std::size_t l = j + 1; l < m; ++l) close({faces[i], faces[j], faces[l]});
      }
    }
  }
  return std::vector<std::vector<Face>>(distinct.begin(), distinct.end());
}

MRSubalgebra subalgebra_from_faces(int n, const std::set<Face>& faces) {
  if (faces.empty()) throw std::invalid_argument("subalgebra_from_faces: empty set");
  std::uint32_t support = 0;
  for (const Face& f : faces) support |= f.fixed_mask();
  // a subalgebra vertex: any member face of maximal corank (it fixes the
  // whole support and carries every block's sign pattern)
  Face vertex = *faces.begin();
  for (const Face& f : faces)
    if (f.corank() > vertex.corank()) vertex = f;

  // coordinates are block-mates iff every member face fixes both or neither
  std::vector<Block> blocks;
  std::uint32_t left = support;
  while (left) {
    std::uint32_t low = left & (~left + 1);
    std::uint32_t coords = low;
    for (std::uint32_t rest = left ^ low; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      bool mates = true;
      for (const Face& f : faces)
        if (static_cast<bool>(f.fixed_mask() & low) != static_cast<bool>(f.fixed_mask() & bit)) {
          mates = false;
          break;
        }
      if (mates) coords |= bit;
    }
    blocks.push_back(Block{coords, vertex.pos_mask() & coords});
    left &= ~coords;
  }
  return MRSubalgebra::from_blocks(n, std::move(blocks));
}

bool includes(const MRSubalgebra& inner, const MRSubalgebra& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) throw std::invalid_argument("includes: dimension mismatch");
  for (const auto& ib : inner.blocks()) {
    std::uint32_t covered = 0;
    for (const auto& ob : outer.blocks()) {
      if (!(ob.coords & ib.coords)) continue;
      if (ob.coords & ~ib.coords) return false;  // outer block sticks out
      std::uint32_t restricted = ib.plus & ob.coords;
      if (restricted != ob.plus && restricted != (ob.coords & ~ob.plus)) return false;
      covered |= ob.coords;
    }
    if (covered != ib.coords) return false;
  }
  return true;
}

Face plus_in_interval(const Face& c, const Face& d, const Face& a) {
  // identify x >= a with its freed subset of the fixed support of a
  Face cj = join(c, a), dj = join(d, a);
  std::uint32_t freed = (a.fixed_mask() & ~cj.fixed_mask()) ^ (a.fixed_mask() & ~dj.fixed_mask());
  return Face::from_masks(a.dim(), a.pos_mask() & ~freed, a.neg_mask() & ~freed);
}

ImpSublattice::ImpSublattice(int n, std::uint32_t support, std::vector<std::uint32_t> parts)
    : n_(n), support_(support), parts_(std::move(parts)) {
  if (support_ & ~Face::full_mask(n)) throw std::invalid_argument("ImpSublattice: support out of range");
  std::uint32_t seen = 0;
  for (std::uint32_t p : parts_) {
    if (p == 0 || (p & ~support_) || (p & seen)) throw std::invalid_argument("ImpSublattice: malformed partition");
    seen |= p;
  }
  if (seen != support_) throw std::invalid_argument("ImpSublattice: partition does not cover the support");
  std::sort(parts_.begin(), parts_.end(),
            [](std::uint32_t a, std::uint32_t b) { return (a & (~a + 1)) < (b & (~b + 1)); });
}

ImpSublattice ImpSublattice::boolean_full(int n) {
  std::vector<std::uint32_t> parts;
  for (int i = 0; i < n; ++i) parts.push_back(1u << i);
  return ImpSublattice(n, Face::full_mask(n), std::move(parts));
}

bool ImpSublattice::contains(const Face& x) const {
  if (x.dim() != n_ || x.pos_mask() != 0) return false;
  std::uint32_t supp = x.neg_mask();
  if (supp & ~support_) return false;
  for (std::uint32_t p : parts_) {
    std::uint32_t hit = p & supp;
    if (hit != 0 && hit != p) return false;
  }
  return true;
}

std::vector<Face> ImpSublattice::materialize() const {
  std::vector<Face> out;
  int d = dim();
  for (std::uint32_t pick = 0; pick < (1u << d); ++pick) {
    std::uint32_t supp = 0;
    for (int j = 0; j < d; ++j)
      if (pick & (1u << j)) supp |= parts_[j];
    out.push_back(Face::from_masks(n_, 0u, supp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ImpSublattice::str() const {
  if (parts_.empty()) return "{1}";
  std::string out;
  for (std::uint32_t p : parts_) {
    if (!out.empty()) out += '|';
    out += mask_digits(p);
  }
  return out;
}

bool operator<(const ImpSublattice& a, const ImpSublattice& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  int pa = __builtin_popcount(a.support_), pb = __builtin_popcount(b.support_);
  if (pa != pb) return pa < pb;
  if (a.support_ != b.support_) return a.support_ < b.support_;
  if (a.parts_.size() != b.parts_.size()) return a.parts_.size() < b.parts_.size();
  return a.parts_ < b.parts_;
}

bool imp_includes(const ImpSublattice& inner, const ImpSublattice& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) throw std::invalid_argument("imp_includes: dimension mismatch");
  for (std::uint32_t ip : inner.parts()) {
    std::uint32_t covered = 0;
    for (std::uint32_t op : outer.parts()) {
      if (!(op & ip)) continue;
      if (op & ~ip) return false;
      covered |= op;
    }
    if (covered != ip) return false;
  }
  return true;
}

std::vector<ImpSublattice> enumerate_imp_sublattices(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_imp_sublattices: supported range is 1 <= n <= 5");
  std::vector<ImpSublattice> out;
  std::uint32_t full = Face::full_mask(n);
  for (std::uint32_t support = 0; support <= full; ++support) {
    std::vector<std::uint32_t> acc;
    partitions_of(support, acc,
                  [&](const std::vector<std::uint32_t>& parts) { out.emplace_back(n, support, parts); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face impl_arrow(const Face& x, const Face& y) {
  if (x.pos_mask() || y.pos_mask()) throw std::invalid_argument("impl_arrow: arguments must lie in [0, 1]");
  std::uint32_t ux = x.free_mask(), uy = y.free_mask();
  return Face::from_masks(x.dim(), 0u, ux & ~uy);
}

std::set<Face> impl_closure(const std::set<Face>& generators) {
  if (generators.empty()) throw std::invalid_argument("impl_closure: empty generator set");
  std::set<Face> closed(generators);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Face> snapshot(closed.begin(), closed.end());
    for (const Face& x : snapshot)
      for (const Face& y : snapshot) {
        grew |= closed.insert(impl_arrow(x, y)).second;
        auto m = meet(x, y);  // always defined inside [0, 1]
        grew |= closed.insert(*m).second;
      }
  }
  return closed;
}

std::string LocatorPair::str() const { return "<" + c.str() + ", " + B.str() + ">"; }

LocatorPair make_locator(const Face& c, const ImpSublattice& B) {
  if (c.dim() != B.ambient_dim()) throw std::invalid_argument("make_locator: dimension mismatch");
  if (c.pos_mask() != 0) throw std::invalid_argument("make_locator: c must lie in [0, 1]");
  if (c.neg_mask() & ~B.support()) throw std::invalid_argument("make_locator: c must lie above min B");
  return LocatorPair{c, B};
}

MRSubalgebra locate(const LocatorPair& pair) {
  Face a = delta(pair.c, pair.B.min_face());
  std::set<Face> gens;
  for (const Face& x : pair.B.materialize()) gens.insert(translate(a, x));
  auto closed = generated_closure(gens);
  return subalgebra_from_faces(pair.c.dim(), closed);
}

LocatorPair locator_of(const MRSubalgebra& alg) {
  int n = alg.ambient_dim();
  // The least vertex of the subalgebra takes the negated canonical pattern
  // on every block (Minus at the block's lowest coordinate), so its Minus
  // part is the union of the plus masks; c = 0 v least_vertex keeps exactly
  // that part.
  std::uint32_t vneg = 0;
  std::vector<std::uint32_t> parts;
  for (const auto& b : alg.blocks()) {
    vneg |= b.plus;
    parts.push_back(b.coords);
  }
  Face c = Face::from_masks(n, 0u, vneg);
  return LocatorPair{c, ImpSublattice(n, alg.support(), std::move(parts))};
}

bool pair_leq(const LocatorPair& p1, const LocatorPair& p2) {
  if (p1.c.dim() != p2.c.dim()) throw std::invalid_argument("pair_leq: dimension mismatch");
  if (!imp_includes(p1.B, p2.B)) return false;
  return p2.B.contains(plus_in_interval(p1.c, p2.c, p1.B.min_face()));
}

bool pair_equiv(const LocatorPair& p1, const LocatorPair& p2) {
  return pair_leq(p1, p2) && pair_leq(p2, p1);
}

LocatorPair pair_closure(const LocatorPair& pair) {
  std::uint32_t freed = pair.B.support() & ~pair.c.fixed_mask();
  std::vector<std::uint32_t> refined;
  for (std::uint32_t p : pair.B.parts()) {
    if (p & freed) refined.push_back(p & freed);
    if (p & ~freed) refined.push_back(p & ~freed);
  }
  return LocatorPair{pair.c, ImpSublattice(pair.c.dim(), pair.B.support(), std::move(refined))};
}

bool is_closed(const LocatorPair& pair) { return pair.B.contains(pair.c); }

}  // namespace cubemob
