#include "cubemob/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cubemob/representations.hpp"

namespace cubemob {

namespace {

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  CheckResult result;
  result.name = name;
  try {
    result.detail = body();
    result.pass = result.detail.empty();
    if (result.pass) result.detail = "ok";
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

std::string tag(int n) { return " (n=" + std::to_string(n) + ")"; }

// xy = delta(1, delta(x v y, y)) v y, the derived binary operation of the
// last two axioms.
Face xy_op(const Face& x, const Face& y) {
  return join(delta(Face::top(x.dim()), delta(join(x, y), y)), y);
}

Face random_face(int n, std::mt19937_64& rng) {
  std::vector<State> st(n);
  std::uniform_int_distribution<int> d(0, 2);
  for (auto& s : st) s = static_cast<State>(d(rng));
  return Face::from_states(st);
}

Face random_below(const Face& y, std::mt19937_64& rng) {
  std::vector<State> st(y.dim());
  std::uniform_int_distribution<int> d(0, 2);
  for (int i = 1; i <= y.dim(); ++i)
    st[i - 1] = y.at(i) == State::Free ? static_cast<State>(d(rng)) : y.at(i);
  return Face::from_states(st);
}

std::string check_axiom_instance(const Face& x, const Face& y, const Face& z) {
  // requires x <= y <= z
  if (join(delta(y, x), x) != y) return "axiom a fails on (" + x.str() + ", " + y.str() + ")";
  if (delta(y, delta(y, x)) != x) return "axiom c fails on (" + x.str() + ", " + y.str() + ")";
  if (!leq(delta(z, x), delta(z, y)))
    return "axiom d fails on (" + x.str() + ", " + y.str() + ", " + z.str() + ")";
  if (delta(z, delta(y, x)) != delta(delta(z, y), delta(z, x)))
    return "axiom b fails on (" + x.str() + ", " + y.str() + ", " + z.str() + ")";
  return "";
}

std::string check_ef_instance(const Face& x, const Face& y, const Face& z) {
  if (xy_op(xy_op(x, y), y) != join(x, y)) return "axiom e fails on (" + x.str() + ", " + y.str() + ")";
  if (xy_op(x, xy_op(y, z)) != xy_op(y, xy_op(x, z)))
    return "axiom f fails on (" + x.str() + ", " + y.str() + ", " + z.str() + ")";
  return "";
}

std::string check_mr_instance(const Face& x, const Face& a, const Face& b) {
  // requires a, b < x
  Face lifted = join(delta(x, a), b);
  bool strictly_below = lifted != x;  // lifted <= x holds by construction
  bool meet_missing = !meet(a, b).has_value();
  if (strictly_below != meet_missing)
    return "MR axiom fails on (x=" + x.str() + ", a=" + a.str() + ", b=" + b.str() + ")";
  return "";
}

// partitions of a list of indices, deterministic order; the recursion grows
// acc, so blocks are addressed by index against a frozen size
void index_partitions(std::size_t count, std::vector<std::vector<std::size_t>>& acc,
                      const std::function<void(const std::vector<std::vector<std::size_t>>&)>& emit,
                      std::size_t next = 0) {
  if (next == count) {
    emit(acc);
    return;
  }
  std::size_t existing = acc.size();
  for (std::size_t b = 0; b < existing; ++b) {
    acc[b].push_back(next);
    index_partitions(count, acc, emit, next + 1);
    acc[b].pop_back();
  }
  acc.push_back({next});
  index_partitions(count, acc, emit, next + 1);
  acc.pop_back();
}

Face least_vertex(const MRSubalgebra& alg) {
  std::uint32_t pos = 0, neg = 0;
  for (const auto& b : alg.blocks()) {
    pos |= b.coords & ~b.plus;
    neg |= b.plus;
  }
  return Face::from_masks(alg.ambient_dim(), pos, neg);
}

// structural embedding of the abstract k-cube into a subalgebra
Face embed_face(const MRSubalgebra& alg, const Face& sub) {
  std::uint32_t pos = 0, neg = 0;
  const auto& blocks = alg.blocks();
  for (int j = 1; j <= static_cast<int>(blocks.size()); ++j) {
    State s = sub.at(j);
    if (s == State::Free) continue;
    std::uint32_t p = s == State::Plus ? blocks[j - 1].plus : (blocks[j - 1].coords & ~blocks[j - 1].plus);
    pos |= p;
    neg |= blocks[j - 1].coords & ~p;
  }
  return Face::from_masks(alg.ambient_dim(), pos, neg);
}

std::vector<Face> sorted_image(const SignedPerm& phi, const std::vector<Face>& faces) {
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const Face& f : faces) out.push_back(phi.apply(f));
  std::sort(out.begin(), out.end());
  return out;
}

// coatoms of a materialized subalgebra: elements covered by the top
std::vector<Face> subalgebra_coatoms(const std::vector<Face>& faces) {
  std::vector<Face> out;
  Face top = Face::top(faces.empty() ? 0 : faces.front().dim());
  for (const Face& a : faces) {
    if (a == top) continue;
    bool covered_by_top = true;
    for (const Face& b : faces)
      if (b != a && b != top && leq(a, b)) {
        covered_by_top = false;
        break;
      }
    if (covered_by_top) out.push_back(a);
  }
  return out;
}

}  // namespace

namespace checks {

CheckResult cubic_axioms_exhaustive(int n) {
  return run_check("face.axioms.exhaustive" + tag(n), [n]() -> std::string {
    auto faces = all_faces(n);
    std::size_t m = faces.size();
    std::vector<std::vector<std::size_t>> down(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (leq(faces[j], faces[i])) down[i].push_back(j);

    for (std::size_t zi = 0; zi < m; ++zi)
      for (std::size_t yi : down[zi])
        for (std::size_t xi : down[yi]) {
          auto err = check_axiom_instance(faces[xi], faces[yi], faces[zi]);
          if (!err.empty()) return err;
        }
    for (const Face& x : faces)
      for (const Face& y : faces) {
        if (!meet(x, delta(join(x, y), y)).has_value())
          return "caret not total on (" + x.str() + ", " + y.str() + ")";
        for (const Face& z : faces) {
          auto err = check_ef_instance(x, y, z);
          if (!err.empty()) return err;
        }
      }
    for (std::size_t xi = 0; xi < m; ++xi)
      for (std::size_t ai : down[xi]) {
        if (ai == xi) continue;
        for (std::size_t bi : down[xi]) {
          if (bi == xi) continue;
          auto err = check_mr_instance(faces[xi], faces[ai], faces[bi]);
          if (!err.empty()) return err;
        }
      }
    return "";
  });
}

CheckResult cubic_axioms_sampled(int n, int samples, std::uint64_t seed) {
  return run_check("face.axioms.sampled" + tag(n), [=]() -> std::string {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      Face z = random_face(n, rng);
      Face y = random_below(z, rng);
      Face x = random_below(y, rng);
      auto err = check_axiom_instance(x, y, z);
      if (!err.empty()) return err;
      Face u = random_face(n, rng), v = random_face(n, rng), w = random_face(n, rng);
      err = check_ef_instance(u, v, w);
      if (!err.empty()) return err;
      if (!meet(u, delta(join(u, v), v)).has_value())
        return "caret not total on (" + u.str() + ", " + v.str() + ")";
      Face a = random_below(z, rng), b = random_below(z, rng);
      if (a != z && b != z) {
        err = check_mr_instance(z, a, b);
        if (!err.empty()) return err;
      }
    }
    return "";
  });
}

CheckResult corank_census(int n) {
  return run_check("face.corank_census" + tag(n), [n]() -> std::string {
    std::vector<BigInt> counts(n + 1, 0);
    for (const Face& f : all_faces(n)) counts[f.corank()] += 1;
    for (int r = 0; r <= n; ++r) {
      BigInt expected = pow2(r) * binomial(n, r);
      if (counts[r] != expected)
        return "corank " + std::to_string(r) + ": counted " + counts[r].str() + ", formula " + expected.str();
    }
    return "";
  });
}

CheckResult representations_agree(int n) {
  return run_check("face.representations" + tag(n), [n]() -> std::string {
    auto faces = all_faces(n);
    for (const Face& x : faces) {
      if (from_signed_set(to_signed_set(x)) != x) return "signed-set round trip fails on " + x.str();
      if (from_interval_pair(to_interval_pair(x)) != x) return "interval-pair round trip fails on " + x.str();
    }
    for (const Face& x : faces)
      for (const Face& y : faces) {
        bool base = leq(x, y);
        if (signed_set_leq(to_signed_set(x), to_signed_set(y)) != base)
          return "signed-set order disagrees on (" + x.str() + ", " + y.str() + ")";
        if (interval_leq(to_interval_pair(x), to_interval_pair(y)) != base)
          return "interval order disagrees on (" + x.str() + ", " + y.str() + ")";
        if (leq(y, x)) {
          Face direct = delta(x, y);
          Face transported = from_interval_pair(interval_delta(to_interval_pair(x), to_interval_pair(y)));
          if (direct != transported) return "interval delta disagrees on (" + x.str() + ", " + y.str() + ")";
        }
      }
    return "";
  });
}

CheckResult plus_lemma(int n) {
  return run_check("face.plus_lemma" + tag(n), [n]() -> std::string {
    auto faces = all_faces(n);
    for (const Face& a : faces)
      for (const Face& b : faces) {
        if (!leq(a, b)) continue;
        for (const Face& c1 : faces) {
          if (!leq(b, c1)) continue;
          for (const Face& c2 : faces) {
            if (!leq(a, c2) || !meet(c1, c2)) continue;
            Face lhs = join(delta(c1, b), delta(c2, a));
            Face rhs = join(delta(c1, b), delta(join(c2, b), b));
            if (lhs != rhs)
              return "part (a) fails on (a=" + a.str() + ", b=" + b.str() + ", c1=" + c1.str() +
                     ", c2=" + c2.str() + ")";
          }
        }
      }
    for (const Face& x : faces)
      for (const Face& c1 : faces)
        for (const Face& c2 : faces) {
          auto c12 = meet(c1, c2);
          if (!c12 || !meet(x, *c12)) continue;
          Face inner = join(delta(join(x, c1), x), delta(join(x, c2), x));
          Face lhs = delta(join(join(x, c1), c2), inner);
          if (lhs != plus_in_interval(c1, c2, x))
            return "part (b) fails on (x=" + x.str() + ", c1=" + c1.str() + ", c2=" + c2.str() + ")";
        }
    return "";
  });
}

CheckResult preceq_on_filter(int n) {
  return run_check("face.preceq_on_filter" + tag(n), [n]() -> std::string {
    auto faces = all_faces(n);
    for (const Face& a : faces)
      for (const Face& b : faces) {
        if (!leq(a, b)) continue;
        for (const Face& c : faces) {
          if (!leq(a, c)) continue;
          if (preceq(b, c) != leq(b, c))
            return "preceq/leq split on (a=" + a.str() + ", b=" + b.str() + ", c=" + c.str() + ")";
        }
      }
    return "";
  });
}

CheckResult aut_count(int n) {
  return run_check("aut.count" + tag(n), [n]() -> std::string {
    auto auts = enumerate_aut(n);
    BigInt expected = pow2(n) * factorial(n);
    if (BigInt(auts.size()) != expected)
      return "enumerated " + std::to_string(auts.size()) + ", expected " + expected.str();
    std::set<SignedPerm> distinct(auts.begin(), auts.end());
    if (distinct.size() != auts.size()) return "enumeration contains duplicates";
    return "";
  });
}

CheckResult aut_preserves_structure(int n) {
  return run_check("aut.preserves_structure" + tag(n), [n]() -> std::string {
    auto faces = all_faces(n);
    for (const auto& phi : enumerate_aut(n)) {
      for (const Face& x : faces) {
        if (phi.apply(x).corank() != x.corank()) return phi.str() + " breaks corank on " + x.str();
        for (const Face& y : faces) {
          if (phi.apply(join(x, y)) != join(phi.apply(x), phi.apply(y)))
            return phi.str() + " breaks join on (" + x.str() + ", " + y.str() + ")";
          if (leq(y, x) && phi.apply(delta(x, y)) != delta(phi.apply(x), phi.apply(y)))
            return phi.str() + " breaks delta on (" + x.str() + ", " + y.str() + ")";
          if (preceq(x, y) != preceq(phi.apply(x), phi.apply(y)))
            return phi.str() + " breaks preceq on (" + x.str() + ", " + y.str() + ")";
        }
      }
    }
    return "";
  });
}

CheckResult aut_preserves_structure_sampled(int n, int samples, std::uint64_t seed) {
  return run_check("aut.preserves_structure.sampled" + tag(n), [=]() -> std::string {
    auto auts = enumerate_aut(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
    for (int s = 0; s < samples; ++s) {
      const auto& phi = auts[pick(rng)];
      Face x = random_face(n, rng), y = random_face(n, rng);
      if (phi.apply(join(x, y)) != join(phi.apply(x), phi.apply(y)))
        return phi.str() + " breaks join on (" + x.str() + ", " + y.str() + ")";
      if (phi.apply(x).corank() != x.corank()) return phi.str() + " breaks corank on " + x.str();
      if (preceq(x, y) != preceq(phi.apply(x), phi.apply(y)))
        return phi.str() + " breaks preceq on (" + x.str() + ", " + y.str() + ")";
      Face below = random_below(x, rng);
      if (phi.apply(delta(x, below)) != delta(phi.apply(x), phi.apply(below)))
        return phi.str() + " breaks delta on (" + x.str() + ", " + below.str() + ")";
    }
    return "";
  });
}

CheckResult aut_faithful(int n) {
  return run_check("aut.faithful_on_coatoms" + tag(n), [n]() -> std::string {
    auto cs = coatoms(n);
    std::set<std::vector<Face>> restrictions;
    auto auts = enumerate_aut(n);
    for (const auto& phi : auts) {
      std::vector<Face> r;
      for (const Face& c : cs) r.push_back(phi.apply(c));
      restrictions.insert(std::move(r));
    }
    if (restrictions.size() != auts.size())
      return "only " + std::to_string(restrictions.size()) + " distinct coatom actions for " +
             std::to_string(auts.size()) + " automorphisms";
    return "";
  });
}

CheckResult aut_generator_closure(int n) {
  return run_check("aut.generator_closure" + tag(n), [n]() -> std::string {
    std::vector<SignedPerm> gens;
    for (int i = 1; i < n; ++i) {
      std::vector<std::uint8_t> p(n);
      for (int j = 1; j <= n; ++j) p[j - 1] = static_cast<std::uint8_t>(j);
      std::swap(p[i - 1], p[i]);
      gens.emplace_back(std::move(p), 0u);
    }
    std::vector<std::uint8_t> idp(n);
    for (int j = 1; j <= n; ++j) idp[j - 1] = static_cast<std::uint8_t>(j);
    gens.emplace_back(std::move(idp), 1u);  // one sign flip

    std::set<SignedPerm> closure{SignedPerm::identity(n)};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<SignedPerm> snapshot(closure.begin(), closure.end());
      for (const auto& a : snapshot)
        for (const auto& g : gens) grew |= closure.insert(compose(g, a)).second;
    }
    BigInt expected = pow2(n) * factorial(n);
    if (BigInt(closure.size()) != expected)
      return "closure has " + std::to_string(closure.size()) + " elements, expected " + expected.str();
    return "";
  });
}

CheckResult aut_coatom_extension(int n) {
  return run_check("aut.coatom_extension" + tag(n), [n]() -> std::string {
    auto cs = coatoms(n);
    auto auts = enumerate_aut(n);
    for (const auto& phi : auts) {
      std::map<Face, Face> m;
      for (const Face& c : cs) m.emplace(c, phi.apply(c));
      SignedPerm ext = extend_coatom_map(m);
      for (const Face& c : cs)
        if (ext.apply(c) != m.at(c)) return "extension does not restrict to the map for " + phi.str();
      if (!(ext == phi)) return "extension differs from the generating automorphism " + phi.str();
      // uniqueness: no other enumerated automorphism restricts to the map
      int restricting = 0;
      for (const auto& psi : auts) {
        bool matches = true;
        for (const Face& c : cs)
          if (psi.apply(c) != m.at(c)) {
            matches = false;
            break;
          }
        if (matches) ++restricting;
      }
      if (restricting != 1) return "extension of " + phi.str() + " is not unique";
    }
    return "";
  });
}

CheckResult aut_downset_extension(int n) {
  return run_check("aut.downset_extension" + tag(n), [n]() -> std::string {
    auto cs = coatoms(n);
    auto faces = all_faces(n);
    for (const Face& c1 : cs)
      for (const Face& c2 : cs) {
        int i1 = 1 + __builtin_ctz(c1.fixed_mask());
        int i2 = 1 + __builtin_ctz(c2.fixed_mask());
        std::vector<int> free1, free2;
        for (int i = 1; i <= n; ++i) {
          if (i != i1) free1.push_back(i);
          if (i != i2) free2.push_back(i);
        }
        std::vector<int> tau(free2);
        std::sort(tau.begin(), tau.end());
        do {
          for (std::uint32_t signs = 0; signs < (1u << (n - 1)); ++signs) {
            // assemble the global signed permutation extending the sub-map
            std::vector<std::uint8_t> perm(n);
            std::uint32_t flip = 0;
            for (std::size_t t = 0; t < free1.size(); ++t) {
              perm[free1[t] - 1] = static_cast<std::uint8_t>(tau[t]);
              if (signs & (1u << t)) flip |= 1u << (free1[t] - 1);
            }
            perm[i1 - 1] = static_cast<std::uint8_t>(i2);
            if (c1.at(i1) != c2.at(i2)) flip |= 1u << (i1 - 1);
            SignedPerm ext(std::move(perm), flip);
            if (ext.apply(c1) != c2) return "extension misses the coatom for " + ext.str();
            // the restriction must act exactly as the sub-cube map
            for (const Face& x : faces) {
              if (!leq(x, c1)) continue;
              Face image = ext.apply(x);
              if (!leq(image, c2)) return "extension leaves the downset for " + ext.str();
              for (std::size_t t = 0; t < free1.size(); ++t) {
                State s = x.at(free1[t]);
                State expect = s;
                if (s != State::Free && (signs & (1u << t)))
                  expect = s == State::Plus ? State::Minus : State::Plus;
                if (image.at(tau[t]) != expect) return "restriction mismatch for " + ext.str();
              }
            }
          }
        } while (std::next_permutation(tau.begin(), tau.end()));
      }
    return "";
  });
}

CheckResult aut_corank_witness(int n) {
  return run_check("aut.corank_witness" + tag(n), [n]() -> std::string {
    auto faces = all_faces(n);
    for (const Face& v1 : faces)
      for (const Face& v2 : faces) {
        if (v1.corank() != v2.corank()) continue;
        if (corank_transitive_witness(v1, v2).apply(v1) != v2)
          return "witness fails on (" + v1.str() + ", " + v2.str() + ")";
      }
    return "";
  });
}

CheckResult aut_partition_counts(int n) {
  return run_check("aut.partition_product" + tag(n), [n]() -> std::string {
    auto auts = enumerate_aut(n);
    std::string failure;
    std::vector<std::vector<std::size_t>> acc;
    index_partitions(static_cast<std::size_t>(n), acc, [&](const std::vector<std::vector<std::size_t>>& pp) {
      if (!failure.empty()) return;
      std::vector<std::vector<Face>> blocks;
      for (const auto& group : pp) {
        std::vector<Face> block;
        for (std::size_t i : group) {
          block.push_back(Face::from_masks(n, 0u, 1u << i));
          block.push_back(Face::from_masks(n, 1u << i, 0u));
        }
        blocks.push_back(std::move(block));
      }
      BigInt formula = aut_partition_product(blocks, n);
      BigInt brute = 0;
      for (const auto& phi : auts) {
        bool preserves = true;
        for (const auto& block : blocks) {
          std::set<Face> orig(block.begin(), block.end()), image;
          for (const Face& c : block) image.insert(phi.apply(c));
          if (image != orig) {
            preserves = false;
            break;
          }
        }
        if (preserves) brute += 1;
      }
      if (formula != brute)
        failure = "partition count mismatch: formula " + formula.str() + ", brute " + brute.str();
    });
    return failure;
  });
}

CheckResult subalgebra_structure(int n) {
  return run_check("subalgebra.structure" + tag(n), [n]() -> std::string {
    for (const auto& alg : enumerate_subalgebras(n)) {
      auto faces = materialize(alg);
      std::set<Face> face_set(faces.begin(), faces.end());
      std::size_t expected = 1;
      for (int j = 0; j < alg.dim(); ++j) expected *= 3;
      if (face_set.size() != expected) return alg.str() + ": materialization is not 3^k faces";
      for (const Face& x : faces)
        for (const Face& y : faces) {
          if (!face_set.count(join(x, y))) return alg.str() + ": not join-closed";
          if (leq(y, x) && !face_set.count(delta(x, y))) return alg.str() + ": not delta-closed";
          if (!face_set.count(caret(x, y))) return alg.str() + ": not caret-closed";
        }
      auto coat = subalgebra_coatoms(faces);
      auto type = type_of(alg);
      if (static_cast<int>(coat.size()) != 2 * type.k()) return alg.str() + ": coatom count is not 2k";
      for (int i = 1; i <= n; ++i) {
        int with_corank = 0;
        for (const Face& a : coat)
          if (a.corank() == i) ++with_corank;
        if (with_corank != 2 * type.t[i - 1])
          return alg.str() + ": coatom/type law fails at block size " + std::to_string(i);
      }
      std::set<Face> coat_set(coat.begin(), coat.end());
      for (const Face& a : coat) {
        if (!coat_set.count(antipode(a))) return alg.str() + ": coatoms not antipode-closed";
        // C over the antipode is the antipode image of C over a
        std::set<Face> c_a, c_da;
        for (const Face& c : coatoms(n)) {
          if (leq(a, c)) c_a.insert(antipode(c));
          if (leq(antipode(a), c)) c_da.insert(c);
        }
        if (c_a != c_da) return alg.str() + ": coatom fibres not antipode-compatible";
      }
    }
    return "";
  });
}

CheckResult subalgebra_enumeration_equiv(int n) {
  return run_check("subalgebra.enumeration_equiv" + tag(n), [n]() -> std::string {
    std::set<std::vector<Face>> structural;
    for (const auto& alg : enumerate_subalgebras(n)) {
      if (!structural.insert(materialize(alg)).second) return "structural enumeration has duplicates";
    }
    auto oracle = enumerate_by_closure(n);
    std::set<std::vector<Face>> closures(oracle.begin(), oracle.end());
    if (structural != closures) {
      return "structural count " + std::to_string(structural.size()) + " vs closure-oracle count " +
             std::to_string(closures.size());
    }
    return "";
  });
}

CheckResult includes_agreement(int n) {
  return run_check("subalgebra.includes_agreement" + tag(n), [n]() -> std::string {
    auto algebras = enumerate_subalgebras(n);
    std::vector<std::vector<Face>> mats;
    for (const auto& a : algebras) mats.push_back(materialize(a));
    for (std::size_t i = 0; i < algebras.size(); ++i)
      for (std::size_t j = 0; j < algebras.size(); ++j) {
        bool extensional = std::includes(mats[j].begin(), mats[j].end(), mats[i].begin(), mats[i].end());
        if (includes(algebras[i], algebras[j]) != extensional)
          return "structural/extensional split on (" + algebras[i].str() + ", " + algebras[j].str() + ")";
      }
    return "";
  });
}

CheckResult orbit_type_partition(int n) {
  return run_check("subalgebra.orbit_type_partition" + tag(n), [n]() -> std::string {
    auto algebras = enumerate_subalgebras(n);
    auto auts = enumerate_aut(n);
    std::vector<std::vector<Face>> mats;
    for (const auto& a : algebras) mats.push_back(materialize(a));
    for (std::size_t i = 0; i < algebras.size(); ++i)
      for (std::size_t j = 0; j < algebras.size(); ++j) {
        bool same_type = type_of(algebras[i]) == type_of(algebras[j]);
        bool same_orbit = false;
        for (const auto& phi : auts)
          if (sorted_image(phi, mats[i]) == mats[j]) {
            same_orbit = true;
            break;
          }
        if (same_type != same_orbit)
          return "type/orbit split on (" + algebras[i].str() + ", " + algebras[j].str() + ")";
      }
    return "";
  });
}

CheckResult interval_factorization(int n) {
  return run_check("subalgebra.interval_factorization" + tag(n), [n]() -> std::string {
    auto algebras = enumerate_subalgebras(n);
    std::vector<std::set<Face>> mats;
    for (const auto& a : algebras) {
      auto v = materialize(a);
      mats.emplace_back(v.begin(), v.end());
    }
    for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto& alg = algebras[ai];
      Face anchor = least_vertex(alg);
      std::uint32_t support = alg.support();
      int sub_dim = n - alg.corank();
      std::vector<int> free_coords;
      for (int i = 1; i <= n; ++i)
        if (!(support & (1u << (i - 1)))) free_coords.push_back(i);

      // first factor: partitions of the support refining the block partition
      std::vector<std::vector<std::uint32_t>> refinements{{}};
      for (const auto& block : alg.blocks()) {
        std::vector<std::vector<std::uint32_t>> grown;
        int bits = __builtin_popcount(block.coords);
        std::vector<int> coords;
        for (int i = 0; i < n; ++i)
          if (block.coords & (1u << i)) coords.push_back(i);
        std::vector<std::vector<std::size_t>> acc;
        index_partitions(static_cast<std::size_t>(bits), acc, [&](const std::vector<std::vector<std::size_t>>& pp) {
          std::vector<std::uint32_t> masks;
          for (const auto& group : pp) {
            std::uint32_t m = 0;
            for (std::size_t b : group) m |= 1u << coords[b];
            masks.push_back(m);
          }
          std::sort(masks.begin(), masks.end());
          for (const auto& base : refinements) {
            auto combined = base;
            combined.insert(combined.end(), masks.begin(), masks.end());
            std::sort(combined.begin(), combined.end());
            grown.push_back(std::move(combined));
          }
        });
        refinements = std::move(grown);
      }
      std::sort(refinements.begin(), refinements.end());

      // second factor: subalgebras of the sub-cube below the anchor vertex
      std::vector<std::set<Face>> sub_mats;
      if (sub_dim == 0) {
        sub_mats.push_back({Face::top(0)});
      } else {
        for (const auto& s : enumerate_subalgebras(sub_dim)) {
          auto v = materialize(s);
          sub_mats.emplace_back(v.begin(), v.end());
        }
      }

      // interval above alg, mapped into the product
      std::vector<std::size_t> interval;
      for (std::size_t ci = 0; ci < algebras.size(); ++ci)
        if (includes(alg, algebras[ci])) interval.push_back(ci);
      if (interval.size() != refinements.size() * sub_mats.size())
        return alg.str() + ": interval size " + std::to_string(interval.size()) + " != " +
               std::to_string(refinements.size()) + " * " + std::to_string(sub_mats.size());

      auto project = [&](std::size_t ci) -> std::pair<std::size_t, std::size_t> {
        // upper part: freed-set partition of the support over faces >= anchor
        std::vector<std::uint32_t> parts;
        std::uint32_t left = support;
        while (left) {
          std::uint32_t low = left & (~left + 1);
          std::uint32_t part = low;
          for (std::uint32_t rest = left ^ low; rest;) {
            std::uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            bool mates = true;
            for (const Face& x : mats[ci]) {
              if (!leq(anchor, x)) continue;
              if (static_cast<bool>(x.fixed_mask() & low) != static_cast<bool>(x.fixed_mask() & bit)) {
                mates = false;
                break;
              }
            }
            if (mates) part |= bit;
          }
          parts.push_back(part);
          left &= ~part;
        }
        std::sort(parts.begin(), parts.end());
        auto it1 = std::lower_bound(refinements.begin(), refinements.end(), parts);
        if (it1 == refinements.end() || *it1 != parts) return {refinements.size(), 0};

        // lower part: faces below the anchor, compressed to the sub-cube
        std::set<Face> sub;
        for (const Face& x : mats[ci]) {
          if (!leq(x, anchor)) continue;
          std::uint32_t pos = 0, neg = 0;
          for (std::size_t t = 0; t < free_coords.size(); ++t) {
            State s = x.at(free_coords[t]);
            if (s == State::Plus) pos |= 1u << t;
            if (s == State::Minus) neg |= 1u << t;
          }
          sub.insert(Face::from_masks(sub_dim, pos, neg));
        }
        for (std::size_t s2 = 0; s2 < sub_mats.size(); ++s2)
          if (sub_mats[s2] == sub) return {it1 - refinements.begin(), s2};
        return {refinements.size(), 0};
      };

      std::map<std::pair<std::size_t, std::size_t>, std::size_t> assignment;
      for (std::size_t ci : interval) {
        auto key = project(ci);
        if (key.first == refinements.size()) return alg.str() + ": projection left the product";
        if (!assignment.emplace(key, ci).second) return alg.str() + ": projection is not injective";
      }
      // order isomorphism, componentwise
      auto part_leq = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        // B(a) included in B(b): every a-part is a union of b-parts
        for (std::uint32_t pa : a) {
          std::uint32_t covered = 0;
          for (std::uint32_t pb : b) {
            if (!(pb & pa)) continue;
            if (pb & ~pa) return false;
            covered |= pb;
          }
          if (covered != pa) return false;
        }
        return true;
      };
      for (std::size_t ci : interval)
        for (std::size_t cj : interval) {
          auto ki = project(ci), kj = project(cj);
          bool lhs = includes(algebras[ci], algebras[cj]);
          bool rhs = part_leq(refinements[ki.first], refinements[kj.first]) &&
                     std::includes(sub_mats[kj.second].begin(), sub_mats[kj.second].end(),
                                   sub_mats[ki.second].begin(), sub_mats[ki.second].end());
          if (lhs != rhs) return alg.str() + ": order does not factor componentwise";
        }
    }
    return "";
  });
}

CheckResult intervals_by_dimension(int n) {
  return run_check("subalgebra.intervals_by_dimension" + tag(n), [n]() -> std::string {
    auto algebras = enumerate_subalgebras(n);
    std::vector<std::vector<Face>> mats;
    for (const auto& a : algebras) mats.push_back(materialize(a));
    std::map<int, std::size_t> interval_size_by_dim;
    for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto& alg = algebras[ai];
      std::set<std::vector<Face>> interval;
      for (std::size_t ci = 0; ci < algebras.size(); ++ci)
        if (includes(algebras[ci], alg)) interval.insert(mats[ci]);

      // the structural embedding of the abstract k-cube realizes the
      // interval below alg as the subalgebra poset of L_k
      int k = alg.dim();
      std::set<std::vector<Face>> embedded;
      std::vector<std::vector<Face>> sub_list;
      if (k == 0) {
        sub_list.push_back({Face::top(0)});
      } else {
        for (const auto& s : enumerate_subalgebras(k)) sub_list.push_back(materialize(s));
      }
      for (const auto& sub : sub_list) {
        std::vector<Face> image;
        for (const Face& g : sub) image.push_back(embed_face(alg, g));
        std::sort(image.begin(), image.end());
        embedded.insert(std::move(image));
      }
      if (embedded != interval) return alg.str() + ": interval is not the embedded subalgebra poset";
      // embedding preserves and reflects order (inclusion on both sides)
      for (std::size_t i = 0; i < sub_list.size(); ++i)
        for (std::size_t j = 0; j < sub_list.size(); ++j) {
          bool sub_leq =
              std::includes(sub_list[j].begin(), sub_list[j].end(), sub_list[i].begin(), sub_list[i].end());
          std::vector<Face> im_i, im_j;
          for (const Face& g : sub_list[i]) im_i.push_back(embed_face(alg, g));
          for (const Face& g : sub_list[j]) im_j.push_back(embed_face(alg, g));
          std::sort(im_i.begin(), im_i.end());
          std::sort(im_j.begin(), im_j.end());
          bool im_leq = std::includes(im_j.begin(), im_j.end(), im_i.begin(), im_i.end());
          if (sub_leq != im_leq) return alg.str() + ": embedding does not preserve order";
        }
      auto found = interval_size_by_dim.find(k);
      if (found == interval_size_by_dim.end())
        interval_size_by_dim.emplace(k, interval.size());
      else if (found->second != interval.size())
        return alg.str() + ": interval size differs within dimension " + std::to_string(k);
    }
    // distinct dimensions give non-isomorphic (already different-sized) intervals
    std::set<std::size_t> sizes;
    for (const auto& [k, size] : interval_size_by_dim)
      if (!sizes.insert(size).second) return "interval sizes collide across dimensions";
    return "";
  });
}

CheckResult locator_roundtrip(int n) {
  return run_check("locator.roundtrip" + tag(n), [n]() -> std::string {
    for (const auto& alg : enumerate_subalgebras(n))
      if (!(locate(locator_of(alg)) == alg)) return "round trip fails on " + alg.str();
    return "";
  });
}

namespace {

std::vector<LocatorPair> all_locator_pairs(int n) {
  std::vector<LocatorPair> pairs;
  for (const auto& b : enumerate_imp_sublattices(n)) {
    std::uint32_t support = b.support();
    std::uint32_t sub = 0;
    while (true) {
      pairs.push_back(make_locator(Face::from_masks(n, 0u, sub), b));
      if (sub == support) break;
      sub = (sub - support) & support;
    }
  }
  return pairs;
}

}  // namespace

CheckResult pair_order_agreement(int n) {
  return run_check("locator.pair_order_agreement" + tag(n), [n]() -> std::string {
    auto pairs = all_locator_pairs(n);
    std::vector<MRSubalgebra> located;
    for (const auto& p : pairs) located.push_back(locate(p));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (pair_leq(pairs[i], pairs[j]) != includes(located[i], located[j]))
          return "pair_leq disagrees on (" + pairs[i].str() + ", " + pairs[j].str() + ")";
        if (pair_equiv(pairs[i], pairs[j]) != (located[i] == located[j]))
          return "pair_equiv disagrees on (" + pairs[i].str() + ", " + pairs[j].str() + ")";
      }
    return "";
  });
}

CheckResult pair_closure_laws(int n) {
  return run_check("locator.pair_closure_laws" + tag(n), [n]() -> std::string {
    auto pairs = all_locator_pairs(n);
    for (const auto& p : pairs) {
      auto cl = pair_closure(p);
      if (!(pair_closure(cl).B == cl.B)) return "closure not idempotent on " + p.str();
      if (!pair_leq(p, cl)) return "closure not extensive on " + p.str();
      // extensional meaning of B*: the -> and /\ closure of B u {c}
      auto mat = cl.B.materialize();
      auto base = p.B.materialize();
      std::set<Face> gens(base.begin(), base.end());
      gens.insert(p.c);
      if (impl_closure(gens) != std::set<Face>(mat.begin(), mat.end()))
        return "B* is not the ->//\\ closure on " + p.str();
      bool closed = is_closed(p);
      if (closed != p.B.contains(p.c)) return "is_closed disagrees with membership on " + p.str();
      if (closed != pair_equiv(p, make_locator(p.B.min_face(), p.B)))
        return "is_closed disagrees with the min-pair equivalence on " + p.str();
      if (closed && !(cl.B == p.B)) return "closed pair moved under closure: " + p.str();
    }
    for (const auto& p1 : pairs)
      for (const auto& p2 : pairs)
        if (pair_leq(p1, p2) && !pair_leq(pair_closure(p1), pair_closure(p2)))
          return "closure not monotone on (" + p1.str() + ", " + p2.str() + ")";
    return "";
  });
}

CheckResult imp_enumeration_equiv(int n) {
  return run_check("impl.enumeration_equiv" + tag(n), [n]() -> std::string {
    auto sublattices = enumerate_imp_sublattices(n);
    std::set<std::vector<Face>> structural;
    std::vector<Face> interval;
    for (std::uint32_t supp = 0; supp <= Face::full_mask(n); ++supp)
      interval.push_back(Face::from_masks(n, 0u, supp));
    for (const auto& b : sublattices) {
      auto mat = b.materialize();
      if (!structural.insert(mat).second) return "structural enumeration has duplicates";
      // membership oracle: contains() is exactly membership in the
      // materialized set, and that set is its own -> and /\ closure
      std::set<Face> mat_set(mat.begin(), mat.end());
      for (const Face& x : interval)
        if (b.contains(x) != static_cast<bool>(mat_set.count(x)))
          return b.str() + ": membership oracle disagrees at " + x.str();
      if (impl_closure(mat_set) != mat_set) return b.str() + ": materialization is not closed";
    }
    // structural inclusion is extensional inclusion
    std::vector<std::vector<Face>> mats;
    for (const auto& b : sublattices) mats.push_back(b.materialize());
    for (std::size_t i = 0; i < sublattices.size(); ++i)
      for (std::size_t j = 0; j < sublattices.size(); ++j) {
        bool extensional = std::includes(mats[j].begin(), mats[j].end(), mats[i].begin(), mats[i].end());
        if (imp_includes(sublattices[i], sublattices[j]) != extensional)
          return "inclusion split on (" + sublattices[i].str() + ", " + sublattices[j].str() + ")";
      }
    // oracle: distinct -> and /\ closures over all nonempty subsets of [0,1]
    std::set<std::vector<Face>> closures;
    for (std::uint32_t pick = 1; pick < (1u << interval.size()); ++pick) {
      std::set<Face> gens;
      for (std::size_t i = 0; i < interval.size(); ++i)
        if (pick & (1u << i)) gens.insert(interval[i]);
      auto c = impl_closure(gens);
      closures.insert(std::vector<Face>(c.begin(), c.end()));
    }
    if (structural != closures)
      return "structural count " + std::to_string(structural.size()) + " vs oracle count " +
             std::to_string(closures.size());
    return "";
  });
}

CheckResult mobius_law(const PosetTable& poset, const std::string& poset_name) {
  return run_check("mobius.defining_identity[" + poset_name + "]", [&poset]() -> std::string {
    for (std::size_t x = 0; x < poset.size(); ++x)
      for (std::size_t y = 0; y < poset.size(); ++y) {
        if (!poset.leq(x, y)) continue;
        BigInt sum = 0;
        for (std::size_t z = 0; z < poset.size(); ++z)
          if (poset.leq(x, z) && poset.leq(z, y)) sum += poset.mu(x, z);
        BigInt expected = x == y ? 1 : 0;
        if (sum != expected)
          return "identity fails on (" + poset.label(x) + ", " + poset.label(y) + "): sum " + sum.str();
      }
    return "";
  });
}

CheckResult impl_formula_vs_oracle(int n, std::vector<Discrepancy>* discrepancies) {
  return run_check("impl.formula_vs_oracle" + tag(n), [n, discrepancies]() -> std::string {
    auto poset = build_imp_poset(n);
    for (const auto& entry : impl_formula_audit(poset))
      if (!entry.match)
        return "formula/oracle split at " + entry.label + ": formula " + entry.formula.str() + ", oracle " +
               entry.oracle.str();
    BigInt oracle_top = poset.table->mu(poset.bottom, poset.top);
    BigInt paper_top = factorial(n);  // the printed special case, unsigned
    if (discrepancies && oracle_top != paper_top)
      discrepancies->push_back(Discrepancy{
          "impl.mu_top_printed_value", n, paper_top.str(), oracle_top.str(),
          "printed special case mu({1},B)=n! drops the sign; the oracle value is (-1)^n n!"});
    BigInt expected_signed = n % 2 ? -factorial(n) : factorial(n);
    if (oracle_top != expected_signed)
      return "oracle mu({1},B_n) = " + oracle_top.str() + ", expected " + expected_signed.str();
    return "";
  });
}

CheckResult impl_formula_identity(int n_max) {
  return run_check("impl.formula_identity(n<=" + std::to_string(n_max) + ")", [n_max]() -> std::string {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& type : all_types(n))
        if (mu_impl_formula(type.t, n) != mu_impl_formula_alt(type.t, n))
          return "product forms disagree at n=" + std::to_string(n) + ", type " + type.str();
    return "";
  });
}

CheckResult closure_theorem_mr(int n) {
  return run_check("mobius.closure_theorem_mr" + tag(n), [n]() -> std::string {
    auto poset = build_mr_poset(n);
    auto cl = mr_closure_map(poset);
    auto report = closure_audit(*poset.table, cl, poset.bottom);
    if (!report.laws_ok) return "closure laws fail: " + report.law_violation;
    if (!report.all_match) {
      for (const auto& fiber : report.fibers)
        if (!fiber.match)
          return "fiber of " + poset.table->label(fiber.closed_element) + " sums to " +
                 fiber.fiber_sum.str() + ", closed-poset value " + fiber.mu_closed.str();
    }
    return "";
  });
}

CheckResult mr_values(int n, std::vector<Discrepancy>* discrepancies) {
  return run_check("mobius.mr_values" + tag(n), [n, discrepancies]() -> std::string {
    BigInt brute = mr_mobius_bruteforce(n);
    BigInt adjudicated = mr_recurrence_adjudicated(n);
    BigInt paper = mr_recurrence_paper(n);
    if (discrepancies && paper != brute)
      discrepancies->push_back(Discrepancy{
          "mobius.mr_recurrence_printed", n, paper.str(), brute.str(),
          "printed recurrence sum S(n,m) a_m/2^m = n! does not reproduce the poset value"});
    if (adjudicated != brute)
      return "adjudicated recurrence " + adjudicated.str() + " != brute force " + brute.str();
    return "";
  });
}

CheckResult boolean_locator_counts(int n) {
  return run_check("mobius.boolean_locator_counts" + tag(n), [n]() -> std::string {
    BigInt fiber_total = 0;
    for (int m = 0; m <= n; ++m) {
      auto census = boolean_locator_census(n, m);
      if (census.enumerated != census.formula)
        return "m=" + std::to_string(m) + ": enumerated " + census.enumerated.str() + ", formula " +
               census.formula.str();
      if (census.closure_top_count != census.fiber_formula)
        return "m=" + std::to_string(m) + ": closure-top count " + census.closure_top_count.str() +
               ", fiber formula " + census.fiber_formula.str();
      fiber_total += census.closure_top_count;
    }
    // cross-check the total fiber of the top against the closure map
    auto poset = build_mr_poset(n);
    auto cl = mr_closure_map(poset);
    BigInt direct = 0;
    for (std::size_t i = 0; i < cl.size(); ++i)
      if (cl[i] == poset.top) direct += 1;
    if (direct != fiber_total)
      return "fiber of the top: closure map gives " + direct.str() + ", census gives " + fiber_total.str();
    return "";
  });
}

CheckResult census_formulas_vs_brute(int n, const CensusOptions& options) {
  return run_check("census.formulas_vs_brute" + tag(n), [n, options]() -> std::string {
    auto rows = build_census(n, options);
    for (const auto& row : rows) {
      if (!row.brute_match)
        return "type " + row.type.str() + ": brute counts disagree with the formulas";
      if (n <= 3 && !row.orbit_bf) return "type " + row.type.str() + ": brute columns missing";
    }
    return "";
  });
}

CheckResult census_identities(int n_max) {
  return run_check("census.identities(n<=" + std::to_string(n_max) + ")", [n_max]() -> std::string {
    for (int n = 1; n <= n_max; ++n) {
      BigInt group = pow2(n) * factorial(n);
      for (const auto& type : all_types(n)) {
        BigInt orbit = orbit_size_formula(type, n);
        BigInt stab = stab_size_formula(type, n);
        if (stab * orbit != group)
          return "stab*orbit misses the group order at n=" + std::to_string(n) + ", type " + type.str();
        if (stab != fr_size_formula(type, n) * im_rho_formula(type, n))
          return "stab != fr * im_rho at n=" + std::to_string(n) + ", type " + type.str();
      }
    }
    return "";
  });
}

CheckResult fr_subgroup(int n) {
  return run_check("census.fr_subgroup" + tag(n), [n]() -> std::string {
    auto auts = enumerate_aut(n);
    for (const auto& alg : enumerate_subalgebras(n)) {
      auto faces = materialize(alg);
      std::set<SignedPerm> fr, stab;
      for (const auto& phi : auts) {
        if (sorted_image(phi, faces) == faces) stab.insert(phi);
        bool freezes = true;
        for (const Face& f : faces)
          if (phi.apply(f) != f) {
            freezes = false;
            break;
          }
        if (freezes) fr.insert(phi);
      }
      for (const auto& phi : fr) {
        if (!stab.count(phi)) return alg.str() + ": freezer outside the stabilizer";
        if (!fr.count(inverse(phi))) return alg.str() + ": freezers not inverse-closed";
        for (const auto& psi : fr)
          if (!fr.count(compose(phi, psi))) return alg.str() + ": freezers not composition-closed";
      }
      for (const auto& phi : stab) {
        if (!stab.count(inverse(phi))) return alg.str() + ": stabilizer not inverse-closed";
        for (const auto& psi : stab)
          if (!stab.count(compose(phi, psi))) return alg.str() + ": stabilizer not composition-closed";
      }
    }
    return "";
  });
}

CheckResult im_rho_blocks(int n) {
  return run_check("census.im_rho_blocks" + tag(n), [n]() -> std::string {
    auto auts = enumerate_aut(n);
    for (const auto& alg : enumerate_subalgebras(n)) {
      auto faces = materialize(alg);
      // restrictions of stabilizing automorphisms, as image tuples
      std::set<std::vector<Face>> image_of_rho;
      for (const auto& phi : auts) {
        if (sorted_image(phi, faces) != faces) continue;
        std::vector<Face> restriction;
        for (const Face& f : faces) restriction.push_back(phi.apply(f));
        image_of_rho.insert(std::move(restriction));
      }
      // abstract automorphisms of the subalgebra, via the embedding of L_k
      int k = alg.dim();
      std::set<std::vector<Face>> block_preserving;
      std::vector<Face> sub_faces = all_faces(k);
      std::map<Face, std::size_t> face_index;
      for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], i);
      std::vector<Face> embedded(sub_faces.size());
      for (std::size_t i = 0; i < sub_faces.size(); ++i) embedded[i] = embed_face(alg, sub_faces[i]);
      auto sub_auts = k >= 1 ? enumerate_aut(k) : std::vector<SignedPerm>{};
      if (k == 0) {
        block_preserving.insert(std::vector<Face>{Face::top(n)});
      } else {
        for (const auto& psi : sub_auts) {
          std::vector<Face> restriction(faces.size());
          bool preserves_blocks = true;
          for (std::size_t i = 0; i < sub_faces.size(); ++i) {
            Face from = embedded[i];
            Face to = embed_face(alg, psi.apply(sub_faces[i]));
            restriction[face_index.at(from)] = to;
            // the coatom layers of the subalgebra are graded by cube corank
            if (sub_faces[i].corank() == 1 && from.corank() != to.corank()) preserves_blocks = false;
          }
          if (preserves_blocks) block_preserving.insert(std::move(restriction));
        }
      }
      if (image_of_rho != block_preserving)
        return alg.str() + ": Im(rho) != corank-layer-preserving automorphisms (" +
               std::to_string(image_of_rho.size()) + " vs " + std::to_string(block_preserving.size()) + ")";
    }
    return "";
  });
}

CheckResult derangement_agreement(int n, int jobs) {
  return run_check("census.derangement_agreement" + tag(n), [n, jobs]() -> std::string {
    auto report = derangements(n, DerangementMethod::Both, jobs);
    if (!report.agree)
      return "inversion " + report.inversion->str() + " != direct " + report.direct->str();
    return "";
  });
}

}  // namespace checks

AuditReport run_audit(int n_max, const AuditOptions& options) {
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("run_audit: supported range is 1 <= n_max <= 4");
  AuditReport report;
  report.n_max = n_max;
  auto add = [&report](CheckResult r) { report.checks.push_back(std::move(r)); };
  int small = std::min(n_max, 3);

  for (int n = 1; n <= small; ++n) add(checks::cubic_axioms_exhaustive(n));
  if (n_max >= 4) add(checks::cubic_axioms_sampled(4, options.samples, options.seed));
  for (int n = 1; n <= n_max; ++n) add(checks::corank_census(n));
  for (int n = 1; n <= small; ++n) {
    add(checks::representations_agree(n));
    add(checks::plus_lemma(n));
    add(checks::preceq_on_filter(n));
  }
  for (int n = 1; n <= n_max; ++n) add(checks::aut_count(n));
  for (int n = 1; n <= small; ++n) add(checks::aut_preserves_structure(n));
  if (n_max >= 4) add(checks::aut_preserves_structure_sampled(4, options.samples / 4, options.seed));
  for (int n = 1; n <= small; ++n) {
    add(checks::aut_faithful(n));
    add(checks::aut_generator_closure(n));
    add(checks::aut_coatom_extension(n));
    add(checks::aut_downset_extension(n));
    add(checks::aut_corank_witness(n));
    add(checks::aut_partition_counts(n));
    add(checks::subalgebra_structure(n));
    add(checks::subalgebra_enumeration_equiv(n));
    add(checks::includes_agreement(n));
    add(checks::orbit_type_partition(n));
    add(checks::interval_factorization(n));
    add(checks::intervals_by_dimension(n));
    add(checks::locator_roundtrip(n));
    add(checks::pair_order_agreement(n));
    add(checks::pair_closure_laws(n));
    add(checks::imp_enumeration_equiv(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    auto poset = build_imp_poset(n);
    add(checks::mobius_law(*poset.table, "impl n=" + std::to_string(n)));
  }
  for (int n = 1; n <= small; ++n) {
    auto poset = build_mr_poset(n);
    add(checks::mobius_law(*poset.table, "mr n=" + std::to_string(n)));
  }
  for (int n = 1; n <= n_max; ++n) add(checks::impl_formula_vs_oracle(n, &report.discrepancies));
  add(checks::impl_formula_identity(8));
  for (int n = 1; n <= small; ++n) add(checks::closure_theorem_mr(n));
  for (int n = 1; n <= n_max; ++n) {
    add(checks::mr_values(n, &report.discrepancies));
    add(checks::boolean_locator_counts(n));
  }
  CensusOptions census_options;
  census_options.seed = options.seed;
  census_options.jobs = options.jobs;
  for (int n = 1; n <= n_max; ++n) add(checks::census_formulas_vs_brute(n, census_options));
  add(checks::census_identities(8));
  for (int n = 1; n <= small; ++n) {
    add(checks::fr_subgroup(n));
    add(checks::im_rho_blocks(n));
  }
  for (int n = 1; n <= n_max; ++n) add(checks::derangement_agreement(n, options.jobs));

  report.all_pass = true;
  for (const auto& check : report.checks) report.all_pass = report.all_pass && check.pass;
  return report;
}

}  // namespace cubemob
