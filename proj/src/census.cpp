#include "cubemob/census.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace cubemob {

namespace {

void validate_type(const TypeVector& type, int n) {
  if (type.n != n || static_cast<int>(type.t.size()) != n)
    throw std::invalid_argument("census: type vector has wrong ambient dimension");
  for (int v : type.t)
    if (v < 0) throw std::invalid_argument("census: negative type entry");
  if (type.r() > n) throw std::invalid_argument("census: type corank exceeds ambient dimension");
}

BigInt sign_product(const TypeVector& type) {
  BigInt value = 1;
  for (int i = 1; i <= type.n; ++i)
    for (int c = 0; c < type.t[i - 1]; ++c) value *= factorial(i);
  return value;
}

BigInt multiplicity_product(const TypeVector& type) {
  BigInt value = 1;
  for (int i = 1; i <= type.n; ++i) value *= factorial(type.t[i - 1]);
  return value;
}

// Deterministic sharded reduction over the automorphism list.
template <typename PerShard, typename Merge>
void sharded(const std::vector<SignedPerm>& auts, int jobs, PerShard per_shard, Merge merge) {
  jobs = std::max(1, std::min<int>(jobs, 64));
  if (jobs == 1 || auts.size() < 64) {
    per_shard(0, auts.size(), 0);
    merge();
    return;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (auts.size() + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    std::size_t lo = std::min(auts.size(), w * chunk);
    std::size_t hi = std::min(auts.size(), lo + chunk);
    if (lo < hi) workers.emplace_back([=] { per_shard(lo, hi, w); });
  }
  for (auto& t : workers) t.join();
  merge();
}

std::vector<Face> apply_all(const SignedPerm& phi, const std::vector<Face>& faces) {
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const Face& f : faces) out.push_back(phi.apply(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BigInt orbit_size_formula(const TypeVector& type, int n) {
  validate_type(type, n);
  int r = type.r(), k = type.k();
  BigInt num = pow2(r - k) * binomial(n, r) * factorial(r);
  return exact_div(num, sign_product(type) * multiplicity_product(type));
}

BigInt stab_size_formula(const TypeVector& type, int n) {
  validate_type(type, n);
  int r = type.r(), k = type.k();
  return pow2(n + k - r) * factorial(n - r) * sign_product(type) * multiplicity_product(type);
}

BigInt fr_size_formula(const TypeVector& type, int n) {
  validate_type(type, n);
  int r = type.r();
  return pow2(n - r) * factorial(n - r) * sign_product(type);
}

BigInt im_rho_formula(const TypeVector& type, int n) {
  validate_type(type, n);
  return pow2(type.k()) * multiplicity_product(type);
}

BigInt orbit_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs) {
  std::vector<std::set<std::vector<Face>>> images(std::max(1, std::min(jobs, 64)));
  std::set<std::vector<Face>> all;
  sharded(
      auts, jobs,
      [&](std::size_t lo, std::size_t hi, int w) {
        for (std::size_t i = lo; i < hi; ++i) images[w].insert(apply_all(auts[i], faces));
      },
      [&] {
        for (auto& s : images) all.merge(s);
      });
  return BigInt(all.size());
}

BigInt stab_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs) {
  std::vector<std::uint64_t> counts(std::max(1, std::min(jobs, 64)), 0);
  std::uint64_t total = 0;
  sharded(
      auts, jobs,
      [&](std::size_t lo, std::size_t hi, int w) {
        for (std::size_t i = lo; i < hi; ++i)
          if (apply_all(auts[i], faces) == faces) ++counts[w];
      },
      [&] {
        for (auto c : counts) total += c;
      });
  return BigInt(total);
}

BigInt fr_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs) {
  std::vector<std::uint64_t> counts(std::max(1, std::min(jobs, 64)), 0);
  std::uint64_t total = 0;
  sharded(
      auts, jobs,
      [&](std::size_t lo, std::size_t hi, int w) {
        for (std::size_t i = lo; i < hi; ++i) {
          bool freezes = true;
          for (const Face& f : faces)
            if (auts[i].apply(f) != f) {
              freezes = false;
              break;
            }
          if (freezes) ++counts[w];
        }
      },
      [&] {
        for (auto c : counts) total += c;
      });
  return BigInt(total);
}

BigInt im_rho_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs) {
  std::vector<std::set<std::vector<Face>>> restrictions(std::max(1, std::min(jobs, 64)));
  std::set<std::vector<Face>> all;
  sharded(
      auts, jobs,
      [&](std::size_t lo, std::size_t hi, int w) {
        for (std::size_t i = lo; i < hi; ++i) {
          // ordered image tuple over the sorted face list = the restriction
          std::vector<Face> image;
          image.reserve(faces.size());
          bool stabilizes = true;
          for (const Face& f : faces) image.push_back(auts[i].apply(f));
          std::vector<Face> sorted_image(image);
          std::sort(sorted_image.begin(), sorted_image.end());
          stabilizes = sorted_image == faces;
          if (stabilizes) restrictions[w].insert(std::move(image));
        }
      },
      [&] {
        for (auto& s : restrictions) all.merge(s);
      });
  return BigInt(all.size());
}

std::vector<BigInt> s_table(const MrPoset& poset) {
  int n = poset.elements.empty() ? 0 : poset.elements.front().ambient_dim();
  std::vector<BigInt> f(poset.elements.size());
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    f[i] = fr_size_formula(type_of(poset.elements[i]), n);
  std::vector<BigInt> s(poset.elements.size(), 0);
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < poset.elements.size(); ++j)
      if (poset.table->leq(i, j)) sum += poset.table->mu(i, j) * f[j];
    s[i] = sum;
  }
  // re-summation check: f(A) = sum_{B >= A} s(B), exactly
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < poset.elements.size(); ++j)
      if (poset.table->leq(i, j)) sum += s[j];
    if (sum != f[i]) throw std::logic_error("s_table: Moebius re-summation failed at " + poset.table->label(i));
  }
  return s;
}

DerangementReport derangements(int n, DerangementMethod method, int jobs) {
  DerangementReport report;
  report.n = n;
  bool want_inversion = method != DerangementMethod::Direct;
  bool want_direct = method != DerangementMethod::Inversion;
  if (want_inversion) {
    if (n < 1 || n > 4) throw std::invalid_argument("derangements: inversion method supports 1 <= n <= 4");
    auto poset = build_mr_poset(n);
    report.inversion = s_table(poset)[poset.bottom];
  }
  if (want_direct) {
    if (n < 1 || n > 5) throw std::invalid_argument("derangements: direct method supports 1 <= n <= 5");
    auto auts = enumerate_aut(n);
    auto faces = all_faces(n);
    Face top = Face::top(n);
    int shards = std::max(1, std::min(jobs, 64));
    std::vector<std::uint64_t> counts(shards, 0), violations(shards, 0);
    std::uint64_t total = 0, bad = 0;
    sharded(
        auts, jobs,
        [&](std::size_t lo, std::size_t hi, int w) {
          for (std::size_t i = lo; i < hi; ++i) {
            std::set<Face> fixed;
            for (const Face& f : faces)
              if (auts[i].apply(f) == f) fixed.insert(f);
            if (n <= 3 && generated_closure(fixed) != fixed) ++violations[w];
            if (fixed.size() == 1 && *fixed.begin() == top) ++counts[w];
          }
        },
        [&] {
          for (int w = 0; w < shards; ++w) {
            total += counts[w];
            bad += violations[w];
          }
        });
    if (bad) throw std::logic_error("derangements: some fixed-face set is not a subalgebra");
    report.direct = BigInt(total);
  }
  if (report.inversion && report.direct) report.agree = *report.inversion == *report.direct;
  return report;
}

std::vector<CensusRow> build_census(int n, const CensusOptions& options) {
  if (n < 1 || n > 6) throw std::invalid_argument("build_census: supported range is 1 <= n <= 6");
  std::vector<CensusRow> rows;
  std::map<TypeVector, std::size_t> row_of_type;
  for (const auto& type : all_types(n)) {
    CensusRow row;
    row.type = type;
    row.representative = representative_of_type(type).str();
    row.r = type.r();
    row.k = type.k();
    row.orbit_formula = orbit_size_formula(type, n);
    row.stab_formula = stab_size_formula(type, n);
    row.fr_formula = fr_size_formula(type, n);
    row.im_rho_formula = im_rho_formula(type, n);
    row.f = row.fr_formula;
    row.g = row.stab_formula;
    row_of_type.emplace(type, rows.size());
    rows.push_back(std::move(row));
  }

  if (n <= 4) {
    auto poset = build_mr_poset(n);
    auto s = s_table(poset);
    // s is constant on orbits; record it via each element's type
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
      auto& row = rows[row_of_type.at(type_of(poset.elements[i]))];
      if (row.s && *row.s != s[i]) throw std::logic_error("build_census: s is not orbit-constant");
      row.s = s[i];
    }

    auto auts = enumerate_aut(n);
    auto algebras = enumerate_subalgebras(n);
    std::vector<std::size_t> picked(algebras.size());
    for (std::size_t i = 0; i < picked.size(); ++i) picked[i] = i;
    if (n == 4) {
      // fixed-seed sample; hand-rolled Fisher-Yates so the selection does
      // not depend on the standard library's shuffle implementation
      std::mt19937_64 rng(options.seed);
      for (std::size_t i = picked.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(picked[i], picked[j]);
      }
      picked.resize(std::min<std::size_t>(picked.size(), options.sample_size));
      std::sort(picked.begin(), picked.end());
    }
    for (std::size_t idx : picked) {
      const auto& alg = algebras[idx];
      auto faces = materialize(alg);
      auto& row = rows[row_of_type.at(type_of(alg))];
      BigInt ob = orbit_brute(faces, auts, options.jobs);
      BigInt sb = stab_brute(faces, auts, options.jobs);
      BigInt fb = fr_brute(faces, auts, options.jobs);
      BigInt ib = im_rho_brute(faces, auts, options.jobs);
      bool match = ob == row.orbit_formula && sb == row.stab_formula && fb == row.fr_formula &&
                   ib == row.im_rho_formula;
      row.brute_match = row.brute_match && match;
      row.orbit_bf = ob;
      row.stab_bf = sb;
      row.fr_bf = fb;
      row.im_rho_bf = ib;
    }
  }
  return rows;
}

}  // namespace cubemob
