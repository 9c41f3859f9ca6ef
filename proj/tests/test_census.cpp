#include <doctest.h>

#include "cubemob/audit.hpp"
#include "cubemob/census.hpp"

using namespace cubemob;

namespace {
TypeVector type_for(int n, std::vector<int> t) { return TypeVector{n, std::move(t)}; }
}

TEST_CASE("closed-form counts") {
  // the whole algebra is alone in its orbit
  for (int n = 1; n <= 4; ++n) {
    auto full = type_of(MRSubalgebra::full(n));
    CHECK(orbit_size_formula(full, n) == 1);
    CHECK(stab_size_formula(full, n) == pow2(n) * factorial(n));
    CHECK(fr_size_formula(full, n) == 1);
    CHECK(im_rho_formula(full, n) == pow2(n) * factorial(n));
  }
  CHECK(orbit_size_formula(type_for(2, {0, 1}), 2) == 2);
  CHECK(orbit_size_formula(type_for(3, {1, 1, 0}), 3) == 6);
  CHECK(stab_size_formula(type_for(3, {1, 1, 0}), 3) == 8);
  CHECK(fr_size_formula(type_for(3, {1, 1, 0}), 3) == 2);
  CHECK(im_rho_formula(type_for(3, {1, 1, 0}), 3) == 4);
  // the trivial subalgebra is frozen and fixed by everything
  auto trivial = type_for(2, {0, 0});
  CHECK(stab_size_formula(trivial, 2) == 8);
  CHECK(fr_size_formula(trivial, 2) == 8);
  CHECK_THROWS_AS(orbit_size_formula(type_for(2, {0, 2}), 2), std::invalid_argument);
}

TEST_CASE("brute-force counters") {
  auto auts = enumerate_aut(2);
  auto full = materialize(MRSubalgebra::full(2));
  CHECK(fr_brute(full, auts) == 1);
  auto anti = materialize(MRSubalgebra::from_blocks(2, {Block{3u, 1u}}));
  CHECK(stab_brute(anti, auts) == 4);
  auto axis1 = materialize(MRSubalgebra::from_blocks(2, {Block{1u, 1u}}));
  CHECK(orbit_brute(axis1, auts) == 2);
  CHECK(im_rho_brute(anti, auts) == 2);  // stab 4, freezers 2
}

TEST_CASE("formula columns equal brute columns") {
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::census_formulas_vs_brute(n, CensusOptions{});
    CHECK_MESSAGE(result.pass, result.detail);
  }
  auto identities = checks::census_identities(8);
  CHECK_MESSAGE(identities.pass, identities.detail);
}

TEST_CASE("freezers form a subgroup of the stabilizer") {
  auto result = checks::fr_subgroup(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("image of the restriction homomorphism") {
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::im_rho_blocks(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("moebius inversion for exact freezers") {
  auto line = build_mr_poset(1);
  auto s1 = s_table(line);
  CHECK(s1[line.bottom] == 1);
  CHECK(s1[line.top] == 1);
  auto square = build_mr_poset(2);
  auto s2 = s_table(square);
  CHECK(s2[square.bottom] == 3);
  CHECK(s2[square.top] == 1);
}

TEST_CASE("derangement counts") {
  auto r1 = derangements(1, DerangementMethod::Both);
  CHECK(*r1.inversion == 1);
  CHECK(*r1.direct == 1);
  CHECK(r1.agree);
  auto r2 = derangements(2, DerangementMethod::Both);
  CHECK(*r2.inversion == 3);
  CHECK(*r2.direct == 3);
  CHECK(r2.agree);
  auto r3 = derangements(3, DerangementMethod::Both, 2);
  CHECK(r3.agree);
  CHECK_THROWS_AS(derangements(5, DerangementMethod::Both), std::invalid_argument);
  auto direct_only = derangements(2, DerangementMethod::Direct);
  CHECK_FALSE(direct_only.inversion.has_value());
  CHECK(*direct_only.direct == 3);
}

TEST_CASE("census rows") {
  auto rows = build_census(2, CensusOptions{});
  CHECK(rows.size() == 4);  // types (0,0), (1,0), (0,1), (2,0)
  BigInt orbit_sum = 0;
  for (const auto& row : rows) {
    CHECK(row.brute_match);
    CHECK(row.orbit_bf.has_value());
    CHECK(row.s.has_value());
    CHECK(row.g == row.stab_formula);
    orbit_sum += row.orbit_formula;
  }
  CHECK(orbit_sum == 6);  // all subalgebras of the square
}
