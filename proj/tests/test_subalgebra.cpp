#include <doctest.h>

#include <algorithm>

#include "cubemob/audit.hpp"
#include "cubemob/subalgebra.hpp"

using namespace cubemob;

namespace {
Face F(const char* text) { return Face::parse(text); }

std::vector<Face> faces_of(std::initializer_list<const char*> texts) {
  std::vector<Face> out;
  for (const char* t : texts) out.push_back(F(t));
  std::sort(out.begin(), out.end());
  return out;
}

MRSubalgebra antidiagonal() { return MRSubalgebra::from_blocks(2, {Block{3u, 1u}}); }
}

TEST_CASE("materialize") {
  CHECK(materialize(MRSubalgebra::trivial(2)) == faces_of({"**"}));
  CHECK(materialize(antidiagonal()) == faces_of({"**", "+-", "-+"}));
  CHECK(materialize(MRSubalgebra::full(2)).size() == 9);
  CHECK(MRSubalgebra::from_blocks(2, {Block{3u, 2u}}) == antidiagonal());  // sign canonicalization
  CHECK_THROWS_AS(MRSubalgebra::from_blocks(2, {Block{3u, 1u}, Block{1u, 1u}}), std::invalid_argument);
}

TEST_CASE("generated closure") {
  CHECK(generated_closure({Face::top(2)}) == std::set<Face>{Face::top(2)});
  std::set<Face> diag(generated_closure({F("+-")}));
  CHECK(diag == std::set<Face>{F("**"), F("+-"), F("-+")});
  CHECK(generated_closure({F("+*"), F("*+")}).size() == 9);
}

TEST_CASE("enumeration, structural and by closure") {
  CHECK(enumerate_subalgebras(1).size() == 2);
  CHECK(enumerate_subalgebras(2).size() == 6);
  CHECK(enumerate_subalgebras(3).size() == 24);
  CHECK_THROWS_AS(enumerate_subalgebras(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_subalgebras(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_by_closure(4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_imp_sublattices(6), std::invalid_argument);
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::subalgebra_enumeration_equiv(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
  // the two one-block full-support subalgebras of the square are the diagonals
  int diagonals = 0;
  for (const auto& alg : enumerate_subalgebras(2))
    if (type_of(alg).t == std::vector<int>{0, 1}) ++diagonals;
  CHECK(diagonals == 2);
}

TEST_CASE("type vectors") {
  auto trivial = type_of(MRSubalgebra::trivial(3));
  CHECK(trivial.t == std::vector<int>{0, 0, 0});
  CHECK(trivial.r() == 0);
  CHECK(trivial.k() == 0);
  auto full = type_of(MRSubalgebra::full(3));
  CHECK(full.t == std::vector<int>{3, 0, 0});
  CHECK(full.r() == 3);
  CHECK(full.k() == 3);
  auto anti = type_of(antidiagonal());
  CHECK(anti.t == std::vector<int>{0, 1});
  CHECK(anti.r() == 2);
  CHECK(anti.k() == 1);
}

TEST_CASE("structural inclusion") {
  auto axis1 = MRSubalgebra::from_blocks(2, {Block{1u, 1u}});
  for (const auto& alg : enumerate_subalgebras(2)) CHECK(includes(MRSubalgebra::trivial(2), alg));
  CHECK(includes(axis1, MRSubalgebra::full(2)));
  CHECK_FALSE(includes(antidiagonal(), axis1));
  auto result = checks::includes_agreement(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("Boolean sum inside an interval") {
  Face base = Face::base_vertex(2);
  for (const Face& c : all_faces(2)) {
    CHECK(plus_in_interval(c, c, base) == base);
    CHECK(plus_in_interval(c, base, base) == join(c, base));
  }
  CHECK(plus_in_interval(F("-*"), F("*-"), base) == Face::top(2));
}

TEST_CASE("subalgebra invariants: size, closedness, coatom law") {
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::subalgebra_structure(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("implication sublattices of the lower interval") {
  CHECK(enumerate_imp_sublattices(1).size() == 2);
  auto b2 = enumerate_imp_sublattices(2);
  CHECK(b2.size() == 5);
  // the full Boolean algebra is the unique maximal element
  auto top = ImpSublattice::boolean_full(2);
  for (const auto& b : b2) CHECK(imp_includes(b, top));
  auto result = checks::imp_enumeration_equiv(2);
  CHECK_MESSAGE(result.pass, result.detail);

  CHECK(top.contains(F("--")));
  CHECK(top.contains(F("-*")));
  CHECK_FALSE(top.contains(F("+*")));
  ImpSublattice zero_one(2, 3u, {3u});
  CHECK(zero_one.contains(F("--")));
  CHECK_FALSE(zero_one.contains(F("-*")));
}

TEST_CASE("locator pairs") {
  // the named examples
  CHECK(locate(make_locator(Face::top(2), ImpSublattice::trivial(2))) == MRSubalgebra::trivial(2));
  CHECK(locate(make_locator(Face::base_vertex(2), ImpSublattice::boolean_full(2))) == MRSubalgebra::full(2));
  CHECK(locate(make_locator(F("-*"), ImpSublattice(2, 3u, {3u}))) == antidiagonal());

  auto pair = locator_of(antidiagonal());
  CHECK(pair.c == F("-*"));
  CHECK(pair.B == ImpSublattice(2, 3u, {3u}));

  for (int n = 1; n <= 2; ++n) {
    auto result = checks::locator_roundtrip(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
  CHECK_THROWS_AS(make_locator(F("+*"), ImpSublattice::boolean_full(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_locator(F("--"), ImpSublattice::trivial(2)), std::invalid_argument);
}

TEST_CASE("pair order matches subalgebra inclusion") {
  auto full = make_locator(Face::base_vertex(2), ImpSublattice::boolean_full(2));
  auto shifted = make_locator(F("-*"), ImpSublattice::boolean_full(2));
  CHECK(pair_leq(full, full));
  CHECK(pair_equiv(shifted, full));  // both locate the whole algebra
  auto bottom = make_locator(Face::top(2), ImpSublattice::trivial(2));
  for (const auto& b : enumerate_imp_sublattices(2))
    CHECK(pair_leq(bottom, make_locator(b.min_face(), b)));
  auto result = checks::pair_order_agreement(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("pair closure") {
  auto p = make_locator(F("-*"), ImpSublattice(2, 3u, {3u}));
  auto closed = pair_closure(p);
  CHECK(closed.c == p.c);
  CHECK(closed.B == ImpSublattice::boolean_full(2));
  // a closed pair is a fixed point
  auto already = make_locator(F("-"), ImpSublattice(1, 1u, {1u}));
  CHECK(is_closed(already));
  CHECK(pair_closure(already).B == already.B);
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::pair_closure_laws(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("orbits are exactly the types") {
  auto result = checks::orbit_type_partition(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("upper intervals factor through an anchor vertex") {
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::interval_factorization(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("lower intervals depend only on the dimension") {
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::intervals_by_dimension(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}
