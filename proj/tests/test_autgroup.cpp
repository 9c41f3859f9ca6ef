#include <doctest.h>

#include <map>
#include <set>

#include "cubemob/audit.hpp"
#include "cubemob/autgroup.hpp"

using namespace cubemob;

namespace {
Face F(const char* text) { return Face::parse(text); }

SignedPerm all_flips(int n) {
  std::vector<std::uint8_t> p(n);
  for (int i = 1; i <= n; ++i) p[i - 1] = static_cast<std::uint8_t>(i);
  return SignedPerm(std::move(p), Face::full_mask(n));
}
}

TEST_CASE("action on faces") {
  auto id = SignedPerm::identity(3);
  for (const Face& x : all_faces(3)) CHECK(id.apply(x) == x);
  CHECK(all_flips(2).apply(Face::top(2)) == Face::top(2));
  // flipping every sign is the antipode map
  for (int n = 1; n <= 3; ++n)
    for (const Face& x : all_faces(n)) CHECK(all_flips(n).apply(x) == antipode(x));
}

TEST_CASE("composition and inverse") {
  for (const auto& phi : enumerate_aut(2)) {
    CHECK(compose(phi, inverse(phi)) == SignedPerm::identity(2));
    CHECK(compose(inverse(phi), phi) == SignedPerm::identity(2));
    CHECK(compose(SignedPerm::identity(2), phi) == phi);
    for (const auto& psi : enumerate_aut(2))
      for (const Face& x : all_faces(2)) CHECK(compose(phi, psi).apply(x) == phi.apply(psi.apply(x)));
  }
}

TEST_CASE("group order via generator closure") {
  auto result = checks::aut_generator_closure(3);
  CHECK_MESSAGE(result.pass, result.detail);  // 2^3 * 3! = 48
}

TEST_CASE("enumeration size and order") {
  CHECK(enumerate_aut(1).size() == 2);
  CHECK(enumerate_aut(2).size() == 8);
  CHECK(enumerate_aut(1).front() == SignedPerm::identity(1));
  for (int n = 1; n <= 3; ++n) {
    auto result = checks::aut_count(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
  CHECK_THROWS_AS(enumerate_aut(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_aut(7), std::invalid_argument);
}

TEST_CASE("text form") {
  auto auts = enumerate_aut(2);
  CHECK(SignedPerm::identity(3).str() == "pi=[1,2,3]; s=[+,+,+]");
  CHECK(auts[1].str() == "pi=[1,2]; s=[-,+]");
}

TEST_CASE("coatom map extension") {
  std::map<Face, Face> identity_map, antipode_map, swap_map;
  for (const Face& c : coatoms(2)) {
    identity_map.emplace(c, c);
    antipode_map.emplace(c, antipode(c));
    // swap the two coordinate pairs, keeping signs
    Face swapped = Face::from_masks(2, c.pos_mask() ? (c.pos_mask() ^ 3u) : 0u,
                                    c.neg_mask() ? (c.neg_mask() ^ 3u) : 0u);
    swap_map.emplace(c, swapped);
  }
  CHECK(extend_coatom_map(identity_map) == SignedPerm::identity(2));
  CHECK(extend_coatom_map(antipode_map) == all_flips(2));
  CHECK(extend_coatom_map(swap_map) == SignedPerm({2, 1}, 0u));

  std::map<Face, Face> not_delta = identity_map;
  not_delta[F("-*")] = F("*-");
  not_delta[F("*-")] = F("-*");
  CHECK_THROWS_AS(extend_coatom_map(not_delta), std::invalid_argument);

  auto result = checks::aut_coatom_extension(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("corank-transitive witnesses") {
  CHECK(corank_transitive_witness(F("+*"), F("+*")) == SignedPerm::identity(2));
  CHECK(corank_transitive_witness(F("+*"), F("-*")).apply(F("+*")) == F("-*"));
  CHECK(corank_transitive_witness(F("+*"), F("*-")).apply(F("+*")) == F("*-"));
  CHECK_THROWS_AS(corank_transitive_witness(F("+*"), F("--")), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) {
    auto result = checks::aut_corank_witness(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("partition-preserving automorphism counts") {
  // single block: the whole group
  std::vector<std::vector<Face>> single{coatoms(3)};
  CHECK(aut_partition_product(single, 3) == 48);
  // all antipodal pairs: sign flips only
  std::vector<std::vector<Face>> pairs;
  for (int i = 0; i < 3; ++i)
    pairs.push_back({Face::from_masks(3, 1u << i, 0u), Face::from_masks(3, 0u, 1u << i)});
  CHECK(aut_partition_product(pairs, 3) == 8);
  // one 4-element block plus one pair
  std::vector<std::vector<Face>> mixed{
      {F("+**"), F("-**"), F("*+*"), F("*-*")},
      {F("**+"), F("**-")},
  };
  CHECK(aut_partition_product(mixed, 3) == 16);
  CHECK_THROWS_AS(aut_partition_product({{F("+**")}}, 3), std::invalid_argument);

  auto result = checks::aut_partition_counts(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("structure preservation and faithfulness") {
  auto preserved = checks::aut_preserves_structure(2);
  CHECK_MESSAGE(preserved.pass, preserved.detail);
  auto faithful = checks::aut_faithful(2);
  CHECK_MESSAGE(faithful.pass, faithful.detail);
}

TEST_CASE("downset isomorphisms extend") {
  auto result = checks::aut_downset_extension(2);
  CHECK_MESSAGE(result.pass, result.detail);
}
