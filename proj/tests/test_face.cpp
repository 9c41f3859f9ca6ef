#include <doctest.h>

#include "cubemob/audit.hpp"
#include "cubemob/face.hpp"
#include "cubemob/representations.hpp"

using namespace cubemob;

namespace {
Face F(const char* text) { return Face::parse(text); }
}

TEST_CASE("containment order") {
  CHECK(leq(F("--"), F("-*")));
  for (const Face& x : all_faces(2)) CHECK(leq(x, Face::top(2)));
  CHECK_FALSE(leq(F("-*"), F("*+")));
  CHECK_THROWS_AS(leq(F("-"), F("--")), std::invalid_argument);
}

TEST_CASE("join") {
  CHECK(join(F("++"), F("--")) == F("**"));
  for (const Face& x : all_faces(2)) CHECK(join(x, x) == x);
  CHECK(join(F("+-*"), F("++*")) == F("+**"));
  for (const Face& x : all_faces(2))
    for (const Face& y : all_faces(2)) {
      CHECK(join(x, y) == join(y, x));
      CHECK(leq(x, join(x, y)));
    }
}

TEST_CASE("meet is partial") {
  CHECK(meet(F("+*"), F("*-")) == F("+-"));
  CHECK_FALSE(meet(F("+*"), F("-*")).has_value());
  for (const Face& x : all_faces(2)) CHECK(meet(x, Face::top(2)) == x);
  // greatest lower bound when defined
  for (const Face& x : all_faces(2))
    for (const Face& y : all_faces(2)) {
      auto m = meet(x, y);
      if (!m) continue;
      CHECK(leq(*m, x));
      CHECK(leq(*m, y));
      for (const Face& z : all_faces(2))
        if (leq(z, x) && leq(z, y)) CHECK(leq(z, *m));
    }
}

TEST_CASE("delta reflections") {
  CHECK(delta(Face::top(2), F("--")) == F("++"));
  for (const Face& x : all_faces(2)) CHECK(delta(x, x) == x);
  CHECK(delta(F("-*"), F("--")) == F("-+"));
  CHECK_THROWS_AS(delta(F("-*"), F("+-")), std::invalid_argument);
  // involution and the join law on comparable pairs
  for (const Face& x : all_faces(3))
    for (const Face& y : all_faces(3)) {
      if (!leq(y, x)) continue;
      CHECK(delta(x, delta(x, y)) == y);
      CHECK(join(delta(x, y), y) == x);
    }
}

TEST_CASE("caret") {
  CHECK(caret(F("+*"), F("-*")) == F("+*"));
  for (const Face& x : all_faces(2)) CHECK(caret(x, x) == x);
  CHECK(caret(F("+"), F("-")) == F("+"));
}

TEST_CASE("preceq and simeq") {
  CHECK(preceq(F("++"), F("--")));
  CHECK_FALSE(preceq(F("+*"), F("*+")));
  for (const Face& x : all_faces(2)) CHECK(simeq(x, x));
}

TEST_CASE("translate toward a vertex") {
  for (const Face& a : all_faces(2)) {
    if (!a.is_vertex()) continue;
    CHECK(translate(a, Face::top(2)) == Face::top(2));
    CHECK(translate(a, a) == a);
    for (const Face& x : all_faces(2)) CHECK(leq(a, translate(a, x)));
  }
  CHECK(translate(F("--"), F("-+")) == F("--"));
}

TEST_CASE("textual literals parse/print") {
  for (const Face& x : all_faces(3)) CHECK(Face::parse(x.str()) == x);
  CHECK(F("+*-").str() == "+*-");
  CHECK_THROWS_AS(Face::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Face::parse("+0-"), std::invalid_argument);
}

TEST_CASE("canonical order is lexicographic with minus < plus < free") {
  auto faces = all_faces(2);
  CHECK(faces.front() == F("--"));
  CHECK(faces.back() == F("**"));
  CHECK(std::is_sorted(faces.begin(), faces.end(),
                       [](const Face& a, const Face& b) { return a < b; }));
  CHECK(F("-*") < F("+-"));
  CHECK(F("+-") < F("+*"));
}

TEST_CASE("signed set representation") {
  auto s = to_signed_set(F("+-*"));
  CHECK(s.pos_coords() == std::vector<int>{1});
  CHECK(s.neg_coords() == std::vector<int>{2});
  CHECK(from_signed_set(SignedSet{2, 0, 0}) == Face::top(2));
  CHECK_THROWS_AS(from_signed_set(SignedSet{2, 1, 1}), std::invalid_argument);
}

TEST_CASE("interval pair representation") {
  // componentwise order and the transported reflection agree with the
  // face-level operations; exhaustive on the square
  auto result = checks::representations_agree(2);
  CHECK_MESSAGE(result.pass, result.detail);
  CHECK_THROWS_AS(from_interval_pair(IntervalPair{2, 0, 1}), std::invalid_argument);
}

TEST_CASE("cubic and MR axioms, exhaustive on small cubes") {
  for (int n = 1; n <= 2; ++n) {
    auto result = checks::cubic_axioms_exhaustive(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("corank census formula") {
  for (int n = 1; n <= 3; ++n) {
    auto result = checks::corank_census(n);
    CHECK_MESSAGE(result.pass, result.detail);
  }
}

TEST_CASE("interval sum lemma") {
  auto result = checks::plus_lemma(2);
  CHECK_MESSAGE(result.pass, result.detail);
}

TEST_CASE("preceq collapses to leq above a common bound") {
  auto result = checks::preceq_on_filter(2);
  CHECK_MESSAGE(result.pass, result.detail);
}
