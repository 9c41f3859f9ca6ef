#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cubemob/reports.hpp"

using namespace cubemob;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cubemob_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("cache round trip") {
  TempDir dir;
  {
    Cache cache(dir.path.string());
    REQUIRE(cache.enabled());
    cache.put("mr_mu_row", 2, 0x1234u, {"1", "-1", "-1", "-1", "-1", "3"});
    auto hit = cache.get("mr_mu_row", 2, 0x1234u);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<std::string>{"1", "-1", "-1", "-1", "-1", "3"});
    CHECK_FALSE(cache.get("mr_mu_row", 3, 0x1234u).has_value());
    CHECK_FALSE(cache.get("impl_mu_row", 2, 0x1234u).has_value());
  }
  // reopen: payload survives bit-exactly
  Cache reopened(dir.path.string());
  auto hit = reopened.get("mr_mu_row", 2, 0x1234u);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<std::string>{"1", "-1", "-1", "-1", "-1", "3"});
}

TEST_CASE("cache version bump forces a miss") {
  TempDir dir;
  {
    Cache cache(dir.path.string());
    cache.put("k", 1, 7u, {"42"});
  }
  auto file = dir.path / "cubemob.cache";
  std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
  f.seekp(4);
  f.put(static_cast<char>(Cache::kSchemaVersion + 1));
  f.close();
  Cache reopened(dir.path.string());
  CHECK_FALSE(reopened.get("k", 1, 7u).has_value());
}

TEST_CASE("corrupt cache file degrades to empty") {
  TempDir dir;
  {
    std::ofstream f(dir.path / "cubemob.cache", std::ios::binary);
    f << "garbage";
  }
  Cache cache(dir.path.string());
  CHECK_FALSE(cache.get("k", 1, 7u).has_value());
  cache.put("k", 1, 7u, {"1"});  // still usable
  CHECK(cache.get("k", 1, 7u).has_value());
}

TEST_CASE("json bodies are key-sorted and byte-stable") {
  auto a = emit(faces_report(3), Format::Json);
  auto b = emit(faces_report(3), Format::Json);
  CHECK(a == b);
  CHECK(a.find("\"all_match\"") < a.find("\"corank_census\""));
  CHECK(a.find("\"corank_census\"") < a.find("\"n\""));
}

TEST_CASE("csv projection") {
  Report empty;
  empty.columns = {"type", "orbit_formula"};
  CHECK(emit(empty, Format::Csv) == "type,orbit_formula\n");
  // cells containing commas are quoted
  Report quoted;
  quoted.columns = {"a"};
  quoted.rows = {{"(0,1)"}};
  CHECK(emit(quoted, Format::Csv) == "a\n\"(0,1)\"\n");
}

TEST_CASE("reports do not depend on worker count") {
  CensusOptions one, four;
  four.jobs = 4;
  CHECK(emit(census_report(3, one), Format::Json) == emit(census_report(3, four), Format::Json));
  CHECK(emit(derangements_report(3, DerangementMethod::Both, 1), Format::Json) ==
        emit(derangements_report(3, DerangementMethod::Both, 3), Format::Json));
}

TEST_CASE("cold and warm cache runs are byte-identical") {
  TempDir dir;
  std::string cold, warm, nocache;
  {
    Cache cache(dir.path.string());
    cold = emit(mobius_report(3, cache), Format::Json);
  }
  {
    Cache cache(dir.path.string());
    warm = emit(mobius_report(3, cache), Format::Json);
  }
  {
    Cache disabled;
    nocache = emit(mobius_report(3, disabled), Format::Json);
  }
  CHECK(cold == warm);
  CHECK(cold == nocache);
}

TEST_CASE("structural json codecs") {
  auto anti = MRSubalgebra::from_blocks(2, {Block{3u, 1u}});
  auto j = subalgebra_to_json(anti);
  CHECK(j.dump() == R"({"blocks":[{"coords":[1,2],"signs":"+-"}],"n":2})");
  CHECK(subalgebra_from_json(j) == anti);

  auto pair = locator_of(anti);
  auto jp = locator_to_json(pair);
  CHECK(jp.dump() == R"({"B":{"partition":[[1,2]],"support":[1,2]},"c":"-*"})");
  auto parsed = locator_from_json(jp);
  CHECK(parsed.c == pair.c);
  CHECK(parsed.B == pair.B);
}

TEST_CASE("derangement report fields") {
  auto report = derangements_report(1, DerangementMethod::Both, 1);
  CHECK(report.body["inversion"] == 1);
  CHECK(report.body["direct"] == 1);
  CHECK(report.body["agree"] == true);
  auto s = emit(report, Format::Json);
  CHECK(s.find("\"inversion\": 1") != std::string::npos);
}

TEST_CASE("mobius report content") {
  Cache disabled;
  auto report = mobius_report(2, disabled);
  CHECK(report.body["mu_bruteforce"] == 3);
  CHECK(report.body["mu_recurrence_adjudicated"] == 3);
  CHECK(report.body["mu_recurrence_paper"] == 4);
  CHECK(report.body["impl_mu_top_oracle"] == 2);
  REQUIRE(report.body["closure_fibers"].is_array());
  CHECK(report.body["discrepancies"].size() == 1);  // recurrence only at even n

  auto odd = mobius_report(1, disabled);
  CHECK(odd.body["discrepancies"].size() == 2);  // printed mu({1},B)=n! also splits
}
