#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string command = std::string(CUBEMOB_BIN) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  return lines;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cubemob_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("derangements subcommand") {
  auto result = run("derangements --n 2 --method both --format json");
  CHECK(result.exit_code == 0);
  auto body = nlohmann::json::parse(result.out);
  CHECK(body["inversion"] == 3);
  CHECK(body["direct"] == 3);
  CHECK(body["agree"] == true);
}

TEST_CASE("subalgebras table has one row per subalgebra") {
  auto result = run("subalgebras --n 1 --format table");
  CHECK(result.exit_code == 0);
  // title + header + rule + 2 data rows
  CHECK(count_lines(result.out) == 5);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("faces --n 0").exit_code == 2);
  CHECK(run("faces").exit_code == 2);
  CHECK(run("faces --n 2 --format yaml").exit_code == 2);
  CHECK(run("faces --n 2 --frobnicate").exit_code == 2);
  CHECK(run("derangements --n 5 --method both").exit_code == 2);
  CHECK(run("derangements --n 5 --method direct").exit_code == 0);
}

TEST_CASE("audit reports the known discrepancies and exits with 3") {
  auto result = run("audit --n 1 --format json");
  CHECK(result.exit_code == 3);
  auto body = nlohmann::json::parse(result.out);
  CHECK(body["all_pass"] == true);
  CHECK(body["discrepancies"].size() >= 2);
}

TEST_CASE("census csv header is fixed") {
  auto result = run("census --n 2 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.out.rfind("type,representative,r,k,orbit_formula,orbit_brute,stab_formula,stab_brute,"
                         "fr_formula,fr_brute,im_rho_formula,im_rho_brute,f,g,s\n",
                         0) == 0);
}

TEST_CASE("reports are byte-identical across cache state and worker count") {
  TempDir dir;
  std::string cache_arg = " --cache-dir " + dir.path.string();
  auto cold = run("mobius --n 3 --format json" + cache_arg);
  CHECK(cold.exit_code == 0);
  auto warm = run("mobius --n 3 --format json" + cache_arg);
  CHECK(warm.exit_code == 0);
  CHECK(cold.out == warm.out);
  CHECK(std::filesystem::exists(dir.path / "cubemob.cache"));

  auto one = run("census --n 3 --format json --jobs 1");
  auto many = run("census --n 3 --format json --jobs 4");
  CHECK(one.out == many.out);

  auto env_run = run("derangements --n 2 --format csv");
  auto env_run2 = run("derangements --n 2 --format csv --jobs 2");
  CHECK(env_run.out == env_run2.out);
}
