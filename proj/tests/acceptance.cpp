// Acceptance suite: every criterion prints one PASS/FAIL line and the
// binary exits nonzero if any fails. All comparisons are exact.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cubemob/audit.hpp"
#include "cubemob/reports.hpp"

using namespace cubemob;

namespace {

int failures = 0;

void report_line(int criterion, const std::string& label, bool pass, double seconds,
                 const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << (criterion < 10 ? "0" : "")
            << criterion << " " << label << " (" << seconds << " s)";
  if (!pass) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

template <typename Body>
void criterion(int number, const std::string& label, Body body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body();
    pass = detail.empty();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
          .count();
  report_line(number, label, pass, seconds, detail);
}

std::string all_of(std::vector<CheckResult> results) {
  for (const auto& r : results)
    if (!r.pass) return r.name + ": " + r.detail;
  return "";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cubemob_acceptance_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

int main() {
  criterion(1, "cubic axioms a-f, MR axiom, caret totality (exhaustive n<=3)", [] {
    return all_of({checks::cubic_axioms_exhaustive(1), checks::cubic_axioms_exhaustive(2),
                   checks::cubic_axioms_exhaustive(3)});
  });

  criterion(2, "corank census 2^r C(n,r) (n<=5)", [] {
    std::vector<CheckResult> results;
    for (int n = 1; n <= 5; ++n) results.push_back(checks::corank_census(n));
    return all_of(results);
  });

  criterion(3, "|Aut(L_n)| = 2^n n! by enumeration (n<=5)", [] {
    std::vector<CheckResult> results;
    for (int n = 1; n <= 5; ++n) results.push_back(checks::aut_count(n));
    return all_of(results);
  });

  criterion(4, "structural enumeration = closure oracle (n<=3; 2 and 6 subalgebras at n=1,2)", [] {
    if (enumerate_subalgebras(1).size() != 2) return std::string("n=1 count is not 2");
    if (enumerate_subalgebras(2).size() != 6) return std::string("n=2 count is not 6");
    std::vector<CheckResult> results;
    for (int n = 1; n <= 3; ++n) results.push_back(checks::subalgebra_enumeration_equiv(n));
    return all_of(results);
  });

  criterion(5, "orbit/stab/fr/im_rho formulas vs brute force (n<=3 all, n=4 sampled; identities n<=8)", [] {
    std::vector<CheckResult> results;
    CensusOptions options;  // published seed, 50-subalgebra sample at n=4
    for (int n = 1; n <= 4; ++n) results.push_back(checks::census_formulas_vs_brute(n, options));
    results.push_back(checks::census_identities(8));
    return all_of(results);
  });

  criterion(6, "orbit partition = same-type partition (n<=3)", [] {
    std::vector<CheckResult> results;
    for (int n = 1; n <= 3; ++n) results.push_back(checks::orbit_type_partition(n));
    return all_of(results);
  });

  criterion(7, "Moebius defining identity on every poset (impl n<=4, MR n<=3)", [] {
    std::vector<CheckResult> results;
    for (int n = 1; n <= 4; ++n) {
      auto poset = build_imp_poset(n);
      results.push_back(checks::mobius_law(*poset.table, "impl n=" + std::to_string(n)));
    }
    for (int n = 1; n <= 3; ++n) {
      auto poset = build_mr_poset(n);
      results.push_back(checks::mobius_law(*poset.table, "mr n=" + std::to_string(n)));
    }
    return all_of(results);
  });

  criterion(8, "implication-poset formula audit (n<=4, |mu|=n!, sign (-1)^n, n=1 split reported)", [] {
    std::vector<Discrepancy> discrepancies;
    std::vector<CheckResult> results;
    for (int n = 1; n <= 4; ++n) results.push_back(checks::impl_formula_vs_oracle(n, &discrepancies));
    auto failed = all_of(results);
    if (!failed.empty()) return failed;
    bool n1_reported = false;
    for (const auto& d : discrepancies) n1_reported = n1_reported || d.n == 1;
    if (!n1_reported) return std::string("the n=1 discrepancy against the printed value was not reported");
    return std::string();
  });

  criterion(9, "closure-theorem fibers match closed-poset Moebius values (pair closure, n<=3)", [] {
    std::vector<CheckResult> results;
    for (int n = 1; n <= 3; ++n) results.push_back(checks::closure_theorem_mr(n));
    auto failed = all_of(results);
    if (!failed.empty()) return failed;
    // the named fiber at n=2: {antidiagonal, L_2} with sum -1 + 3 = 2
    auto poset = build_mr_poset(2);
    auto report = closure_audit(*poset.table, mr_closure_map(poset), poset.bottom);
    for (const auto& fiber : report.fibers)
      if (fiber.closed_element == poset.top) {
        if (fiber.fiber.size() != 2 || fiber.fiber_sum != 2 || fiber.mu_closed != 2)
          return std::string("top fiber of the square is wrong");
      }
    return std::string();
  });

  criterion(10, "Boolean-locator counts equal 2^(n-m) S(n,m) (n<=3)", [] {
    std::vector<CheckResult> results;
    for (int n = 1; n <= 3; ++n) results.push_back(checks::boolean_locator_counts(n));
    return all_of(results);
  });

  criterion(11, "mu({1},L_n) for n=1..4: brute force, adjudicated recurrence, printed recurrence", [] {
    if (mr_mobius_bruteforce(1) != -1) return std::string("n=1 brute value is not -1");
    if (mr_mobius_bruteforce(2) != 3) return std::string("n=2 brute value is not 3");
    std::vector<Discrepancy> discrepancies;
    for (int n = 1; n <= 4; ++n) {
      auto result = checks::mr_values(n, &discrepancies);
      if (!result.pass) return result.name + ": " + result.detail;
    }
    if (discrepancies.size() != 4)
      return std::string("expected the printed recurrence to disagree with the oracle at every n");
    return std::string();
  });

  criterion(12, "derangements: inversion = direct (n=1..4), re-summation f = sum s (n<=3)", [] {
    auto r1 = derangements(1, DerangementMethod::Both);
    if (!r1.agree || *r1.inversion != 1) return std::string("n=1 derangement count is not 1");
    auto r2 = derangements(2, DerangementMethod::Both);
    if (!r2.agree || *r2.inversion != 3) return std::string("n=2 derangement count is not 3");
    for (int n = 3; n <= 4; ++n)
      if (!derangements(n, DerangementMethod::Both, 2).agree)
        return "methods disagree at n=" + std::to_string(n);
    // s_table validates f(A) = sum_{B >= A} s(B) for every A and throws on failure
    for (int n = 1; n <= 3; ++n) s_table(build_mr_poset(n));
    return std::string();
  });

  criterion(13, "byte-deterministic reports (cold/warm cache, jobs 1 vs N)", [] {
    TempDir dir;
    std::string cold, warm;
    {
      Cache cache(dir.path.string());
      cold = emit(mobius_report(3, cache), Format::Json);
    }
    {
      Cache cache(dir.path.string());
      warm = emit(mobius_report(3, cache), Format::Json);
    }
    if (cold != warm) return std::string("mobius report differs between cold and warm cache");
    CensusOptions one, many;
    many.jobs = 4;
    if (emit(census_report(3, one), Format::Csv) != emit(census_report(3, many), Format::Csv))
      return std::string("census report depends on the worker count");
    if (emit(derangements_report(4, DerangementMethod::Both, 1), Format::Json) !=
        emit(derangements_report(4, DerangementMethod::Both, 3), Format::Json))
      return std::string("derangement report depends on the worker count");
    return std::string();
  });

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 13 criteria passed\n";
  return 0;
}
