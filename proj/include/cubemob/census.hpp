#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubemob/autgroup.hpp"
#include "cubemob/int_math.hpp"
#include "cubemob/mobius.hpp"
#include "cubemob/subalgebra.hpp"

namespace cubemob {

// Closed forms from the orbit computation. All are exact integers and
// satisfy stab * orbit = 2^n n! and stab = fr * im_rho identically.
BigInt orbit_size_formula(const TypeVector& type, int n);
BigInt stab_size_formula(const TypeVector& type, int n);
BigInt fr_size_formula(const TypeVector& type, int n);
BigInt im_rho_formula(const TypeVector& type, int n);

// Brute-force counterparts over the full automorphism list.
BigInt orbit_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs = 1);
BigInt stab_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs = 1);
BigInt fr_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs = 1);
BigInt im_rho_brute(const std::vector<Face>& faces, const std::vector<SignedPerm>& auts, int jobs = 1);

// s(A) = sum_{B >= A} mu(A, B) f(B) over the subalgebra poset, with f the
// freezer count (formula column; the brute-equality gate is part of the
// audit suite). Indexed like the poset elements.
std::vector<BigInt> s_table(const MrPoset& poset);

struct DerangementReport {
  int n = 0;
  std::optional<BigInt> inversion;
  std::optional<BigInt> direct;
  bool agree = false;  // meaningful when both methods ran
};

enum class DerangementMethod { Inversion, Direct, Both };

// Derangements of the n-cube: automorphisms whose only fixed face is the
// top. The inversion method evaluates s({1}); the direct method scans the
// automorphism list. For n <= 3 the direct scan also asserts that every
// fixed-face set is closed under the subalgebra operations.
DerangementReport derangements(int n, DerangementMethod method, int jobs = 1);

struct CensusRow {
  TypeVector type;
  std::string representative;
  int r = 0;
  int k = 0;
  BigInt orbit_formula, stab_formula, fr_formula, im_rho_formula;
  std::optional<BigInt> orbit_bf, stab_bf, fr_bf, im_rho_bf;
  bool brute_match = true;  // false would mean a formula/oracle split
  BigInt f, g;
  std::optional<BigInt> s;
};

struct CensusOptions {
  std::uint64_t seed = 20240901;  // fixed published seed for the n=4 sample
  int sample_size = 50;
  int jobs = 1;
};

// One row per orbit (= per realizable type). Brute columns are filled for
// every subalgebra at n <= 3 and for a fixed-seed sample at n = 4; the s
// column needs the explicit poset and is filled for n <= 4.
std::vector<CensusRow> build_census(int n, const CensusOptions& options = {});

}  // namespace cubemob
