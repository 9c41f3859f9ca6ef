#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubemob/int_math.hpp"
#include "cubemob/poset.hpp"
#include "cubemob/subalgebra.hpp"

namespace cubemob {

// The poset of implication sublattices of [0, 1], with the structural
// elements aligned to the table indices.
struct ImpPoset {
  std::vector<ImpSublattice> elements;
  std::shared_ptr<PosetTable> table;
  std::size_t bottom = 0;  // {1}
  std::size_t top = 0;     // the full Boolean algebra
};

ImpPoset build_imp_poset(int n);  // n <= 5

// The poset of MR-subalgebras, elements aligned to table indices. n <= 4.
struct MrPoset {
  std::vector<MRSubalgebra> elements;
  std::vector<std::vector<Face>> materializations;
  std::shared_ptr<PosetTable> table;
  std::size_t bottom = 0;  // {1}
  std::size_t top = 0;     // the full face semilattice
};

MrPoset build_mr_poset(int n);

// Type of an implication sublattice: t[i-1] counts atom blocks of size i.
std::vector<int> imp_type(const ImpSublattice& b);

// Closed form for mu(A, B_n) on the implication-sublattice poset:
//   (-1)^(n-k) (n-k)! prod_i [(-1)^(i-1) (i-1)!]^(t_i),   k = sum i*t_i.
BigInt mu_impl_formula(const std::vector<int>& t, int n);

// The equivalent product form (-1)^(n-d) (n-k)! prod_i [(i-1)!]^(t_i).
BigInt mu_impl_formula_alt(const std::vector<int>& t, int n);

// Stirling numbers of the second kind, S(n,m) = m S(n-1,m) + S(n-1,m-1).
BigInt stirling2(int n, int m);

// Number of partitions of an n-set into m blocks of size at most two:
// n! / ((2m-n)! 2^(n-m) (n-m)!). These are the per-dimension fiber counts
// of the pair-closure operator, confirmed by enumeration at small n.
BigInt partitions_blocks_le2(int n, int m);

// mu({1}, L_n) three ways. The brute force runs the incidence recursion on
// the enumerated subalgebra poset (n <= 4) and is authoritative. The
// "paper" recurrence evaluates sum_m S(n,m) a_m / 2^m = n! verbatim. The
// adjudicated recurrence replaces the closed-poset value by (-1)^n n! and
// the coefficients by the enumeration-confirmed fiber counts:
//   a_n = (-1)^n n! - sum_{m=ceil(n/2)}^{n-1} partitions_blocks_le2(n,m) a_m.
BigInt mr_mobius_bruteforce(int n);
BigInt mr_mobius_bruteforce(const MrPoset& poset);
BigInt mr_recurrence_paper(int n);        // n <= 12
BigInt mr_recurrence_adjudicated(int n);  // n <= 12

struct BooleanLocatorCensus {
  int n = 0;
  int m = 0;
  BigInt enumerated;        // subalgebras of dimension m with Boolean locator
  BigInt formula;           // 2^(n-m) S(n,m)
  BigInt closure_top_count; // among those, pairs whose closure locates L_n
  BigInt fiber_formula;     // partitions_blocks_le2(n, m)
};

// Counts subalgebras of dimension m whose canonical locator has a Boolean
// second component (min B = 0), plus the sub-count whose pair closure
// locates the full algebra. n <= 4.
BooleanLocatorCensus boolean_locator_census(int n, int m);

struct ImplAuditEntry {
  std::size_t element;
  std::string label;
  BigInt oracle;
  BigInt formula;
  bool match;
};

// Compares mu_impl_formula against the poset oracle on every interval
// [A, B_n]; the oracle is authoritative.
std::vector<ImplAuditEntry> impl_formula_audit(const ImpPoset& poset);

// The pair-closure operator transported to poset indices:
// A |-> locate(pair_closure(locator_of(A))).
std::vector<std::size_t> mr_closure_map(const MrPoset& poset);

}  // namespace cubemob
