#include "cubemob/mobius.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubemob {

ImpPoset build_imp_poset(int n) {
  ImpPoset poset;
  poset.elements = enumerate_imp_sublattices(n);
  std::size_t m = poset.elements.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& e : poset.elements) labels.push_back(e.str());
  std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i][j] = imp_includes(poset.elements[i], poset.elements[j]) ? 1 : 0;
  poset.table = std::make_shared<PosetTable>(std::move(labels), std::move(rel));
  poset.bottom = poset.table->bottom();
  poset.top = poset.table->top();
  return poset;
}

MrPoset build_mr_poset(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("build_mr_poset: supported range is 1 <= n <= 4");
  MrPoset poset;
  poset.elements = enumerate_subalgebras(n);
  std::size_t m = poset.elements.size();
  poset.materializations.reserve(m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& e : poset.elements) {
    poset.materializations.push_back(materialize(e));
    labels.push_back(e.str());
  }
  std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i][j] = includes(poset.elements[i], poset.elements[j]) ? 1 : 0;
  poset.table = std::make_shared<PosetTable>(std::move(labels), std::move(rel));
  poset.bottom = poset.table->bottom();
  poset.top = poset.table->top();
  return poset;
}

std::vector<int> imp_type(const ImpSublattice& b) {
  std::vector<int> t(b.ambient_dim(), 0);
  for (std::uint32_t p : b.parts()) t[__builtin_popcount(p) - 1] += 1;
  return t;
}

BigInt mu_impl_formula(const std::vector<int>& t, int n) {
  int k = 0;
  for (int i = 1; i <= static_cast<int>(t.size()); ++i) k += i * t[i - 1];
  if (k > n) throw std::invalid_argument("mu_impl_formula: type exceeds ambient rank");
  BigInt value = factorial(n - k);
  if ((n - k) % 2) value = -value;
  for (int i = 1; i <= static_cast<int>(t.size()); ++i) {
    BigInt base = factorial(i - 1);
    if ((i - 1) % 2) base = -base;
    for (int c = 0; c < t[i - 1]; ++c) value *= base;
  }
  return value;
}

BigInt mu_impl_formula_alt(const std::vector<int>& t, int n) {
  int k = 0, d = 0;
  for (int i = 1; i <= static_cast<int>(t.size()); ++i) {
    k += i * t[i - 1];
    d += t[i - 1];
  }
  if (k > n) throw std::invalid_argument("mu_impl_formula_alt: type exceeds ambient rank");
  BigInt value = factorial(n - k);
  if ((n - d) % 2) value = -value;
  for (int i = 1; i <= static_cast<int>(t.size()); ++i)
    for (int c = 0; c < t[i - 1]; ++c) value *= factorial(i - 1);
  return value;
}

BigInt stirling2(int n, int m) {
  if (n < 0 || m < 0 || m > n) throw std::invalid_argument("stirling2: need 0 <= m <= n");
  std::vector<BigInt> row{1};  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 0);
    for (int j = 1; j <= i; ++j) {
      next[j] = j * (j < static_cast<int>(row.size()) ? row[j] : BigInt(0));
      next[j] += row[j - 1];
    }
    next[0] = 0;
    row = std::move(next);
  }
  return row[m];
}

BigInt partitions_blocks_le2(int n, int m) {
  if (m < 0 || m > n || 2 * m < n) return 0;
  return exact_div(factorial(n), factorial(2 * m - n) * pow2(n - m) * factorial(n - m));
}

BigInt mr_mobius_bruteforce(const MrPoset& poset) { return poset.table->mu(poset.bottom, poset.top); }

BigInt mr_mobius_bruteforce(int n) {
  auto poset = build_mr_poset(n);
  return mr_mobius_bruteforce(poset);
}

BigInt mr_recurrence_paper(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("mr_recurrence_paper: supported range is 1 <= n <= 12");
  std::vector<BigInt> a(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    BigInt value = pow2(i) * factorial(i);
    for (int m = (i + 1) / 2; m < i; ++m) value -= pow2(i - m) * stirling2(i, m) * a[m];
    a[i] = value;
  }
  return a[n];
}

BigInt mr_recurrence_adjudicated(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("mr_recurrence_adjudicated: supported range is 1 <= n <= 12");
  std::vector<BigInt> a(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    BigInt value = factorial(i);
    if (i % 2) value = -value;
    for (int m = (i + 1) / 2; m < i; ++m) value -= partitions_blocks_le2(i, m) * a[m];
    a[i] = value;
  }
  return a[n];
}

BooleanLocatorCensus boolean_locator_census(int n, int m) {
  if (n < 1 || n > 4) throw std::invalid_argument("boolean_locator_census: supported range is 1 <= n <= 4");
  if (m < 0 || m > n) throw std::invalid_argument("boolean_locator_census: need 0 <= m <= n");
  BooleanLocatorCensus census;
  census.n = n;
  census.m = m;
  census.enumerated = 0;
  census.closure_top_count = 0;
  auto full = MRSubalgebra::full(n);
  for (const auto& alg : enumerate_subalgebras(n)) {
    if (alg.dim() != m) continue;
    auto pair = locator_of(alg);
    if (!pair.B.is_boolean()) continue;
    census.enumerated += 1;
    if (locate(pair_closure(pair)) == full) census.closure_top_count += 1;
  }
  census.formula = pow2(n - m) * stirling2(n, m);
  census.fiber_formula = partitions_blocks_le2(n, m);
  return census;
}

std::vector<ImplAuditEntry> impl_formula_audit(const ImpPoset& poset) {
  std::vector<ImplAuditEntry> out;
  int n = poset.elements.empty() ? 0 : poset.elements.front().ambient_dim();
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    ImplAuditEntry entry;
    entry.element = i;
    entry.label = poset.elements[i].str();
    entry.oracle = poset.table->mu(i, poset.top);
    entry.formula = mu_impl_formula(imp_type(poset.elements[i]), n);
    entry.match = entry.oracle == entry.formula;
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<std::size_t> mr_closure_map(const MrPoset& poset) {
  std::map<MRSubalgebra, std::size_t> index;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) index.emplace(poset.elements[i], i);
  std::vector<std::size_t> cl(poset.elements.size());
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    auto closed = locate(pair_closure(locator_of(poset.elements[i])));
    auto it = index.find(closed);
    if (it == index.end()) throw std::logic_error("mr_closure_map: closure left the enumerated poset");
    cl[i] = it->second;
  }
  return cl;
}

}  // namespace cubemob
