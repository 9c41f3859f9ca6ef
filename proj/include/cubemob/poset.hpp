#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cubemob/int_math.hpp"

namespace cubemob {

// An explicit finite poset: labelled elements plus the full order relation.
// Partial-order laws are validated eagerly on construction; a violation
// aborts with a diagnostic naming the offending pair or triple.
class PosetTable {
 public:
  PosetTable(std::vector<std::string> labels, std::vector<std::vector<char>> leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x][y] != 0; }

  // Moebius function via the incidence-algebra recursion:
  //   mu(x,x) = 1,  mu(x,y) = -sum_{x <= z < y} mu(x,z).
  // Memoized; safe for concurrent queries.
  BigInt mu(std::size_t x, std::size_t y) const;

  // Unique minimum/maximum; throws if absent.
  std::size_t bottom() const;
  std::size_t top() const;

  // FNV-1a over labels and the relation matrix; stable across runs.
  std::uint64_t content_hash() const;

  // Memo import/export for the persistent cache: pairs ((x,y), value).
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>> memo_snapshot() const;
  void memo_preload(const std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>>& entries) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> leq_;
  mutable std::map<std::pair<std::size_t, std::size_t>, BigInt> memo_;
  mutable std::mutex memo_mutex_;
};

struct ClosureFiber {
  std::size_t closed_element;
  std::vector<std::size_t> fiber;
  BigInt fiber_sum;   // sum of mu(y, x) over the fiber
  BigInt mu_closed;   // mu within the subposet of closed elements
  bool match;
};

struct ClosureReport {
  bool laws_ok = false;
  std::string law_violation;
  std::vector<ClosureFiber> fibers;
  bool all_match = false;
};

// Audit of the closure theorem: for a closure map cl (given as the image
// index per element) and a closed base point y, the fiber sums of mu(y, .)
// must reproduce the Moebius function of the closed subposet.
ClosureReport closure_audit(const PosetTable& poset, const std::vector<std::size_t>& cl, std::size_t y);

}  // namespace cubemob
