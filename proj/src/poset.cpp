#include "cubemob/poset.hpp"

#include <stdexcept>

namespace cubemob {

PosetTable::PosetTable(std::vector<std::string> labels, std::vector<std::vector<char>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  std::size_t n = labels_.size();
  if (leq_.size() != n) throw std::invalid_argument("PosetTable: relation size mismatch");
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("PosetTable: relation size mismatch");

  for (std::size_t x = 0; x < n; ++x)
    if (!leq_[x][x]) throw std::invalid_argument("PosetTable: not reflexive at " + labels_[x]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && leq_[x][y] && leq_[y][x])
        throw std::invalid_argument("PosetTable: antisymmetry fails on (" + labels_[x] + ", " + labels_[y] + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq_[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (leq_[y][z] && !leq_[x][z])
          throw std::invalid_argument("PosetTable: transitivity fails on (" + labels_[x] + ", " + labels_[y] +
                                      ", " + labels_[z] + ")");
    }
}

BigInt PosetTable::mu(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) throw std::invalid_argument("mu: arguments are not comparable");
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find({x, y});
    if (it != memo_.end()) return it->second;
  }
  BigInt value;
  if (x == y) {
    value = 1;
  } else {
    BigInt sum = 0;
    for (std::size_t z = 0; z < size(); ++z)
      if (leq(x, z) && leq(z, y) && z != y) sum += mu(x, z);
    value = -sum;
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::make_pair(x, y), value);
  return value;
}

std::size_t PosetTable::bottom() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool is_bottom = true;
    for (std::size_t y = 0; y < size(); ++y)
      if (!leq(x, y)) {
        is_bottom = false;
        break;
      }
    if (is_bottom) return x;
  }
  throw std::logic_error("PosetTable: no bottom element");
}

std::size_t PosetTable::top() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool is_top = true;
    for (std::size_t y = 0; y < size(); ++y)
      if (!leq(y, x)) {
        is_top = false;
        break;
      }
    if (is_top) return x;
  }
  throw std::logic_error("PosetTable: no top element");
}

std::uint64_t PosetTable::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  for (const auto& label : labels_) {
    for (char ch : label) mix(static_cast<unsigned char>(ch));
    mix(0);
  }
  for (const auto& row : leq_)
    for (char v : row) mix(static_cast<unsigned char>(v ? 1 : 0));
  return h;
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>> PosetTable::memo_snapshot() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return {memo_.begin(), memo_.end()};
}

void PosetTable::memo_preload(
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>>& entries) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  for (const auto& e : entries) {
    if (e.first.first >= size() || e.first.second >= size()) continue;
    memo_.insert(e);
  }
}

ClosureReport closure_audit(const PosetTable& poset, const std::vector<std::size_t>& cl, std::size_t y) {
  ClosureReport report;
  std::size_t n = poset.size();
  if (cl.size() != n) {
    report.law_violation = "closure map size mismatch";
    return report;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!poset.leq(x, cl[x])) {
      report.law_violation = "not extensive at " + poset.label(x);
      return report;
    }
    if (cl[cl[x]] != cl[x]) {
      report.law_violation = "not idempotent at " + poset.label(x);
      return report;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      if (poset.leq(x, z) && !poset.leq(cl[x], cl[z])) {
        report.law_violation = "not monotone on (" + poset.label(x) + ", " + poset.label(z) + ")";
        return report;
      }
  if (cl[y] != y) {
    report.law_violation = "base point is not closed";
    return report;
  }
  report.laws_ok = true;

  // subposet of closed elements
  std::vector<std::size_t> closed;
  for (std::size_t x = 0; x < n; ++x)
    if (cl[x] == x) closed.push_back(x);
  std::vector<std::string> labels;
  std::vector<std::vector<char>> rel(closed.size(), std::vector<char>(closed.size(), 0));
  for (std::size_t i = 0; i < closed.size(); ++i) {
    labels.push_back(poset.label(closed[i]));
    for (std::size_t j = 0; j < closed.size(); ++j) rel[i][j] = poset.leq(closed[i], closed[j]) ? 1 : 0;
  }
  PosetTable closed_poset(std::move(labels), std::move(rel));

  report.all_match = true;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    std::size_t zbar = closed[i];
    ClosureFiber fiber;
    fiber.closed_element = zbar;
    fiber.fiber_sum = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (cl[x] == zbar) {
        fiber.fiber.push_back(x);
        if (poset.leq(y, x)) fiber.fiber_sum += poset.mu(y, x);
      }
    std::size_t yi = 0;
    while (closed[yi] != y) ++yi;
    fiber.mu_closed = closed_poset.leq(yi, i) ? closed_poset.mu(yi, i) : BigInt(0);
    fiber.match = fiber.fiber_sum == fiber.mu_closed;
    report.all_match = report.all_match && fiber.match;
    report.fibers.push_back(std::move(fiber));
  }
  return report;
}

}  // namespace cubemob
