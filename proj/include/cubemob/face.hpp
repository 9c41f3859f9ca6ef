#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubemob {

// A face of the n-cube is a word over {Minus, Plus, Free}: fixed coordinates
// pin the face to one side of the cube, free coordinates span it. The whole
// cube is the all-Free word; vertices have no free coordinates. There are
// 3^n faces and they form an upper semilattice under containment.
enum class State : std::uint8_t { Minus = 0, Plus = 1, Free = 2 };

// Faces are immutable values; two coordinate bitmasks hold the fixed signs.
class Face {
 public:
  static constexpr int kMaxDim = 16;

  Face() = default;

  static Face top(int n) { return Face(n, 0u, 0u); }

  // The distinguished base vertex (written 0 throughout): all coordinates
  // fixed to Minus. Any vertex would do; one is pinned for reproducibility.
  static Face base_vertex(int n) { return Face(n, 0u, full_mask(n)); }

  static Face from_masks(int n, std::uint32_t pos, std::uint32_t neg) {
    return Face(n, pos, neg);
  }

  static Face from_states(const std::vector<State>& states);

  // Parses the textual literal, e.g. "+-*" (coordinate 1 leftmost).
  static Face parse(const std::string& text);

  int dim() const { return n_; }

  State at(int coord) const {  // 1-based
    std::uint32_t bit = 1u << (coord - 1);
    if (pos_ & bit) return State::Plus;
    if (neg_ & bit) return State::Minus;
    return State::Free;
  }

  std::uint32_t pos_mask() const { return pos_; }
  std::uint32_t neg_mask() const { return neg_; }
  std::uint32_t fixed_mask() const { return pos_ | neg_; }
  std::uint32_t free_mask() const { return full_mask(n_) & ~fixed_mask(); }

  int corank() const { return __builtin_popcount(fixed_mask()); }
  bool is_vertex() const { return corank() == n_; }
  bool is_top() const { return fixed_mask() == 0; }

  std::string str() const;

  friend bool operator==(const Face&, const Face&) = default;

  // Canonical total order: lexicographic with Minus < Plus < Free,
  // coordinate 1 most significant. All enumeration output is sorted by it.
  friend bool operator<(const Face& a, const Face& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (int i = 1; i <= a.n_; ++i) {
      auto ra = static_cast<int>(a.at(i)), rb = static_cast<int>(b.at(i));
      if (ra != rb) return ra < rb;
    }
    return false;
  }

  static std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

 private:
  Face(int n, std::uint32_t pos, std::uint32_t neg) : n_(static_cast<std::uint8_t>(n)), pos_(pos), neg_(neg) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("Face: dimension out of range");
    if ((pos & neg) != 0 || ((pos | neg) & ~full_mask(n)) != 0)
      throw std::invalid_argument("Face: malformed coordinate masks");
  }

  std::uint8_t n_ = 0;
  std::uint32_t pos_ = 0;
  std::uint32_t neg_ = 0;
};

// Containment order: x <= y iff wherever y is fixed, x is fixed the same way.
bool leq(const Face& x, const Face& y);

// Least face above both: keep coordinates fixed equally in both, free the rest.
Face join(const Face& x, const Face& y);

// Greatest lower bound, or nullopt when some coordinate is fixed to opposite
// signs. Partiality is semantic (it is what the MR axiom is about), not an error.
std::optional<Face> meet(const Face& x, const Face& y);

// Reflection of y through the centre of x; requires y <= x.
Face delta(const Face& x, const Face& y);

// x ^ y = x /\ delta(x v y, y). Total on the face semilattice; a missing
// inner meet would falsify MR-ness and is reported as a logic error.
Face caret(const Face& x, const Face& y);

// a preceq b iff delta(a v b, a) <= b; simeq requires equality.
bool preceq(const Face& a, const Face& b);
bool simeq(const Face& a, const Face& b);

// The beta map toward a: x |-> (x v a) /\ (delta(1,x) v a). Total in both
// arguments (each operand of the meet lies above a); image lies in [a, 1].
Face translate(const Face& a, const Face& x);

inline Face antipode(const Face& x) { return delta(Face::top(x.dim()), x); }

// All 3^n faces in canonical order.
std::vector<Face> all_faces(int n);

}  // namespace cubemob
