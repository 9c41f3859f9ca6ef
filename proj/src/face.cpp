#include "cubemob/face.hpp"

namespace cubemob {

namespace {

void require_same_dim(const Face& x, const Face& y, const char* op) {
  if (x.dim() != y.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

Face Face::from_states(const std::vector<State>& states) {
  std::uint32_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == State::Plus) pos |= 1u << i;
    if (states[i] == State::Minus) neg |= 1u << i;
  }
  return Face(static_cast<int>(states.size()), pos, neg);
}

Face Face::parse(const std::string& text) {
  if (text.empty() || text.size() > kMaxDim)
    throw std::invalid_argument("Face::parse: length must be in [1," + std::to_string(kMaxDim) + "]");
  std::uint32_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': pos |= 1u << i; break;
      case '-': neg |= 1u << i; break;
      case '*': break;
      default:
        throw std::invalid_argument("Face::parse: invalid character '" + std::string(1, text[i]) + "'");
    }
  }
  return Face(static_cast<int>(text.size()), pos, neg);
}

std::string Face::str() const {
  std::string s(n_, '*');
  for (int i = 1; i <= n_; ++i) {
    if (at(i) == State::Plus) s[i - 1] = '+';
    if (at(i) == State::Minus) s[i - 1] = '-';
  }
  return s;
}

bool leq(const Face& x, const Face& y) {
  require_same_dim(x, y, "leq");
  // On the fixed set of y, x must carry the same signs.
  return (y.pos_mask() & ~x.pos_mask()) == 0 && (y.neg_mask() & ~x.neg_mask()) == 0;
}

Face join(const Face& x, const Face& y) {
  require_same_dim(x, y, "join");
  return Face::from_masks(x.dim(), x.pos_mask() & y.pos_mask(), x.neg_mask() & y.neg_mask());
}

std::optional<Face> meet(const Face& x, const Face& y) {
  require_same_dim(x, y, "meet");
  if ((x.pos_mask() & y.neg_mask()) || (x.neg_mask() & y.pos_mask())) return std::nullopt;
  return Face::from_masks(x.dim(), x.pos_mask() | y.pos_mask(), x.neg_mask() | y.neg_mask());
}

Face delta(const Face& x, const Face& y) {
  if (!leq(y, x)) throw std::invalid_argument("delta: second argument must lie below the first");
  // Where x is fixed, y agrees with x and stays; where x is free, the fixed
  // part of y gets its signs flipped.
  std::uint32_t fr = x.free_mask();
  std::uint32_t pos = x.pos_mask() | (y.neg_mask() & fr);
  std::uint32_t neg = x.neg_mask() | (y.pos_mask() & fr);
  return Face::from_masks(x.dim(), pos, neg);
}

Face caret(const Face& x, const Face& y) {
  auto m = meet(x, delta(join(x, y), y));
  if (!m) throw std::logic_error("caret: inner meet missing (MR axiom violated)");
  return *m;
}

bool preceq(const Face& a, const Face& b) { return leq(delta(join(a, b), a), b); }

bool simeq(const Face& a, const Face& b) { return delta(join(a, b), a) == b; }

Face translate(const Face& a, const Face& x) {
  require_same_dim(a, x, "translate");
  auto m = meet(join(x, a), join(antipode(x), a));
  if (!m) throw std::logic_error("translate: meet of two faces above a must exist");
  return *m;
}

std::vector<Face> all_faces(int n) {
  if (n < 0 || n > Face::kMaxDim) throw std::invalid_argument("all_faces: dimension out of range");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<Face> out;
  out.reserve(total);
  // Ternary odometer with coordinate 1 as the most significant digit, so the
  // sequence comes out already in canonical order.
  std::vector<State> digits(n, State::Minus);
  for (std::size_t code = 0; code < total; ++code) {
    out.push_back(Face::from_states(digits));
    for (int i = n - 1; i >= 0; --i) {
      if (digits[i] != State::Free) {
        digits[i] = static_cast<State>(static_cast<int>(digits[i]) + 1);
        break;
      }
      digits[i] = State::Minus;
    }
  }
  return out;
}

}  // namespace cubemob
