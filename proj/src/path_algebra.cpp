#include "reach2/path_algebra.hpp"

#include <bit>

#include "reach2/error.hpp"
#include "reach2/parallel.hpp"

namespace reach2 {

std::string to_string(TwoReach value) {
  switch (value.kind()) {
    case TwoReach::Kind::Bot:
      return "B";
    case TwoReach::Kind::Top:
      return "T";
    case TwoReach::Kind::Edge:
      break;
  }
  return std::to_string(value.edge().tail + 1) + ">" + std::to_string(value.edge().head + 1);
}

PairValue serial(TwoReach a, TwoReach b) noexcept {
  if (a.is_bot() || b.is_bot()) return {TwoReach::bot(), TwoReach::bot()};
  return {a, b};
}

TwoReach parallel(TwoReach a, TwoReach b) noexcept {
  if (a.is_bot()) return b;
  if (b.is_bot()) return a;
  if (a.is_top() || b.is_top()) return TwoReach::top();
  return a == b ? a : TwoReach::top();
}

PairValue parallel(const PairValue& a, const PairValue& b) noexcept {
  return {parallel(a.left, b.left), parallel(a.right, b.right)};
}

bool is_admissible(const PairValue& p) noexcept {
  // Either both slots are Bot or neither is.
  return p.left.is_bot() == p.right.is_bot();
}

TwoReach project(const PairValue& p) {
  if (!is_admissible(p)) {
    throw InvariantError("inadmissible pair (" + to_string(p.left) + "," + to_string(p.right) +
                         ")");
  }
  if (p.right.is_edge()) return p.right;
  if (p.left.is_edge()) return p.left;  // (e, T)
  return p.right;                       // (T, T) or (B, B)
}

unsigned bit_width_for(std::size_t n) noexcept {
  return static_cast<unsigned>(std::bit_width(n));  // ceil(log2(n + 1))
}

Codeword::Codeword(unsigned k, bool fill) : k_(k), words_((std::size_t{8} * k + 63) / 64, 0) {
  if (fill) {
    for (std::size_t i = 0; i < size(); ++i) set(i, true);
  }
}

void Codeword::set(std::size_t i, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  auto& w = words_[i / 64];
  w = value ? (w | mask) : (w & ~mask);
}

bool Codeword::all_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::string Codeword::to_string() const {
  std::string s;
  s.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

Codeword& Codeword::operator&=(const Codeword& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Codeword& Codeword::operator|=(const Codeword& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

namespace {

// Writes `value` as k bits, most significant first, starting at `offset`.
void put_bits(Codeword& w, std::size_t offset, unsigned k, std::uint64_t value, bool complement) {
  for (unsigned b = 0; b < k; ++b) {
    const bool bit = (value >> (k - 1 - b)) & 1u;
    w.set(offset + b, bit != complement);
  }
}

std::uint64_t get_bits(const Codeword& w, std::size_t offset, unsigned k) {
  std::uint64_t value = 0;
  for (unsigned b = 0; b < k; ++b) value = (value << 1) | (w.get(offset + b) ? 1u : 0u);
  return value;
}

// Bits [offset, offset + 2k) equal the complement of [offset + 2k, offset + 4k).
bool self_complementary(const Codeword& w, std::size_t offset) {
  const std::size_t half = std::size_t{2} * w.k();
  for (std::size_t i = 0; i < half; ++i) {
    if (w.get(offset + i) == w.get(offset + half + i)) return false;
  }
  return true;
}

TwoReach decode_edge(const Codeword& w, std::size_t offset) {
  const unsigned k = w.k();
  const std::uint64_t x = get_bits(w, offset, k);
  const std::uint64_t y = get_bits(w, offset + k, k);
  if (x == 0 || y == 0 || x == y) {
    throw InvariantError("decoded an invalid edge id from codeword " + w.to_string());
  }
  return TwoReach::edge(static_cast<Vertex>(x - 1), static_cast<Vertex>(y - 1));
}

}  // namespace

Codeword encode(TwoReach value, Side side, unsigned k) {
  if (value.is_bot()) return Codeword(k, false);
  if (value.is_top()) return Codeword(k, true);
  const Edge e = value.edge();
  const std::uint64_t limit = std::uint64_t{1} << k;
  if (std::uint64_t{e.tail} + 1 >= limit || std::uint64_t{e.head} + 1 >= limit) {
    throw PreconditionError("edge id does not fit in " + std::to_string(k) + " bits");
  }
  Codeword w(k, true);
  const std::size_t base = side == Side::Left ? 0 : std::size_t{4} * k;
  put_bits(w, base, k, std::uint64_t{e.tail} + 1, false);
  put_bits(w, base + k, k, std::uint64_t{e.head} + 1, false);
  put_bits(w, base + 2 * k, k, std::uint64_t{e.tail} + 1, true);
  put_bits(w, base + 3 * k, k, std::uint64_t{e.head} + 1, true);
  return w;
}

TwoReach decode(const Codeword& word) {
  if (word.all_zero()) return TwoReach::bot();
  const std::size_t half = std::size_t{4} * word.k();
  if (self_complementary(word, half)) return decode_edge(word, half);
  if (self_complementary(word, 0)) return decode_edge(word, 0);
  return TwoReach::top();
}

TwoReachMatrix TwoReachMatrix::identity(std::size_t n) {
  TwoReachMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TwoReach::top();
  return m;
}

namespace {

void check_product_dims(const TwoReachMatrix& a, const TwoReachMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("path_product: dimension mismatch");
  if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0) {
    throw PreconditionError("path_product: empty operand");
  }
}

// One Boolean matrix per codeword coordinate.
std::vector<BitMatrix> encode_planes(const TwoReachMatrix& m, Side side, unsigned k) {
  const std::size_t planes = std::size_t{8} * k;
  std::vector<BitMatrix> out(planes, BitMatrix(m.rows(), m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const TwoReach v = m(i, j);
      if (v.is_bot()) continue;
      if (v.is_top()) {
        for (auto& plane : out) plane.set(i, j);
        continue;
      }
      const Codeword w = encode(v, side, k);
      for (std::size_t c = 0; c < planes; ++c) {
        if (w.get(c)) out[c].set(i, j);
      }
    }
  }
  return out;
}

}  // namespace

TwoReachMatrix path_product_direct(const TwoReachMatrix& a, const TwoReachMatrix& b) {
  check_product_dims(a, b);
  TwoReachMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      PairValue acc{TwoReach::bot(), TwoReach::bot()};
      for (std::size_t k = 0; k < a.cols(); ++k) acc = parallel(acc, serial(a(i, k), b(k, j)));
      out(i, j) = project(acc);
    }
  }
  return out;
}

TwoReachMatrix path_product_bitwise(const TwoReachMatrix& a, const TwoReachMatrix& b, unsigned k,
                                    const BoolMultiplier& backend) {
  check_product_dims(a, b);
  if (k == 0) throw PreconditionError("path_product: bit width must be positive");
  const auto left = encode_planes(a, Side::Left, k);
  const auto right = encode_planes(b, Side::Right, k);
  const std::size_t planes = left.size();

  std::vector<BitMatrix> product(planes);
  parallel_for(planes, [&](std::size_t c) { product[c] = backend.multiply(left[c], right[c]); });

  TwoReachMatrix out(a.rows(), b.cols());
  Codeword w(k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t c = 0; c < planes; ++c) w.set(c, product[c].get(i, j));
      out(i, j) = decode(w);
    }
  }
  return out;
}

TwoReachMatrix path_product(const TwoReachMatrix& a, const TwoReachMatrix& b, unsigned k,
                            const BoolMultiplier& backend) {
  if (a.rows() < kDirectProductThreshold && a.cols() < kDirectProductThreshold &&
      b.cols() < kDirectProductThreshold) {
    return path_product_direct(a, b);
  }
  return path_product_bitwise(a, b, k, backend);
}

}  // namespace reach2
