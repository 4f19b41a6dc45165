#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reach2/bitmatrix.hpp"
#include "reach2/graph.hpp"

namespace reach2 {

// A closure cell: Bot (unreachable), Top (two edge-disjoint paths) or a
// separating edge.
class TwoReach {
 public:
  enum class Kind : std::uint8_t { Bot, Top, Edge };

  constexpr TwoReach() noexcept = default;
  static constexpr TwoReach bot() noexcept { return {}; }
  static constexpr TwoReach top() noexcept { return TwoReach(kTopTag, 0); }
  static constexpr TwoReach edge(Edge e) noexcept { return TwoReach(e.tail, e.head); }
  static constexpr TwoReach edge(Vertex tail, Vertex head) noexcept {
    return TwoReach(tail, head);
  }

  constexpr Kind kind() const noexcept {
    if (tail_ == kBotTag) return Kind::Bot;
    if (tail_ == kTopTag) return Kind::Top;
    return Kind::Edge;
  }
  constexpr bool is_bot() const noexcept { return tail_ == kBotTag; }
  constexpr bool is_top() const noexcept { return tail_ == kTopTag; }
  constexpr bool is_edge() const noexcept { return kind() == Kind::Edge; }
  // Only meaningful when is_edge().
  constexpr Edge edge() const noexcept { return {tail_, head_}; }

  friend constexpr bool operator==(TwoReach, TwoReach) noexcept = default;

 private:
  static constexpr Vertex kBotTag = static_cast<Vertex>(-1);
  static constexpr Vertex kTopTag = static_cast<Vertex>(-2);
  constexpr TwoReach(Vertex tail, Vertex head) noexcept : tail_(tail), head_(head) {}

  Vertex tail_ = kBotTag;
  Vertex head_ = 0;
};

std::string to_string(TwoReach value);

// Result of the serial operator; only (e1,e2), (e,T), (T,e), (B,B), (T,T)
// are admissible.
struct PairValue {
  TwoReach left;
  TwoReach right;
  friend constexpr bool operator==(const PairValue&, const PairValue&) noexcept = default;
};

enum class Side : std::uint8_t { Left, Right };

// a (x) b: (B,B) if either side is Bot, else (a,b).
PairValue serial(TwoReach a, TwoReach b) noexcept;
// Bot is the identity, Top absorbs, e (+) e = e, e (+) e' = Top.
TwoReach parallel(TwoReach a, TwoReach b) noexcept;
PairValue parallel(const PairValue& a, const PairValue& b) noexcept;
// Right edge wins. Throws InvariantError on an inadmissible pair.
TwoReach project(const PairValue& p);
bool is_admissible(const PairValue& p) noexcept;

// Smallest k with 2^k >= n + 1; ids are stored 1-based in k bits.
unsigned bit_width_for(std::size_t n) noexcept;

// An 8k-bit string. Bit 0 is the first (most significant) bit.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(unsigned k, bool fill = false);

  unsigned k() const noexcept { return k_; }
  std::size_t size() const noexcept { return std::size_t{8} * k_; }
  bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value) noexcept;

  bool all_zero() const noexcept;
  std::string to_string() const;

  Codeword& operator&=(const Codeword& other) noexcept;
  Codeword& operator|=(const Codeword& other) noexcept;
  friend Codeword operator&(Codeword a, const Codeword& b) noexcept { return a &= b; }
  friend Codeword operator|(Codeword a, const Codeword& b) noexcept { return a |= b; }
  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  unsigned k_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bot -> 0^{8k}; Top -> 1^{8k}; a Left edge -> id(x) id(y) ~id(x) ~id(y) 1^{4k};
// a Right edge -> 1^{4k} id(x) id(y) ~id(x) ~id(y). Throws PreconditionError
// when an endpoint does not fit in k bits.
Codeword encode(TwoReach value, Side side, unsigned k);

// Inverse of OR-accumulated ANDs of left/right encodings. Checks, in order:
// all zeros, a self-complementary right half, a self-complementary left half;
// anything else is Top.
TwoReach decode(const Codeword& word);

// Row-major matrix of closure cells.
class TwoReachMatrix {
 public:
  TwoReachMatrix() = default;
  TwoReachMatrix(std::size_t rows, std::size_t cols, TwoReach fill = TwoReach::bot())
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  // Top on the diagonal, Bot elsewhere.
  static TwoReachMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  TwoReach operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }
  TwoReach& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * cols_ + j]; }

  friend bool operator==(const TwoReachMatrix&, const TwoReachMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TwoReach> cells_;
};

// (A o B)[i][j] = project( (+)_k A[i][k] (x) B[k][j] ), evaluated cell by cell.
TwoReachMatrix path_product_direct(const TwoReachMatrix& a, const TwoReachMatrix& b);

// Same product through 8k coordinate-wise Boolean multiplications of the
// left encoding of `a` and the right encoding of `b`.
TwoReachMatrix path_product_bitwise(const TwoReachMatrix& a, const TwoReachMatrix& b,
                                    unsigned k,
                                    const BoolMultiplier& backend = default_multiplier());

// Dispatches to the direct evaluator when every dimension is below
// kDirectProductThreshold, to the bitwise route otherwise.
inline constexpr std::size_t kDirectProductThreshold = 8;
TwoReachMatrix path_product(const TwoReachMatrix& a, const TwoReachMatrix& b, unsigned k,
                            const BoolMultiplier& backend = default_multiplier());

}  // namespace reach2
