#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reach2 {

// Dense Boolean matrix, rows packed into 64-bit words. Padding bits past
// `cols` in the last word of every row are kept zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    Word& w = bits_[i * stride_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<Word> row(std::size_t i) noexcept { return {bits_.data() + i * stride_, stride_}; }
  std::span<const Word> row(std::size_t i) const noexcept {
    return {bits_.data() + i * stride_, stride_};
  }

  std::size_t count() const noexcept;
  std::size_t count_row(std::size_t i) const noexcept;

  // Calls fn(j) for every set column of row i, ascending.
  template <typename Fn>
  void for_each_in_row(std::size_t i, Fn&& fn) const {
    const auto r = row(i);
    for (std::size_t w = 0; w < stride_; ++w) {
      for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  BitMatrix& operator|=(const BitMatrix& other);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

// Boolean product backend. Callers depend only on this interface so that a
// faster multiplication can be substituted.
class BoolMultiplier {
 public:
  virtual ~BoolMultiplier() = default;
  virtual BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) const = 0;
};

// Cubic row-broadcast multiplication over packed words.
class WordParallelMultiplier final : public BoolMultiplier {
 public:
  BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) const override;
};

const BoolMultiplier& default_multiplier();

// c[i][j] = OR_k a[i][k] AND b[k][j]. Throws PreconditionError on a
// dimension mismatch.
BitMatrix bool_multiply(const BitMatrix& a, const BitMatrix& b,
                        const BoolMultiplier& backend = default_multiplier());

// Reflexive-transitive closure by repeated squaring of (A | I).
BitMatrix transitive_closure(const BitMatrix& adjacency,
                             const BoolMultiplier& backend = default_multiplier());

}  // namespace reach2
