#include "reach2/bitmatrix.hpp"

#include <algorithm>

#include "reach2/error.hpp"

namespace reach2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits),
      bits_(rows * stride_, 0) {
  if (rows == 0 || cols == 0) throw PreconditionError("bit matrix dimensions must be positive");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::count_row(std::size_t i) const noexcept {
  std::size_t total = 0;
  for (Word w : row(i)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw PreconditionError("bit matrix dimension mismatch");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

BitMatrix WordParallelMultiplier::multiply(const BitMatrix& a, const BitMatrix& b) const {
  BitMatrix c(a.rows(), b.cols());
  const std::size_t stride = b.words_per_row();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    a.for_each_in_row(i, [&](std::size_t k) {
      const auto src = b.row(k);
      for (std::size_t w = 0; w < stride; ++w) out[w] |= src[w];
    });
  }
  return c;
}

const BoolMultiplier& default_multiplier() {
  static const WordParallelMultiplier instance;
  return instance;
}

BitMatrix bool_multiply(const BitMatrix& a, const BitMatrix& b, const BoolMultiplier& backend) {
  if (a.cols() != b.rows()) throw PreconditionError("bool_multiply: dimension mismatch");
  return backend.multiply(a, b);
}

BitMatrix transitive_closure(const BitMatrix& adjacency, const BoolMultiplier& backend) {
  if (adjacency.rows() != adjacency.cols()) {
    throw PreconditionError("transitive_closure: matrix must be square");
  }
  const std::size_t n = adjacency.rows();
  BitMatrix closure = adjacency;
  closure |= BitMatrix::identity(n);
  // After t squarings all paths of length <= 2^t are covered.
  for (std::size_t span = 1; span < n; span *= 2) {
    BitMatrix next = bool_multiply(closure, closure, backend);
    if (next == closure) break;
    closure = std::move(next);
  }
  return closure;
}

}  // namespace reach2
