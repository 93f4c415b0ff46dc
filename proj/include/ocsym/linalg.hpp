#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ocsym/poly.hpp"

namespace ocsym {

/// Sparse row-major matrix over Q; zero entries are never stored.
class RatMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;  // sorted by column

  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static RatMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }
  std::size_t nonzeros() const;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  /// Appends a row; entries may be unsorted and contain zeros or repeats (summed).
  void append_row(std::vector<Entry> entries);
  std::vector<std::vector<Rational>> to_dense() const;

  std::vector<Rational> multiply(const std::vector<Rational>& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Exact reduced row echelon form. Within the leftmost column that still has
/// a nonzero among unreduced rows, the pivot is the entry of least bit size
/// (numerator plus denominator), ties broken by row index.
RrefResult rref(const RatMatrix& a);

/// Basis of the right nullspace: one vector per non-pivot column, in
/// increasing column order, with that coordinate 1 and the other free
/// coordinates 0.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

}  // namespace ocsym
