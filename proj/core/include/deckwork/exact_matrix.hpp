#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "deckwork/bigint.hpp"
#include "deckwork/canonical.hpp"

namespace deckwork {

// Dense matrix of arbitrary-precision integers with row labels (sequence
// keys, rendered) and column labels (isomorphism classes).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const BigInt> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  // Appends a row; its length must equal cols().
  void append_row(std::span<const BigInt> values, std::string label = {});

  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<CanonicalKey>& col_labels() const noexcept { return col_labels_; }
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<CanonicalKey> labels);

  ExactMatrix transposed() const;
  // Rows of this matrix followed by the rows of `below`.
  ExactMatrix stacked(const ExactMatrix& below) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
  std::vector<std::string> row_labels_;
  std::vector<CanonicalKey> col_labels_;
};

ExactMatrix identity_matrix(std::size_t n);

// Rank over the rationals by fraction-free (Bareiss) elimination. Pivot is
// the first nonzero entry at or below the current row; every division is
// checked to be exact (kInternal otherwise).
std::size_t rank(const ExactMatrix& m);

std::vector<BigInt> matvec(const ExactMatrix& m, std::span<const BigInt> x);

// Echelon basis maintained row by row, for greedy rank-increase searches.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

  // Adds the row if it is independent of the rows kept so far; returns
  // whether the rank grew.
  bool add(std::span<const BigInt> row);
  // Whether the row would raise the rank, without keeping it.
  bool independent(std::span<const BigInt> row) const;
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  std::vector<BigInt> reduce(std::span<const BigInt> row) const;

  std::size_t cols_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::size_t> pivots_;
};

// Header: "sequence" then column labels; one line per row with the row label
// first. Column labels are graph6/digraph6 tokens of the canonical forms.
std::string to_csv(const ExactMatrix& m);
// Aligned table with labels, for reading by eye.
std::string to_text(const ExactMatrix& m);

}  // namespace deckwork
