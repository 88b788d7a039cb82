#include "deckwork/exact_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "deckwork/error.hpp"
#include "deckwork/graph6.hpp"

namespace deckwork {

void ExactMatrix::append_row(std::span<const BigInt> values, std::string label) {
  if (values.size() != cols_) throw Error(ErrorCode::kInvalidArgument, "row length does not match column count");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
  if (!label.empty() || !row_labels_.empty()) {
    row_labels_.resize(rows_ - 1);
    row_labels_.push_back(std::move(label));
  }
}

void ExactMatrix::set_row_labels(std::vector<std::string> labels) {
  if (labels.size() != rows_) throw Error(ErrorCode::kInvalidArgument, "row label count mismatch");
  row_labels_ = std::move(labels);
}

void ExactMatrix::set_col_labels(std::vector<CanonicalKey> labels) {
  if (labels.size() != cols_) throw Error(ErrorCode::kInvalidArgument, "column label count mismatch");
  col_labels_ = std::move(labels);
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorCode::kInvalidArgument, "stacking matrices of different widths");
  ExactMatrix out = *this;
  const bool labelled = !row_labels_.empty() || !below.row_labels_.empty();
  if (labelled) out.row_labels_.resize(rows_);
  for (std::size_t r = 0; r < below.rows_; ++r)
    out.append_row(below.row(r), labelled && r < below.row_labels_.size() ? below.row_labels_[r] : std::string{});
  if (labelled) out.row_labels_.resize(out.rows_);
  return out;
}

ExactMatrix identity_matrix(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<BigInt> a(m.row(0).data(), m.row(0).data() + rows * cols);
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };
  BigInt prev = 1;
  BigInt tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const BigInt& pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = at(i, j) * pivot - at(i, c) * at(r, j);
        if (!mpz_divisible_p(tmp.get_mpz_t(), prev.get_mpz_t()))
          throw Error(ErrorCode::kInternal, "Bareiss step produced an inexact division");
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::vector<BigInt> matvec(const ExactMatrix& m, std::span<const BigInt> x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "vector length does not match column count");
  std::vector<BigInt> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * x[c];
    y[r] = std::move(acc);
  }
  return y;
}

std::vector<BigInt> IncrementalRank::reduce(std::span<const BigInt> row) const {
  if (row.size() != cols_) throw Error(ErrorCode::kInvalidArgument, "row length does not match column count");
  std::vector<BigInt> v(row.begin(), row.end());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (v[p] == 0) continue;
    const BigInt f = v[p];
    const BigInt& bp = basis_[b][p];
    for (std::size_t c = 0; c < cols_; ++c) v[c] = v[c] * bp - basis_[b][c] * f;
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

bool IncrementalRank::independent(std::span<const BigInt> row) const {
  const auto v = reduce(row);
  return std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
}

bool IncrementalRank::add(std::span<const BigInt> row) {
  auto v = reduce(row);
  const auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
  if (it == v.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
  basis_.push_back(std::move(v));
  return true;
}

namespace {

std::vector<std::string> column_names(const ExactMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    out.push_back(c < m.col_labels().size() ? encode_token(key_graph(m.col_labels()[c])) : "c" + std::to_string(c));
  return out;
}

std::string row_name(const ExactMatrix& m, std::size_t r) {
  return r < m.row_labels().size() ? m.row_labels()[r] : "r" + std::to_string(r);
}

}  // namespace

std::string to_csv(const ExactMatrix& m) {
  std::ostringstream os;
  os << "sequence";
  for (const auto& name : column_names(m)) os << ',' << name;
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << row_name(m, r);
    for (std::size_t c = 0; c < m.cols(); ++c) os << ',' << m.at(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

std::string to_text(const ExactMatrix& m) {
  const auto cols = column_names(m);
  std::size_t label_width = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) label_width = std::max(label_width, row_name(m, r).size());
  std::vector<std::size_t> widths(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    widths[c] = cols[c].size();
    for (std::size_t r = 0; r < m.rows(); ++r) widths[c] = std::max(widths[c], m.at(r, c).get_str().size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) { os << std::string(w - s.size(), ' ') << s; };
  pad("", label_width);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    os << "  ";
    pad(cols[c], widths[c]);
  }
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto name = row_name(m, r);
    os << name << std::string(label_width - name.size(), ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << "  ";
      pad(m.at(r, c).get_str(), widths[c]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace deckwork
