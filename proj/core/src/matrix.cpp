#include "bic/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bic {

Matrix::Matrix(unsigned rows, unsigned cols, unsigned degree)
    : rows_(rows), cols_(cols), degree_(degree), v_(std::size_t{rows} * cols, 0) {
  Gf::modulus(degree);  // validate the degree
}

Matrix Matrix::identity(unsigned n, unsigned degree) {
  Matrix m(n, n, degree);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::shift(unsigned q, unsigned s, unsigned degree) {
  Matrix m(q, q, degree);
  for (unsigned r = s; r < q; ++r) m.set(r, r - s, 1);
  return m;
}

void Matrix::set(unsigned r, unsigned c, std::uint16_t value) {
  if (value >= (1u << degree_))
    throw std::invalid_argument("entry out of field range");
  v_[r * cols_ + c] = value;
}

bool Matrix::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::uint16_t x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, degree_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.degree_ != b.degree_)
    throw std::invalid_argument("matrix addition shape/field mismatch");
  Matrix s(a.rows_, a.cols_, a.degree_);
  for (std::size_t i = 0; i < a.v_.size(); ++i) s.v_[i] = a.v_[i] ^ b.v_[i];
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || a.degree_ != b.degree_)
    throw std::invalid_argument("matrix product shape/field mismatch");
  const Gf& f = Gf::get(a.degree_);
  Matrix p(a.rows_, b.cols_, a.degree_);
  for (unsigned r = 0; r < a.rows_; ++r) {
    for (unsigned i = 0; i < a.cols_; ++i) {
      std::uint16_t x = a.at(r, i);
      if (x == 0) continue;
      for (unsigned c = 0; c < b.cols_; ++c) {
        std::uint16_t y = b.at(i, c);
        if (y == 0) continue;
        p.v_[r * p.cols_ + c] ^= f.mul(x, y);
      }
    }
  }
  return p;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  if (a.rows_ != b.rows_ || a.degree_ != b.degree_)
    throw std::invalid_argument("hcat row/field mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_, a.degree_);
  for (unsigned r = 0; r < a.rows_; ++r) {
    for (unsigned c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c));
    for (unsigned c = 0; c < b.cols_; ++c) m.set(r, a.cols_ + c, b.at(r, c));
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  if (a.cols_ != b.cols_ || a.degree_ != b.degree_)
    throw std::invalid_argument("vcat col/field mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_, a.degree_);
  for (unsigned r = 0; r < a.rows_; ++r)
    for (unsigned c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c));
  for (unsigned r = 0; r < b.rows_; ++r)
    for (unsigned c = 0; c < b.cols_; ++c) m.set(a.rows_ + r, c, b.at(r, c));
  return m;
}

Matrix Matrix::select_cols(const std::vector<unsigned>& idx) const {
  Matrix m(rows_, static_cast<unsigned>(idx.size()), degree_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < idx.size(); ++c) m.set(r, c, at(r, idx[c]));
  return m;
}

Matrix Matrix::select_rows(const std::vector<unsigned>& idx) const {
  Matrix m(static_cast<unsigned>(idx.size()), cols_, degree_);
  for (unsigned r = 0; r < idx.size(); ++r)
    for (unsigned c = 0; c < cols_; ++c) m.set(r, c, at(idx[r], c));
  return m;
}

unsigned Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  const Gf& f = Gf::get(degree_);
  std::vector<std::uint16_t> w = v_;
  auto at_w = [&](unsigned r, unsigned c) -> std::uint16_t& { return w[r * cols_ + c]; };

  unsigned rank = 0;
  for (unsigned col = 0; col < cols_ && rank < rows_; ++col) {
    unsigned pivot = rank;
    while (pivot < rows_ && at_w(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (unsigned c = col; c < cols_; ++c) std::swap(at_w(pivot, c), at_w(rank, c));
    const std::uint16_t piv_inv = f.inv(at_w(rank, col));
    for (unsigned r = rank + 1; r < rows_; ++r) {
      std::uint16_t x = at_w(r, col);
      if (x == 0) continue;
      const std::uint16_t factor = f.mul(x, piv_inv);
      for (unsigned c = col; c < cols_; ++c)
        at_w(r, c) ^= f.mul(factor, at_w(rank, c));
    }
    ++rank;
  }
  return rank;
}

UniqueBlockRanks solve_unique_block_ranks(const Matrix& a_dec, const Matrix& a_nuis) {
  if (a_dec.cols() > 0 && a_nuis.cols() > 0 && a_dec.rows() != a_nuis.rows())
    throw std::invalid_argument("solve_unique_block row-count mismatch");
  UniqueBlockRanks r;
  r.rank_dec = a_dec.rank();
  r.rank_nuis = a_nuis.rank();
  if (a_dec.cols() == 0) {
    r.rank_joint = r.rank_nuis;
    r.unique = true;  // nothing to decode
    return r;
  }
  if (a_nuis.cols() == 0) {
    r.rank_joint = r.rank_dec;
    r.unique = r.rank_dec == a_dec.cols();
    return r;
  }
  r.rank_joint = Matrix::hcat(a_dec, a_nuis).rank();
  r.unique = r.rank_dec == a_dec.cols() && r.rank_joint == r.rank_dec + r.rank_nuis;
  return r;
}

bool solve_unique_block(const Matrix& a_dec, const Matrix& a_nuis) {
  return solve_unique_block_ranks(a_dec, a_nuis).unique;
}

}  // namespace bic
