#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bic/gf.hpp"

namespace bic {

/// Dense row-major matrix over GF(2^m). All entries share one field; the
/// degree is stored once per matrix. Values are immutable in spirit: every
/// operation returns a fresh matrix.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), degree_(1) {}
  Matrix(unsigned rows, unsigned cols, unsigned degree);

  static Matrix identity(unsigned n, unsigned degree);
  /// G^s for a q x q down-shift: (G^s x)[r] = x[r-s], zeros filling the top.
  static Matrix shift(unsigned q, unsigned s, unsigned degree);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  unsigned degree() const { return degree_; }

  std::uint16_t at(unsigned r, unsigned c) const { return v_[r * cols_ + c]; }
  void set(unsigned r, unsigned c, std::uint16_t value);

  FieldElem elem(unsigned r, unsigned c) const {
    return FieldElem{at(r, c), static_cast<std::uint8_t>(degree_)};
  }

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Horizontal concatenation [a | b]; row counts must match.
  static Matrix hcat(const Matrix& a, const Matrix& b);
  /// Vertical stack.
  static Matrix vcat(const Matrix& a, const Matrix& b);
  /// Copies of the selected columns, in the given order.
  Matrix select_cols(const std::vector<unsigned>& idx) const;
  Matrix select_rows(const std::vector<unsigned>& idx) const;

  /// Exact rank by Gaussian elimination over GF(2^m).
  unsigned rank() const;

 private:
  unsigned rows_, cols_, degree_;
  std::vector<std::uint16_t> v_;
};

/// True iff the block w in y = A_dec*w + A_nuis*v is uniquely determined for
/// every y, i.e. rank([A_dec|A_nuis]) = rank(A_dec) + rank(A_nuis) and A_dec
/// has full column rank. Row counts must match.
bool solve_unique_block(const Matrix& a_dec, const Matrix& a_nuis);

struct UniqueBlockRanks {
  unsigned rank_dec = 0;
  unsigned rank_nuis = 0;
  unsigned rank_joint = 0;
  bool unique = false;
};
UniqueBlockRanks solve_unique_block_ranks(const Matrix& a_dec, const Matrix& a_nuis);

}  // namespace bic
