#pragma once

#include "mincode/gf.hpp"

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace mincode {

/// Dense matrix over a Field. Value type, compared structurally; all
/// elimination is exact (field inverses), so there is no pivot tolerance
/// anywhere.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols,
           std::vector<std::uint32_t> entries);
    /// Row-major literal, mainly for tests.
    static Matrix from_rows(FieldPtr field,
                            std::initializer_list<std::initializer_list<std::uint32_t>> rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v; }

    std::vector<std::uint32_t> row(std::size_t r) const;
    std::vector<std::uint32_t> col(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    bool operator==(const Matrix& other) const;

    static Matrix identity(FieldPtr field, std::size_t n);

    /// Submatrix keeping the given columns, in the given order.
    Matrix select_columns(const std::vector<std::size_t>& cols) const;

    /// Stacks other below this matrix (same field and column count).
    Matrix stacked(const Matrix& other) const;

  private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// v * m for a row vector v of length m.rows().
std::vector<std::uint32_t> row_times_matrix(const std::vector<std::uint32_t>& v, const Matrix& m);

/// Reduced row echelon form plus the strictly increasing pivot columns.
/// The RREF is the canonical form used for subspace equality.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per row. Row count equals
/// cols - rank.
Matrix kernel(const Matrix& m);

/// True iff the row spaces coincide, i.e. the RREFs agree after dropping
/// zero rows. Requires equal column counts and fields.
bool same_rowspace(const Matrix& a, const Matrix& b);

/// Solves x * m = target for a row vector x, if possible.
bool solve_left(const Matrix& m, const std::vector<std::uint32_t>& target,
                std::vector<std::uint32_t>& solution);

/// True iff v lies in the row space of m.
bool in_rowspace(const Matrix& m, const std::vector<std::uint32_t>& v);

/// Inverse of a square invertible matrix.
Matrix inverse(const Matrix& m);

/// Companion matrix of a monic polynomial f of degree r >= 1: the
/// multiplication-by-x matrix in the power basis of F[x]/(f). Row j holds
/// the coordinates of x^(j+1) mod f, so for f = x^2+x+1 over GF(2) the rows
/// are (0 1) and (1 1).
Matrix companion_matrix(const Poly& f);

} // namespace mincode
