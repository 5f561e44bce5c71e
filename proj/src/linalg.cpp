#include "mincode/linalg.hpp"

#include <algorithm>

namespace mincode {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols,
               std::vector<std::uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw precondition_error("matrix entry count does not match dimensions");
    for (auto v : data_) field_->check_element(v);
}

Matrix Matrix::from_rows(FieldPtr field,
                         std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<std::uint32_t> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw precondition_error("ragged row lengths");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(std::move(field), r, c, std::move(data));
}

std::vector<std::uint32_t> Matrix::row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<std::uint32_t> Matrix::col(std::size_t c) const {
    std::vector<std::uint32_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (!field_->same_as(*other.field_) || cols_ != other.rows_)
        throw precondition_error("matrix product dimension/field mismatch");
    Matrix out(field_, rows_, other.cols_);
    const Field& f = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                std::uint32_t b = other.at(k, j);
                if (b == 0) continue;
                out.set(i, j, f.add(out.at(i, j), f.mul(a, b)));
            }
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           (rows_ == 0 || field_->same_as(*other.field_)) && data_ == other.data_;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, at(r, cols[j]));
    return out;
}

Matrix Matrix::stacked(const Matrix& other) const {
    if (!field_->same_as(*other.field_) || cols_ != other.cols_)
        throw precondition_error("stack dimension/field mismatch");
    std::vector<std::uint32_t> data = data_;
    data.insert(data.end(), other.data_.begin(), other.data_.end());
    return Matrix(field_, rows_ + other.rows_, cols_, std::move(data));
}

std::vector<std::uint32_t> row_times_matrix(const std::vector<std::uint32_t>& v, const Matrix& m) {
    if (v.size() != m.rows()) throw precondition_error("vector/matrix dimension mismatch");
    const Field& f = *m.field();
    std::vector<std::uint32_t> out(m.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::uint32_t b = m.at(i, j);
            if (b == 0) continue;
            out[j] = f.add(out[j], f.mul(v[i], b));
        }
    }
    return out;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Matrix a = m;
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::uint32_t t = a.at(r, j);
                a.set(r, j, a.at(sel, j));
                a.set(sel, j, t);
            }
        std::uint32_t piv_inv = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.set(r, j, f.mul(a.at(r, j), piv_inv));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            std::uint32_t factor = a.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    // Forward elimination only; cheaper than full RREF and called in hot loops.
    Matrix a = m;
    const Field& f = *m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = c; j < a.cols(); ++j) {
                std::uint32_t t = a.at(r, j);
                a.set(r, j, a.at(sel, j));
                a.set(sel, j, t);
            }
        std::uint32_t piv_inv = f.inv(a.at(r, c));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            std::uint32_t factor = a.at(i, c);
            if (factor == 0) continue;
            std::uint32_t scale = f.mul(factor, piv_inv);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(scale, a.at(r, j))));
        }
        ++r;
    }
    return r;
}

Matrix kernel(const Matrix& m) {
    auto [R, pivots] = rref(m);
    const Field& f = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.field(), free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis.set(i, fc, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.set(i, pivots[r], f.neg(R.at(r, fc)));
    }
    return basis;
}

bool same_rowspace(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || !a.field()->same_as(*b.field()))
        throw precondition_error("row space comparison dimension/field mismatch");
    auto [ra, pa] = rref(a);
    auto [rb, pb] = rref(b);
    if (pa != pb) return false;
    for (std::size_t r = 0; r < pa.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (ra.at(r, c) != rb.at(r, c)) return false;
    return true;
}

bool solve_left(const Matrix& m, const std::vector<std::uint32_t>& target,
                std::vector<std::uint32_t>& solution) {
    // x * m = target  <=>  m^T x^T = target^T; eliminate on [m^T | target].
    if (target.size() != m.cols()) throw precondition_error("solve dimension mismatch");
    Matrix aug(m.field(), m.cols(), m.rows() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(c, r, m.at(r, c));
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(c, m.rows(), target[c]);
    auto [R, pivots] = rref(aug);
    for (auto p : pivots)
        if (p == m.rows()) return false; // inconsistent
    solution.assign(m.rows(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) solution[pivots[r]] = R.at(r, m.rows());
    return true;
}

bool in_rowspace(const Matrix& m, const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> sol;
    return solve_left(m, v, sol);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of a non-square matrix");
    Matrix aug(m.field(), m.rows(), 2 * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, m.cols() + r, 1);
    }
    auto [R, pivots] = rref(aug);
    if (pivots.size() != m.rows() || pivots.back() != m.rows() - 1)
        throw precondition_error("matrix is singular");
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, R.at(r, m.cols() + c));
    return out;
}

Matrix companion_matrix(const Poly& f) {
    if (!f.is_monic()) throw precondition_error("companion matrix requires a monic polynomial");
    const int r = f.degree();
    if (r < 1) throw precondition_error("companion matrix requires degree >= 1");
    Matrix m(f.field, r, r);
    const Field& F = *f.field;
    for (int j = 0; j + 1 < r; ++j) m.set(j, j + 1, 1);
    for (int i = 0; i < r; ++i) m.set(r - 1, i, F.neg(f.coeff(i)));
    return m;
}

} // namespace mincode
