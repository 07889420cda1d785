#pragma once

#include "ltskit/field.hpp"

#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace ltskit {

/// Dense matrix over a fixed field, row-major. Everything downstream (operator
/// spaces, tensor actions, theorem checks) reduces to kernels and spans of
/// these.
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(FieldSpec field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
        return m;
    }

    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    /// Builds an n x n matrix from row-major coordinates (the inverse of
    /// vectorize()).
    static Matrix unvectorize(FieldSpec field, std::size_t n, const std::vector<Scalar>& v) {
        if (v.size() != n * n) throw std::invalid_argument("Matrix: bad vectorized length");
        Matrix m(field, n, n);
        m.e_ = v;
        return m;
    }

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }
    const Scalar& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }

    std::vector<Scalar> row(std::size_t r) const {
        return std::vector<Scalar>(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                   e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    /// Row-major flattening; index (r,c) -> r*cols + c.
    const std::vector<Scalar>& vectorize() const { return e_; }

    bool is_zero() const {
        for (const auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& s : m.e_) s = -s;
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& v : e_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix m(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
                }
            }
        return m;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<Scalar> y(rows_, Scalar::zero(field_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.e_ == b.e_;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            os << (r == 0 ? "[" : " ");
            os << "[";
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).str();
            os << "]" << (r + 1 == rows_ ? "]" : "\n");
        }
        if (rows_ == 0) os << "[]";
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
            throw std::invalid_argument("Matrix: shape or field mismatch");
    }

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Reduced row-echelon form: pivots are 1, pivot columns otherwise zero,
/// pivot columns strictly increasing, zero rows dropped. Unique for a given
/// row space.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

inline Rref rref(const Matrix& input) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(input.rows());
    for (std::size_t r = 0; r < input.rows(); ++r) rows.push_back(input.row(r));
    const std::size_t ncols = input.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Scalar inv = rows[rank][col].inverse();
        for (std::size_t c = col; c < ncols; ++c)
            if (!rows[rank][c].is_zero()) rows[rank][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Scalar f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (!rows[rank][c].is_zero()) rows[r][c] -= f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    Matrix out(input.field(), rank, ncols);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < ncols; ++c) out.at(r, c) = rows[r][c];
    return Rref{std::move(out), std::move(pivots), rank};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// One solution of A x = b (free variables set to zero), or nullopt if the
/// system is inconsistent.
inline std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const Rref re = rref(aug);
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (std::size_t r = 0; r < re.rank; ++r) {
        if (re.pivots[r] == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
        x[re.pivots[r]] = re.mat.at(r, a.cols());
    }
    return x;
}

/// Drops zero rows and rows that repeat an earlier row up to scale. Spans and
/// kernels are unchanged; constraint systems assembled from structure tensors
/// shrink by orders of magnitude.
inline Matrix dedup_rows(const Matrix& m) {
    std::unordered_set<std::string> seen;
    std::vector<std::vector<Scalar>> kept;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Scalar> row = m.row(r);
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        const Scalar inv = row[lead].inverse();
        std::string key;
        key.reserve(row.size() * 4);
        for (std::size_t c = lead; c < row.size(); ++c) {
            key += (row[c] * inv).str();
            key += ',';
        }
        key += std::to_string(lead);
        if (seen.insert(std::move(key)).second) kept.push_back(std::move(row));
    }
    Matrix out(m.field(), kept.size(), m.cols());
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = kept[r][c];
    return out;
}

}  // namespace ltskit
