#pragma once

#include "ltskit/matrix.hpp"

namespace ltskit {

/// A subspace of F^n held by its canonical reduced-echelon basis, one basis
/// vector per row. Canonicalization happens at construction, so two values
/// represent the same subspace iff they compare equal.
class Subspace {
public:
    static Subspace row_span(const Matrix& rows) { return Subspace(rref(rows).mat, rows.cols()); }

    static Subspace zero(FieldSpec field, std::size_t ambient) {
        return Subspace(Matrix(field, 0, ambient), ambient);
    }

    static Subspace full(FieldSpec field, std::size_t ambient) {
        return Subspace(Matrix::identity(field, ambient), ambient);
    }

    static Subspace span_of(FieldSpec field, const std::vector<std::vector<Scalar>>& vectors,
                            std::size_t ambient) {
        if (vectors.empty()) return zero(field, ambient);
        return row_span(Matrix::from_rows(field, vectors));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    FieldSpec field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Scalar> basis_vector(std::size_t i) const { return basis_.row(i); }

    /// Residual of v after elimination against the basis; zero iff v lies in
    /// the subspace.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const Scalar f = v[p];
            for (std::size_t c = p; c < ambient_; ++c)
                if (!basis_.at(r, c).is_zero()) v[c] -= f * basis_.at(r, c);
        }
        return v;
    }

    bool contains(const std::vector<Scalar>& v) const {
        for (const auto& s : reduce(v))
            if (!s.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_vector(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(Matrix basis, std::size_t ambient) : ambient_(ambient), basis_(std::move(basis)) {
        pivots_.reserve(basis_.rows());
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            std::size_t c = 0;
            while (c < ambient_ && basis_.at(r, c).is_zero()) ++c;
            assert(c < ambient_);
            pivots_.push_back(c);
        }
    }

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}; dim = cols - rank.
inline Subspace kernel(const Matrix& m) {
    const Rref re = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : re.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n, Scalar::zero(m.field()));
        v[f] = Scalar::one(m.field());
        for (std::size_t r = 0; r < re.rank; ++r) v[re.pivots[r]] = -re.mat.at(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(m.field(), basis, n);
}

/// Column space of m.
inline Subspace image(const Matrix& m) { return Subspace::row_span(m.transpose()); }

struct SumIntersection {
    Subspace sum;
    Subspace intersection;
};

/// Zassenhaus: eliminate [a|a] and [b|0] rows together; nonzero left halves
/// span a+b, the rows with zero left half carry a basis of the intersection
/// in their right half.
inline SumIntersection sum_and_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    const std::size_t n = a.ambient();
    const FieldSpec f = a.field();
    Matrix block(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            block.at(r, c) = a.basis().at(r, c);
            block.at(r, n + c) = a.basis().at(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) block.at(a.dim() + r, c) = b.basis().at(r, c);
    const Rref re = rref(block);
    std::vector<std::vector<Scalar>> sum_rows, int_rows;
    for (std::size_t r = 0; r < re.rank; ++r) {
        if (re.pivots[r] < n) {
            std::vector<Scalar> left(n, Scalar::zero(f));
            for (std::size_t c = 0; c < n; ++c) left[c] = re.mat.at(r, c);
            sum_rows.push_back(std::move(left));
        } else {
            std::vector<Scalar> right(n, Scalar::zero(f));
            for (std::size_t c = 0; c < n; ++c) right[c] = re.mat.at(r, n + c);
            int_rows.push_back(std::move(right));
        }
    }
    return SumIntersection{Subspace::span_of(f, sum_rows, n), Subspace::span_of(f, int_rows, n)};
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    return sum_and_intersection(a, b).sum;
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    return sum_and_intersection(a, b).intersection;
}

/// Image of s under the coordinate projection onto block coordinates
/// [block*block_size, (block+1)*block_size): the set of leading components
/// for which some witness tuple completes to an element of s.
inline Subspace project_block(const Subspace& s, std::size_t block, std::size_t block_size) {
    if (block_size == 0 || s.ambient() % block_size != 0)
        throw std::invalid_argument("project_block: ambient is not a multiple of the block size");
    if ((block + 1) * block_size > s.ambient()) throw std::invalid_argument("project_block: block out of range");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        std::vector<Scalar> v(block_size, Scalar::zero(s.field()));
        for (std::size_t c = 0; c < block_size; ++c) v[c] = s.basis().at(r, block * block_size + c);
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(s.field(), rows, block_size);
}

/// A complement of s spanned by the standard unit vectors at its non-pivot
/// coordinates. Deterministic, so reports are reproducible.
inline Subspace complement_by_unit_vectors(const Subspace& s) {
    const std::size_t n = s.ambient();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        std::size_t c = 0;
        while (c < n && s.basis().at(r, c).is_zero()) ++c;
        is_pivot[c] = true;
    }
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(n, Scalar::zero(s.field()));
        v[c] = Scalar::one(s.field());
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(s.field(), rows, n);
}

}  // namespace ltskit
