#pragma once

#include "ltskit/subspace.hpp"

#include <string>
#include <vector>

namespace ltskit {

/// One structure-constant entry [e_i, e_j, e_k] = value, given for i < j only;
/// the i > j half is implied by antisymmetry and the diagonal is zero.
struct BracketEntry {
    std::size_t i, j, k;
    std::vector<Scalar> value;
};

struct Violation {
    std::string identity;  // "alternating" | "cyclic" | "five-variable"
    std::vector<std::size_t> indices;
    std::vector<Scalar> residual;
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;
};

/// Finite-dimensional Lie triple system presented by its structure tensor
/// c[i][j][k] in F^n, meaning [e_i,e_j,e_k] = sum_l c[i][j][k][l] e_l.
/// Instances are immutable; all operations are pure.
class LieTripleSystem {
public:
    /// Structure entries are accepted for i < j only. Triples violating that,
    /// duplicates, and wrong-length values are rejected. GF(2)/GF(3) carriers
    /// need the explicit override since most of the checked statements carry
    /// characteristic hypotheses.
    static LieTripleSystem from_entries(std::string name, FieldSpec field, std::size_t dim,
                                        const std::vector<BracketEntry>& entries,
                                        bool allow_small_char = false) {
        if (dim == 0) throw std::invalid_argument("LieTripleSystem: dimension must be positive");
        if (field.kind == FieldKind::PrimeField && (field.p == 2 || field.p == 3) && !allow_small_char)
            throw std::invalid_argument("LieTripleSystem: GF(" + std::to_string(field.p) +
                                        ") requires the small-characteristic override");
        LieTripleSystem t(std::move(name), field, dim);
        std::vector<bool> given(dim * dim * dim, false);
        for (const auto& e : entries) {
            if (e.i >= e.j) throw std::invalid_argument("LieTripleSystem: entries require i < j");
            if (e.j >= dim || e.k >= dim) throw std::invalid_argument("LieTripleSystem: index out of range");
            if (e.value.size() != dim) throw std::invalid_argument("LieTripleSystem: value length != dim");
            const std::size_t id = (e.i * dim + e.j) * dim + e.k;
            if (given[id]) throw std::invalid_argument("LieTripleSystem: duplicate entry (" + std::to_string(e.i) +
                                                       "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")");
            given[id] = true;
            for (std::size_t l = 0; l < dim; ++l) {
                if (!(e.value[l].field() == field))
                    throw std::invalid_argument("LieTripleSystem: entry scalar from wrong field");
                t.c_at(e.i, e.j, e.k, l) = e.value[l];
                t.c_at(e.j, e.i, e.k, l) = -e.value[l];
            }
        }
        t.rebuild_nonzero_index();
        return t;
    }

    const std::string& name() const { return name_; }
    FieldSpec field() const { return field_; }
    std::size_t dim() const { return dim_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return c_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    /// [e_i, e_j, e_k] as a coordinate vector.
    std::vector<Scalar> structure_vector(std::size_t i, std::size_t j, std::size_t k) const {
        std::vector<Scalar> v(dim_, Scalar::zero(field_));
        for (std::size_t l = 0; l < dim_; ++l) v[l] = c(i, j, k, l);
        return v;
    }

    bool basis_bracket_nonzero(std::size_t i, std::size_t j, std::size_t k) const {
        return nz_[(i * dim_ + j) * dim_ + k];
    }

    LieTripleSystem renamed(std::string name) const {
        LieTripleSystem t = *this;
        t.name_ = std::move(name);
        return t;
    }

    bool tensor_equal(const LieTripleSystem& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && c_ == o.c_;
    }

    /// Trilinear extension of the basis brackets.
    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                                const std::vector<Scalar>& z) const {
        if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
            throw std::invalid_argument("bracket: vector dimension mismatch");
        std::vector<Scalar> out(dim_, Scalar::zero(field_));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (z[k].is_zero() || !basis_bracket_nonzero(i, j, k)) continue;
                    const Scalar coef = xy * z[k];
                    for (std::size_t l = 0; l < dim_; ++l)
                        if (!c(i, j, k, l).is_zero()) out[l] += coef * c(i, j, k, l);
                }
            }
        }
        return out;
    }

    /// Exhaustive check of the three defining identities over basis tuples.
    /// Violations are data, not errors; the report lists every failing
    /// instance in lexicographic index order.
    ValidationReport validate() const {
        ValidationReport rep;
        const std::size_t n = dim_;
        auto record = [&](const char* identity, std::vector<std::size_t> idx, std::vector<Scalar> residual) {
            bool nonzero = false;
            for (const auto& s : residual)
                if (!s.is_zero()) { nonzero = true; break; }
            if (nonzero) {
                rep.passed = false;
                rep.violations.push_back({identity, std::move(idx), std::move(residual)});
            }
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                record("alternating", {i, i, k}, structure_vector(i, i, k));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    std::vector<Scalar> r(n, Scalar::zero(field_));
                    for (std::size_t l = 0; l < n; ++l) r[l] = c(i, j, k, l) + c(j, i, k, l);
                    record("alternating", {i, j, k}, std::move(r));
                }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!basis_bracket_nonzero(i, j, k) && !basis_bracket_nonzero(j, k, i) &&
                        !basis_bracket_nonzero(k, i, j))
                        continue;
                    std::vector<Scalar> r(n, Scalar::zero(field_));
                    for (std::size_t l = 0; l < n; ++l) r[l] = c(i, j, k, l) + c(j, k, i, l) + c(k, i, j, l);
                    record("cyclic", {i, j, k}, std::move(r));
                }
        // [e_i,e_j,[e_k,e_m,e_v]] = [[e_i,e_j,e_k],e_m,e_v] + [e_k,[e_i,e_j,e_m],e_v] + [e_k,e_m,[e_i,e_j,e_v]]
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t m = 0; m < n; ++m)
                        for (std::size_t v = 0; v < n; ++v) {
                            if (!basis_bracket_nonzero(k, m, v) && !basis_bracket_nonzero(i, j, k) &&
                                !basis_bracket_nonzero(i, j, m) && !basis_bracket_nonzero(i, j, v))
                                continue;
                            std::vector<Scalar> r(n, Scalar::zero(field_));
                            accumulate_composed(r, k, m, v, i, j, Slot::Last, Scalar::one(field_));
                            accumulate_composed(r, i, j, k, m, v, Slot::First, Scalar::of(field_, -1));
                            accumulate_composed(r, i, j, m, k, v, Slot::Middle, Scalar::of(field_, -1));
                            accumulate_composed(r, i, j, v, k, m, Slot::Last, Scalar::of(field_, -1));
                            record("five-variable", {i, j, k, m, v}, std::move(r));
                        }
        return rep;
    }

    /// Span of all basis bracket values, i.e. the derived subsystem [T,T,T].
    Subspace derived_subsystem() const {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (basis_bracket_nonzero(i, j, k)) rows.push_back(structure_vector(i, j, k));
        return Subspace::span_of(field_, rows, dim_);
    }

    /// {x : [x, e_j, e_k] = 0 for all j, k}.
    Subspace center() const {
        Matrix m(field_, dim_ * dim_ * dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t l = 0; l < dim_; ++l)
                    for (std::size_t i = 0; i < dim_; ++i)
                        m.at((j * dim_ + k) * dim_ + l, i) = c(i, j, k, l);
        return kernel(dedup_rows(m));
    }

    /// {x : [x,a,y] = 0 and [y,a,x] = 0 for all a in I, y in T}.
    Subspace centralizer(const Subspace& ideal) const {
        if (ideal.ambient() != dim_) throw std::invalid_argument("centralizer: ambient dimension mismatch");
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t a = 0; a < ideal.dim(); ++a) {
            const std::vector<Scalar> av = ideal.basis_vector(a);
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t l = 0; l < dim_; ++l) {
                    std::vector<Scalar> r1(dim_, Scalar::zero(field_)), r2(dim_, Scalar::zero(field_));
                    for (std::size_t m = 0; m < dim_; ++m) {
                        if (av[m].is_zero()) continue;
                        for (std::size_t i = 0; i < dim_; ++i) {
                            r1[i] += av[m] * c(i, m, j, l);  // [x, a, e_j]
                            r2[i] += av[m] * c(j, m, i, l);  // [e_j, a, x]
                        }
                    }
                    rows.push_back(std::move(r1));
                    rows.push_back(std::move(r2));
                }
        }
        if (rows.empty()) return Subspace::full(field_, dim_);
        return kernel(dedup_rows(Matrix::from_rows(field_, rows)));
    }

    /// I is an ideal iff [I,T,T] is contained in I. The companion
    /// containments [T,T,I] and [T,I,T] then follow from the axioms and are
    /// asserted separately in the test suite.
    bool is_ideal(const Subspace& sub) const {
        if (sub.ambient() != dim_) throw std::invalid_argument("is_ideal: ambient dimension mismatch");
        for (std::size_t b = 0; b < sub.dim(); ++b) {
            const std::vector<Scalar> bv = sub.basis_vector(b);
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    std::vector<Scalar> w(dim_, Scalar::zero(field_));
                    for (std::size_t i = 0; i < dim_; ++i) {
                        if (bv[i].is_zero()) continue;
                        for (std::size_t l = 0; l < dim_; ++l)
                            if (!c(i, j, k, l).is_zero()) w[l] += bv[i] * c(i, j, k, l);
                    }
                    if (!sub.contains(w)) return false;
                }
        }
        return true;
    }

    bool is_direct_sum(const Subspace& a, const Subspace& b) const {
        if (!is_ideal(a) || !is_ideal(b)) return false;
        const auto si = sum_and_intersection(a, b);
        return si.intersection.dim() == 0 && si.sum.dim() == dim_;
    }

    /// Block sizes when this system was assembled by direct_sum; empty
    /// otherwise. Loaded files carry no block structure.
    const std::vector<std::size_t>& block_dims() const { return block_dims_; }

    /// Restriction to the idx-th block of a direct_sum-built system.
    LieTripleSystem summand(std::size_t idx) const {
        if (idx >= block_dims_.size()) throw std::invalid_argument("summand: no such block");
        std::size_t start = 0;
        for (std::size_t b = 0; b < idx; ++b) start += block_dims_[b];
        const std::size_t d = block_dims_[idx];
        std::vector<BracketEntry> entries;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    if (!basis_bracket_nonzero(start + i, start + j, start + k)) continue;
                    std::vector<Scalar> v(d, Scalar::zero(field_));
                    for (std::size_t l = 0; l < d; ++l) v[l] = c(start + i, start + j, start + k, l + start);
                    entries.push_back({i, j, k, std::move(v)});
                }
        return from_entries(name_ + "[" + std::to_string(idx) + "]", field_, d, entries, true);
    }

    friend LieTripleSystem direct_sum(const LieTripleSystem& a, const LieTripleSystem& b);

private:
    enum class Slot { First, Middle, Last };

    LieTripleSystem(std::string name, FieldSpec field, std::size_t dim)
        : name_(std::move(name)), field_(field), dim_(dim),
          c_(dim * dim * dim * dim, Scalar::zero(field)), nz_(dim * dim * dim, false) {}

    Scalar& c_at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return c_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    void rebuild_nonzero_index() {
        for (std::size_t t = 0; t < nz_.size(); ++t) {
            bool nonzero = false;
            for (std::size_t l = 0; l < dim_; ++l)
                if (!c_[t * dim_ + l].is_zero()) { nonzero = true; break; }
            nz_[t] = nonzero;
        }
    }

    // out += sign * [args with the bracket value [e_a,e_b,e_c] substituted in
    // the given slot of a bracket with e_p, e_q]
    void accumulate_composed(std::vector<Scalar>& out, std::size_t a, std::size_t b, std::size_t cc,
                             std::size_t p, std::size_t q, Slot slot, const Scalar& sign) const {
        if (!basis_bracket_nonzero(a, b, cc)) return;
        for (std::size_t r = 0; r < dim_; ++r) {
            const Scalar& w = c(a, b, cc, r);
            if (w.is_zero()) continue;
            const Scalar coef = sign * w;
            for (std::size_t l = 0; l < dim_; ++l) {
                const Scalar& inner = slot == Slot::First    ? c(r, p, q, l)
                                      : slot == Slot::Middle ? c(p, r, q, l)
                                                             : c(p, q, r, l);
                if (!inner.is_zero()) out[l] += coef * inner;
            }
        }
    }

    std::string name_;
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> c_;
    std::vector<bool> nz_;
    std::vector<std::size_t> block_dims_;
};

/// Places a and b on complementary coordinate blocks with zero mixed
/// brackets. Both summands become ideals of the result.
inline LieTripleSystem direct_sum(const LieTripleSystem& a, const LieTripleSystem& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("direct_sum: fields differ");
    const std::size_t n = a.dim() + b.dim();
    LieTripleSystem t("dsum(" + a.name() + "," + b.name() + ")", a.field(), n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                for (std::size_t l = 0; l < a.dim(); ++l) t.c_at(i, j, k, l) = a.c(i, j, k, l);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                for (std::size_t l = 0; l < b.dim(); ++l)
                    t.c_at(a.dim() + i, a.dim() + j, a.dim() + k, a.dim() + l) = b.c(i, j, k, l);
    t.rebuild_nonzero_index();
    t.block_dims_ = {a.dim(), b.dim()};
    return t;
}

}  // namespace ltskit
