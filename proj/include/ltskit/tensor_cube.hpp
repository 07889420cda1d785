#pragma once

#include "ltskit/operator_spaces.hpp"
#include "ltskit/rng.hpp"

namespace ltskit {

/// Coordinates on T (x) T (x) T are indexed lexicographically:
/// e_i (x) e_j (x) e_k  ->  (i*n + j)*n + k.
inline std::size_t cube_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
}

/// The bracket as a linear map on the triple tensor power: the (i,j,k) column
/// is the coordinate vector of [e_i,e_j,e_k].
inline Matrix phi_matrix(const LieTripleSystem& t) {
    const std::size_t n = t.dim();
    Matrix m(t.field(), n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) m.at(l, cube_index(n, i, j, k)) = t.c(i, j, k, l);
    return m;
}

/// {sum of x(x)y(x)z with sum [x,y,z] = 0}; dim = n^3 - dim [T,T,T].
inline Subspace phi_kernel(const LieTripleSystem& t) { return kernel(phi_matrix(t)); }

struct PmSplit {
    Subspace plus;   // span{ e_i(x)e_j(x)e_k + e_j(x)e_i(x)e_k }
    Subspace minus;  // span{ e_i(x)e_j(x)e_k - e_j(x)e_i(x)e_k }
};

/// First-two-slot symmetric/antisymmetric spans of the tensor cube. Over
/// characteristic != 2 they are complementary with dims n^2(n+1)/2 and
/// n^2(n-1)/2.
inline PmSplit pm_split(FieldSpec field, std::size_t n) {
    const std::size_t nnn = n * n * n;
    std::vector<std::vector<Scalar>> plus_rows, minus_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> p(nnn, Scalar::zero(field)), m(nnn, Scalar::zero(field));
                p[cube_index(n, i, j, k)] += Scalar::one(field);
                p[cube_index(n, j, i, k)] += Scalar::one(field);
                m[cube_index(n, i, j, k)] += Scalar::one(field);
                m[cube_index(n, j, i, k)] -= Scalar::one(field);
                plus_rows.push_back(std::move(p));
                minus_rows.push_back(std::move(m));
            }
    return PmSplit{Subspace::span_of(field, plus_rows, nnn), Subspace::span_of(field, minus_rows, nnn)};
}

/// The induced action on the cube:
///   D*(x(x)y(x)z) = D(x)(x)y(x)z + x(x)D(y)(x)z + x(x)y(x)D(z),
/// i.e. D(x)I(x)I + I(x)D(x)I + I(x)I(x)D in lexicographic coordinates.
inline Matrix dstar(const Matrix& d) {
    if (!d.is_square()) throw std::invalid_argument("dstar: map must be square");
    const std::size_t n = d.rows();
    const std::size_t nnn = n * n * n;
    Matrix m(d.field(), nnn, nnn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t col = cube_index(n, i, j, k);
                for (std::size_t a = 0; a < n; ++a) {
                    if (!d.at(a, i).is_zero()) m.at(cube_index(n, a, j, k), col) += d.at(a, i);
                    if (!d.at(a, j).is_zero()) m.at(cube_index(n, i, a, k), col) += d.at(a, j);
                    if (!d.at(a, k).is_zero()) m.at(cube_index(n, i, j, a), col) += d.at(a, k);
                }
            }
    return m;
}

inline bool maps_subspace_into(const Matrix& action, const Subspace& from, const Subspace& into) {
    for (std::size_t r = 0; r < from.dim(); ++r)
        if (!into.contains(action.apply(from.basis_vector(r)))) return false;
    return true;
}

struct KernelCriterionResult {
    bool is_qder = false;     // membership in the computed quasiderivation space
    bool invariant = false;   // D* maps Ker(phi) into itself
    bool agree = false;
};

/// The two sides of the quasiderivation kernel criterion: membership in
/// QDer(T) and invariance of Ker(phi) under D*. They must agree for every
/// map.
inline KernelCriterionResult kernel_criterion_check(const LieTripleSystem& t,
                                                    const PairedSolutionSpace& qder,
                                                    const Subspace& ker_phi, const Matrix& d) {
    KernelCriterionResult r;
    r.is_qder = qder.projection.contains(d);
    r.invariant = maps_subspace_into(dstar(d), ker_phi, ker_phi);
    r.agree = r.is_qder == r.invariant;
    return r;
}

/// Smallest subspace containing v and invariant under D* for every D in
/// End(T): span-closure under the elementary matrix actions, iterated to a
/// fixpoint (the dimension strictly grows until then; n^3 caps the loop).
inline Subspace invariant_closure(FieldSpec field, std::size_t n, const std::vector<Scalar>& v) {
    const std::size_t nnn = n * n * n;
    if (v.size() != nnn) throw std::invalid_argument("invariant_closure: vector is not a cube element");
    std::vector<Matrix> actions;
    actions.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix e(field, n, n);
            e.at(a, b) = Scalar::one(field);
            actions.push_back(dstar(e));
        }
    Subspace s = Subspace::span_of(field, {v}, nnn);
    for (std::size_t iter = 0; iter <= nnn; ++iter) {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis_vector(r));
        for (const auto& act : actions)
            for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(act.apply(s.basis_vector(r)));
        Subspace next = Subspace::span_of(field, rows, nnn);
        if (next.dim() == s.dim()) return next;
        s = std::move(next);
    }
    throw std::logic_error("invariant_closure: no fixpoint within n^3 iterations");
}

enum class EndClassification { Abelian, Dim2Simple, Other };

inline const char* classification_str(EndClassification c) {
    switch (c) {
        case EndClassification::Abelian: return "abelian";
        case EndClassification::Dim2Simple: return "dim2-simple";
        case EndClassification::Other: return "other";
    }
    return "?";
}

struct QderEndVerdict {
    bool equals_end = false;        // dim QDer(T) == n^2
    EndClassification cls = EndClassification::Other;
    std::size_t qder_dim = 0;
};

/// QDer(T) fills all of End(T) exactly for abelian systems and the
/// two-dimensional simple system. "Simple" is operationalized at this scale
/// as: [T,T,T] = T, trivial center, and no proper nonzero ideal appearing as
/// the kernel or image of a centroid element.
inline QderEndVerdict qder_equals_end(const LieTripleSystem& t) {
    const std::size_t n = t.dim();
    QderEndVerdict v;
    v.qder_dim = compute_qder(t).projection.dim();
    v.equals_end = v.qder_dim == n * n;
    const Subspace derived = t.derived_subsystem();
    if (derived.dim() == 0) {
        v.cls = EndClassification::Abelian;
        return v;
    }
    if (n == 2 && derived.dim() == n && t.center().dim() == 0) {
        bool proper_ideal = false;
        const EndSubspace c = compute_centroid(t);
        for (std::size_t b = 0; b < c.dim() && !proper_ideal; ++b) {
            const Matrix d = c.basis_map(b);
            for (const Subspace& s : {kernel(d), image(d)})
                if (s.dim() > 0 && s.dim() < n) proper_ideal = true;
        }
        if (!proper_ideal) {
            v.cls = EndClassification::Dim2Simple;
            return v;
        }
    }
    v.cls = EndClassification::Other;
    return v;
}

}  // namespace ltskit
