#pragma once

#include "ltskit/operator_spaces.hpp"

namespace ltskit {

/// The 2n-dimensional enlargement of T on the graded carrier Tt + Tt^3, basis
/// ordered (e_1 t, ..., e_n t, e_1 t^3, ..., e_n t^3). Only degree-(1,1,1)
/// triples bracket nonzero, landing in the t^3 block; every product of total
/// degree >= 4 vanishes. U is a fixed complement with T = U + [T,T,T].
struct BreveSystem {
    LieTripleSystem base;
    LieTripleSystem system;
    Subspace complement;  // U, inside the base coordinates
    Subspace derived;     // [T,T,T] of the base
};

/// Builds the enlarged system. When no complement is supplied, the span of
/// the standard unit vectors at the non-pivot coordinates of [T,T,T] is used,
/// which makes reports reproducible.
inline BreveSystem build_breve(const LieTripleSystem& t, std::optional<Subspace> complement = std::nullopt) {
    const std::size_t n = t.dim();
    const Subspace derived = t.derived_subsystem();
    Subspace u = complement ? *complement : complement_by_unit_vectors(derived);
    const auto si = sum_and_intersection(u, derived);
    if (si.intersection.dim() != 0 || si.sum.dim() != n)
        throw std::invalid_argument("build_breve: U is not a complement of [T,T,T]");
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (!t.basis_bracket_nonzero(i, j, k)) continue;
                std::vector<Scalar> v(2 * n, Scalar::zero(t.field()));
                for (std::size_t l = 0; l < n; ++l) v[n + l] = t.c(i, j, k, l);
                entries.push_back({i, j, k, std::move(v)});
            }
    LieTripleSystem sys = LieTripleSystem::from_entries("breve(" + t.name() + ")", t.field(), 2 * n,
                                                        entries, true);
    if (!sys.validate().passed) throw std::logic_error("build_breve: enlarged system fails validation");
    return BreveSystem{t, std::move(sys), std::move(u), derived};
}

struct QDerWitnessPair {
    Matrix d;
    Matrix dprime;
};

/// The embedding of a quasiderivation as a map on the enlarged system:
///   a t -> D(a) t,   u t^3 -> 0 (u in U),   b t^3 -> D'(b) t^3 (b in [T,T,T]).
/// The witness pair must satisfy the quasiderivation identity; the image is a
/// derivation of the enlarged system.
inline Matrix embed_qder(const BreveSystem& b, const QDerWitnessPair& w) {
    const LieTripleSystem& t = b.base;
    const std::size_t n = t.dim();
    if (!satisfies_qder_identity(t, w.d, w.dprime))
        throw std::invalid_argument("embed_qder: (D, D') is not a quasiderivation witness pair");
    Matrix phi(t.field(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) phi.at(a, i) = w.d.at(a, i);
    // decompose e_l = u + b against (U | [T,T,T]) and push D'(b) into the cube block
    const std::size_t du = b.complement.dim(), dw = b.derived.dim();
    Matrix cols(t.field(), n, du + dw);
    for (std::size_t c = 0; c < du; ++c) {
        const auto v = b.complement.basis_vector(c);
        for (std::size_t r = 0; r < n; ++r) cols.at(r, c) = v[r];
    }
    for (std::size_t c = 0; c < dw; ++c) {
        const auto v = b.derived.basis_vector(c);
        for (std::size_t r = 0; r < n; ++r) cols.at(r, du + c) = v[r];
    }
    for (std::size_t l = 0; l < n; ++l) {
        const auto alpha = solve(cols, detail::unit_vector(t.field(), n, l));
        if (!alpha) throw std::logic_error("embed_qder: complement decomposition failed");
        std::vector<Scalar> bpart(n, Scalar::zero(t.field()));
        for (std::size_t c = 0; c < dw; ++c) {
            if ((*alpha)[du + c].is_zero()) continue;
            const auto v = b.derived.basis_vector(c);
            for (std::size_t r = 0; r < n; ++r) bpart[r] += (*alpha)[du + c] * v[r];
        }
        const auto img = w.dprime.apply(bpart);
        for (std::size_t r = 0; r < n; ++r) phi.at(n + r, n + l) = img[r];
    }
    return phi;
}

/// Two witness pairs for the same D embed to the same map.
inline bool embed_well_defined(const BreveSystem& b, const QDerWitnessPair& w1, const QDerWitnessPair& w2) {
    if (!(w1.d == w2.d)) throw std::invalid_argument("embed_well_defined: witness pairs carry different D");
    return embed_qder(b, w1) == embed_qder(b, w2);
}

/// The embedding kills no nonzero quasiderivation: over a basis of QDer(T)
/// the images are independent, and the t-block of each image recovers D.
inline bool embed_injective(const BreveSystem& b, const PairedSolutionSpace& qder) {
    const std::size_t n = b.base.dim();
    std::vector<std::vector<Scalar>> images;
    for (std::size_t r = 0; r < qder.projection.dim(); ++r) {
        const Matrix d = qder.projection.basis_map(r);
        const auto witness = qder_witness_for(qder, d);
        if (!witness) return false;
        const Matrix phi = embed_qder(b, {d, *witness});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < n; ++a)
                if (!(phi.at(a, i) == d.at(a, i))) return false;
        images.push_back(phi.vectorize());
    }
    if (images.empty()) return true;
    return Subspace::span_of(b.base.field(), images, 4 * n * n).dim() == qder.projection.dim();
}

struct SemidirectReport {
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    bool center_is_cube_block = false;  // Z(T-breve) = T t^3
    bool sum_is_der = false;            // phi(QDer(T)) + ZDer(T-breve) = Der(T-breve)
    bool intersection_trivial = false;  // phi(QDer(T)) n ZDer(T-breve) = 0
    bool dims_match = false;            // dim Der = dim QDer + dim ZDer
    std::size_t der_breve_dim = 0;
    std::size_t zder_breve_dim = 0;
    std::size_t qder_dim = 0;
    std::size_t phi_span_dim = 0;
};

/// Span of the embeddings of a joint-space basis; equals the image of the
/// whole quasiderivation space since the embedding only reads (D, D'|[T,T,T]).
inline Subspace embedded_qder_span(const BreveSystem& b, const PairedSolutionSpace& qder) {
    const std::size_t n = b.base.dim();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < qder.joint.dim(); ++r)
        rows.push_back(embed_qder(b, {qder.joint_block(r, 0), qder.joint_block(r, 1)}).vectorize());
    return Subspace::span_of(b.base.field(), rows, 4 * n * n);
}

/// For a centerless base: Der(T-breve) decomposes as the embedded
/// quasiderivations plus the central derivations of the enlargement, with
/// trivial intersection.
inline SemidirectReport semidirect_decomposition(const LieTripleSystem& t,
                                                 std::optional<Subspace> complement = std::nullopt) {
    SemidirectReport rep;
    if (t.center().dim() != 0) {
        rep.status = CheckStatus::SkippedHypothesis;
        rep.detail = "Z(T) != 0";
        return rep;
    }
    const BreveSystem b = build_breve(t, std::move(complement));
    const std::size_t n = t.dim();
    const EndSubspace der_b = compute_der(b.system);
    const EndSubspace zder_b = compute_zder(b.system);
    const PairedSolutionSpace qder = compute_qder(t);
    const Subspace phi_span = embedded_qder_span(b, qder);

    std::vector<std::vector<Scalar>> cube_rows;
    for (std::size_t l = 0; l < n; ++l)
        cube_rows.push_back(detail::unit_vector(t.field(), 2 * n, n + l));
    rep.center_is_cube_block = b.system.center() == Subspace::span_of(t.field(), cube_rows, 2 * n);

    const auto si = sum_and_intersection(phi_span, zder_b.space);
    rep.sum_is_der = si.sum == der_b.space;
    rep.intersection_trivial = si.intersection.dim() == 0;
    rep.der_breve_dim = der_b.dim();
    rep.zder_breve_dim = zder_b.dim();
    rep.qder_dim = qder.projection.dim();
    rep.phi_span_dim = phi_span.dim();
    rep.dims_match = rep.der_breve_dim == rep.qder_dim + rep.zder_breve_dim &&
                     rep.phi_span_dim == rep.qder_dim;
    rep.status = rep.center_is_cube_block && rep.sum_is_der && rep.intersection_trivial && rep.dims_match
                     ? CheckStatus::Pass
                     : CheckStatus::Fail;
    if (rep.status == CheckStatus::Fail) rep.detail = "decomposition assertions failed";
    return rep;
}

}  // namespace ltskit
