#pragma once

#include "ltskit/lts.hpp"

namespace ltskit {

/// Lie algebra given by binary structure constants [e_i,e_j] for i < j.
/// Only used to seed the triple-system corpus via [x,y,z] := [[x,y],z].
class LieAlgebra {
public:
    static LieAlgebra from_entries(std::string name, FieldSpec field, std::size_t dim,
                                   const std::vector<BracketEntry>& entries) {
        LieAlgebra a;
        a.name_ = std::move(name);
        a.field_ = field;
        a.dim_ = dim;
        a.f_.assign(dim * dim * dim, Scalar::zero(field));
        for (const auto& e : entries) {
            if (e.i >= e.j || e.j >= dim) throw std::invalid_argument("LieAlgebra: entries require i < j < dim");
            if (e.value.size() != dim) throw std::invalid_argument("LieAlgebra: value length != dim");
            for (std::size_t l = 0; l < dim; ++l) {
                a.f_[(e.i * dim + e.j) * dim + l] = e.value[l];
                a.f_[(e.j * dim + e.i) * dim + l] = -e.value[l];
            }
        }
        return a;
    }

    const std::string& name() const { return name_; }
    FieldSpec field() const { return field_; }
    std::size_t dim() const { return dim_; }

    std::vector<Scalar> bracket_basis(std::size_t i, std::size_t j) const {
        std::vector<Scalar> v(dim_, Scalar::zero(field_));
        for (std::size_t l = 0; l < dim_; ++l) v[l] = f_[(i * dim_ + j) * dim_ + l];
        return v;
    }

    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
        std::vector<Scalar> out(dim_, Scalar::zero(field_));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar coef = x[i] * y[j];
                for (std::size_t l = 0; l < dim_; ++l) {
                    const Scalar& f = f_[(i * dim_ + j) * dim_ + l];
                    if (!f.is_zero()) out[l] += coef * f;
                }
            }
        }
        return out;
    }

    /// Antisymmetry holds by construction; this verifies the Jacobi identity
    /// on all basis triples.
    bool satisfies_jacobi() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    std::vector<Scalar> s =
                        bracket(bracket_basis(i, j), unit(k));
                    const std::vector<Scalar> t1 = bracket(bracket_basis(j, k), unit(i));
                    const std::vector<Scalar> t2 = bracket(bracket_basis(k, i), unit(j));
                    for (std::size_t l = 0; l < dim_; ++l) {
                        s[l] += t1[l] + t2[l];
                        if (!s[l].is_zero()) return false;
                    }
                }
        return true;
    }

    std::vector<Scalar> unit(std::size_t k) const {
        std::vector<Scalar> v(dim_, Scalar::zero(field_));
        v[k] = Scalar::one(field_);
        return v;
    }

private:
    std::string name_;
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t dim_ = 0;
    std::vector<Scalar> f_;
};

/// The induced triple system [x,y,z] := [[x,y],z]. The input must be a Lie
/// algebra; the output always passes the triple-system axioms.
inline LieTripleSystem lts_from_lie_algebra(const LieAlgebra& lie, bool allow_small_char = false) {
    if (!lie.satisfies_jacobi())
        throw std::invalid_argument("lts_from_lie_algebra: input fails the Jacobi identity");
    const std::size_t n = lie.dim();
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> v = lie.bracket(lie.bracket_basis(i, j), lie.unit(k));
                bool nonzero = false;
                for (const auto& s : v)
                    if (!s.is_zero()) { nonzero = true; break; }
                if (nonzero) entries.push_back({i, j, k, std::move(v)});
            }
    LieTripleSystem t =
        LieTripleSystem::from_entries(lie.name() + "lts", lie.field(), n, entries, allow_small_char);
    if (!t.validate().passed) throw std::logic_error("lts_from_lie_algebra: induced system fails validation");
    return t;
}

namespace detail {

struct NameParser {
    const std::string& s;
    std::size_t pos = 0;

    bool eat(const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    std::size_t parse_uint() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("catalog: expected a number in '" + s + "'");
        return static_cast<std::size_t>(std::stoull(s.substr(start, pos - start)));
    }
};

inline LieTripleSystem parse_catalog(NameParser& p, FieldSpec field, bool allow_small_char);

inline LieAlgebra sl2(FieldSpec field) {
    // basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    auto sc = [&](long long v) { return Scalar::of(field, v); };
    // BracketEntry.k is unused for binary brackets
    std::vector<BracketEntry> entries = {
        {0, 1, 0, {sc(-2), sc(0), sc(0)}},  // [e,h] = -2e
        {0, 2, 0, {sc(0), sc(1), sc(0)}},   // [e,f] = h
        {1, 2, 0, {sc(0), sc(0), sc(-2)}},  // [h,f] = -2f
    };
    return LieAlgebra::from_entries("sl2", field, 3, entries);
}

inline LieTripleSystem parse_catalog(NameParser& p, FieldSpec field, bool allow_small_char) {
    auto sc = [&](long long v) { return Scalar::of(field, v); };
    if (p.eat("abelian(")) {
        const std::size_t n = p.parse_uint();
        if (!p.eat(")")) throw std::invalid_argument("catalog: expected ')' in '" + p.s + "'");
        if (n == 0) throw std::invalid_argument("catalog: abelian dimension must be positive");
        return LieTripleSystem::from_entries("abelian(" + std::to_string(n) + ")", field, n, {},
                                             allow_small_char);
    }
    if (p.eat("simple2")) {
        // nonzero brackets [e1,e2,e1] = -e1 and [e1,e2,e2] = e2
        std::vector<BracketEntry> entries = {
            {0, 1, 0, {sc(-1), sc(0)}},
            {0, 1, 1, {sc(0), sc(1)}},
        };
        return LieTripleSystem::from_entries("simple2", field, 2, entries, allow_small_char);
    }
    if (p.eat("sl2lts")) {
        return lts_from_lie_algebra(sl2(field), allow_small_char).renamed("sl2lts");
    }
    if (p.eat("dsum(")) {
        LieTripleSystem a = parse_catalog(p, field, allow_small_char);
        if (!p.eat(",")) throw std::invalid_argument("catalog: expected ',' in '" + p.s + "'");
        LieTripleSystem b = parse_catalog(p, field, allow_small_char);
        if (!p.eat(")")) throw std::invalid_argument("catalog: expected ')' in '" + p.s + "'");
        return direct_sum(a, b);
    }
    throw std::invalid_argument("catalog: unknown system name '" + p.s + "'");
}

}  // namespace detail

/// Builds a named corpus system: abelian(n), simple2, sl2lts, or
/// dsum(a,b) with recursively named summands.
inline LieTripleSystem catalog(const std::string& name, FieldSpec field = FieldSpec::rationals(),
                               bool allow_small_char = false) {
    detail::NameParser p{name};
    LieTripleSystem t = detail::parse_catalog(p, field, allow_small_char);
    if (p.pos != name.size()) throw std::invalid_argument("catalog: trailing characters in '" + name + "'");
    return t;
}

/// Entries shown by `catalog list`.
inline std::vector<std::pair<std::string, std::string>> catalog_listing() {
    return {
        {"simple2", "dim 2"},
        {"sl2lts", "dim 3"},
        {"abelian(N)", "dim N"},
        {"dsum(A,B)", "dim(A) + dim(B)"},
    };
}

}  // namespace ltskit
