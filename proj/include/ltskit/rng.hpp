#pragma once

#include "ltskit/matrix.hpp"

#include <random>

namespace ltskit {

/// Deterministic source for randomized checks. Values are derived from the
/// raw engine stream (no standard-library distributions), so a seed pins the
/// whole sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Over Q: an integer in [-3,3]. Over GF(p): a uniform residue.
    Scalar small_scalar(const FieldSpec& f) {
        if (f.kind == FieldKind::Rationals)
            return Scalar::of(f, static_cast<long long>(next() % 7) - 3);
        return Scalar::residue(next() % f.p, f.p);
    }

    std::vector<Scalar> vector(const FieldSpec& f, std::size_t len) {
        std::vector<Scalar> v;
        v.reserve(len);
        for (std::size_t i = 0; i < len; ++i) v.push_back(small_scalar(f));
        return v;
    }

    Matrix matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
        Matrix m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = small_scalar(f);
        return m;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace ltskit
