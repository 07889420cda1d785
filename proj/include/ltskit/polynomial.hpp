#pragma once

#include "ltskit/matrix.hpp"
#include "ltskit/subspace.hpp"

#include <algorithm>
#include <map>

namespace ltskit {

/// Univariate polynomial, coefficients lowest degree first, trailing zeros
/// stripped. The zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static Polynomial zero(FieldSpec field) { return Polynomial(field, {}); }

    static Polynomial from_ints(FieldSpec field, const std::vector<long long>& coeffs) {
        std::vector<Scalar> c;
        c.reserve(coeffs.size());
        for (long long v : coeffs) c.push_back(Scalar::of(field, v));
        return Polynomial(field, std::move(c));
    }

    FieldSpec field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; the zero polynomial reports degree 0 and is_zero() true.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    Scalar coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }
    Scalar leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Polynomial monic() const {
        if (c_.empty()) throw std::domain_error("Polynomial: cannot normalize the zero polynomial");
        const Scalar inv = c_.back().inverse();
        std::vector<Scalar> out = c_;
        for (auto& v : out) v *= inv;
        return Polynomial(field_, std::move(out));
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Matrix eval(const Matrix& m) const {
        if (!m.is_square()) throw std::invalid_argument("Polynomial: matrix argument must be square");
        Matrix acc(field_, m.rows(), m.cols());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * m;
            for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += c_[i];
        }
        return acc;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.field_);
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(a.field_, std::move(out));
    }

    /// Euclidean division by a nonzero divisor; returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        std::vector<Scalar> rem = c_;
        std::vector<Scalar> quo(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1,
                                Scalar::zero(field_));
        const Scalar lead_inv = d.c_.back().inverse();
        while (rem.size() >= d.c_.size() && !rem.empty()) {
            const Scalar f = rem.back() * lead_inv;
            const std::size_t shift = rem.size() - d.c_.size();
            quo[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
    }

    bool divides(const Polynomial& f) const { return f.divmod(*this).second.is_zero(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += c_[i].str();
            } else {
                if (!c_[i].is_one()) out += "(" + c_[i].str() + ")*";
                out += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    FieldSpec field_;
    std::vector<Scalar> c_;
};

/// Monic annihilating polynomial of least degree, found at the first linear
/// dependence among I, m, m^2, ...
inline Polynomial minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal_polynomial: matrix must be square");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::from_ints(f, {0, 1});  // empty map, min poly x
    std::vector<std::vector<Scalar>> powers;  // vectorized I, m, m^2, ...
    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        powers.push_back(power.vectorize());
        power = power * m;
        // express m^k over earlier powers: powers^T alpha = vec(m^k)
        Matrix cols(f, n * n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n * n; ++i) cols.at(i, j) = powers[j][i];
        if (auto alpha = solve(cols, power.vectorize())) {
            std::vector<Scalar> coeffs(k + 1, Scalar::zero(f));
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*alpha)[j];
            coeffs[k] = Scalar::one(f);
            return Polynomial(f, std::move(coeffs));
        }
    }
    throw std::logic_error("minimal_polynomial: no dependence up to degree n (impossible)");
}

/// True iff x^2 divides f, i.e. the degree-0 and degree-1 coefficients both
/// vanish. Throws on the zero polynomial.
inline bool x2_divides(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("x2_divides: zero polynomial");
    return f.coefficient(0).is_zero() && f.coefficient(1).is_zero();
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// All roots (with multiplicity) when f splits into linear factors over its
/// field: rational-root search over Q, exhaustive residue scan over GF(p).
/// Returns nullopt when f does not split.
inline std::optional<std::vector<Scalar>> split_linear_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("split_linear_roots: zero polynomial");
    const FieldSpec field = f.field();
    std::vector<Scalar> candidates;
    if (field.kind == FieldKind::PrimeField) {
        for (std::uint64_t r = 0; r < field.p; ++r) candidates.push_back(Scalar::residue(r, field.p));
    } else {
        // clear denominators, then p/q with p | constant term and q | leading
        BigInt common_den = 1;
        for (const auto& c : f.coefficients()) {
            const BigInt den = boost::multiprecision::denominator(c.as_rational());
            common_den = boost::multiprecision::lcm(common_den, den);
        }
        std::vector<BigInt> ic;
        for (const auto& c : f.coefficients()) {
            const BigRational scaled = c.as_rational() * BigRational(common_den);
            ic.push_back(boost::multiprecision::numerator(scaled));
        }
        std::size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        candidates.push_back(Scalar::of(field, 0));
        if (low < ic.size()) {
            for (const BigInt& p : detail::positive_divisors(ic[low]))
                for (const BigInt& q : detail::positive_divisors(ic.back())) {
                    candidates.push_back(Scalar::rational(p, q));
                    candidates.push_back(Scalar::rational(-p, q));
                }
        }
    }
    Polynomial rem = f.monic();
    std::vector<Scalar> roots;
    for (const auto& r : candidates) {
        while (rem.degree() >= 1 && rem.eval(r).is_zero()) {
            roots.push_back(r);
            Polynomial lin(field, {-r, Scalar::one(field)});
            auto [q, rest] = rem.divmod(lin);
            assert(rest.is_zero());
            rem = q;
        }
        if (rem.degree() == 0) break;
    }
    if (rem.degree() >= 1) return std::nullopt;
    return roots;
}

}  // namespace ltskit
