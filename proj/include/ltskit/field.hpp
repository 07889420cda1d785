#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace ltskit {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Ground field of a system: the rationals, or a prime field GF(p).
enum class FieldKind { Rationals, PrimeField };

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;  // modulus, PrimeField only

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

    static FieldSpec gf(std::uint64_t p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{FieldKind::PrimeField, p};
    }

    std::uint64_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

    std::string str() const {
        return kind == FieldKind::Rationals ? std::string("Q") : "GF(" + std::to_string(p) + ")";
    }

    bool operator==(const FieldSpec&) const = default;
};

/// Residue class modulo a prime; the modulus travels with the value.
struct ModInt {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    friend bool operator==(const ModInt& a, const ModInt& b) {
        assert(a.p == b.p);
        return a.v == b.v;
    }
};

namespace detail {

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Extended Euclid; a must be a unit mod p.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    assert(r == 1);
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

inline std::uint64_t reduce_bigint_mod(const BigInt& n, std::uint64_t p) {
    BigInt r = n % BigInt(p);
    if (r < 0) r += BigInt(p);
    return r.convert_to<std::uint64_t>();
}

}  // namespace detail

/// An exact field element over Q or GF(p). All arithmetic is exact; mixing
/// elements of different fields is a programming error and throws.
class Scalar {
public:
    Scalar() : v_(BigRational(0)) {}

    static Scalar zero(const FieldSpec& f) { return of(f, 0); }
    static Scalar one(const FieldSpec& f) { return of(f, 1); }

    static Scalar of(const FieldSpec& f, long long n) {
        if (f.kind == FieldKind::Rationals) return Scalar(BigRational(n));
        BigInt b(n);
        return Scalar(ModInt{detail::reduce_bigint_mod(b, f.p), f.p});
    }

    static Scalar rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        BigInt g = boost::multiprecision::gcd(num, den);
        BigInt n = num / g, d = den / g;
        if (d < 0) { n = -n; d = -d; }
        BigRational q(n);
        q /= BigRational(d);
        return Scalar(q);
    }

    static Scalar residue(std::uint64_t v, std::uint64_t p) { return Scalar(ModInt{v % p, p}); }

    /// Parses "a" or "a/b" with unbounded integer parts. Over GF(p), a/b is
    /// read as a * b^{-1}.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    FieldSpec field() const {
        if (std::holds_alternative<BigRational>(v_)) return FieldSpec::rationals();
        return FieldSpec{FieldKind::PrimeField, std::get<ModInt>(v_).p};
    }

    bool is_zero() const {
        if (const auto* q = std::get_if<BigRational>(&v_)) return *q == 0;
        return std::get<ModInt>(v_).v == 0;
    }

    bool is_one() const {
        if (const auto* q = std::get_if<BigRational>(&v_)) return *q == 1;
        const auto& m = std::get<ModInt>(v_);
        return m.v == 1 % m.p;
    }

    const BigRational& as_rational() const {
        if (!std::holds_alternative<BigRational>(v_)) throw std::logic_error("Scalar: not a rational");
        return std::get<BigRational>(v_);
    }

    const ModInt& as_residue() const {
        if (!std::holds_alternative<ModInt>(v_)) throw std::logic_error("Scalar: not a residue");
        return std::get<ModInt>(v_);
    }

    Scalar operator-() const {
        if (const auto* q = std::get_if<BigRational>(&v_)) return Scalar(BigRational(-*q));
        const auto& m = std::get<ModInt>(v_);
        return Scalar(ModInt{m.v == 0 ? 0 : m.p - m.v, m.p});
    }

    Scalar inverse() const {
        if (const auto* q = std::get_if<BigRational>(&v_)) {
            if (*q == 0) throw std::domain_error("division by zero in Q");
            return Scalar(BigRational(1 / *q));
        }
        const auto& m = std::get<ModInt>(v_);
        return Scalar(ModInt{detail::mod_inverse(m.v, m.p), m.p});
    }

    Scalar& operator+=(const Scalar& o) {
        if (auto* q = std::get_if<BigRational>(&v_)) {
            *q += rat(o);
        } else {
            auto& m = std::get<ModInt>(v_);
            const auto& om = res(o, m.p);
            m.v = detail::mod_add(m.v, om.v, m.p);
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        if (auto* q = std::get_if<BigRational>(&v_)) {
            *q -= rat(o);
        } else {
            auto& m = std::get<ModInt>(v_);
            const auto& om = res(o, m.p);
            m.v = detail::mod_sub(m.v, om.v, m.p);
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        if (auto* q = std::get_if<BigRational>(&v_)) {
            *q *= rat(o);
        } else {
            auto& m = std::get<ModInt>(v_);
            const auto& om = res(o, m.p);
            m.v = detail::mod_mul(m.v, om.v, m.p);
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.v_.index() != b.v_.index()) throw std::logic_error("Scalar: comparing elements of different fields");
        if (const auto* q = std::get_if<BigRational>(&a.v_)) return *q == std::get<BigRational>(b.v_);
        const auto& ma = std::get<ModInt>(a.v_);
        const auto& mb = std::get<ModInt>(b.v_);
        if (ma.p != mb.p) throw std::logic_error("Scalar: comparing elements of different prime fields");
        return ma.v == mb.v;
    }

    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical literal: lowest-terms "a" or "a/b" over Q, the residue in
    /// [0,p) over GF(p).
    std::string str() const {
        if (const auto* q = std::get_if<BigRational>(&v_)) {
            const BigInt num = boost::multiprecision::numerator(*q);
            const BigInt den = boost::multiprecision::denominator(*q);
            if (den == 1) return num.str();
            return num.str() + "/" + den.str();
        }
        return std::to_string(std::get<ModInt>(v_).v);
    }

private:
    explicit Scalar(BigRational q) : v_(std::move(q)) {}
    explicit Scalar(ModInt m) : v_(m) {}

    static const BigRational& rat(const Scalar& s) {
        if (!std::holds_alternative<BigRational>(s.v_))
            throw std::logic_error("Scalar: mixed-field arithmetic (Q vs GF)");
        return std::get<BigRational>(s.v_);
    }

    static const ModInt& res(const Scalar& s, std::uint64_t p) {
        if (!std::holds_alternative<ModInt>(s.v_))
            throw std::logic_error("Scalar: mixed-field arithmetic (GF vs Q)");
        const auto& m = std::get<ModInt>(s.v_);
        if (m.p != p) throw std::logic_error("Scalar: mixed moduli " + std::to_string(m.p) + " vs " + std::to_string(p));
        return m;
    }

    std::variant<BigRational, ModInt> v_;
};

inline Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("Scalar: empty integer literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("Scalar: bad integer literal '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("Scalar: bad integer literal '" + s + "'");
        return BigInt(s);
    };
    const auto slash = text.find('/');
    BigInt num = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
    if (f.kind == FieldKind::Rationals) return rational(num, den);
    const std::uint64_t n = detail::reduce_bigint_mod(num, f.p);
    const std::uint64_t d = detail::reduce_bigint_mod(den, f.p);
    if (d == 0) throw std::invalid_argument("Scalar: denominator vanishes mod " + std::to_string(f.p));
    return residue(detail::mod_mul(n, detail::mod_inverse(d, f.p), f.p), f.p);
}

}  // namespace ltskit
