#pragma once

// Exact integers and rationals with square detection.
//
// Integer is GMP's mpz_class. Rational is kept in canonical form (reduced,
// positive denominator) after every operation, so structural equality is
// value equality and ordered containers of Rationals behave as sets.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sqsum {

using Integer = mpz_class;

/// Floor square root by Newton iteration: the unique r >= 0 with
/// r*r <= n < (r+1)*(r+1).
inline Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt: negative input");
    if (sgn(n) == 0) return 0;

    // Start above the root: 2^ceil(bits/2) >= sqrt(n).
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = 1;
    x <<= static_cast<mp_bitcnt_t>((bits + 1) / 2);

    // The iterates decrease monotonically until they reach floor(sqrt(n)).
    Integer y = (x + n / x) >> 1;
    while (y < x) {
        x = y;
        y = (x + n / x) >> 1;
    }

    // correction
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

/// Returns the non-negative root of n if n is a perfect square.
inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    Integer r = isqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}  // NOLINT: implicit by intent
    Rational(const Integer& v) : num_(v), den_(1) {}  // NOLINT
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        if (sgn(den_) == 0) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }

    /// Parses "num" or "num/den" with an optional leading sign on the numerator.
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        const auto bad = [&] {
            return std::invalid_argument("malformed rational '" + std::string(text) + "'");
        };

        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        const std::string_view num_text = body.substr(0, slash);
        const std::string_view den_text =
            slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
        if (!digits(num_text) || !digits(den_text)) throw bad();

        Integer num(std::string(num_text), 10);
        Integer den(std::string(den_text), 10);
        if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        if (negative) num = -num;
        return Rational(std::move(num), std::move(den));
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    std::string to_string() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

    Rational operator-() const { return Rational(Integer(-num_), den_, canonical_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(Integer(a.num_ * b.den_ + b.num_ * a.den_), Integer(a.den_ * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(Integer(a.num_ * b.den_ - b.num_ * a.den_), Integer(a.den_ * b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(Integer(a.num_ * b.num_), Integer(a.den_ * b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.num_) == 0) throw std::domain_error("Rational: division by zero");
        return Rational(Integer(a.num_ * b.den_), Integer(a.den_ * b.num_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    struct canonical_tag {};
    Rational(Integer num, Integer den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

inline Rational square(const Rational& q) { return q * q; }

/// Non-negative rational root of q if q is the square of a rational.
/// Numerator and denominator are tested separately; this is valid because q
/// is reduced.
inline std::optional<Rational> as_square_root(const Rational& q) {
    auto rn = integer_sqrt_exact(q.num());
    if (!rn) return std::nullopt;
    auto rd = integer_sqrt_exact(q.den());
    if (!rd) return std::nullopt;
    return Rational(std::move(*rn), std::move(*rd));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace sqsum

template <>
struct std::hash<sqsum::Rational> {
    std::size_t operator()(const sqsum::Rational& q) const noexcept {
        const auto h1 = std::hash<std::string>{}(q.num().get_str(16));
        const auto h2 = std::hash<std::string>{}(q.den().get_str(16));
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
