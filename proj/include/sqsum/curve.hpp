#pragma once

// The curve E_d : y^2 = x^3 - d^2 x and its correspondence with 3-term
// arithmetic progressions of rational squares {a^2, b^2, c^2} with common
// difference d.

#include <stdexcept>
#include <string>

#include "sqsum/rational.hpp"

namespace sqsum {

class CurveParam {
public:
    explicit CurveParam(Integer d) : d_(std::move(d)) {
        if (d_ < 1) throw std::invalid_argument("curve parameter d must be >= 1");
    }
    const Integer& d() const { return d_; }

private:
    Integer d_;
};

/// A rational point; whether it lies on a particular E_d is checked by the
/// operations that consume it (or up front via `checked_point`).
struct CurvePoint {
    Rational x;
    Rational y;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Signed roots of a 3-term progression of squares with common difference d.
struct ApTriple {
    Rational a;
    Rational b;
    Rational c;
    Integer d;

    friend bool operator==(const ApTriple&, const ApTriple&) = default;
};

inline bool on_curve(const CurvePoint& p, const CurveParam& e) {
    const Rational d2 = Rational(Integer(e.d() * e.d()));
    return p.y * p.y == p.x * p.x * p.x - d2 * p.x;
}

inline CurvePoint checked_point(const CurveParam& e, Rational x, Rational y) {
    CurvePoint p{std::move(x), std::move(y)};
    if (!on_curve(p, e))
        throw std::invalid_argument("(" + p.x.to_string() + ", " + p.y.to_string() +
                                    ") is not on E_" + e.d().get_str());
    return p;
}

/// True iff b^2 - a^2 = c^2 - b^2 = d and the three squares are distinct.
inline bool is_square_progression(const ApTriple& t) {
    const Rational d(t.d);
    const Rational a2 = square(t.a), b2 = square(t.b), c2 = square(t.c);
    return b2 - a2 == d && c2 - b2 == d && sgn(t.d) != 0;
}

namespace detail {
inline void require_nontorsion(const CurvePoint& p, const CurveParam& e, const char* who) {
    if (!on_curve(p, e)) throw std::invalid_argument(std::string(who) + ": point not on curve");
    if (p.y.sign() == 0)
        throw std::domain_error(std::string(who) + ": 2-torsion point (y = 0)");
}
}  // namespace detail

/// Point -> progression: a=(x^2-2dx-d^2)/2y, b=(x^2+d^2)/2y, c=(-x^2-2dx+d^2)/2y.
inline ApTriple point_to_ap(const CurvePoint& p, const CurveParam& e) {
    detail::require_nontorsion(p, e, "point_to_ap");
    const Rational d(e.d());
    const Rational x2 = p.x * p.x;
    const Rational two_dx = Rational(2) * d * p.x;
    const Rational d2 = d * d;
    const Rational two_y = Rational(2) * p.y;

    ApTriple t{(x2 - two_dx - d2) / two_y, (x2 + d2) / two_y, (d2 - x2 - two_dx) / two_y, e.d()};
    if (!is_square_progression(t))
        throw std::logic_error("point_to_ap: progression identity failed");
    return t;
}

/// Progression -> point: ( d(c-b)/(a-b), d^2(2b-a-c)/(a-b)^2 ).
inline CurvePoint ap_to_point(const ApTriple& t) {
    if (t.a == t.b) throw std::domain_error("ap_to_point: degenerate progression (a = b)");
    if (!is_square_progression(t))
        throw std::invalid_argument("ap_to_point: squares do not form a progression with difference d");
    const CurveParam e(t.d);
    const Rational d(t.d);
    const Rational amb = t.a - t.b;
    CurvePoint p{d * (t.c - t.b) / amb, d * d * (Rational(2) * t.b - t.a - t.c) / (amb * amb)};
    if (!on_curve(p, e)) throw std::logic_error("ap_to_point: result not on curve");
    return p;
}

/// Tangent-line doubling. The x-coordinate always equals ((x^2+d^2)/2y)^2,
/// the square of the middle root of the progression attached to p.
inline CurvePoint double_point(const CurvePoint& p, const CurveParam& e) {
    detail::require_nontorsion(p, e, "double_point");
    const Rational d2 = Rational(Integer(e.d() * e.d()));
    const Rational lambda = (Rational(3) * p.x * p.x - d2) / (Rational(2) * p.y);
    const Rational x = lambda * lambda - Rational(2) * p.x;
    const Rational y = lambda * (p.x - x) - p.y;
    CurvePoint q{x, y};

    if (q.x != square((p.x * p.x + d2) / (Rational(2) * p.y)))
        throw std::logic_error("double_point: x-coordinate identity failed");
    if (!on_curve(q, e)) throw std::logic_error("double_point: result not on curve");
    return q;
}

}  // namespace sqsum
