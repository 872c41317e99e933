#pragma once

// Explicit square sets with small sumsets: the curve-generated family,
// generalized arithmetic progressions, the seven-square magic square and
// perfect-cuboid checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqsum/curve.hpp"
#include "sqsum/rational.hpp"
#include "sqsum/sumset.hpp"

namespace sqsum {

// ---------------------------------------------------------------------------
// Curve-generated family
// ---------------------------------------------------------------------------

/// Common difference of the seed progression {1, 25, 49}.
inline constexpr long kSeedDifference = 24;

/// The progressions attached to P_1, 2P_1, 4P_1, ... on E_24, with
/// P_1 = (-12, 72) the point of the progression 1, 25, 49.
inline std::vector<ApTriple> ec_blocks(std::size_t count) {
    const CurveParam e{Integer(kSeedDifference)};
    std::vector<ApTriple> blocks;
    blocks.reserve(count);
    if (count == 0) return blocks;

    CurvePoint p = ap_to_point(ApTriple{1, 5, 7, Integer(kSeedDifference)});
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) p = double_point(p, e);
        blocks.push_back(point_to_ap(p, e));
    }
    return blocks;
}

inline std::size_t theorem_ub_bound(std::size_t n) { return 5 * n * (n + 1) / 2; }

/// Union of the first n curve-generated progressions; exactly 3n squares.
inline SquareSet build_ec_family(std::size_t n) {
    if (n < 1) throw std::invalid_argument("build_ec_family: n must be >= 1");
    SquareSet out;
    for (const auto& t : ec_blocks(n)) {
        for (const auto* r : {&t.a, &t.b, &t.c}) {
            try {
                out.insert_root(*r);
            } catch (const std::invalid_argument&) {
                throw std::runtime_error("build_ec_family: blocks collide, |A| < 3n");
            }
        }
    }
    return out;
}

/// Size m = 3n + r family: the n-block family plus the first r squares
/// (in a, b, c order) of block n+1.
inline SquareSet build_ec_family_rem(std::size_t m) {
    if (m < 4) throw std::invalid_argument("build_ec_family_rem: m must be >= 4");
    const std::size_t n = m / 3, r = m % 3;
    if (r == 0) return build_ec_family(n);

    const auto blocks = ec_blocks(n + 1);
    SquareSet out = build_ec_family(n);
    const ApTriple& extra = blocks.back();
    const std::array<const Rational*, 3> roots{&extra.a, &extra.b, &extra.c};
    for (std::size_t i = 0; i < r; ++i) {
        try {
            out.insert_root(*roots[i]);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("build_ec_family_rem: extra element collides");
        }
    }
    return out;
}

/// The published upper-bound formulas for sizes 3n, 3n+1, 3n+2. The 3n case
/// is known to undershoot the true minimum and is only reported, never
/// asserted.
inline std::size_t ub2_formula(std::size_t m) {
    const std::size_t n = m / 3;
    switch (m % 3) {
        case 0: return (5 * n * n + n) / 2;
        case 1: return (5 * n * n + 9 * n + 2) / 2;
        default: return (5 * n * n + 13 * n + 6) / 2;
    }
}

// ---------------------------------------------------------------------------
// Generalized arithmetic progressions
// ---------------------------------------------------------------------------

/// { base + m_1 steps_1 + ... + m_d steps_d : 0 <= m_i < sizes_i }.
/// A "3x3" progression has sizes {3, 3} and nine terms.
template <typename Int>
struct BasicGap {
    Int base{};
    std::vector<Int> steps;
    std::vector<std::size_t> sizes;

    std::size_t dimension() const { return steps.size(); }
    std::size_t volume() const {
        std::size_t v = 1;
        for (auto k : sizes) v *= k;
        return v;
    }
    void validate() const {
        if (steps.empty() || steps.size() != sizes.size())
            throw std::invalid_argument("GAP: steps and sizes must have equal nonzero length");
        for (auto k : sizes)
            if (k < 1) throw std::invalid_argument("GAP: sizes must be >= 1");
    }
    friend bool operator==(const BasicGap&, const BasicGap&) = default;
};

using GapDescriptor = BasicGap<Integer>;

template <typename Int>
struct GapElements {
    std::set<Int> elements;
    bool proper = false;  // all volume() generated values distinct
};

template <typename Int>
std::vector<Int> gap_terms(const BasicGap<Int>& g) {
    g.validate();
    std::vector<Int> terms{g.base};
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        std::vector<Int> next;
        next.reserve(terms.size() * g.sizes[i]);
        for (const auto& t : terms)
            for (std::size_t m = 0; m < g.sizes[i]; ++m)
                next.push_back(t + Int(static_cast<long>(m)) * g.steps[i]);
        terms = std::move(next);
    }
    return terms;
}

template <typename Int>
GapElements<Int> gap_elements(const BasicGap<Int>& g) {
    const auto terms = gap_terms(g);
    GapElements<Int> out;
    out.elements.insert(terms.begin(), terms.end());
    out.proper = out.elements.size() == terms.size();
    return out;
}

struct GapMatch {
    GapDescriptor gap;
    std::vector<Integer> elements;  // generation order
    std::size_t square_count = 0;
};

struct GapSearchBounds {
    std::int64_t step_bound = 1;  // steps in [1, step_bound]
    std::int64_t base_bound = 0;  // base in [0, base_bound]
};

namespace detail {
inline bool is_square_i64(std::int64_t v) {
    if (v < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}
}  // namespace detail

/// Bounded scan for proper GAPs of the given shape with at least
/// `min_squares` perfect-square terms. Results ascend by (base, steps).
inline std::vector<GapMatch> search_gap_of_squares(const std::vector<std::size_t>& sizes,
                                                   GapSearchBounds bounds, std::size_t min_squares) {
    if (sizes.empty()) throw std::invalid_argument("search_gap_of_squares: empty shape");
    if (bounds.step_bound < 1 || bounds.base_bound < 0)
        throw std::invalid_argument("search_gap_of_squares: bounds must be >= 1");
    const std::size_t dim = sizes.size();

    BasicGap<std::int64_t> shape{0, std::vector<std::int64_t>(dim, 1), sizes};
    shape.validate();
    const std::size_t volume = shape.volume();
    {
        // Guard the int64 range: base + sum (k_i - 1) * step_bound.
        long double top = static_cast<long double>(bounds.base_bound);
        for (auto k : sizes) top += static_cast<long double>(k - 1) * bounds.step_bound;
        if (top > 9.0e18L) throw std::overflow_error("search_gap_of_squares: bounds too large");
    }

    std::vector<GapMatch> found;
    std::vector<std::int64_t> steps(dim, 1);
    while (true) {
        shape.steps = steps;
        const auto offsets = gap_terms(shape);
        if (std::set<std::int64_t>(offsets.begin(), offsets.end()).size() == volume) {
            for (std::int64_t base = 0; base <= bounds.base_bound; ++base) {
                std::size_t squares = 0;
                for (std::size_t i = 0; i < volume; ++i) {
                    if (squares + (volume - i) < min_squares) break;
                    if (detail::is_square_i64(base + offsets[i])) ++squares;
                }
                if (squares < min_squares) continue;

                GapMatch m;
                m.gap.base = Integer(static_cast<long>(base));
                for (auto s : steps) m.gap.steps.emplace_back(static_cast<long>(s));
                m.gap.sizes = sizes;
                for (auto o : offsets) m.elements.emplace_back(static_cast<long>(base + o));
                m.square_count = squares;
                found.push_back(std::move(m));
            }
        }
        // odometer over steps
        std::size_t i = 0;
        while (i < dim && steps[i] == bounds.step_bound) steps[i++] = 1;
        if (i == dim) break;
        ++steps[i];
    }

    std::sort(found.begin(), found.end(), [](const GapMatch& x, const GapMatch& y) {
        if (x.gap.base != y.gap.base) return x.gap.base < y.gap.base;
        return x.gap.steps < y.gap.steps;
    });
    return found;
}

/// Single bound for base and steps: base in [0, bound], steps in [1, bound].
inline std::vector<GapMatch> search_gap_of_squares(const std::vector<std::size_t>& sizes,
                                                   std::int64_t bound, std::size_t min_squares) {
    return search_gap_of_squares(sizes, GapSearchBounds{bound, bound}, min_squares);
}

// ---------------------------------------------------------------------------
// Magic squares and cuboids
// ---------------------------------------------------------------------------

struct MagicSquare3 {
    std::array<std::array<Integer, 3>, 3> grid;
    Integer magic_constant;

    /// Rows, columns, then the two diagonals.
    std::array<Integer, 8> line_sums() const {
        std::array<Integer, 8> s;
        for (int i = 0; i < 3; ++i) {
            s[i] = grid[i][0] + grid[i][1] + grid[i][2];
            s[3 + i] = grid[0][i] + grid[1][i] + grid[2][i];
        }
        s[6] = grid[0][0] + grid[1][1] + grid[2][2];
        s[7] = grid[0][2] + grid[1][1] + grid[2][0];
        return s;
    }
    bool is_magic() const {
        const auto s = line_sums();
        return std::all_of(s.begin(), s.end(), [&](const Integer& v) { return v == magic_constant; });
    }
};

/// The known 3x3 magic square with seven square entries. The middle-left
/// entry is 360721; the commonly reprinted 360761 breaks the second row.
inline MagicSquare3 magic7_grid() {
    auto sq = [](long r) -> Integer { return Integer(r) * r; };
    MagicSquare3 m{{{{sq(373), sq(289), sq(565)},
                     {Integer(360721), sq(425), sq(23)},
                     {sq(205), sq(527), Integer(222121)}}},
                   Integer(0)};
    m.magic_constant = m.grid[0][0] + m.grid[0][1] + m.grid[0][2];
    return m;
}

inline SquareSet magic7_set() {
    SquareSet s;
    for (long r : {373L, 289L, 565L, 425L, 23L, 205L, 527L}) s.insert_root(Rational(r));
    return s;
}

struct CuboidReport {
    Integer a, b, c;
    std::optional<Integer> d;  // sqrt(a^2 + b^2)
    std::optional<Integer> e;  // sqrt(a^2 + c^2)
    std::optional<Integer> f;  // sqrt(b^2 + c^2)
    std::optional<Integer> g;  // sqrt(a^2 + b^2 + c^2)

    bool is_euler_brick() const { return d && e && f; }
    bool is_perfect() const { return is_euler_brick() && g; }
};

inline CuboidReport check_perfect_cuboid(const Integer& a, const Integer& b, const Integer& c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("cuboid edges must be >= 1");
    const Integer a2 = a * a, b2 = b * b, c2 = c * c;
    return CuboidReport{a,
                        b,
                        c,
                        integer_sqrt_exact(Integer(a2 + b2)),
                        integer_sqrt_exact(Integer(a2 + c2)),
                        integer_sqrt_exact(Integer(b2 + c2)),
                        integer_sqrt_exact(Integer(a2 + b2 + c2))};
}

}  // namespace sqsum
