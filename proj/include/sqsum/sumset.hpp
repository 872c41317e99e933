#pragma once

// Sumsets A+A over the rationals, square sets with root witnesses, and the
// cardinality-preserving maps (scaling, denominator clearing).

#include <cstddef>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqsum/rational.hpp"

namespace sqsum {

using RationalSet = std::set<Rational>;

/// { a + b : a, b in A }, pairs taken with repetition.
inline RationalSet sumset(const RationalSet& a) {
    if (a.empty()) throw std::invalid_argument("sumset: empty set");
    RationalSet out;
    for (auto i = a.begin(); i != a.end(); ++i)
        for (auto j = i; j != a.end(); ++j) out.insert(*i + *j);
    return out;
}

inline RationalSet scale(const RationalSet& a, const Rational& t) {
    if (t.sign() == 0) throw std::invalid_argument("scale: zero factor");
    RationalSet out;
    for (const auto& x : a) out.insert(x * t);
    return out;
}

/// A finite set of distinct rational squares, each carrying a non-negative
/// root r with r^2 = element.
class SquareSet {
public:
    SquareSet() = default;

    /// Inserts an element that must be a rational square. Throws on
    /// duplicates and non-squares.
    void insert(const Rational& element) {
        auto root = as_square_root(element);
        if (!root) throw std::invalid_argument(element.to_string() + " is not a rational square");
        insert_root(*root);
    }

    /// Inserts r^2 with witness |r|.
    void insert_root(const Rational& r) {
        Rational root = abs(r);
        Rational element = square(root);
        if (!roots_.emplace(std::move(element), std::move(root)).second)
            throw std::invalid_argument("duplicate element " + square(r).to_string());
    }

    bool contains(const Rational& element) const { return roots_.count(element) != 0; }
    std::size_t size() const { return roots_.size(); }
    bool empty() const { return roots_.empty(); }

    const Rational& witness(const Rational& element) const {
        auto it = roots_.find(element);
        if (it == roots_.end()) throw std::out_of_range(element.to_string() + " not in set");
        return it->second;
    }

    RationalSet elements() const {
        RationalSet out;
        for (const auto& [e, r] : roots_) out.insert(out.end(), e);
        return out;
    }

    /// element -> root, ascending by element.
    const std::map<Rational, Rational>& entries() const { return roots_; }

    static SquareSet from_elements(const RationalSet& a) {
        SquareSet s;
        for (const auto& e : a) s.insert(e);
        return s;
    }

private:
    std::map<Rational, Rational> roots_;
};

/// Scales by L^2, L the lcm of all witness denominators. The result is
/// integral, stays a set of squares, and has the same sumset cardinality.
inline SquareSet clear_denominators(const SquareSet& a) {
    Integer l = 1;
    for (const auto& [e, r] : a.entries()) l = lcm(l, r.den());
    SquareSet out;
    for (const auto& [e, r] : a.entries()) out.insert_root(r * Rational(l));
    return out;
}

struct SumsetReport {
    std::size_t source_size = 0;
    std::size_t sumset_size = 0;
    RationalSet sumset;
    std::size_t lower_bound = 0;  // 2n - 1
    std::size_t upper_bound = 0;  // n(n+1)/2
};

/// Works for any finite set of rationals; both bounds hold in an ordered field.
inline SumsetReport report(const RationalSet& a) {
    SumsetReport r;
    r.source_size = a.size();
    r.sumset = sumset(a);
    r.sumset_size = r.sumset.size();
    r.lower_bound = 2 * r.source_size - 1;
    r.upper_bound = r.source_size * (r.source_size + 1) / 2;
    if (r.sumset_size < r.lower_bound || r.sumset_size > r.upper_bound)
        throw std::logic_error("sumset size outside [2n-1, n(n+1)/2]");
    return r;
}

inline SumsetReport report(const SquareSet& a) { return report(a.elements()); }

class SetFileError : public std::runtime_error {
public:
    SetFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the set file format: one rational per line, '#' starts a comment,
/// blank lines ignored, duplicates rejected.
inline RationalSet read_set_file(std::istream& in) {
    RationalSet out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);

        Rational q;
        try {
            q = Rational::parse(token);
        } catch (const std::exception& e) {
            throw SetFileError(lineno, e.what());
        }
        if (!out.insert(q).second) throw SetFileError(lineno, "duplicate element " + q.to_string());
    }
    return out;
}

}  // namespace sqsum
