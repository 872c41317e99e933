#pragma once

// End-to-end reproduction checks. Each criterion recomputes a published
// value with the library and compares it exactly, under a wall-clock limit.
// Used by the acceptance test binary and by `sqsum verify`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqsum/constructions.hpp"
#include "sqsum/curve.hpp"
#include "sqsum/format.hpp"
#include "sqsum/oracle.hpp"
#include "sqsum/sumset.hpp"
#include "sqsum/zp.hpp"

namespace sqsum::acceptance {

/// Published values the checks compare against.
struct Expectations {
    std::size_t n3_sumset = 5;
    std::size_t n4_sumset = 8;
    std::size_t magic7_sumset = 19;
    Integer magic_constant{541875};
    std::map<std::uint64_t, std::uint64_t> n5;  // p -> N_5(Z_p), 11 <= p <= 199
    std::map<std::uint64_t, std::uint64_t> n6;  // p -> N_6(Z_p), 11 <= p <= 149

    static Expectations published() {
        Expectations e;
        for (std::uint64_t p : {17, 23}) e.n5[p] = 9;
        for (std::uint64_t p : {11, 19, 29, 31, 37}) e.n5[p] = 10;
        e.n5[13] = 11;
        for (std::uint64_t p = 41; p <= 199; ++p)
            if (is_prime(p)) e.n5[p] = 9;

        for (std::uint64_t p : {11, 53, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 127, 131, 137, 149})
            e.n6[p] = 11;
        for (std::uint64_t p : {17, 23, 41, 43, 47, 113, 139}) e.n6[p] = 12;
        for (std::uint64_t p : {13, 19, 31, 37, 59}) e.n6[p] = 13;
        e.n6[29] = 14;
        return e;
    }
};

struct Config {
    std::string filter;  // comma-separated ids, group names or title substrings; empty = all
    std::uint64_t seed = 20160501;
    unsigned workers = 1;
    Expectations expect = Expectations::published();
};

struct Outcome {
    int id = 0;
    std::string group;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0 = no limit
};

inline std::string format_line(const Outcome& o) {
    std::ostringstream os;
    os << (o.passed ? "[PASS] " : "[FAIL] ") << o.id << ". " << o.title << " -- " << o.detail << " ("
       << o.seconds << " s";
    if (o.limit_seconds > 0) os << ", limit " << o.limit_seconds << " s";
    os << ")";
    return os.str();
}

namespace detail {

struct Criterion {
    int id;
    std::string group;
    std::string title;
    double limit_seconds;
    std::function<bool(std::string&)> check;
};

inline bool selected(const Criterion& c, const std::string& filter) {
    if (filter.empty()) return true;
    std::stringstream ss(filter);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        if (std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            if (tok == std::to_string(c.id)) return true;
            continue;
        }
        static const std::string groups[] = {"sumset", "constructions", "curve", "zp", "scaling"};
        if (std::find(std::begin(groups), std::end(groups), tok) != std::end(groups)) {
            if (tok == c.group) return true;
            continue;
        }
        if (c.title.find(tok) != std::string::npos) return true;
    }
    return false;
}

// Search results shared between the table criteria and the invariants
// checked over them.
struct ZpRuns {
    std::vector<SearchResult> all;
    std::vector<SearchResult> n5;
};

inline std::vector<SearchResult> scan_table(std::uint64_t n, const std::map<std::uint64_t, std::uint64_t>& table,
                                            unsigned workers, std::string& detail) {
    std::vector<SearchResult> out;
    if (table.empty()) return out;
    const auto rows = table_scan(n, table.begin()->first, table.rbegin()->first, {}, workers);
    for (const auto& row : rows) {
        if (!row.result) {
            detail += " p=" + std::to_string(row.p) + ": " + row.error + ";";
            continue;
        }
        out.push_back(*row.result);
    }
    return out;
}

inline bool compare_table(const std::vector<SearchResult>& got, const std::map<std::uint64_t, std::uint64_t>& want,
                          std::string& detail) {
    std::size_t matched = 0;
    std::string mismatches;
    std::map<std::uint64_t, const SearchResult*> by_p;
    for (const auto& r : got) by_p[r.p] = &r;
    for (const auto& [p, v] : want) {
        auto it = by_p.find(p);
        if (it == by_p.end()) {
            mismatches += " p=" + std::to_string(p) + " missing;";
        } else if (!it->second->exact) {
            mismatches += " p=" + std::to_string(p) + " not exact;";
        } else if (it->second->minimum != v) {
            mismatches += " p=" + std::to_string(p) + " got " + std::to_string(it->second->minimum) +
                          " want " + std::to_string(v) + ";";
        } else {
            ++matched;
        }
    }
    detail += std::to_string(matched) + "/" + std::to_string(want.size()) + " primes match" + mismatches;
    return matched == want.size();
}

}  // namespace detail

/// Runs the selected criteria in order, calling `on_done` after each.
inline std::vector<Outcome> run(const Config& cfg, const std::function<void(const Outcome&)>& on_done = {}) {
    using detail::Criterion;
    const Expectations& ex = cfg.expect;
    auto runs = std::make_shared<detail::ZpRuns>();

    std::vector<Criterion> criteria;

    criteria.push_back({1, "sumset", "N_3 witness {1,25,49}", 1e-3, [&](std::string& d) {
                            const auto s = sumset(RationalSet{1, 25, 49});
                            d = "|A+A| = " + std::to_string(s.size());
                            return s.size() == ex.n3_sumset;
                        }});

    criteria.push_back({2, "sumset", "N_4 witness {49,169,289,529}", 1e-3, [&](std::string& d) {
                            const auto s = sumset(RationalSet{49, 169, 289, 529});
                            d = "|A+A| = " + std::to_string(s.size());
                            return s.size() == ex.n4_sumset;
                        }});

    criteria.push_back({3, "constructions", "seven-square magic square", 0, [&](std::string& d) {
                            const auto s = sumset(magic7_set().elements());
                            const auto grid = magic7_grid();
                            d = "|A+A| = " + std::to_string(s.size()) + ", magic=" +
                                (grid.is_magic() ? "yes" : "no") + ", constant " + grid.magic_constant.get_str();
                            return magic7_set().size() == 7 && s.size() == ex.magic7_sumset && grid.is_magic() &&
                                   grid.magic_constant == ex.magic_constant;
                        }});

    criteria.push_back({4, "constructions", "curve-generated family, n = 1..4", 10, [&](std::string& d) {
                            bool ok = true;
                            for (std::size_t n = 1; n <= 4; ++n) {
                                const SquareSet a = build_ec_family(n);
                                bool witnesses = true;
                                for (const auto& [e, r] : a.entries()) witnesses = witnesses && square(r) == e;
                                bool blocks = true;
                                for (const auto& t : ec_blocks(n))
                                    blocks = blocks && t.d == kSeedDifference && is_square_progression(t);
                                const std::size_t size = sumset(a.elements()).size();
                                const bool row = a.size() == 3 * n && witnesses && blocks && size <= theorem_ub_bound(n);
                                d += "n=" + std::to_string(n) + ": |A|=" + std::to_string(a.size()) +
                                     " |A+A|=" + std::to_string(size) + "<=" + std::to_string(theorem_ub_bound(n)) +
                                     (row ? "; " : " FAILED; ");
                                ok = ok && row;
                            }
                            return ok;
                        }});

    criteria.push_back({5, "curve", "curve identities over six doublings of (-12, 72)", 5, [&](std::string& d) {
                            const CurveParam e{Integer(24)};
                            CurvePoint p{-12, 72};
                            std::size_t good = 0;
                            for (int i = 0; i <= 6; ++i) {
                                const bool on = on_curve(p, e);
                                const ApTriple t = point_to_ap(p, e);
                                const ApTriple back = point_to_ap(ap_to_point(t), e);
                                const RationalSet sq{square(t.a), square(t.b), square(t.c)};
                                const RationalSet sq_back{square(back.a), square(back.b), square(back.c)};
                                bool ok = on && sq == sq_back;
                                if (i < 6) {
                                    const CurvePoint q = double_point(p, e);
                                    ok = ok && q.x == square(t.b);
                                    p = q;
                                }
                                if (ok) ++good;
                            }
                            d = std::to_string(good) + "/7 points pass, final x has " +
                                std::to_string(p.x.num().get_str().size()) + " numerator digits";
                            return good == 7;
                        }});

    criteria.push_back({6, "zp", "N_5(Z_p) table, 11 <= p <= 199", 60, [&, runs](std::string& d) {
                            runs->n5 = detail::scan_table(5, ex.n5, cfg.workers, d);
                            runs->all.insert(runs->all.end(), runs->n5.begin(), runs->n5.end());
                            return detail::compare_table(runs->n5, ex.n5, d);
                        }});

    criteria.push_back({7, "zp", "N_6(Z_p) table, 11 <= p <= 149", 600, [&, runs](std::string& d) {
                            const auto got = detail::scan_table(6, ex.n6, cfg.workers, d);
                            runs->all.insert(runs->all.end(), got.begin(), got.end());
                            return detail::compare_table(got, ex.n6, d);
                        }});

    criteria.push_back({8, "zp", "pruned search equals naive enumeration, p <= 31, n <= 5", 60,
                        [&, runs](std::string& d) {
                            std::size_t cases = 0, bad = 0;
                            for (std::uint64_t q = 2; q <= 31; ++q) {
                                if (!is_prime(q)) continue;
                                const PrimeModulus p(q);
                                for (std::uint64_t n = 1; n <= 5 && n <= p.square_count(); ++n) {
                                    const auto naive = oracle::naive_min_sumset(n, q);
                                    for (bool reduce : {false, true}) {
                                        const auto r = min_sumset(n, p, SearchOptions{reduce, std::nullopt});
                                        runs->all.push_back(r);
                                        ++cases;
                                        if (!r.exact || r.minimum != naive.minimum || r.witness != naive.witness) {
                                            ++bad;
                                            d += "mismatch n=" + std::to_string(n) + " p=" + std::to_string(q) + "; ";
                                        }
                                    }
                                }
                            }
                            d += std::to_string(cases - bad) + "/" + std::to_string(cases) + " searches agree";
                            return bad == 0;
                        }});

    criteria.push_back({9, "zp", "Cauchy-Davenport lower bound on every search", 0, [&, runs](std::string& d) {
                            if (runs->all.empty()) {
                                std::string ignored;
                                runs->all = detail::scan_table(5, ex.n5, cfg.workers, ignored);
                                d = "(criteria 6-8 not run; checked the N_5 scan) ";
                            }
                            std::size_t bad = 0;
                            for (const auto& r : runs->all) {
                                const PrimeModulus p(r.p);
                                const auto w = ResidueSet::of(p, r.witness);
                                const bool ok = r.exact && r.minimum >= cauchy_davenport_bound(r.n, p) &&
                                                w.size() == r.n && w.is_subset_of(squares_mod_p(p)) &&
                                                sumset_mod_p(w).size() == r.minimum;
                                if (!ok) {
                                    ++bad;
                                    d += "violated n=" + std::to_string(r.n) + " p=" + std::to_string(r.p) + "; ";
                                }
                            }
                            d += std::to_string(runs->all.size() - bad) + "/" + std::to_string(runs->all.size()) +
                                 " results satisfy the bound";
                            return bad == 0 && !runs->all.empty();
                        }});

    criteria.push_back({10, "zp", "Vosper consistency: QR progressions where N_5 = 9 <= p-2", 0,
                        [&, runs](std::string& d) {
                            if (runs->n5.empty()) {
                                std::string ignored;
                                runs->n5 = detail::scan_table(5, ex.n5, cfg.workers, ignored);
                            }
                            std::size_t checked = 0;
                            std::string missing;
                            for (const auto& r : runs->n5) {
                                if (!r.exact || r.minimum != 2 * r.n - 1 || r.minimum + 2 > r.p) continue;
                                ++checked;
                                const PrimeModulus p(r.p);
                                const auto ap = find_qr_ap(p, r.n);
                                if (!ap || sumset_mod_p(ap->members).size() != 2 * r.n - 1) {
                                    const bool witness_ap = is_ap_mod_p(ResidueSet::of(p, r.witness));
                                    missing += " p=" + std::to_string(r.p) + " (witness {" + join_residues(r.witness) +
                                               "} is " + (witness_ap ? "an AP through 0" : "not an AP") + ");";
                                }
                            }
                            d = std::to_string(checked) + " primes checked";
                            if (!missing.empty()) d += "; no progression of nonzero squares for" + missing;
                            return checked > 0 && missing.empty();
                        }});

    criteria.push_back({11, "scaling", "scaling invariance over Q and mod p", 5, [&](std::string& d) {
                            std::mt19937_64 rng(cfg.seed);
                            auto uni = [&](long lo, long hi) {
                                return std::uniform_int_distribution<long>(lo, hi)(rng);
                            };
                            auto rational = [&] { return Rational(Integer(uni(-1000, 1000)), Integer(uni(1, 120))); };
                            std::size_t bad = 0;
                            for (int i = 0; i < 1000; ++i) {
                                RationalSet a;
                                const long size = uni(1, 8);
                                while (static_cast<long>(a.size()) < size) a.insert(rational());
                                Rational t = rational();
                                while (t.sign() == 0) t = rational();
                                if (sumset(scale(a, t)).size() != sumset(a).size()) ++bad;
                            }
                            static constexpr std::uint64_t primes[] = {3,  5,  7,  11, 13, 17,  19,  23,
                                                                       29, 31, 37, 41, 43, 101, 149, 199};
                            for (int i = 0; i < 1000; ++i) {
                                const PrimeModulus p(primes[uni(0, static_cast<long>(std::size(primes)) - 1)]);
                                ResidueSet a(p);
                                const long size = uni(1, static_cast<long>(std::min<std::uint64_t>(p, 10)));
                                while (static_cast<long>(a.size()) < size) a.insert(static_cast<std::uint64_t>(uni(0, static_cast<long>(p.value()) - 1)));
                                const auto c = static_cast<std::uint64_t>(uni(1, static_cast<long>(p.value()) - 1));
                                if (sumset_mod_p(scale_mod_p(a, c * c % p)).size() != sumset_mod_p(a).size()) ++bad;
                            }
                            d = std::to_string(2000 - bad) + "/2000 pairs preserve |A+A| (seed " +
                                std::to_string(cfg.seed) + ")";
                            return bad == 0;
                        }});

    criteria.push_back({12, "constructions", "no 4-term progression of squares, step <= 200, base <= 200^2", 0,
                        [&](std::string& d) {
                            const auto found = search_gap_of_squares({4}, GapSearchBounds{200, 200 * 200}, 4);
                            d = std::to_string(found.size()) + " progressions found";
                            return found.empty();
                        }});

    std::vector<Outcome> outcomes;
    for (const auto& c : criteria) {
        if (!detail::selected(c, cfg.filter)) continue;
        Outcome o{c.id, c.group, c.title, false, {}, 0, c.limit_seconds};
        const auto start = std::chrono::steady_clock::now();
        try {
            o.passed = c.check(o.detail);
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail += std::string(" exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.limit_seconds > 0 && o.seconds > o.limit_seconds) {
            o.passed = false;
            o.detail += " [time limit exceeded]";
        }
        if (on_done) on_done(o);
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

}  // namespace sqsum::acceptance
