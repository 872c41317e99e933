#include <random>

#include <gtest/gtest.h>

#include "sqsum/oracle.hpp"
#include "sqsum/zp.hpp"

using namespace sqsum;

namespace {
using Members = std::vector<std::uint64_t>;

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// A (|A| < p) is an arithmetic progression iff some shift d != 0 overlaps
// it in exactly |A| - 1 places.
bool ap_by_shift_overlap(const ResidueSet& a) {
    const auto m = a.members();
    const std::uint64_t p = a.modulus();
    if (m.size() <= 2 || m.size() == p) return true;
    for (std::uint64_t d = 1; d < p; ++d) {
        std::size_t overlap = 0;
        for (auto x : m) overlap += a.contains((x + d) % p);
        if (overlap == m.size() - 1) return true;
    }
    return false;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= hi; ++q)
        if (trial_division_prime(q)) out.push_back(q);
    return out;
}
}  // namespace

TEST(Primality, AgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(Primality, LargeAndAdversarial) {
    EXPECT_TRUE(is_prime(2305843009213693951ULL));   // 2^61 - 1
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest prime below 2^64
    EXPECT_FALSE(is_prime(561));                     // Carmichael
    EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
}

TEST(PrimeModulusTest, RejectsComposites) {
    EXPECT_THROW(PrimeModulus(1), std::invalid_argument);
    EXPECT_THROW(PrimeModulus(15), std::invalid_argument);
    EXPECT_EQ(PrimeModulus(13).square_count(), 7u);
    EXPECT_EQ(PrimeModulus(2).square_count(), 2u);
}

TEST(SquaresModP, Examples) {
    EXPECT_EQ(squares_mod_p(PrimeModulus(3)).members(), (Members{0, 1}));
    EXPECT_EQ(squares_mod_p(PrimeModulus(7)).members(), (Members{0, 1, 2, 4}));
    EXPECT_EQ(squares_mod_p(PrimeModulus(17)).members(), (Members{0, 1, 2, 4, 8, 9, 13, 15, 16}));
    EXPECT_EQ(squares_mod_p(PrimeModulus(2)).members(), (Members{0, 1}));
    for (auto q : primes_upto(400)) ASSERT_EQ(squares_mod_p(PrimeModulus(q)).size(), PrimeModulus(q).square_count());
}

TEST(CauchyDavenport, Bound) {
    EXPECT_EQ(cauchy_davenport_bound(5, PrimeModulus(11)), 9u);
    EXPECT_EQ(cauchy_davenport_bound(6, PrimeModulus(11)), 11u);
    EXPECT_EQ(cauchy_davenport_bound(1, PrimeModulus(2)), 1u);
    EXPECT_THROW(cauchy_davenport_bound(7, PrimeModulus(11)), std::invalid_argument);
    EXPECT_THROW(cauchy_davenport_bound(0, PrimeModulus(11)), std::invalid_argument);
}

TEST(IsApModP, Examples) {
    EXPECT_TRUE(is_ap_mod_p(ResidueSet::of(PrimeModulus(7), {0, 1, 2})));
    EXPECT_FALSE(is_ap_mod_p(ResidueSet::of(PrimeModulus(7), {1, 2, 4})));
    EXPECT_FALSE(is_ap_mod_p(ResidueSet::of(PrimeModulus(13), {1, 4, 0})));
    EXPECT_TRUE(is_ap_mod_p(ResidueSet::of(PrimeModulus(13), {12, 1, 3})));  // 12, 1, 3 step 2
    EXPECT_TRUE(is_ap_mod_p(ResidueSet::of(PrimeModulus(5), {0, 1, 2, 3, 4})));
    EXPECT_THROW(is_ap_mod_p(ResidueSet(PrimeModulus(5))), std::invalid_argument);
}

TEST(IsApModP, AgreesWithShiftOverlapCharacterisation) {
    std::mt19937_64 rng(23);
    const auto primes = primes_upto(60);
    for (int i = 0; i < 3000; ++i) {
        const PrimeModulus p(primes[rng() % primes.size()]);
        ResidueSet a(p);
        const std::size_t size = 1 + rng() % std::min<std::uint64_t>(p, 6);
        // bias toward progressions half of the time
        if (i % 2) {
            const std::uint64_t s = rng() % p, d = 1 + rng() % (p - 1);
            for (std::size_t k = 0; k < size; ++k) a.insert((s + k * d) % p);
        } else {
            while (a.size() < size) a.insert(rng() % p);
        }
        ASSERT_EQ(is_ap_mod_p(a), ap_by_shift_overlap(a)) << p.value();
    }
}

TEST(FindQrAp, Examples) {
    const auto at41 = find_qr_ap(PrimeModulus(41), 5);
    ASSERT_TRUE(at41);
    EXPECT_EQ(at41->start, 1u);
    EXPECT_EQ(at41->step, 15u);
    EXPECT_EQ(at41->members.members(), (Members{1, 5, 16, 20, 31}));
    EXPECT_TRUE(at41->members.is_subset_of(squares_mod_p(PrimeModulus(41))));

    EXPECT_FALSE(find_qr_ap(PrimeModulus(13), 5));
    EXPECT_FALSE(find_qr_ap(PrimeModulus(7), 3));
    EXPECT_THROW(find_qr_ap(PrimeModulus(7), 2), std::invalid_argument);

    const auto at43 = find_qr_ap(PrimeModulus(43), 5);
    ASSERT_TRUE(at43);
    EXPECT_EQ(at43->step, 5u);
}

TEST(FindQrAp, PresenceForcesCauchyDavenportMinimum) {
    for (auto q : primes_upto(90)) {
        const PrimeModulus p(q);
        for (std::uint64_t n = 3; n <= 5; ++n) {
            if (n > p.square_count() || 2 * n - 1 > q) continue;
            const auto ap = find_qr_ap(p, n);
            if (!ap) continue;
            EXPECT_FALSE(ap->members.contains(0));
            EXPECT_EQ(sumset_mod_p(ap->members).size(), 2 * n - 1);
            EXPECT_EQ(min_sumset(n, p).minimum, 2 * n - 1) << n << " " << q;
        }
    }
}

TEST(MinSumset, Examples) {
    EXPECT_EQ(min_sumset(5, PrimeModulus(13)).minimum, 11u);
    EXPECT_EQ(min_sumset(5, PrimeModulus(17)).minimum, 9u);
    EXPECT_EQ(min_sumset(6, PrimeModulus(29)).minimum, 14u);

    const auto r = min_sumset(3, PrimeModulus(7));
    EXPECT_EQ(r.minimum, 5u);
    EXPECT_EQ(r.witness, (Members{0, 1, 2}));
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(r.early_exit);

    EXPECT_THROW(min_sumset(5, PrimeModulus(7)), std::invalid_argument);
    EXPECT_THROW(min_sumset(0, PrimeModulus(7)), std::invalid_argument);
}

TEST(MinSumset, EdgeSizes) {
    EXPECT_EQ(min_sumset(1, PrimeModulus(2)).minimum, 1u);
    EXPECT_EQ(min_sumset(2, PrimeModulus(2)).minimum, 2u);
    EXPECT_EQ(min_sumset(1, PrimeModulus(11)).witness, (Members{0}));
    // all six squares mod 11
    const auto full = min_sumset(6, PrimeModulus(11));
    EXPECT_EQ(full.minimum, 11u);
    EXPECT_EQ(full.witness, squares_mod_p(PrimeModulus(11)).members());
}

TEST(MinSumset, MatchesNaiveEnumeration) {
    for (auto q : primes_upto(31)) {
        const PrimeModulus p(q);
        for (std::uint64_t n = 1; n <= 5 && n <= p.square_count(); ++n) {
            const auto naive = oracle::naive_min_sumset(n, q);
            for (bool reduce : {false, true}) {
                const auto r = min_sumset(n, p, SearchOptions{reduce, std::nullopt});
                ASSERT_TRUE(r.exact);
                ASSERT_EQ(r.minimum, naive.minimum) << "n=" << n << " p=" << q;
                ASSERT_EQ(r.witness, naive.witness) << "n=" << n << " p=" << q;
            }
        }
    }
}

TEST(MinSumset, SymmetryReductionPreservesResultsAndPrunes) {
    for (std::uint64_t q : {37, 41, 53, 59}) {
        const PrimeModulus p(q);
        for (std::uint64_t n : {4, 5, 6}) {
            const auto plain = min_sumset(n, p, SearchOptions{false, std::nullopt});
            const auto reduced = min_sumset(n, p, SearchOptions{true, std::nullopt});
            EXPECT_EQ(plain.minimum, reduced.minimum);
            EXPECT_EQ(plain.witness, reduced.witness);
            EXPECT_LE(reduced.nodes_explored, plain.nodes_explored);
        }
    }
}

TEST(MinSumset, WitnessInvariants) {
    for (auto q : primes_upto(80)) {
        const PrimeModulus p(q);
        for (std::uint64_t n = 1; n <= 6 && n <= p.square_count(); ++n) {
            const auto r = min_sumset(n, p);
            const auto w = ResidueSet::of(p, r.witness);
            ASSERT_EQ(w.size(), n);
            ASSERT_TRUE(w.is_subset_of(squares_mod_p(p)));
            ASSERT_EQ(sumset_mod_p(w).size(), r.minimum);
            ASSERT_GE(r.minimum, cauchy_davenport_bound(n, p));
            // Vosper: equality in Cauchy-Davenport away from the top forces a progression
            if (n >= 3 && r.minimum == 2 * n - 1 && r.minimum + 2 <= q) {
                ASSERT_TRUE(is_ap_mod_p(w)) << n << " " << q;
            }
        }
    }
}

TEST(MinSumset, NodeBudget) {
    const auto r = min_sumset(6, PrimeModulus(139), SearchOptions{true, 50});
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.nodes_explored, 50u);
    const auto full = min_sumset(6, PrimeModulus(139));
    EXPECT_TRUE(full.exact);
    EXPECT_EQ(full.minimum, 12u);
}

TEST(ScaleModP, SquareMultipliersPreserveSumsetSize) {
    std::mt19937_64 rng(31);
    const auto primes = primes_upto(200);
    for (int i = 0; i < 1000; ++i) {
        const PrimeModulus p(primes[1 + rng() % (primes.size() - 1)]);
        ResidueSet a(p);
        const std::size_t size = 1 + rng() % std::min<std::uint64_t>(p, 9);
        while (a.size() < size) a.insert(rng() % p);
        const std::uint64_t c = 1 + rng() % (p - 1);
        const auto scaled = scale_mod_p(a, c * c % p);
        ASSERT_EQ(sumset_mod_p(scaled).size(), sumset_mod_p(a).size());
        // square multipliers map squares to squares
        const auto sq = squares_mod_p(p);
        ASSERT_TRUE(scale_mod_p(sq, c * c % p) == sq);
    }
    EXPECT_THROW(scale_mod_p(ResidueSet::of(PrimeModulus(7), {1}), 7), std::invalid_argument);
}

TEST(TableScan, FifthSizeThrough41) {
    const auto rows = table_scan(5, 11, 41);
    std::vector<std::uint64_t> ps, minima;
    for (const auto& r : rows) {
        ASSERT_TRUE(r.result);
        ps.push_back(r.p);
        minima.push_back(r.result->minimum);
    }
    EXPECT_EQ(ps, (Members{11, 13, 17, 19, 23, 29, 31, 37, 41}));
    EXPECT_EQ(minima, (Members{10, 11, 9, 10, 9, 10, 10, 10, 9}));
}

TEST(TableScan, SixthSizeThrough29) {
    std::vector<std::uint64_t> minima;
    for (const auto& r : table_scan(6, 11, 29)) minima.push_back(r.result->minimum);
    EXPECT_EQ(minima, (Members{11, 13, 12, 13, 12, 14}));
}

TEST(TableScan, InfeasibleRowsDoNotAbort) {
    const auto rows = table_scan(3, 3, 7);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_FALSE(rows[0].result);
    EXPECT_FALSE(rows[0].error.empty());
    EXPECT_EQ(rows[1].result->minimum, 5u);
    EXPECT_EQ(rows[2].result->minimum, 5u);
    EXPECT_THROW(table_scan(3, 10, 5), std::invalid_argument);
}

TEST(TableScan, IndependentOfWorkerCount) {
    const auto one = table_scan(5, 2, 97, {}, 1);
    const auto many = table_scan(5, 2, 97, {}, 6);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        ASSERT_EQ(one[i].p, many[i].p);
        ASSERT_EQ(one[i].error, many[i].error);
        ASSERT_EQ(one[i].result.has_value(), many[i].result.has_value());
        if (!one[i].result) continue;
        EXPECT_EQ(one[i].result->minimum, many[i].result->minimum);
        EXPECT_EQ(one[i].result->witness, many[i].result->witness);
        EXPECT_EQ(one[i].result->nodes_explored, many[i].result->nodes_explored);
    }
}
