#pragma once

// Minimal sumsets of squares in Z/pZ.
//
// min_sumset computes N_n(Z_p) = min |A+A| over n-element subsets A of the
// squares mod p (0 included) by depth-first search in lexicographic order
// with an incremental bit-vector sumset. A branch is cut once its partial
// sumset is no smaller than the best complete one (sumsets only grow), and
// the search stops as soon as the Cauchy-Davenport bound min(2n-1, p) is met.
//
// Multiplying by a nonzero square permutes the squares and preserves |A+A|,
// so with symmetry reduction the search only visits sets whose smallest
// nonzero element is 1. The lexicographically least optimal set always has
// that form, which keeps witnesses identical with and without reduction.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sqsum {

namespace detail {
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}
}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases suffice below 2^64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

class PrimeModulus {
public:
    /// Dense residue sets are bit vectors of length p; cap their size.
    static constexpr std::uint64_t kMaxDense = std::uint64_t{1} << 28;

    explicit PrimeModulus(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (p > kMaxDense) throw std::invalid_argument("modulus too large for dense residue sets");
    }
    std::uint64_t value() const { return p_; }
    operator std::uint64_t() const { return p_; }  // NOLINT

    /// |S(Z_p)|, the number of squares including 0.
    std::uint64_t square_count() const { return p_ == 2 ? 2 : (p_ + 1) / 2; }

private:
    std::uint64_t p_;
};

/// Subset of {0, ..., p-1} stored as a bit vector.
class ResidueSet {
public:
    explicit ResidueSet(const PrimeModulus& p) : p_(p.value()), words_((p_ + 63) / 64, 0) {}

    template <typename Range>
    static ResidueSet of(const PrimeModulus& p, const Range& members) {
        ResidueSet s(p);
        for (auto m : members) s.insert(static_cast<std::uint64_t>(m));
        return s;
    }
    static ResidueSet of(const PrimeModulus& p, std::initializer_list<std::uint64_t> members) {
        return of<std::initializer_list<std::uint64_t>>(p, members);
    }

    std::uint64_t modulus() const { return p_; }

    void insert(std::uint64_t r) {
        if (r >= p_) throw std::out_of_range("residue " + std::to_string(r) + " >= p");
        words_[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
    bool contains(std::uint64_t r) const {
        return r < p_ && ((words_[r >> 6] >> (r & 63)) & 1);
    }
    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const { return size() == 0; }

    /// Ascending.
    std::vector<std::uint64_t> members() const {
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::uint64_t w = words_[i]; w; w &= w - 1)
                out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
        }
        return out;
    }

    bool is_subset_of(const ResidueSet& o) const {
        if (o.p_ != p_) return false;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> words_;
};

inline ResidueSet sumset_mod_p(const ResidueSet& a) {
    const PrimeModulus p(a.modulus());
    const auto m = a.members();
    ResidueSet out(p);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j) out.insert((m[i] + m[j]) % p);
    return out;
}

inline ResidueSet scale_mod_p(const ResidueSet& a, std::uint64_t c) {
    const PrimeModulus p(a.modulus());
    if (c % p == 0) throw std::invalid_argument("scale_mod_p: zero factor");
    ResidueSet out(p);
    for (auto x : a.members()) out.insert(detail::mulmod(x, c, p));
    return out;
}

inline ResidueSet squares_mod_p(const PrimeModulus& p) {
    ResidueSet s(p);
    for (std::uint64_t a = 0; a <= p / 2; ++a) s.insert(detail::mulmod(a, a, p));
    return s;
}

/// min(2n - 1, p).
inline std::uint64_t cauchy_davenport_bound(std::uint64_t n, const PrimeModulus& p) {
    if (n < 1 || n > p.square_count())
        throw std::invalid_argument("n = " + std::to_string(n) + " outside [1, |S(Z_" +
                                    std::to_string(p.value()) + ")|]");
    return std::min<std::uint64_t>(2 * n - 1, p);
}

/// True iff A = {s, s+d, ..., s+(k-1)d} mod p for some s and d != 0.
inline bool is_ap_mod_p(const ResidueSet& a) {
    const auto m = a.members();
    const std::uint64_t p = a.modulus();
    if (m.empty()) throw std::invalid_argument("is_ap_mod_p: empty set");
    if (m.size() <= 2) return true;
    for (auto s : m) {
        for (std::uint64_t d = 1; d < p; ++d) {
            bool ok = true;
            std::uint64_t t = s;
            for (std::size_t i = 0; i < m.size() && ok; ++i) {
                ok = a.contains(t);
                t = (t + d) % p;
            }
            if (ok) return true;
        }
    }
    return false;
}

struct QrProgression {
    std::uint64_t start = 0;
    std::uint64_t step = 0;
    ResidueSet members;
};

/// Smallest (start, step) such that start, start+step, ..., start+(n-1)step
/// are all nonzero squares mod p.
inline std::optional<QrProgression> find_qr_ap(const PrimeModulus& p, std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("find_qr_ap: n must be >= 3");
    ResidueSet residues = squares_mod_p(p);
    if (n > p.square_count() - 1) return std::nullopt;
    for (std::uint64_t s = 1; s < p; ++s) {
        if (!residues.contains(s)) continue;
        for (std::uint64_t d = 1; d < p; ++d) {
            std::uint64_t t = s;
            std::uint64_t k = 0;
            while (k < n && t != 0 && residues.contains(t)) {
                ++k;
                t = (t + d) % p;
            }
            if (k == n) {
                ResidueSet members(p);
                for (std::uint64_t i = 0; i < n; ++i) members.insert((s + i * d) % p);
                return QrProgression{s, d, std::move(members)};
            }
        }
    }
    return std::nullopt;
}

struct SearchOptions {
    bool symmetry_reduction = true;
    std::optional<std::uint64_t> node_budget;  // nodes, absent = unlimited
};

struct SearchResult {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t minimum = 0;  // best found; exact only when `exact`
    std::vector<std::uint64_t> witness;  // ascending, empty if nothing complete was reached
    std::uint64_t nodes_explored = 0;
    bool early_exit = false;  // stopped at the Cauchy-Davenport bound
    bool exact = false;       // false iff the node budget ran out
};

namespace detail {

class SumsetSearch {
public:
    SumsetSearch(std::uint64_t n, const PrimeModulus& p, const SearchOptions& opt)
        : n_(n),
          p_(p),
          opt_(opt),
          words_((p.value() + 63) / 64),
          candidates_(squares_mod_p(p).members()),
          target_(cauchy_davenport_bound(n, p)),
          chosen_(n),
          sums_((n + 1) * words_, 0),
          counts_(n + 1, 0) {}

    SearchResult run() {
        best_ = std::numeric_limits<std::uint64_t>::max();
        dfs(0, 0);
        SearchResult r;
        r.n = n_;
        r.p = p_;
        r.minimum = best_witness_.empty() ? 0 : best_;
        r.witness = best_witness_;
        r.nodes_explored = nodes_;
        r.early_exit = done_;
        r.exact = !out_of_budget_;
        return r;
    }

private:
    // Candidate indices allowed at a given depth under symmetry reduction.
    bool admissible(std::size_t depth, std::size_t idx) const {
        if (!opt_.symmetry_reduction) return true;
        const auto v = candidates_[idx];
        if (depth == 0) return v <= 1;
        if (depth == 1 && chosen_[0] == 0) return v == 1;
        return true;
    }

    void dfs(std::size_t depth, std::size_t from) {
        if (depth == n_) {
            best_ = counts_[depth];
            best_witness_.assign(chosen_.begin(), chosen_.end());
            if (best_ <= target_) done_ = true;
            return;
        }
        const std::size_t last = candidates_.size() - (n_ - depth);
        for (std::size_t idx = from; idx <= last; ++idx) {
            if (done_ || out_of_budget_) return;
            if (!admissible(depth, idx)) {
                if (opt_.symmetry_reduction && depth <= 1) {
                    if (candidates_[idx] > 1) return;
                }
                continue;
            }
            if (opt_.node_budget && nodes_ >= *opt_.node_budget) {
                out_of_budget_ = true;
                return;
            }
            ++nodes_;
            const std::uint64_t x = candidates_[idx];
            chosen_[depth] = x;
            if (extend(depth, x) < best_) dfs(depth + 1, idx + 1);
        }
    }

    // Writes the sumset of chosen_[0..depth] into level depth+1.
    std::uint64_t extend(std::size_t depth, std::uint64_t x) {
        std::uint64_t* next = &sums_[(depth + 1) * words_];
        const std::uint64_t* prev = &sums_[depth * words_];
        std::copy(prev, prev + words_, next);
        std::uint64_t count = counts_[depth];
        for (std::size_t i = 0; i <= depth; ++i) {
            std::uint64_t s = chosen_[i] + x;
            if (s >= p_) s -= p_;
            const std::uint64_t bit = std::uint64_t{1} << (s & 63);
            if (!(next[s >> 6] & bit)) {
                next[s >> 6] |= bit;
                ++count;
            }
        }
        counts_[depth + 1] = count;
        return count;
    }

    std::uint64_t n_;
    std::uint64_t p_;
    SearchOptions opt_;
    std::size_t words_;
    std::vector<std::uint64_t> candidates_;
    std::uint64_t target_;

    std::vector<std::uint64_t> chosen_;
    std::vector<std::uint64_t> sums_;    // (n+1) levels of bit vectors
    std::vector<std::uint64_t> counts_;  // popcount per level

    std::uint64_t best_ = 0;
    std::vector<std::uint64_t> best_witness_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    bool out_of_budget_ = false;
};

}  // namespace detail

/// Exact N_n(Z_p) with the lexicographically least optimal witness, unless
/// the node budget runs out (then `exact` is false).
inline SearchResult min_sumset(std::uint64_t n, const PrimeModulus& p, const SearchOptions& opt = {}) {
    cauchy_davenport_bound(n, p);  // validates n
    return detail::SumsetSearch(n, p, opt).run();
}

struct TableRow {
    std::uint64_t p = 0;
    std::optional<SearchResult> result;
    std::string error;  // set iff !result
};

/// min_sumset for every prime in [p_min, p_max], ascending. Per-prime
/// failures (e.g. n too large for small p) become error rows. Primes are
/// distributed over `workers` threads; output does not depend on the count.
inline std::vector<TableRow> table_scan(std::uint64_t n, std::uint64_t p_min, std::uint64_t p_max,
                                        const SearchOptions& opt = {}, unsigned workers = 1) {
    if (p_min > p_max) throw std::invalid_argument("table_scan: empty prime range");
    if (workers < 1) throw std::invalid_argument("table_scan: workers must be >= 1");
    std::vector<TableRow> rows;
    for (std::uint64_t q = p_min; q <= p_max; ++q)
        if (is_prime(q)) rows.push_back(TableRow{q, std::nullopt, {}});

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                rows[i].result = min_sumset(n, PrimeModulus(rows[i].p), opt);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(workers, std::max<std::size_t>(rows.size(), 1));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    return rows;
}

}  // namespace sqsum
