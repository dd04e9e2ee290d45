#pragma once

// Exhaustive census of distinct subword-complexity sequences a_k(n).
//
// Complexity sequences are invariant under alphabet permutation, so only
// canonical words are enumerated (first occurrences of letters appear in
// increasing order); that also makes a_k(n) = a_n(n) for k >= n fall out
// for free. The word space is sharded by canonical prefixes; shard
// results are merged by set union, so worker count cannot affect the
// census.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// Packed representation for short words: bits_per_letter * length <= 64.
// Equality with the general representation goes through unpack().
struct PackedWord {
    std::uint64_t bits = 0;
    int length = 0;
    int bits_per_letter = 1;
    int alphabet_size = 2;

    static int bits_needed(int k) {
        int b = 1;
        while ((1 << b) < k) ++b;
        return b;
    }

    static PackedWord pack(const Word& w) {
        int b = bits_needed(w.alphabet_size());
        if (static_cast<int>(w.size()) * b > 64)
            throw capacity_error("word does not fit the packed representation");
        PackedWord p{0, static_cast<int>(w.size()), b, w.alphabet_size()};
        for (std::size_t i = 0; i < w.size(); ++i)
            p.bits |= static_cast<std::uint64_t>(w[i]) << (i * b);
        return p;
    }

    Word unpack() const {
        std::vector<Letter> ls(length);
        std::uint64_t mask = (bits_per_letter == 64) ? ~0ull : ((1ull << bits_per_letter) - 1);
        for (int i = 0; i < length; ++i)
            ls[i] = static_cast<Letter>((bits >> (i * bits_per_letter)) & mask);
        return Word(std::move(ls), alphabet_size);
    }

    friend bool operator==(const PackedWord& p, const Word& w) { return p.unpack() == w; }
};

struct SequenceCensus {
    int k = 2;
    int n = 1;
    std::uint64_t count = 0;
    std::optional<std::vector<std::vector<int>>> sequences;
    double elapsed_seconds = 0.0;
};

namespace census_detail {

// Profile of the word in letters[0..n), windows packed bitwise. Stops as
// soon as all windows of some length are distinct: from there on every
// longer window is distinct too, so p(m) = n - m + 1.
inline void packed_profile(const Letter* word, int n, int bits, std::uint8_t* out) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) code |= static_cast<std::uint64_t>(word[i]) << (i * bits);
    std::uint64_t buf[64];
    for (int m = 1; m <= n; ++m) {
        const int windows = n - m + 1;
        const std::uint64_t mask =
            (m * bits == 64) ? ~0ull : ((1ull << (m * bits)) - 1);
        for (int i = 0; i < windows; ++i) buf[i] = (code >> (i * bits)) & mask;
        std::sort(buf, buf + windows);
        int distinct = 1;
        for (int i = 1; i < windows; ++i) distinct += buf[i] != buf[i - 1];
        out[m - 1] = static_cast<std::uint8_t>(distinct);
        if (distinct == windows) {
            for (int j = m + 1; j <= n; ++j) out[j - 1] = static_cast<std::uint8_t>(n - j + 1);
            return;
        }
    }
}

// Fallback for words too long to pack: per-length index sort with
// block comparison.
inline void generic_profile(const Letter* word, int n, std::uint8_t* out) {
    std::vector<int> idx(n);
    for (int m = 1; m <= n; ++m) {
        const int windows = n - m + 1;
        idx.resize(windows);
        for (int i = 0; i < windows; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return std::lexicographical_compare(word + a, word + a + m, word + b, word + b + m);
        });
        int distinct = 1;
        for (int i = 1; i < windows; ++i)
            distinct += !std::equal(word + idx[i], word + idx[i] + m, word + idx[i - 1]);
        out[m - 1] = static_cast<std::uint8_t>(distinct);
        if (distinct == windows) {
            for (int j = m + 1; j <= n; ++j) out[j - 1] = static_cast<std::uint8_t>(n - j + 1);
            return;
        }
    }
}

// Extends a canonical prefix over all canonical completions, feeding
// every finished word's complexity sequence into `sink`.
inline void enumerate_from(Letter* word, int pos, int n, int max_used, int k,
                           std::unordered_set<std::string>& sink, bool packed, int bits) {
    if (pos == n) {
        std::uint8_t seq[64];
        if (packed)
            packed_profile(word, n, bits, seq);
        else
            generic_profile(word, n, seq);
        sink.emplace(reinterpret_cast<const char*>(seq), n);
        return;
    }
    int limit = std::min(max_used + 1, k - 1);
    for (int c = 0; c <= limit; ++c) {
        word[pos] = static_cast<Letter>(c);
        enumerate_from(word, pos + 1, n, std::max(max_used, c), k, sink, packed, bits);
    }
}

// Number of canonical words: dp over (length, letters used so far).
inline long double canonical_word_count(int k, int n) {
    std::vector<long double> dp(k + 1, 0.0L);
    dp[1] = 1.0L;  // first letter is forced to 0
    for (int i = 1; i < n; ++i) {
        std::vector<long double> nxt(k + 1, 0.0L);
        for (int j = 1; j <= k; ++j) {
            if (dp[j] == 0.0L) continue;
            nxt[j] += dp[j] * j;
            if (j + 1 <= k) nxt[j + 1] += dp[j];
        }
        dp = std::move(nxt);
    }
    long double total = 0.0L;
    for (int j = 1; j <= k; ++j) total += dp[j];
    return total;
}

}  // namespace census_detail

constexpr std::uint64_t kDefaultCensusBudget = 10'000'000'000ull;

// Census of distinct complexity sequences over A_k^n.
inline SequenceCensus count_sequences(int k, int n, bool retain, int jobs = 0,
                                      std::uint64_t budget = kDefaultCensusBudget) {
    if (k < 2) throw std::domain_error("alphabet size must be >= 2");
    if (n < 1 || n > 64) throw std::domain_error("word length must be in [1, 64]");
    // letters beyond the word length can never be used by a canonical word
    const int keff = std::min(k, n);

    long double words = census_detail::canonical_word_count(keff, n);
    long double ops = words * static_cast<long double>(n) * n;
    if (ops > static_cast<long double>(budget))
        throw capacity_error("census budget exceeded: estimated " +
                             std::to_string(static_cast<double>(ops)) + " window ops");

    const int bits = PackedWord::bits_needed(keff);
    const bool packed = n * bits <= 64;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    auto t0 = std::chrono::steady_clock::now();

    // shard by canonical prefixes
    const int prefix_len = std::max(1, std::min(n - 1, 6));
    std::vector<std::vector<Letter>> shards;
    {
        std::vector<Letter> prefix(prefix_len);
        auto rec = [&](auto&& self, int pos, int max_used) -> void {
            if (pos == prefix_len) {
                shards.push_back(prefix);
                return;
            }
            int limit = std::min(max_used + 1, keff - 1);
            for (int c = 0; c <= limit; ++c) {
                prefix[pos] = static_cast<Letter>(c);
                self(self, pos + 1, std::max(max_used, c));
            }
        };
        rec(rec, 0, -1);
    }

    std::vector<std::unordered_set<std::string>> results(jobs);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&](int id) {
        Letter word[64];
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= shards.size()) break;
            const auto& prefix = shards[i];
            int max_used = 0;
            for (std::size_t p = 0; p < prefix.size(); ++p) {
                word[p] = prefix[p];
                max_used = std::max<int>(max_used, prefix[p]);
            }
            census_detail::enumerate_from(word, static_cast<int>(prefix.size()), n, max_used,
                                          keff, results[id], packed, bits);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& t : pool) t.join();
    }

    std::unordered_set<std::string> all;
    for (auto& r : results) all.merge(r);

    SequenceCensus census;
    census.k = k;
    census.n = n;
    census.count = all.size();
    if (retain) {
        std::vector<std::string> encoded(all.begin(), all.end());
        std::sort(encoded.begin(), encoded.end());
        std::vector<std::vector<int>> seqs;
        seqs.reserve(encoded.size());
        for (const auto& e : encoded) {
            std::vector<int> s(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) s[i] = static_cast<std::uint8_t>(e[i]);
            seqs.push_back(std::move(s));
        }
        census.sequences = std::move(seqs);
    }
    census.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return census;
}

inline std::vector<std::vector<int>> list_sequences(int k, int n, int jobs = 0,
                                                    std::uint64_t budget = kDefaultCensusBudget) {
    return *count_sequences(k, n, true, jobs, budget).sequences;
}

// rows n = 1..n_max, columns a_{k+1}(n) - a_k(n) for k = k_lo..k_hi-1
inline std::vector<std::vector<long long>> difference_table(int k_lo, int k_hi, int n_max,
                                                            int jobs = 0,
                                                            std::uint64_t budget = kDefaultCensusBudget) {
    if (k_lo < 2 || k_hi <= k_lo) throw std::domain_error("need 2 <= k_lo < k_hi");
    std::vector<std::vector<std::uint64_t>> a(k_hi - k_lo + 1, std::vector<std::uint64_t>(n_max + 1, 0));
    for (int k = k_lo; k <= k_hi; ++k)
        for (int n = 1; n <= n_max; ++n)
            a[k - k_lo][n] = count_sequences(k, n, false, jobs, budget).count;
    std::vector<std::vector<long long>> out(n_max, std::vector<long long>(k_hi - k_lo));
    for (int n = 1; n <= n_max; ++n)
        for (int k = k_lo; k < k_hi; ++k)
            out[n - 1][k - k_lo] = static_cast<long long>(a[k - k_lo + 1][n]) -
                                   static_cast<long long>(a[k - k_lo][n]);
    return out;
}

struct ConjectureReport {
    int n_max = 0;
    int k_max = 0;
    // ratios[k-2][n-1] = a_k(n) / 2^{n/2}
    std::vector<std::vector<double>> ratios;
    // first n where a_{k+2}(n) - a_{k+1}(n) != a_{k+1}(n-1) - a_k(n-1),
    // 0 if the equality held through n_max; indexed by k - 2
    std::vector<int> first_difference_failure;
};

// Numerical diagnostics for the growth and difference-shift conjectures,
// computed from censuses a_2..a_{k_max} up to n_max.
inline ConjectureReport conjecture_report(int n_max, int k_max = 4, int jobs = 0,
                                          std::uint64_t budget = kDefaultCensusBudget) {
    if (n_max < 2 || k_max < 4) throw std::domain_error("need n_max >= 2 and k_max >= 4");
    std::vector<std::vector<std::uint64_t>> a(k_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));
    for (int k = 2; k <= k_max; ++k)
        for (int n = 1; n <= n_max; ++n)
            a[k][n] = count_sequences(k, n, false, jobs, budget).count;

    ConjectureReport rep;
    rep.n_max = n_max;
    rep.k_max = k_max;
    for (int k = 2; k <= k_max; ++k) {
        std::vector<double> row;
        for (int n = 1; n <= n_max; ++n)
            row.push_back(static_cast<double>(a[k][n]) / std::pow(2.0, n / 2.0));
        rep.ratios.push_back(std::move(row));
    }
    for (int k = 2; k + 2 <= k_max; ++k) {
        int failure = 0;
        for (int n = 2; n <= n_max; ++n) {
            long long lhs = static_cast<long long>(a[k + 2][n]) - static_cast<long long>(a[k + 1][n]);
            long long rhs = static_cast<long long>(a[k + 1][n - 1]) - static_cast<long long>(a[k][n - 1]);
            if (lhs != rhs) { failure = n; break; }
        }
        rep.first_difference_failure.push_back(failure);
    }
    return rep;
}

}  // namespace wordlab
