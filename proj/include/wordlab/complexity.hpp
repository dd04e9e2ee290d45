#pragma once

// Complexity profiles p_w, valence statistics s(n,i), the parameters
// R_w / K_w, and the profile-shape theorems as checkable predicates.
//
// Two engines compute distinct-subword counts: a naive per-length
// hash-set scan (the oracle) and a suffix automaton that derives the
// whole profile, R_w and K_w in near-linear time.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

struct ComplexityProfile {
    int word_length = 0;
    std::vector<long long> sequence;  // sequence[n-1] = p_w(n)
    int r_param = 0;
    int k_param = 0;
    long long peak_value = 0;
    int peak_index = 0;

    long long p(int n) const {
        if (n == 0) return 1;  // epsilon convention
        return sequence.at(static_cast<std::size_t>(n) - 1);
    }
};

// s[n][i] = number of distinct length-n subwords of valence i, 0 <= n <= N.
struct ValenceTable {
    int word_length = 0;
    int alphabet_size = 0;
    std::vector<std::vector<long long>> s;
};

// --- suffix automaton -------------------------------------------------

class SuffixAutomaton {
public:
    SuffixAutomaton(std::span<const Letter> text, int alphabet_size)
        : k_(alphabet_size), n_(static_cast<int>(text.size())) {
        reserve(2 * text.size() + 4);
        last_ = new_state(0, -1, false);
        for (Letter c : text) extend(c);
        compute_counts();
    }

    // counts[m-1] = number of distinct substrings of length m.
    std::vector<long long> distinct_counts() const {
        std::vector<long long> diff(n_ + 2, 0);
        for (int s = 1; s < size(); ++s) {
            diff[len_[link_[s]] + 1] += 1;
            diff[len_[s] + 1] -= 1;
        }
        std::vector<long long> counts(n_);
        long long run = 0;
        for (int m = 1; m <= n_; ++m) {
            run += diff[m];
            counts[m - 1] = run;
        }
        return counts;
    }

    // Length of the longest subword with valence >= 2; 0 when none exists.
    // All substrings of a state share their right-extension set, which is
    // exactly the state's out-transitions.
    int longest_special_length() const {
        int best = 0;
        for (int s = 1; s < size(); ++s) {
            int deg = 0;
            for (int c = 0; c < k_; ++c)
                if (next_[static_cast<std::size_t>(s) * k_ + c] >= 0) ++deg;
            if (deg >= 2) best = std::max(best, len_[s]);
        }
        return best;
    }

    // K_w: the suffixes of length (len(link(q)), len(q)] live in state q
    // with occurrence count cnt(q); walk the suffix chain from the
    // whole-word state while the count stays 1.
    int min_unique_suffix_length() const {
        int q = last_;
        while (link_[q] > 0 && cnt_[link_[q]] == 1) q = link_[q];
        return len_[link_[q]] + 1;
    }

private:
    int size() const { return static_cast<int>(len_.size()); }

    void reserve(std::size_t states) {
        len_.reserve(states);
        link_.reserve(states);
        cnt_.reserve(states);
        next_.reserve(states * k_);
    }

    int new_state(int len, int link, bool primary) {
        len_.push_back(len);
        link_.push_back(link);
        cnt_.push_back(primary ? 1 : 0);
        next_.insert(next_.end(), k_, -1);
        return static_cast<int>(len_.size()) - 1;
    }

    int32_t& tr(int s, int c) { return next_[static_cast<std::size_t>(s) * k_ + c]; }

    void extend(Letter c) {
        int cur = new_state(len_[last_] + 1, -1, true);
        int p = last_;
        while (p >= 0 && tr(p, c) < 0) {
            tr(p, c) = cur;
            p = link_[p];
        }
        if (p < 0) {
            link_[cur] = 0;
        } else {
            int q = tr(p, c);
            if (len_[p] + 1 == len_[q]) {
                link_[cur] = q;
            } else {
                int clone = new_state(len_[p] + 1, link_[q], false);
                for (int a = 0; a < k_; ++a) tr(clone, a) = tr(q, a);
                while (p >= 0 && tr(p, c) == q) {
                    tr(p, c) = clone;
                    p = link_[p];
                }
                link_[q] = clone;
                link_[cur] = clone;
            }
        }
        last_ = cur;
    }

    void compute_counts() {
        // counting sort by len, then propagate occurrence counts up the links
        std::vector<int> bucket(n_ + 2, 0);
        for (int s = 0; s < size(); ++s) bucket[len_[s]]++;
        for (int m = 1; m <= n_ + 1; ++m) bucket[m] += bucket[m - 1];
        std::vector<int> order(size());
        for (int s = size() - 1; s >= 0; --s) order[--bucket[len_[s]]] = s;
        for (int i = size() - 1; i > 0; --i) {
            int s = order[i];
            if (link_[s] >= 0) cnt_[link_[s]] += cnt_[s];
        }
    }

    int k_;
    int n_;
    int last_;
    std::vector<int> len_;
    std::vector<int> link_;
    std::vector<long long> cnt_;
    std::vector<int32_t> next_;
};

// --- naive oracle engine ----------------------------------------------

namespace naive {

inline std::vector<long long> complexity_counts(const Word& w) {
    const auto text = w.letters();
    std::string_view all(reinterpret_cast<const char*>(text.data()), text.size());
    std::vector<long long> counts(w.size());
    for (std::size_t n = 1; n <= w.size(); ++n) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(all.substr(i, n));
        counts[n - 1] = static_cast<long long>(seen.size());
    }
    return counts;
}

inline int r_parameter(const Word& w) {
    // minimal n such that every length-n subword is followed by at most
    // one distinct letter
    for (int n = 1;; ++n) {
        std::map<std::string_view, std::unordered_set<Letter>> followers;
        const auto text = w.letters();
        std::string_view all(reinterpret_cast<const char*>(text.data()), text.size());
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
            auto& f = followers[all.substr(i, n)];
            if (i + n < w.size()) f.insert(w[i + n]);
        }
        bool ok = true;
        for (const auto& [u, f] : followers)
            if (f.size() >= 2) { ok = false; break; }
        if (ok) return n;
    }
}

inline int k_parameter(const Word& w) {
    for (std::size_t n = 1; n <= w.size(); ++n)
        if (multiplicity(w, w.substr(w.size() - n, n)) == 1) return static_cast<int>(n);
    return static_cast<int>(w.size());
}

}  // namespace naive

// --- profile ----------------------------------------------------------

inline ComplexityProfile profile_from_parts(int n, std::vector<long long> counts, int r, int k) {
    ComplexityProfile prof;
    prof.word_length = n;
    prof.sequence = std::move(counts);
    prof.r_param = r;
    prof.k_param = k;
    prof.peak_index = r;
    prof.peak_value = prof.sequence[static_cast<std::size_t>(r) - 1];
    return prof;
}

inline ComplexityProfile complexity_sequence(const Word& w) {
    if (w.empty()) throw std::domain_error("complexity of the empty word is undefined");
    SuffixAutomaton sam(w.letters(), w.alphabet_size());
    int r = sam.longest_special_length() + 1;
    return profile_from_parts(static_cast<int>(w.size()), sam.distinct_counts(), r,
                              sam.min_unique_suffix_length());
}

inline ComplexityProfile naive_complexity_sequence(const Word& w) {
    if (w.empty()) throw std::domain_error("complexity of the empty word is undefined");
    return profile_from_parts(static_cast<int>(w.size()), naive::complexity_counts(w),
                              naive::r_parameter(w), naive::k_parameter(w));
}

inline int r_parameter(const Word& w) {
    if (w.empty()) throw std::domain_error("R is undefined for the empty word");
    SuffixAutomaton sam(w.letters(), w.alphabet_size());
    return sam.longest_special_length() + 1;
}

inline int k_parameter(const Word& w) {
    if (w.empty()) throw std::domain_error("K is undefined for the empty word");
    SuffixAutomaton sam(w.letters(), w.alphabet_size());
    return sam.min_unique_suffix_length();
}

// --- valence ----------------------------------------------------------

// (|R_u|, R_u): the letters that can extend u on the right inside w.
inline std::pair<int, std::set<Letter>> valence(const Word& w, const Word& u) {
    if (u.empty()) throw std::domain_error("valence of the empty word is undefined");
    auto occs = occurrences(w, u);
    if (occs.empty()) throw std::domain_error("valence: u is not a subword of w");
    std::set<Letter> right;
    for (const auto& o : occs)
        if (static_cast<std::size_t>(o.end) < w.size()) right.insert(w[o.end]);
    return {static_cast<int>(right.size()), std::move(right)};
}

inline std::set<Letter> left_extensions(const Word& w, const Word& u) {
    if (u.empty()) throw std::domain_error("left extensions of the empty word are undefined");
    auto occs = occurrences(w, u);
    if (occs.empty()) throw std::domain_error("left_extensions: u is not a subword of w");
    std::set<Letter> left;
    for (const auto& o : occs)
        if (o.start > 1) left.insert(w[o.start - 2]);
    return left;
}

inline std::set<Word> special_subwords(const Word& w, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > w.size())
        throw std::domain_error("special subword length out of range");
    std::set<Word> out;
    for (const auto& u : subwords(w, n))
        if (valence(w, u).first >= 2) out.insert(u);
    return out;
}

inline ValenceTable valence_table(const Word& w) {
    if (w.empty()) throw std::domain_error("valence table of the empty word is undefined");
    const int N = static_cast<int>(w.size());
    const int k = w.alphabet_size();
    ValenceTable t;
    t.word_length = N;
    t.alphabet_size = k;
    t.s.assign(N + 1, std::vector<long long>(k + 1, 0));
    // epsilon can be extended by every letter that occurs in w
    std::set<Letter> distinct(w.letters().begin(), w.letters().end());
    t.s[0][distinct.size()] = 1;
    for (int n = 1; n <= N; ++n)
        for (const auto& u : subwords(w, n)) t.s[n][valence(w, u).first] += 1;
    return t;
}

// --- theorem harness ----------------------------------------------------

struct TheoremCheck {
    std::string name;
    bool pass = true;
    int witness = -1;  // failing index when pass is false
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Evaluates the shape theorems on w: submultiplicativity, the k-bounded
// growth inequality, unimodality with a decrease-by-1 tail, the peak
// identity at R_w, and the R+K length bounds. Any failure indicates an
// implementation bug, not a property of w.
inline TheoremReport check_profile_theorems(const Word& w) {
    const auto prof = complexity_sequence(w);
    const int N = prof.word_length;
    const int k = w.alphabet_size();
    const int R = prof.r_param;
    const int K = prof.k_param;
    auto p = [&](int n) { return prof.p(n); };

    TheoremReport rep;
    auto fail = [&](TheoremCheck& c, int where) {
        c.pass = false;
        c.witness = where;
    };

    {
        TheoremCheck c{"submultiplicativity p(m+n) <= p(m)p(n)"};
        for (int m = 1; c.pass && m < N; ++m)
            for (int n = 1; m + n <= N; ++n)
                if (p(m + n) > p(m) * p(n)) { fail(c, m); break; }
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"growth bound p(n+1) <= k p(n)"};
        for (int n = 1; n < N; ++n)
            if (p(n + 1) > static_cast<long long>(k) * p(n)) { fail(c, n); break; }
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"cardinality bound p(n) <= min(k^n, N-n+1)"};
        for (int n = 1; n <= N; ++n) {
            long long cap = N - n + 1;
            long long pw = 1;
            for (int i = 0; i < n && pw < cap; ++i) pw *= k;
            if (p(n) > std::min(pw, cap) || p(n) < 1) { fail(c, n); break; }
        }
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"unimodality with decrease-by-1 tail"};
        int first_drop = N + 1;
        for (int n = 1; n < N; ++n)
            if (p(n + 1) < p(n)) { first_drop = n; break; }
        for (int n = first_drop; n < N; ++n)
            if (p(n + 1) != p(n) - 1) { fail(c, n); break; }
        if (c.pass && p(N) != 1) fail(c, N);
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"k-bounded second difference for n < K"};
        for (int n = 1; n < K; ++n)
            if (p(n + 1) - p(n) > static_cast<long long>(k) * (p(n) - p(n - 1))) { fail(c, n); break; }
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"peak identity p(R) = N - max(R,K) + 1"};
        long long maxv = *std::max_element(prof.sequence.begin(), prof.sequence.end());
        if (p(R) != maxv || p(R) != N - std::max(R, K) + 1) fail(c, R);
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"R+K bound"};
        // w = a^N is the one family exceeding N: R = 1, K = N there
        bool uniform = p(1) == 1;
        if (uniform ? (R + K != N + 1) : (N < R + K)) fail(c, R + K);
        rep.checks.push_back(c);
    }
    {
        TheoremCheck c{"valence-0 count is N - K + 1"};
        long long zero_valence = 0;
        for (int n = 1; n <= N; ++n)
            for (const auto& u : subwords(w, n))
                if (valence(w, u).first == 0) ++zero_valence;
        if (zero_valence != N - K + 1) fail(c, K);
        rep.checks.push_back(c);
    }
    return rep;
}

// True iff the profile rises as n+1, plateaus, then falls as N-n+1.
// Returns (a, b) = (min(R,K), max(R,K)) on success; a == b is accepted
// (zero-length plateau).
inline std::optional<std::pair<int, int>> is_very_low_complexity(const Word& w) {
    const auto prof = complexity_sequence(w);
    const int N = prof.word_length;
    const int a = std::min(prof.r_param, prof.k_param);
    const int b = std::max(prof.r_param, prof.k_param);
    for (int n = 1; n <= a; ++n)
        if (prof.p(n) != n + 1) return std::nullopt;
    for (int n = a; n < b; ++n)
        if (prof.p(n + 1) != prof.p(n)) return std::nullopt;
    for (int n = b; n <= N; ++n)
        if (prof.p(n) != N - n + 1) return std::nullopt;
    return std::make_pair(a, b);
}

}  // namespace wordlab
