#include <doctest.h>

#include <random>

#include "wordlab/complexity.hpp"
#include "wordlab/debruijn.hpp"

using namespace wordlab;

namespace {

Word random_word(std::mt19937& rng, int max_len, int k) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> letter_dist(0, k - 1);
    std::vector<Letter> ls(len_dist(rng));
    for (auto& l : ls) l = static_cast<Letter>(letter_dist(rng));
    return Word(std::move(ls), k);
}

std::vector<long long> seq(const Word& w) { return complexity_sequence(w).sequence; }

}  // namespace

TEST_CASE("worked profile examples") {
    CHECK(seq(Word::parse("01101")) == std::vector<long long>{2, 3, 3, 2, 1});
    CHECK(seq(Word::parse("000000")) == std::vector<long long>{1, 1, 1, 1, 1, 1});
    // derived: 16 distinct nonempty subwords in total
    auto s = seq(Word::parse("101100"));
    CHECK(s == std::vector<long long>{2, 4, 4, 3, 2, 1});
    long long total = 0;
    for (long long v : s) total += v;
    CHECK(total == 16);
    CHECK_THROWS_AS(complexity_sequence(Word::parse("")), std::domain_error);
}

TEST_CASE("R and K parameters") {
    CHECK(r_parameter(Word::parse("101100")) == 3);
    CHECK(k_parameter(Word::parse("101100")) == 2);
    CHECK(r_parameter(Word::parse("0000")) == 1);
    CHECK(k_parameter(Word::parse("0000")) == 4);
    CHECK(r_parameter(Word::parse("0011")) == 2);
    CHECK(k_parameter(Word::parse("0011")) == 2);
    // degenerate single letter
    CHECK(r_parameter(Word::parse("0")) == 1);
    CHECK(k_parameter(Word::parse("0")) == 1);
    CHECK(seq(Word::parse("0")) == std::vector<long long>{1});
}

TEST_CASE("valence and extensions") {
    Word w = Word::parse("1211210121122");
    auto [v, right] = valence(w, Word::parse("121", 3));
    CHECK(v == 2);
    CHECK(right == std::set<Letter>{0, 1});
    auto [v2, right2] = valence(w, Word::parse("122", 3));
    CHECK(v2 == 0);
    CHECK(right2.empty());
    CHECK(valence(w, w).first == 0);
    CHECK_THROWS_AS(valence(w, Word::parse("000", 3)), std::domain_error);

    CHECK(left_extensions(Word::parse("101100"), Word::parse("0")) == std::set<Letter>{0, 1});
    CHECK(left_extensions(Word::parse("01"), Word::parse("0")).empty());
    CHECK(left_extensions(Word::parse("00"), Word::parse("0")) == std::set<Letter>{0});
}

TEST_CASE("special subwords") {
    // pooled over all lengths
    Word w = Word::parse("011010");
    std::set<Word> pooled;
    for (int n = 1; n <= static_cast<int>(w.size()); ++n)
        for (const auto& u : special_subwords(w, n)) pooled.insert(u);
    CHECK(pooled == std::set<Word>{Word::parse("1"), Word::parse("01")});

    CHECK(special_subwords(Word::parse("0000"), 1).empty());
    CHECK(special_subwords(Word::parse("0001011100"), 2) ==
          std::set<Word>{Word::parse("00"), Word::parse("01"), Word::parse("10"),
                         Word::parse("11")});
}

TEST_CASE("valence table and the growth recurrences") {
    Word w = Word::parse("101100");
    auto t = valence_table(w);
    CHECK(t.s[1][2] == 2);
    CHECK(t.s[6][0] == 1);
    auto t0 = valence_table(Word::parse("0000"));
    CHECK(t0.s[2][1] == 1);
    CHECK(t0.s[2][0] == 0);
    CHECK(t0.s[4][0] == 1);

    // p(n+1) = p(n) + sum (i-1) s(n,i), minus 1 once n >= K
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Word x = random_word(rng, 18, 3);
        auto prof = complexity_sequence(x);
        auto vt = valence_table(x);
        for (int n = 1; n < prof.word_length; ++n) {
            long long gain = 0;
            for (int i = 2; i <= x.alphabet_size(); ++i) gain += (i - 1) * vt.s[n][i];
            long long expected = prof.p(n) + gain - (n >= prof.k_param ? 1 : 0);
            CHECK(prof.p(n + 1) == expected);
        }
        // row sums equal p(n); at most one valence-0 subword per length
        for (int n = 1; n <= prof.word_length; ++n) {
            long long row = 0;
            for (int i = 0; i <= x.alphabet_size(); ++i) row += vt.s[n][i];
            CHECK(row == prof.p(n));
            CHECK(vt.s[n][0] == (n >= prof.k_param ? 1 : 0));
        }
        CHECK(vt.s[prof.word_length][2] == 0);
        if (prof.word_length >= 2) CHECK(vt.s[prof.word_length - 1][2] == 0);
    }
}

TEST_CASE("fast engine agrees with the naive oracle") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        int k = 2 + trial % 5;
        Word w = random_word(rng, 60, k);
        auto fast = complexity_sequence(w);
        auto slow = naive_complexity_sequence(w);
        REQUIRE(fast.sequence == slow.sequence);
        REQUIRE(fast.r_param == slow.r_param);
        REQUIRE(fast.k_param == slow.k_param);
    }
}

TEST_CASE("theorem harness passes on random and structured words") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        Word w = random_word(rng, 40, 2 + trial % 3);
        auto rep = check_profile_theorems(w);
        for (const auto& c : rep.checks) {
            INFO(c.name << " on " << w.to_string());
            CHECK(c.pass);
        }
    }
    CHECK(check_profile_theorems(Word::parse("101100")).all_pass());
    CHECK(check_profile_theorems(Word::parse("0000000")).all_pass());
}

TEST_CASE("peak identity") {
    auto prof = complexity_sequence(Word::parse("101100"));
    CHECK(prof.peak_index == 3);
    CHECK(prof.peak_value == 4);  // N - max(R,K) + 1 = 6 - 3 + 1
}

TEST_CASE("very low complexity") {
    auto r = is_very_low_complexity(Word::parse("0011"));
    REQUIRE(r.has_value());
    CHECK(*r == std::make_pair(2, 2));
    auto r2 = is_very_low_complexity(Word::parse("01101"));
    REQUIRE(r2.has_value());
    CHECK(*r2 == std::make_pair(2, 3));
    CHECK_FALSE(is_very_low_complexity(de_bruijn_word(2, 10)).has_value());
    CHECK_FALSE(is_very_low_complexity(Word::parse("0000")).has_value());
}
