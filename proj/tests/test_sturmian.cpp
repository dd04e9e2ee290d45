#include <doctest.h>

#include <random>

#include "wordlab/complexity.hpp"
#include "wordlab/sturmian.hpp"

using namespace wordlab;

namespace {

SlopeIntercept golden_ratio_params() {
    // alpha = rho = (3 - sqrt(5)) / 2
    auto v = QuadIrrational::surd(3, -1, 2, 5);
    return SlopeIntercept(v, v);
}

}  // namespace

TEST_CASE("morphism application") {
    Morphism phi = fibonacci_morphism();
    CHECK(apply_morphism(phi, Word::parse("0")) == Word::parse("01"));
    CHECK(apply_morphism(phi, Word::parse("01")) == Word::parse("010"));
    Morphism psi = psi_morphism(2);
    CHECK(apply_morphism(psi, Word::parse("0")) == Word::parse("0001"));
    CHECK_THROWS_AS(Morphism({{Letter{0}, Word::parse("")}}, 2), std::domain_error);
}

TEST_CASE("fixed point prefixes") {
    Morphism phi = fibonacci_morphism();
    CHECK(fixed_point_prefix(phi, 0, 26) == Word::parse("01001010010010100101001001"));
    CHECK(fixed_point_prefix(phi, 0, 8) == Word::parse("01001010"));
    CHECK(fixed_point_prefix(phi, 0, 1) == Word::parse("0"));
    // 1 -> 0 does not start with 1, no fixed point from 1
    CHECK_THROWS_AS(fixed_point_prefix(phi, 1, 5), std::domain_error);

    // prefix stability
    Word longp = fixed_point_prefix(phi, 0, 400);
    for (int len : {1, 7, 50, 399})
        CHECK(longp.substr(0, len) == fixed_point_prefix(phi, 0, len));
}

TEST_CASE("fixed point factorization a v0 v1 ... vn") {
    Morphism phi = fibonacci_morphism();
    Word b = Word::parse("1");
    Word u = Word::parse("0");
    Word expected = Word::parse("0");
    Word v = b;
    for (int n = 0; n <= 12; ++n) {
        u = apply_morphism(phi, u);          // phi^{n+1}(0)
        expected = expected + v;             // a v_0 ... v_n
        v = apply_morphism(phi, v);          // phi^{n+1}(1)
        CHECK(u == expected);
    }
}

TEST_CASE("fibonacci iterates") {
    CHECK(fibonacci_iterate(0) == Word::parse("0"));
    CHECK(fibonacci_iterate(1) == Word::parse("01"));
    CHECK(fibonacci_iterate(4) == Word::parse("01001010"));
    CHECK(fibonacci_iterate(5) == Word::parse("0100101001001"));
    // lengths follow the Fibonacci recursion, prefixes nest, and the last
    // letter alternates with parity
    for (int n = 2; n <= 20; ++n) {
        Word a = fibonacci_iterate(n - 2), b = fibonacci_iterate(n - 1), c = fibonacci_iterate(n);
        CHECK(c.size() == a.size() + b.size());
        CHECK(c.substr(0, b.size()) == b);
        CHECK(c[c.size() - 1] == (n % 2 == 0 ? 0 : 1));
    }
}

TEST_CASE("fibonacci reverse identity") {
    CHECK(fibonacci_iterate(4) ==
          Word::parse("010") + Word::parse("010") + Word::parse("10"));
    CHECK(fibonacci_iterate(5) ==
          Word::parse("0") + Word::parse("10010") + Word::parse("10010") + Word::parse("01"));
    for (int n = 2; n <= 20; ++n) CHECK(fib_reverse_identity(n));
    CHECK_THROWS_AS(fib_reverse_identity(1), std::domain_error);
}

TEST_CASE("mechanical words, rational slopes") {
    SlopeIntercept half(QuadIrrational::rational(1, 2), QuadIrrational::rational(0, 1));
    CHECK(mechanical_word(half, MechanicalVariant::lower, 6) == Word::parse("010101"));
    CHECK(mechanical_word(half, MechanicalVariant::upper, 6) == Word::parse("101010"));
    CHECK_THROWS_AS(SlopeIntercept(QuadIrrational::rational(3, 2), QuadIrrational::rational(0, 1)),
                    std::domain_error);
}

TEST_CASE("mechanical word with golden-ratio slope is the Fibonacci word") {
    Word fib = fixed_point_prefix(fibonacci_morphism(), 0, 26);
    CHECK(mechanical_word(golden_ratio_params(), MechanicalVariant::lower, 26) == fib);
    Word longfib = fixed_point_prefix(fibonacci_morphism(), 0, 10000);
    CHECK(mechanical_word(golden_ratio_params(), MechanicalVariant::lower, 10000) == longfib);
    // irrational slope, intercept never hits an integer: both variants agree
    CHECK(mechanical_word(golden_ratio_params(), MechanicalVariant::upper, 10000) == longfib);
}

TEST_CASE("balance") {
    CHECK_FALSE(is_balanced(Word::parse("0011")));
    CHECK(is_balanced(Word::parse("01101")));
    CHECK(is_balanced(Word::parse("0000000")));
    CHECK(is_balanced(Word::parse("010010")));
    CHECK_THROWS_AS(is_balanced(Word::parse("012")), std::domain_error);
    // a balanced binary word never contains both 00 and 11
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> ls(20);
        for (auto& l : ls) l = static_cast<Letter>(bit(rng));
        Word w(std::move(ls), 2);
        if (is_balanced(w)) {
            bool has00 = multiplicity(w, Word::parse("00")) > 0;
            bool has11 = multiplicity(w, Word::parse("11")) > 0;
            CHECK_FALSE((has00 && has11));
        }
    }
}

TEST_CASE("unbalanced witness") {
    auto w0 = unbalanced_witness(Word::parse("0011"));
    REQUIRE(w0.has_value());
    CHECK(w0->empty());
    CHECK_FALSE(unbalanced_witness(Word::parse("010010")).has_value());
    Word w = Word::parse("00100110110");
    auto wit = unbalanced_witness(w);
    REQUIRE(wit.has_value());
    Word z = Word::parse("0") + *wit + Word::parse("0");
    Word o = Word::parse("1") + *wit + Word::parse("1");
    CHECK(multiplicity(w, z) > 0);
    CHECK(multiplicity(w, o) > 0);
    // agreement with the balance predicate
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Letter> ls(16);
        for (auto& l : ls) l = static_cast<Letter>(bit(rng));
        Word x(std::move(ls), 2);
        CHECK(unbalanced_witness(x).has_value() == !is_balanced(x));
    }
}

TEST_CASE("finite Sturmian membership") {
    CHECK_FALSE(is_finite_sturmian(Word::parse("0011")));
    CHECK(is_finite_sturmian(Word::parse("00001000")));
    Word f10 = fibonacci_iterate(10);
    for (int len : {1, 5, 20, 60, static_cast<int>(f10.size())})
        CHECK(is_finite_sturmian(f10.substr(0, len)));
    // N = R + K on balanced words containing both letters (the length-1
    // prefix has R + K = N + 1)
    Word f = fibonacci_iterate(9);
    for (int len = 2; len <= static_cast<int>(f.size()); ++len) {
        Word p = f.substr(0, len);
        auto prof = complexity_sequence(p);
        CHECK(prof.r_param + prof.k_param == len);
    }
}

TEST_CASE("balanced words have complexity at most n+1") {
    // mechanical factors with assorted rational slopes
    for (auto [p, q] : {std::pair{1, 3}, {2, 5}, {3, 7}, {5, 8}}) {
        SlopeIntercept s(QuadIrrational::rational(p, q), QuadIrrational::rational(1, 7));
        Word w = mechanical_word(s, MechanicalVariant::lower, 60);
        for (int start = 0; start < 50; start += 7) {
            Word u = w.substr(start, 10);
            if (!is_balanced(u)) continue;
            auto prof = complexity_sequence(u);
            for (int n = 1; n <= static_cast<int>(u.size()); ++n) CHECK(prof.p(n) <= n + 1);
        }
    }
}

TEST_CASE("peak words") {
    CHECK(peak_word(8) == Word::parse("00001000"));
    CHECK(complexity_sequence(peak_word(8)).sequence ==
          std::vector<long long>{2, 3, 4, 5, 4, 3, 2, 1});
    CHECK(peak_word(7) == Word::parse("0001000"));
    CHECK(r_parameter(peak_word(7)) == 3);
    CHECK(k_parameter(peak_word(7)) == 4);
    CHECK(peak_word(2) == Word::parse("01"));
    CHECK_THROWS_AS(peak_word(1), std::domain_error);
}

TEST_CASE("psi prefixes") {
    CHECK(psi_prefix(1, 8) == Word::parse("00101001"));
    CHECK(psi_prefix(2, 7) == Word::parse("0001001"));
    for (int l = 1; l <= 3; ++l) {
        Word u = psi_prefix(l, 1000);
        CHECK(is_balanced(u));
        // 0^{l+1} 1 0^l is a prefix
        std::vector<Letter> expect(l + 1, 0);
        expect.push_back(1);
        expect.insert(expect.end(), l, 0);
        Word head(std::move(expect), 2);
        CHECK(u.substr(0, head.size()) == head);
    }
}
