#include <doctest.h>

#include <random>
#include <unordered_set>

#include "wordlab/debruijn.hpp"

using namespace wordlab;

TEST_CASE("graph shape") {
    DeBruijnGraph g = build_graph(2, 2);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 8);
    CHECK(build_graph(2, 1).num_vertices() == 2);
    CHECK(build_graph(2, 1).num_edges() == 4);
    CHECK(build_graph(3, 2).num_vertices() == 9);
    CHECK(build_graph(3, 2).num_edges() == 27);
    CHECK(g.edge_word(0b101).to_string() == "101");
    CHECK(g.edge_source(0b101) == 0b10);
    CHECK(g.edge_target(0b101) == 0b01);
    CHECK_THROWS_AS(build_graph(2, 30), capacity_error);
    CHECK_THROWS_AS(build_graph(1, 2), std::domain_error);
}

TEST_CASE("eulerian circuit covers every edge once and is closed") {
    for (auto [k, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 2}}) {
        DeBruijnGraph g = build_graph(k, n);
        Tour t = eulerian_circuit(g);
        REQUIRE(t.edges.size() == g.num_edges());
        std::unordered_set<std::uint64_t> seen(t.edges.begin(), t.edges.end());
        CHECK(seen.size() == g.num_edges());
        for (std::size_t i = 0; i + 1 < t.edges.size(); ++i)
            CHECK(g.edge_target(t.edges[i]) == g.edge_source(t.edges[i + 1]));
        CHECK(g.edge_target(t.edges.back()) == g.edge_source(t.edges.front()));
    }
}

TEST_CASE("hamiltonian cycle visits every vertex once") {
    for (auto [k, n] : {std::pair{2, 1}, {2, 3}, {3, 2}, {5, 1}}) {
        DeBruijnGraph g = build_graph(k, n);
        Tour t = hamiltonian_cycle(k, n);
        REQUIRE(t.edges.size() == g.num_vertices());
        std::unordered_set<std::uint64_t> sources;
        for (std::uint64_t e : t.edges) sources.insert(g.edge_source(e));
        CHECK(sources.size() == g.num_vertices());
        for (std::size_t i = 0; i < t.edges.size(); ++i)
            CHECK(g.edge_target(t.edges[i]) == g.edge_source(t.edges[(i + 1) % t.edges.size()]));
    }
    CHECK(hamiltonian_cycle(2, 1).edges.size() == 2);
}

TEST_CASE("tour to word correspondence") {
    // a tour of m edges spells a word of length n+m whose (n+1)-grams
    // are the tour's edges in order
    DeBruijnGraph g = build_graph(2, 2);
    Tour t = eulerian_circuit(g);
    Word w = t.to_word();
    REQUIRE(w.size() == g.order() + t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        CHECK(w.substr(i, g.order() + 1) == g.edge_word(t.edges[i]));
}

TEST_CASE("de Bruijn word base cases") {
    CHECK(de_bruijn_word(5, 4) == Word::parse("0123", 5));
    CHECK(is_de_bruijn(Word::parse("0123", 5)));
    CHECK(is_de_bruijn(Word::parse("0001011100")));
    CHECK_FALSE(is_de_bruijn(Word::parse("0000")));
    Word w10 = de_bruijn_word(2, 10);
    CHECK(is_de_bruijn(w10));
    // all 8 binary triples exactly once
    CHECK(subwords(w10, 3).size() == 8);
    for (const auto& u : subwords(w10, 3)) CHECK(multiplicity(w10, u) == 1);
    auto prof = complexity_sequence(de_bruijn_word(2, 12));
    CHECK(prof.sequence == std::vector<long long>{2, 4, 8, 9, 8, 7, 6, 5, 4, 3, 2, 1});
}

TEST_CASE("de Bruijn words of every length and alphabet") {
    for (int k = 2; k <= 5; ++k)
        for (int N = 1; N <= 64; ++N) {
            Word w = de_bruijn_word(k, N);
            REQUIRE(static_cast<int>(w.size()) == N);
            INFO("k=" << k << " N=" << N << " w=" << w.to_string());
            CHECK(is_de_bruijn(w));
        }
}

TEST_CASE("exact lengths contain every n-gram exactly once") {
    for (auto [k, n] : {std::pair{2, 3}, {2, 4}, {3, 2}, {4, 1}, {5, 2}}) {
        std::uint64_t kn = 1;
        for (int i = 0; i < n; ++i) kn *= k;
        int N = static_cast<int>(kn) + n - 1;
        Word w = de_bruijn_word(k, N);
        REQUIRE(static_cast<int>(w.size()) == N);
        auto grams = subwords(w, n);
        CHECK(grams.size() == kn);
        for (const auto& u : grams) CHECK(multiplicity(w, u) == 1);
    }
}

TEST_CASE("constructed words are deterministic") {
    for (int N : {7, 13, 37, 64})
        CHECK(de_bruijn_word(2, N) == de_bruijn_word(2, N));
}

TEST_CASE("de Bruijn words dominate random words pointwise") {
    std::mt19937 rng(41);
    for (int N : {10, 20, 33}) {
        Word w = de_bruijn_word(2, N);
        auto pw = complexity_sequence(w);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Letter> ls(N);
            for (auto& l : ls) l = static_cast<Letter>(bit(rng));
            auto pu = complexity_sequence(Word(std::move(ls), 2));
            for (int n = 1; n <= N; ++n) CHECK(pu.p(n) <= pw.p(n));
        }
    }
}
