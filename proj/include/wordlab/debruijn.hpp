#pragma once

// De Bruijn graphs B_k(n), Eulerian circuits, Hamiltonian cycles, and
// de Bruijn word construction for arbitrary target length N.
//
// Vertices are length-n words encoded as integers in base k; edges are
// length-(n+1) words, edge = vertex * k + last letter.

#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "wordlab/complexity.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

class DeBruijnGraph {
public:
    DeBruijnGraph(int k, int order) : k_(k), order_(order) {
        if (k < 2) throw std::domain_error("alphabet size must be >= 2");
        if (order < 1) throw std::domain_error("order must be >= 1");
        std::uint64_t v = 1;
        for (int i = 0; i < order; ++i) {
            v *= static_cast<std::uint64_t>(k);
            if (v * k > (1ull << 26))
                throw capacity_error("de Bruijn graph exceeds the 2^26 edge bound");
        }
        num_vertices_ = v;
        num_edges_ = v * k;
    }

    int k() const { return k_; }
    int order() const { return order_; }
    std::uint64_t num_vertices() const { return num_vertices_; }
    std::uint64_t num_edges() const { return num_edges_; }

    Word vertex_word(std::uint64_t v) const { return decode(v, order_); }
    Word edge_word(std::uint64_t e) const { return decode(e, order_ + 1); }

    std::uint64_t edge_source(std::uint64_t e) const { return e / k_; }
    std::uint64_t edge_target(std::uint64_t e) const { return e % num_vertices_; }

    Word decode(std::uint64_t code, int len) const {
        std::vector<Letter> ls(len);
        for (int i = len - 1; i >= 0; --i) {
            ls[i] = static_cast<Letter>(code % k_);
            code /= k_;
        }
        return Word(std::move(ls), k_);
    }

private:
    int k_;
    int order_;
    std::uint64_t num_vertices_;
    std::uint64_t num_edges_;
};

// Edge-disjoint walk; closed when the last edge's target is the first
// edge's source.
struct Tour {
    int k = 2;
    int order = 1;
    std::vector<std::uint64_t> edges;
    bool closed = false;

    // The word spelled by the walk: the start vertex followed by the
    // last letter of every edge.
    Word to_word() const {
        DeBruijnGraph g(k, order);
        std::vector<Letter> ls;
        ls.reserve(order + edges.size());
        Word start = g.vertex_word(g.edge_source(edges.at(0)));
        ls.insert(ls.end(), start.letters().begin(), start.letters().end());
        for (std::uint64_t e : edges) ls.push_back(static_cast<Letter>(e % k));
        return Word(std::move(ls), k);
    }
};

namespace detail {

// Hierholzer over an explicit adjacency (sorted letter lists per vertex).
// Edge choice is lexicographic, so the circuit is reproducible. Returns
// the closed circuit's edges starting from `start`.
inline std::vector<std::uint64_t> hierholzer(const DeBruijnGraph& g,
                                             const std::vector<std::vector<Letter>>& adj,
                                             std::uint64_t start) {
    std::vector<std::size_t> next_out(g.num_vertices(), 0);
    std::vector<std::uint64_t> stack{start};
    std::vector<std::uint64_t> circuit_vertices;
    while (!stack.empty()) {
        std::uint64_t v = stack.back();
        if (next_out[v] < adj[v].size()) {
            Letter c = adj[v][next_out[v]++];
            std::uint64_t e = v * g.k() + c;
            stack.push_back(g.edge_target(e));
        } else {
            circuit_vertices.push_back(v);
            stack.pop_back();
        }
    }
    // reversed vertex sequence of the circuit
    std::vector<std::uint64_t> edges;
    edges.reserve(circuit_vertices.size() - 1);
    for (std::size_t i = circuit_vertices.size(); i-- > 1;) {
        std::uint64_t from = circuit_vertices[i];
        std::uint64_t to = circuit_vertices[i - 1];
        edges.push_back(from * g.k() + (to % g.k()));
    }
    return edges;
}

}  // namespace detail

inline DeBruijnGraph build_graph(int k, int n) { return DeBruijnGraph(k, n); }

// Closed tour using every edge of B_k(n) exactly once.
inline Tour eulerian_circuit(const DeBruijnGraph& g) {
    std::vector<Letter> all(g.k());
    std::iota(all.begin(), all.end(), Letter{0});
    std::vector<std::vector<Letter>> adj(g.num_vertices(), all);
    Tour t;
    t.k = g.k();
    t.order = g.order();
    t.edges = detail::hierholzer(g, adj, 0);
    t.closed = true;
    return t;
}

// Closed tour visiting every vertex of B_k(n) exactly once. For n >= 2
// this is the Eulerian circuit of B_k(n-1) read through the line-graph
// identity B_k(n) = L B_k(n-1).
inline Tour hamiltonian_cycle(int k, int n) {
    Tour t;
    t.k = k;
    t.order = n;
    t.closed = true;
    if (n == 1) {
        // explicit cycle 0 -> 1 -> ... -> (k-1) -> 0
        DeBruijnGraph g(k, 1);
        for (int i = 0; i < k; ++i)
            t.edges.push_back(static_cast<std::uint64_t>(i) * k + (i + 1) % k);
        return t;
    }
    DeBruijnGraph lower(k, n - 1);
    Tour circuit = eulerian_circuit(lower);
    const auto& e = circuit.edges;  // vertices of B_k(n), in cycle order
    DeBruijnGraph g(k, n);
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t from = e[i];
        std::uint64_t to = e[(i + 1) % e.size()];
        t.edges.push_back(from * k + (to % k));
    }
    return t;
}

// p_w(n) = min(k^n, N-n+1) for every n.
inline bool is_de_bruijn(const Word& w) {
    if (w.empty()) throw std::domain_error("empty word");
    const int N = static_cast<int>(w.size());
    const int k = w.alphabet_size();
    const auto prof = complexity_sequence(w);
    for (int n = 1; n <= N; ++n) {
        long long cap = N - n + 1;
        long long pw = 1;
        for (int i = 0; i < n && pw < cap; ++i) pw *= k;
        if (prof.p(n) != std::min(pw, cap)) return false;
    }
    return true;
}

namespace detail {

// Vertex sequence of a closed Hamiltonian cycle (without the repeated
// start), rotated so traversal is convenient.
inline std::vector<std::uint64_t> cycle_vertices(const DeBruijnGraph& g, const Tour& ham) {
    std::vector<std::uint64_t> vs;
    vs.reserve(ham.edges.size());
    for (std::uint64_t e : ham.edges) vs.push_back(g.edge_source(e));
    return vs;
}

}  // namespace detail

// Deterministic de Bruijn word of length N over A_k, by the three-case
// construction: a rainbow word for N < k, a Hamiltonian path for the
// exact length k^n + n - 1, and a Hamiltonian cycle augmented with
// Eulerian detours otherwise.
inline Word de_bruijn_word(int k, int N) {
    if (k < 2) throw std::domain_error("alphabet size must be >= 2");
    if (N < 1) throw std::domain_error("length must be >= 1");
    if (N < k) {
        std::vector<Letter> ls(N);
        std::iota(ls.begin(), ls.end(), Letter{0});
        return Word(std::move(ls), k);
    }
    // largest n with k^n + n - 1 <= N
    int n = 1;
    while (true) {
        std::uint64_t pw = 1;
        bool overflow = false;
        for (int i = 0; i < n + 1; ++i) {
            pw *= static_cast<std::uint64_t>(k);
            if (pw > (1ull << 62)) { overflow = true; break; }
        }
        if (overflow || pw + n > static_cast<std::uint64_t>(N)) break;
        ++n;
    }
    DeBruijnGraph g(k, n);
    Tour ham = hamiltonian_cycle(k, n);
    auto cyc = detail::cycle_vertices(g, ham);  // k^n vertices in cycle order
    const std::uint64_t kn = g.num_vertices();

    if (static_cast<std::uint64_t>(N) == kn + n - 1) {
        // remove the lexicographically largest cycle edge, start just after it
        std::size_t cut = 0;
        for (std::size_t i = 1; i < ham.edges.size(); ++i)
            if (ham.edges[i] > ham.edges[cut]) cut = i;
        Tour path;
        path.k = k;
        path.order = n;
        path.closed = false;
        for (std::size_t i = 1; i < ham.edges.size(); ++i)
            path.edges.push_back(ham.edges[(cut + i) % ham.edges.size()]);
        return path.to_word();
    }

    // General case: B_k(n) minus the cycle's edges splits into Eulerian
    // components; splice whole circuits (and a prefix of the last one)
    // into the cycle until the tour has N - n edges.
    const std::uint64_t needed = static_cast<std::uint64_t>(N) - kn - n;

    std::vector<char> on_cycle(g.num_edges(), 0);
    for (std::uint64_t e : ham.edges) on_cycle[e] = 1;
    std::vector<std::vector<Letter>> adj(g.num_vertices());
    for (std::uint64_t v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < k; ++c)
            if (!on_cycle[v * k + c]) adj[v].push_back(static_cast<Letter>(c));

    // weakly connected components, discovered in ascending vertex order so
    // each component's anchor is its smallest vertex
    std::vector<int> comp(g.num_vertices(), -1);
    std::vector<std::uint64_t> anchors;
    std::vector<std::vector<std::uint64_t>> in_edges(g.num_vertices());
    for (std::uint64_t v = 0; v < g.num_vertices(); ++v)
        for (Letter c : adj[v]) in_edges[g.edge_target(v * k + c)].push_back(v);
    for (std::uint64_t seed = 0; seed < g.num_vertices(); ++seed) {
        if (comp[seed] >= 0) continue;
        int id = static_cast<int>(anchors.size());
        anchors.push_back(seed);
        std::queue<std::uint64_t> q;
        q.push(seed);
        comp[seed] = id;
        while (!q.empty()) {
            std::uint64_t v = q.front();
            q.pop();
            auto visit = [&](std::uint64_t u) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    q.push(u);
                }
            };
            for (Letter c : adj[v]) visit(g.edge_target(v * k + c));
            for (std::uint64_t u : in_edges[v]) visit(u);
        }
    }

    std::vector<std::vector<std::uint64_t>> circuits(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i)
        circuits[i] = detail::hierholzer(g, adj, anchors[i]);

    // minimal r with m_1 + ... + m_r >= needed
    std::size_t r = 0;
    std::uint64_t acc = 0;
    while (r < circuits.size() && acc < needed) acc += circuits[r++].size();
    if (r == 0) r = 1;  // needed == 0: the bare cycle already suffices
    if (acc < needed) throw std::logic_error("detour capacity exhausted");

    std::uint64_t consumed = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) consumed += circuits[i].size();
    const std::uint64_t tail = needed - consumed;  // edges taken from circuit r

    Tour t;
    t.k = k;
    t.order = n;
    t.closed = false;
    std::size_t start_pos = 0;
    while (cyc[start_pos] != anchors[r - 1]) ++start_pos;
    for (std::size_t step = 0; step < cyc.size(); ++step) {
        std::size_t pos = (start_pos + step) % cyc.size();
        std::uint64_t v = cyc[pos];
        if (step > 0) {
            int id = comp[v];
            if (id >= 0 && static_cast<std::size_t>(id) + 1 < r && anchors[id] == v)
                t.edges.insert(t.edges.end(), circuits[id].begin(), circuits[id].end());
        }
        t.edges.push_back(ham.edges[pos]);
    }
    t.edges.insert(t.edges.end(), circuits[r - 1].begin(), circuits[r - 1].begin() + tail);
    return t.to_word();
}

}  // namespace wordlab
