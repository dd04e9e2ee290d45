#pragma once

// Sturmian and balanced words: morphic fixed points, the Fibonacci word,
// mechanical words with exact slope/intercept arithmetic, balance tests,
// and the peak-word / psi-morphism constructions.

#include <map>
#include <optional>
#include <vector>

#include "wordlab/quadratic.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// Nonerasing letter -> word substitution, extended multiplicatively.
class Morphism {
public:
    Morphism(std::map<Letter, Word> images, int alphabet_size)
        : images_(std::move(images)), k_(alphabet_size) {
        for (const auto& [l, img] : images_) {
            if (img.empty()) throw std::domain_error("morphism must be nonerasing");
            if (l >= k_) throw std::domain_error("image letter outside alphabet");
        }
    }

    int alphabet_size() const { return k_; }

    const Word& image(Letter l) const {
        auto it = images_.find(l);
        if (it == images_.end()) throw std::domain_error("letter has no image");
        return it->second;
    }

    Word apply(const Word& w) const {
        std::vector<Letter> out;
        for (Letter l : w.letters()) {
            const Word& img = image(l);
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        }
        return Word(std::move(out), k_);
    }

private:
    std::map<Letter, Word> images_;
    int k_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

// 0 -> 01, 1 -> 0
inline Morphism fibonacci_morphism() {
    return Morphism({{Letter{0}, Word({0, 1}, 2)}, {Letter{1}, Word({0}, 2)}}, 2);
}

// psi(0) = 0^{l+1} 1, psi(1) = 0^l 1
inline Morphism psi_morphism(int l) {
    if (l < 1) throw std::domain_error("block parameter must be >= 1");
    std::vector<Letter> i0(l + 1, 0), i1(l, 0);
    i0.push_back(1);
    i1.push_back(1);
    return Morphism({{Letter{0}, Word(std::move(i0), 2)}, {Letter{1}, Word(std::move(i1), 2)}}, 2);
}

// First `len` letters of the unique fixed point of m starting at a.
// Requires image(a) = a.b with b nonempty.
inline Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t len) {
    const Word& ia = m.image(a);
    if (ia.size() < 2 || ia[0] != a)
        throw std::domain_error("image of the seed letter must start with it and be longer");
    Word u({a}, m.alphabet_size());
    // phi of a fixed-point prefix is again a fixed-point prefix, so
    // truncating between iterations is sound; each pass grows the prefix.
    while (u.size() < len) {
        u = m.apply(u);
        if (u.size() > len) u = u.substr(0, len);
    }
    return u.substr(0, len);
}

// f_0 = 0, f_1 = 01, f_{n+1} = f_n f_{n-1}
inline Word fibonacci_iterate(int n) {
    if (n < 0) throw std::domain_error("index must be >= 0");
    Word prev({0}, 2);
    if (n == 0) return prev;
    Word cur({0, 1}, 2);
    for (int i = 1; i < n; ++i) {
        Word next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct SlopeIntercept {
    QuadIrrational alpha;  // in (0,1)
    QuadIrrational rho;    // in [0,1]

    SlopeIntercept(QuadIrrational a, QuadIrrational r) : alpha(a), rho(r) {
        const QuadIrrational minus_one = QuadIrrational::rational(-1, 1);
        if (alpha.sign() <= 0 || (alpha + minus_one).sign() >= 0)
            throw std::domain_error("slope must satisfy 0 < alpha < 1");
        if (rho.sign() < 0 || (rho + minus_one).sign() > 0)
            throw std::domain_error("intercept must satisfy 0 <= rho <= 1");
    }
};

enum class MechanicalVariant { lower, upper };

// s(n) for n = 0..len-1, from exact floor/ceiling differences of
// n*alpha + rho. Lower uses floors, upper uses ceilings.
inline Word mechanical_word(const SlopeIntercept& s, MechanicalVariant variant, std::size_t len) {
    std::vector<Letter> out;
    out.reserve(len);
    auto value = [&](long long n) {
        QuadIrrational t = n * s.alpha + s.rho;
        return variant == MechanicalVariant::lower ? t.floor() : t.ceil();
    };
    long long prev = value(0);
    for (std::size_t n = 0; n < len; ++n) {
        long long next = value(static_cast<long long>(n) + 1);
        out.push_back(next == prev ? Letter{0} : Letter{1});
        prev = next;
    }
    return Word(std::move(out), 2);
}

// Every pair of equal-length windows differs in height by at most 1.
inline bool is_balanced(const Word& w) {
    if (w.alphabet_size() > 2) throw std::domain_error("balance requires a binary word");
    const int N = static_cast<int>(w.size());
    for (int n = 1; n <= N; ++n) {
        int h = 0;
        for (int i = 0; i < n; ++i) h += w[i];
        int lo = h, hi = h;
        for (int i = 1; i + n <= N; ++i) {
            h += w[i + n - 1] - w[i - 1];
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

// Minimal-length w' with both 0w'0 and 1w'1 in Sub(w); lexicographically
// smallest on ties. Empty result iff w is balanced.
inline std::optional<Word> unbalanced_witness(const Word& w) {
    if (w.alphabet_size() > 2) throw std::domain_error("balance requires a binary word");
    const int N = static_cast<int>(w.size());
    for (int len = 0; len + 2 <= N; ++len) {
        std::set<Word> zero_framed, one_framed;
        for (int i = 0; i + len + 2 <= N; ++i) {
            if (w[i] == w[i + len + 1]) {
                Word mid = w.substr(i + 1, len);
                (w[i] == 0 ? zero_framed : one_framed).insert(mid);
            }
        }
        for (const Word& m : zero_framed)
            if (one_framed.count(m)) return m;
    }
    return std::nullopt;
}

// Balance is the decision procedure for finite Sturmian membership.
inline bool is_finite_sturmian(const Word& w) {
    if (w.empty()) throw std::domain_error("empty word");
    return is_balanced(w);
}

// 0^{N/2-1} 01 0^{N/2-1} (N even) or 0^{floor(N/2)} 1 0^{floor(N/2)} (N odd):
// the profile rises as n+1 as late as possible, then falls as N-n+1.
inline Word peak_word(int N) {
    if (N < 2) throw std::domain_error("peak word needs N >= 2");
    std::vector<Letter> ls(N, 0);
    ls[N / 2] = 1;
    return Word(std::move(ls), 2);
}

// f_{n+2} = g_n rev(f_n) rev(f_n) t_n with g_n = f_{n-3}...f_1 f_0 and
// t_n = 01 / 10 by parity; must hold for every n >= 2.
inline bool fib_reverse_identity(int n) {
    if (n < 2) throw std::domain_error("identity requires n >= 2");
    Word g({}, 2);
    for (int i = n - 3; i >= 0; --i) g = g + fibonacci_iterate(i);
    Word t = (n % 2 == 1) ? Word({0, 1}, 2) : Word({1, 0}, 2);
    Word fr = fibonacci_iterate(n).reversed();
    return fibonacci_iterate(n + 2) == g + fr + fr + t;
}

// Prefix of psi(f) of length len: every prefix is balanced and
// 0^{l+1} 1 0^l occurs as a prefix.
inline Word psi_prefix(int l, std::size_t len) {
    if (l < 1 || len < 1) throw std::domain_error("psi prefix needs l >= 1 and len >= 1");
    Morphism psi = psi_morphism(l);
    // each image has length >= l+1 >= 2, so a Fibonacci prefix of length
    // len always expands past len
    Word base = fixed_point_prefix(fibonacci_morphism(), 0, len);
    Word out = psi.apply(base);
    return out.substr(0, std::min(len, out.size()));
}

}  // namespace wordlab
