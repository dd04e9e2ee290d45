#pragma once

// Finite words over a k-letter integer alphabet and the exact
// subword/occurrence primitives everything else is built on.

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

using Letter = std::uint8_t;

constexpr int kMaxAlphabet = 36;

// Thrown when an input exceeds the configured resource bounds
// (as opposed to violating a mathematical precondition).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline char letter_to_char(Letter l) {
    return l < 10 ? static_cast<char>('0' + l) : static_cast<char>('a' + l - 10);
}

inline int char_to_letter(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

// Immutable finite word. Letters are canonically 0..k-1.
class Word {
public:
    Word() = default;

    Word(std::vector<Letter> letters, int alphabet_size)
        : letters_(std::move(letters)), k_(alphabet_size) {
        validate();
    }

    Word(std::initializer_list<int> letters, int alphabet_size) : k_(alphabet_size) {
        letters_.reserve(letters.size());
        for (int l : letters) letters_.push_back(static_cast<Letter>(l));
        validate();
    }

    // Parses textual form ('0'-'9' then 'a'-'z'). When alphabet_size is 0
    // the alphabet is inferred as max(letter)+1, but never below 2.
    static Word parse(std::string_view text, int alphabet_size = 0) {
        std::vector<Letter> ls;
        ls.reserve(text.size());
        int maxl = -1;
        for (char c : text) {
            int v = char_to_letter(c);
            if (v < 0) throw std::domain_error(std::string("invalid letter character '") + c + "'");
            maxl = std::max(maxl, v);
            ls.push_back(static_cast<Letter>(v));
        }
        int k = alphabet_size > 0 ? alphabet_size : std::max(2, maxl + 1);
        return Word(std::move(ls), k);
    }

    int alphabet_size() const { return k_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::span<const Letter> letters() const { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    // 0-based block [pos, pos+len).
    Word substr(std::size_t pos, std::size_t len) const {
        if (pos + len > letters_.size()) throw std::domain_error("substr out of range");
        return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len), k_);
    }

    Word reversed() const {
        std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
        return Word(std::move(ls), k_);
    }

    Word power(std::size_t n) const {
        std::vector<Letter> ls;
        ls.reserve(letters_.size() * n);
        for (std::size_t i = 0; i < n; ++i)
            ls.insert(ls.end(), letters_.begin(), letters_.end());
        return Word(std::move(ls), k_);
    }

    friend Word operator+(const Word& a, const Word& b) {
        std::vector<Letter> ls(a.letters_);
        ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(ls), std::max(a.k_, b.k_));
    }

    // Equality is on letter content only, so alternative representations
    // (e.g. the packed bit form used by the enumeration engine) can be
    // compared through a round-trip to Word.
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

    std::string to_string() const {
        std::string s;
        s.reserve(letters_.size());
        for (Letter l : letters_) s.push_back(letter_to_char(l));
        return s;
    }

private:
    void validate() const {
        if (k_ < 1 || k_ > kMaxAlphabet) throw std::domain_error("alphabet size out of range");
        for (Letter l : letters_)
            if (l >= k_) throw std::domain_error("letter out of alphabet range");
    }

    std::vector<Letter> letters_;
    int k_ = 2;
};

// 1-based closed interval w[i,j].
struct Occurrence {
    int start = 1;
    int end = 1;
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Distinct length-n blocks of w; {epsilon} for n = 0.
inline std::set<Word> subwords(const Word& w, int n) {
    if (n < 0 || static_cast<std::size_t>(n) > w.size())
        throw std::domain_error("subword length out of range");
    std::set<Word> out;
    if (n == 0) {
        out.insert(Word({}, w.alphabet_size()));
        return out;
    }
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        out.insert(w.substr(i, n));
    return out;
}

inline std::vector<Occurrence> occurrences(const Word& w, const Word& u) {
    if (u.empty()) throw std::domain_error("occurrences of the empty word are undefined");
    std::vector<Occurrence> out;
    if (u.size() > w.size()) return out;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
        if (std::equal(u.letters().begin(), u.letters().end(), w.letters().begin() + i))
            out.push_back({static_cast<int>(i) + 1, static_cast<int>(i + u.size())});
    }
    return out;
}

// Overlapping occurrences are counted.
inline long long multiplicity(const Word& w, const Word& u) {
    if (u.empty()) throw std::domain_error("multiplicity of the empty word is undefined");
    long long count = 0;
    if (u.size() > w.size()) return 0;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
        if (std::equal(u.letters().begin(), u.letters().end(), w.letters().begin() + i)) ++count;
    return count;
}

inline Word reverse(const Word& w) { return w.reversed(); }

// Number of 1s in a binary word.
inline long long height(const Word& w) {
    if (w.alphabet_size() > 2) throw std::domain_error("height requires a binary word");
    return std::count(w.letters().begin(), w.letters().end(), Letter{1});
}

// a_i = a_{i+p} for all 1 <= i <= N-p; vacuously true when p >= N.
inline bool is_period(const Word& w, int p) {
    if (p < 1) throw std::domain_error("period must be positive");
    for (std::size_t i = 0; i + p < w.size(); ++i)
        if (w[i] != w[i + p]) return false;
    return true;
}

}  // namespace wordlab
