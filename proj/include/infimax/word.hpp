#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infimax/numeric.hpp"

namespace infimax {

// Letters are 1..k; stored as integers so alphabets with k > 9 work uniformly.
using Letter = unsigned;

struct Alphabet {
    unsigned k;
    explicit Alphabet(unsigned size) : k(size) {
        if (k < 2) throw MalformedInput("alphabet needs at least two letters");
    }
};

// A finite word over 1..k with cached letter counts.
class Word {
  public:
    Word() = default;
    explicit Word(unsigned k) : k_(k), counts_(k, 0) {}
    Word(unsigned k, std::vector<Letter> letters);

    // "422234141" for k <= 9, comma-separated integers otherwise; accepts both.
    static Word parse(unsigned k, const std::string& text);

    unsigned alphabet_size() const { return k_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter at(std::size_t i) const { return letters_[i]; }
    // counts()[i-1] = number of occurrences of letter i
    const std::vector<std::size_t>& counts() const { return counts_; }

    void append(Letter a);
    void append(const Word& w);
    void append(const Word& w, std::size_t take);  // first `take` letters of w
    Word prefix(std::size_t n) const;
    Word repeated(std::size_t times) const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.k_ == b.k_ && a.letters_ == b.letters_;
    }

  private:
    unsigned k_ = 0;
    std::vector<Letter> letters_;
    std::vector<std::size_t> counts_;
};

// Order on finite words: at the first difference the smaller letter wins; a
// proper initial subword is GREATER than its extensions (so 31 > 311).
// Equal-length comparison degenerates to plain lexicographic order.
int word_compare(const Word& u, const Word& v);

// Plain lexicographic comparison (used for rotations and infinite prefixes).
int lex_compare(const Word& u, const Word& v);

// W is at least as large as every cyclic rotation VU of W = UV.
// O(n^2) all-rotations reference; see max_rotation_index for the linear route.
bool is_maximal_word(const Word& w);

// W is at most every cyclic rotation (the dual notion; image of maximal words
// under alphabet reversal).
bool is_minimal_word(const Word& w);

// No suffix of w exceeds w on their overlap; necessary for w to be a prefix
// of a maximal sequence. Linear time via a Z-array.
bool is_maximal_prefix_consistent(const Word& w);

// Smallest starting index of the lexicographically maximal rotation
// (Booth-style, linear time).
std::size_t max_rotation_index(const Word& w);

Word rotation(const Word& w, std::size_t start);

// Exact letter proportions; may lie on the simplex boundary (zeros allowed).
std::vector<Rational> proportions(const Word& w);

struct SupWindow {
    Word word;
    std::size_t start;
};

// Largest length-R window among suffix starts of w (w viewed as the initial
// segment of an infinite word; only suffixes with R letters remaining count).
SupWindow sup_orbit_window(const Word& w, std::size_t R);
Word sup_orbit_prefix(const Word& w, std::size_t R);

// letter i -> k+1-i; turns maximal words into minimal (Lyndon-style) ones.
Word reverse_alphabet(const Word& w);

// "31 311^10 312^3": split at occurrences of the leading letter, run-length
// encode equal adjacent blocks. Falls back to plain rendering when the word
// does not start with its largest letter.
std::string render_power_form(const Word& w);

}  // namespace infimax
