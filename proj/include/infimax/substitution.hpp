#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "infimax/numeric.hpp"
#include "infimax/word.hpp"

namespace infimax {

// Default materialization cap for tower words (letters). Callers may raise it;
// exact lengths are always tracked as unbounded integers regardless.
inline constexpr std::size_t default_word_cap = 1'000'000;
inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

struct Substitution {
    unsigned k = 0;
    std::vector<Word> images;  // images[i-1] = image of letter i, each non-empty

    const Word& image(Letter a) const { return images[a - 1]; }
};

Substitution identity_substitution(unsigned k);

// The branch-n substitution: i -> i+1 for i <= k-2, k-1 -> k 1^{n+1}, k -> k 1^n.
Substitution branch_substitution(unsigned long n, unsigned k);

Word apply(const Substitution& s, const Word& w);
Substitution compose(const Substitution& s1, const Substitution& s2);  // s1 after s2

// k x k matrix of unbounded non-negative integers, row-major.
struct IntMatrix {
    unsigned k = 0;
    std::vector<Integer> a;

    IntMatrix() = default;
    explicit IntMatrix(unsigned size) : k(size), a(std::size_t(size) * size, 0) {}
    Integer& at(unsigned i, unsigned j) { return a[std::size_t(i) * k + j]; }
    const Integer& at(unsigned i, unsigned j) const { return a[std::size_t(i) * k + j]; }
};

IntMatrix identity_matrix(unsigned k);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
IntMatrix power(const IntMatrix& A, unsigned long e);

// entry (i,j) = occurrences of letter i in the image of letter j.
IntMatrix abelian_matrix(const Substitution& s);

// abelian matrix of the branch-n substitution in closed form (n unbounded):
// first row has n+1 and n in the last two columns, subdiagonal ones,
// bottom-right one.
IntMatrix branch_matrix(const Integer& n, unsigned k);

// column sums = image lengths under the substitution the matrix abelianizes.
std::vector<Integer> column_lengths(const IntMatrix& A);

// Composition tower T = branch(n_0) o branch(n_1) o ... o branch(n_r), extended
// incrementally on the inner (right) side. Keeps the first `cap` letters of
// every letter image plus every exact image length, so branch entries may be
// huge integers without materialization blowups.
class SubstitutionTower {
  public:
    SubstitutionTower(unsigned k, std::size_t cap);

    void extend(const Integer& n);
    void extend_zero_run(std::size_t count);  // = count extensions by 0, telescoped

    unsigned alphabet_size() const { return k_; }
    std::size_t cap() const { return cap_; }
    std::size_t depth() const { return entries_.size(); }  // entries consumed
    const std::vector<Integer>& entries() const { return entries_; }

    const Word& image_prefix(Letter a) const { return images_[a - 1].word; }
    bool image_exact(Letter a) const { return images_[a - 1].exact; }
    const Integer& image_length(Letter a) const { return lengths_[a - 1]; }

    // First min(R, |T(k)|) letters of the tower word T(k); R <= cap.
    Word word_prefix(std::size_t R) const;

  private:
    struct CappedWord {
        Word word;
        bool exact = true;
    };
    friend struct CappedOps;

    unsigned k_;
    std::size_t cap_;
    std::vector<CappedWord> images_;
    std::vector<Integer> lengths_;
    std::vector<Integer> entries_;
};

// Builds the tower over the given branch entries (zero runs telescoped).
SubstitutionTower build_tower(const std::vector<Integer>& entries, unsigned k,
                              std::size_t cap = default_word_cap);

// First min(cap, |T(k)|) letters of branch(n_0) o ... o branch(n_r) applied to
// the letter k, for the full entry list given.
Word tower_prefix(const std::vector<Integer>& entries, unsigned k, std::size_t cap = default_word_cap);

}  // namespace infimax
