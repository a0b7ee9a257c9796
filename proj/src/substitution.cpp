#include "infimax/substitution.hpp"

#include <algorithm>

namespace infimax {

Substitution identity_substitution(unsigned k) {
    Substitution s;
    s.k = k;
    for (Letter a = 1; a <= k; ++a) s.images.push_back(Word(k, {a}));
    return s;
}

Substitution branch_substitution(unsigned long n, unsigned k) {
    if (k < 2) throw MalformedInput("alphabet needs at least two letters");
    Substitution s;
    s.k = k;
    for (Letter a = 1; a + 1 < k; ++a) s.images.push_back(Word(k, {a + 1}));
    std::vector<Letter> tail(n + 1, 1);
    tail.insert(tail.begin(), k);
    s.images.push_back(Word(k, tail));             // k-1 -> k 1^{n+1}
    tail.pop_back();
    s.images.push_back(Word(k, std::move(tail)));  // k -> k 1^n
    return s;
}

Word apply(const Substitution& s, const Word& w) {
    if (s.k != w.alphabet_size()) throw MalformedInput("alphabet mismatch");
    Word out(s.k);
    for (Letter a : w.letters()) out.append(s.image(a));
    return out;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
    if (s1.k != s2.k) throw MalformedInput("alphabet mismatch");
    Substitution out;
    out.k = s1.k;
    for (Letter a = 1; a <= s1.k; ++a) out.images.push_back(apply(s1, s2.image(a)));
    return out;
}

IntMatrix identity_matrix(unsigned k) {
    IntMatrix m(k);
    for (unsigned i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
    if (A.k != B.k) throw MalformedInput("matrix size mismatch");
    IntMatrix out(A.k);
    for (unsigned i = 0; i < A.k; ++i)
        for (unsigned t = 0; t < A.k; ++t) {
            if (A.at(i, t) == 0) continue;
            for (unsigned j = 0; j < A.k; ++j) out.at(i, j) += A.at(i, t) * B.at(t, j);
        }
    return out;
}

IntMatrix power(const IntMatrix& A, unsigned long e) {
    IntMatrix result = identity_matrix(A.k);
    IntMatrix base = A;
    while (e) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

IntMatrix abelian_matrix(const Substitution& s) {
    IntMatrix m(s.k);
    for (unsigned j = 0; j < s.k; ++j) {
        const auto& counts = s.images[j].counts();
        for (unsigned i = 0; i < s.k; ++i) m.at(i, j) = static_cast<unsigned long>(counts[i]);
    }
    return m;
}

IntMatrix branch_matrix(const Integer& n, unsigned k) {
    IntMatrix m(k);
    m.at(0, k - 2) = n + 1;
    m.at(0, k - 1) = n;
    for (unsigned i = 1; i < k; ++i) m.at(i, i - 1) = 1;
    m.at(k - 1, k - 1) = 1;
    return m;
}

std::vector<Integer> column_lengths(const IntMatrix& A) {
    std::vector<Integer> out(A.k, 0);
    for (unsigned j = 0; j < A.k; ++j)
        for (unsigned i = 0; i < A.k; ++i) out[j] += A.at(i, j);
    return out;
}

// ----- capped tower -----
//
// A capped word is a true prefix of some longer word: `exact` records whether
// it is the whole thing. Truncation only ever happens at exactly `cap`
// letters, so concatenations may stop at the first truncated piece and still
// deliver a full cap-length prefix.

struct CappedOps {
    using CW = SubstitutionTower::CappedWord;

    struct Builder {
        Word word;
        bool exact = true;
        std::size_t cap;

        Builder(unsigned k, std::size_t cap_letters) : word(k), cap(cap_letters) {}

        // Returns false once nothing more may be appended: the cap was hit or
        // a truncated piece was consumed (content after it is unknown).
        bool add(const Word& piece, bool piece_exact) {
            std::size_t take = std::min(piece.size(), cap - word.size());
            word.append(piece, take);
            if (piece_exact && take == piece.size()) return true;
            exact = false;
            return false;
        }
    };

    // k followed by `ones` letters 1, capped
    static CW run_word(const Integer& ones, unsigned k, std::size_t cap) {
        CW out{Word(k), true};
        out.word.append(static_cast<Letter>(k));
        Integer left = ones;
        while (left > 0 && out.word.size() < cap) {
            out.word.append(1);
            --left;
        }
        out.exact = left == 0;
        return out;
    }

    static std::vector<CW> branch_images(const Integer& n, unsigned k, std::size_t cap) {
        std::vector<CW> out;
        for (Letter a = 1; a + 1 < k; ++a) out.push_back(CW{Word(k, {static_cast<Letter>(a + 1)}), true});
        out.push_back(run_word(n + 1, k, cap));
        out.push_back(run_word(n, k, cap));
        return out;
    }

    // expansion of `w` where each letter a expands to images[a-1], capped
    static CW expand(const std::vector<CW>& images, const CW& w, unsigned k, std::size_t cap) {
        Builder b(k, cap);
        for (Letter a : w.word.letters())
            if (!b.add(images[a - 1].word, images[a - 1].exact)) break;
        return CW{std::move(b.word), b.exact && w.exact};
    }

    static std::vector<CW> compose_images(const std::vector<CW>& outer, const std::vector<CW>& inner,
                                          unsigned k, std::size_t cap) {
        std::vector<CW> out;
        out.reserve(inner.size());
        for (const CW& w : inner) out.push_back(expand(outer, w, k, cap));
        return out;
    }
};

SubstitutionTower::SubstitutionTower(unsigned k, std::size_t cap) : k_(k), cap_(cap) {
    if (k < 2) throw MalformedInput("alphabet needs at least two letters");
    if (cap_ == 0) throw MalformedInput("cap must be positive");
    for (Letter a = 1; a <= k; ++a) {
        images_.push_back(CappedWord{Word(k, {a}), true});
        lengths_.push_back(1);
    }
}

void SubstitutionTower::extend(const Integer& n) {
    if (n < 0) throw MalformedInput("branch entries must be non-negative");
    std::vector<CappedWord> next(k_);
    std::vector<Integer> next_len(k_);
    for (unsigned i = 0; i + 2 < k_; ++i) {  // letter i+1 maps to old T(i+2)
        next[i] = images_[i + 1];
        next_len[i] = lengths_[i + 1];
    }
    // letters k-1 and k map to T(k) followed by n+1 (resp. n) copies of T(1)
    for (unsigned which = 0; which < 2; ++which) {
        Integer copies = which == 0 ? Integer(n + 1) : n;
        CappedOps::Builder b(k_, cap_);
        bool more = b.add(images_[k_ - 1].word, images_[k_ - 1].exact);
        for (Integer left = copies; more && left > 0; --left)
            more = b.add(images_[0].word, images_[0].exact);
        next[k_ - 2 + which] = CappedWord{std::move(b.word), b.exact};
        next_len[k_ - 2 + which] = lengths_[k_ - 1] + copies * lengths_[0];
    }
    images_ = std::move(next);
    lengths_ = std::move(next_len);
    entries_.push_back(n);
}

void SubstitutionTower::extend_zero_run(std::size_t count) {
    // telescoped composition with branch(0)^count: binary powering of capped
    // images avoids `count` sequential word copies on long zero runs
    constexpr std::size_t small_run = 64;
    if (count <= small_run) {
        for (std::size_t i = 0; i < count; ++i) extend(0);
        return;
    }
    std::vector<CappedWord> zero_pow = CappedOps::branch_images(0, k_, cap_);
    std::vector<CappedWord> acc;  // empty acts as the identity
    std::size_t e = count;
    while (e) {
        if (e & 1) acc = acc.empty() ? zero_pow : CappedOps::compose_images(acc, zero_pow, k_, cap_);
        e >>= 1;
        if (e) zero_pow = CappedOps::compose_images(zero_pow, zero_pow, k_, cap_);
    }
    std::vector<CappedWord> next;
    next.reserve(k_);
    for (const CappedWord& zi : acc) next.push_back(CappedOps::expand(images_, zi, k_, cap_));
    IntMatrix zero_counts = power(branch_matrix(0, k_), count);
    std::vector<Integer> next_len(k_, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) next_len[i] += zero_counts.at(j, i) * lengths_[j];
    images_ = std::move(next);
    lengths_ = std::move(next_len);
    entries_.insert(entries_.end(), count, Integer(0));
}

Word SubstitutionTower::word_prefix(std::size_t R) const {
    if (R > cap_) throw InternalError("tower prefix request exceeds the cap");
    return images_[k_ - 1].word.prefix(R);
}

SubstitutionTower build_tower(const std::vector<Integer>& entries, unsigned k, std::size_t cap) {
    SubstitutionTower t(k, cap);
    for (std::size_t i = 0; i < entries.size();) {
        if (entries[i] == 0) {
            std::size_t j = i;
            while (j < entries.size() && entries[j] == 0) ++j;
            t.extend_zero_run(j - i);
            i = j;
        } else {
            t.extend(entries[i]);
            ++i;
        }
    }
    return t;
}

Word tower_prefix(const std::vector<Integer>& entries, unsigned k, std::size_t cap) {
    return build_tower(entries, k, cap).word_prefix(cap);
}

}  // namespace infimax
