#include "infimax/word.hpp"

#include <algorithm>
#include <sstream>

namespace infimax {

namespace {

Letter parse_letter_token(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw MalformedInput("expected a decimal letter, got '" + tok + "'");
    try {
        return static_cast<Letter>(std::stoul(tok));
    } catch (const std::exception&) {
        throw MalformedInput("letter out of range: '" + tok + "'");
    }
}

}  // namespace

Word::Word(unsigned k, std::vector<Letter> letters) : k_(k), letters_(std::move(letters)), counts_(k, 0) {
    if (k_ < 2) throw MalformedInput("alphabet needs at least two letters");
    for (Letter a : letters_) {
        if (a < 1 || a > k_) throw MalformedInput("letter out of range 1.." + std::to_string(k_));
        ++counts_[a - 1];
    }
}

Word Word::parse(unsigned k, const std::string& text) {
    std::vector<Letter> letters;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            letters.push_back(parse_letter_token(tok));
    } else if (k <= 9) {
        for (char c : text) {
            if (c < '1' || c > '9') throw MalformedInput("expected digits 1..9 in word");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
    } else if (!text.empty()) {
        letters.push_back(parse_letter_token(text));
    }
    return Word(k, std::move(letters));
}

void Word::append(Letter a) {
    if (a < 1 || a > k_) throw MalformedInput("letter out of range");
    letters_.push_back(a);
    ++counts_[a - 1];
}

void Word::append(const Word& w) { append(w, w.size()); }

void Word::append(const Word& w, std::size_t take) {
    take = std::min(take, w.size());
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.begin() + take);
    if (take == w.size()) {
        for (unsigned i = 0; i < k_; ++i) counts_[i] += w.counts_[i];
    } else {
        for (std::size_t i = 0; i < take; ++i) ++counts_[w.letters_[i] - 1];
    }
}

Word Word::prefix(std::size_t n) const {
    n = std::min(n, size());
    return Word(k_, std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::repeated(std::size_t times) const {
    Word out(k_);
    for (std::size_t i = 0; i < times; ++i) out.append(*this);
    return out;
}

std::string Word::str() const {
    std::string out;
    if (k_ <= 9) {
        out.reserve(size());
        for (Letter a : letters_) out.push_back(static_cast<char>('0' + a));
    } else {
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(letters_[i]);
        }
    }
    return out;
}

int word_compare(const Word& u, const Word& v) {
    if (u.alphabet_size() != v.alphabet_size()) throw MalformedInput("alphabet mismatch");
    std::size_t m = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (u.at(i) != v.at(i)) return u.at(i) < v.at(i) ? -1 : 1;
    }
    if (u.size() == v.size()) return 0;
    // proper initial subword is greater
    return u.size() < v.size() ? 1 : -1;
}

int lex_compare(const Word& u, const Word& v) {
    if (u.alphabet_size() != v.alphabet_size()) throw MalformedInput("alphabet mismatch");
    std::size_t m = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (u.at(i) != v.at(i)) return u.at(i) < v.at(i) ? -1 : 1;
    }
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;
}

bool is_maximal_word(const Word& w) {
    const auto& s = w.letters();
    std::size_t n = s.size();
    for (std::size_t r = 1; r < n; ++r) {
        // compare rotation starting at r against w
        for (std::size_t i = 0; i < n; ++i) {
            Letter a = s[(r + i) % n];
            if (a != s[i]) {
                if (a > s[i]) return false;
                break;
            }
        }
    }
    return true;
}

bool is_minimal_word(const Word& w) {
    const auto& s = w.letters();
    std::size_t n = s.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            Letter a = s[(r + i) % n];
            if (a != s[i]) {
                if (a < s[i]) return false;
                break;
            }
        }
    }
    return true;
}

namespace {

// z[i] = length of the longest common prefix of s and s[i..]
std::vector<std::size_t> z_array(const std::vector<Letter>& s) {
    std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
        if (i + z[i] > r) l = i, r = i + z[i];
    }
    return z;
}

}  // namespace

bool is_maximal_prefix_consistent(const Word& w) {
    const auto& s = w.letters();
    std::size_t n = s.size();
    auto z = z_array(s);
    for (std::size_t r = 1; r < n; ++r) {
        if (r + z[r] == n) continue;           // suffix equals prefix on the whole overlap
        if (s[r + z[r]] > s[z[r]]) return false;  // suffix beats the prefix
    }
    return true;
}

std::size_t max_rotation_index(const Word& w) {
    const auto& in = w.letters();
    std::size_t n = in.size();
    if (n <= 1) return 0;
    // Booth's failure-function algorithm with comparisons flipped for maxima.
    std::vector<Letter> s(in);
    s.insert(s.end(), in.begin(), in.end());
    std::vector<std::ptrdiff_t> f(s.size(), -1);
    std::size_t best = 0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        Letter sj = s[j];
        std::ptrdiff_t i = f[j - best - 1];
        while (i != -1 && sj != s[best + i + 1]) {
            if (sj > s[best + i + 1]) best = j - i - 1;
            i = f[i];
        }
        if (sj != s[best + i + 1]) {
            if (sj > s[best]) best = j;
            f[j - best] = -1;
        } else {
            f[j - best] = i + 1;
        }
    }
    return best % n;
}

Word rotation(const Word& w, std::size_t start) {
    const auto& s = w.letters();
    std::size_t n = s.size();
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(s[(start + i) % n]);
    return Word(w.alphabet_size(), std::move(out));
}

std::vector<Rational> proportions(const Word& w) {
    if (w.empty()) throw MalformedInput("empty word has no letter proportions");
    std::vector<Rational> out;
    out.reserve(w.alphabet_size());
    for (std::size_t c : w.counts()) {
        Rational r(static_cast<unsigned long>(c), static_cast<unsigned long>(w.size()));
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

SupWindow sup_orbit_window(const Word& w, std::size_t R) {
    if (R < 1 || R > w.size()) throw MalformedInput("window length exceeds the word");
    const auto& s = w.letters();
    std::size_t best = 0;
    for (std::size_t r = 1; r + R <= s.size(); ++r) {
        for (std::size_t i = 0; i < R; ++i) {
            if (s[r + i] != s[best + i]) {
                if (s[r + i] > s[best + i]) best = r;
                break;
            }
        }
    }
    return SupWindow{Word(w.alphabet_size(), std::vector<Letter>(s.begin() + best, s.begin() + best + R)), best};
}

Word sup_orbit_prefix(const Word& w, std::size_t R) { return sup_orbit_window(w, R).word; }

Word reverse_alphabet(const Word& w) {
    unsigned k = w.alphabet_size();
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter a : w.letters()) out.push_back(k + 1 - a);
    return Word(k, std::move(out));
}

std::string render_power_form(const Word& w) {
    if (w.empty()) return "";
    Letter lead = w.at(0);
    if (lead != *std::max_element(w.letters().begin(), w.letters().end())) return w.str();
    // split into blocks, each starting with the leading letter
    std::vector<Word> blocks;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i + 1;
        while (j < w.size() && w.at(j) != lead) ++j;
        blocks.push_back(Word(w.alphabet_size(),
                              std::vector<Letter>(w.letters().begin() + i, w.letters().begin() + j)));
        i = j;
    }
    std::string out;
    for (std::size_t i = 0; i < blocks.size();) {
        std::size_t run = 1;
        while (i + run < blocks.size() && blocks[i + run] == blocks[i]) ++run;
        if (!out.empty()) out.push_back(' ');
        out += blocks[i].str();
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out;
}

}  // namespace infimax
