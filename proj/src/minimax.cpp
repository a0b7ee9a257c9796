#include "infimax/minimax.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace infimax {

void validate_counts(const CountVector& counts) {
    if (counts.size() < 2) throw MalformedInput("count vectors need at least 2 entries");
    for (const Integer& c : counts)
        if (c < 0) throw MalformedInput("counts must be non-negative");
    if (counts.back() <= 0) throw MalformedInput("the last count must be positive");
}

CountVector parse_counts(unsigned k, const std::string& text) {
    CountVector counts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(',', start);
        counts.push_back(parse_integer(text.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (counts.size() != k)
        throw MalformedInput("expected " + std::to_string(k) + " counts, got " +
                             std::to_string(counts.size()));
    validate_counts(counts);
    return counts;
}

std::string counts_str(const CountVector& counts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out << ',';
        out << counts[i].get_str();
    }
    return out.str();
}

Integer count_branch_index(const CountVector& counts) {
    return floor_quotient(counts.front(), counts.back());
}

CountVector count_step(const CountVector& counts) {
    validate_counts(counts);
    const std::size_t k = counts.size();
    const Integer n = count_branch_index(counts);
    CountVector out(k);
    for (std::size_t j = 0; j + 2 < k; ++j) out[j] = counts[j + 1];
    out[k - 2] = counts[0] - n * counts[k - 1];
    out[k - 1] = (n + 1) * counts[k - 1] - counts[0];
    return out;
}

bool is_terminal_counts(const CountVector& counts) {
    for (std::size_t i = 0; i + 1 < counts.size(); ++i)
        if (counts[i] != 0) return false;
    return true;
}

CountChain count_chain(const CountVector& counts, std::size_t max_steps) {
    validate_counts(counts);
    CountChain chain;
    chain.vectors.push_back(counts);
    while (!is_terminal_counts(chain.vectors.back())) {
        if (chain.entries.size() >= max_steps)
            throw CapExceeded("count chain did not terminate within " +
                              std::to_string(max_steps) + " steps");
        chain.entries.push_back(count_branch_index(chain.vectors.back()));
        chain.vectors.push_back(count_step(chain.vectors.back()));
    }
    chain.terminal_power = chain.vectors.back().back();
    return chain;
}

MinimaxExpansion minimax_expansion(const CountVector& counts) {
    CountChain chain = count_chain(counts);
    MinimaxExpansion expansion;
    expansion.k = static_cast<unsigned>(counts.size());
    expansion.entries = std::move(chain.entries);
    expansion.terminal_power = chain.terminal_power;
    SubstitutionTower lengths_only = build_tower(expansion.entries, expansion.k, 1);
    expansion.length =
        expansion.terminal_power * lengths_only.image_length(Letter(expansion.k));
    return expansion;
}

Word MinimaxExpansion::word(std::size_t cap) const {
    if (length > Integer(static_cast<unsigned long>(cap)))
        throw CapExceeded("minimax word has " + length.get_str() + " letters; cap is " +
                          std::to_string(cap));
    return prefix(cap);
}

Word MinimaxExpansion::prefix(std::size_t max_letters) const {
    Integer target_exact = length;
    if (Integer(static_cast<unsigned long>(max_letters)) < target_exact)
        target_exact = static_cast<unsigned long>(max_letters);
    const std::size_t target = static_cast<std::size_t>(target_exact.get_ui());
    if (target == 0) return Word(k);

    SubstitutionTower tower = build_tower(entries, k, target);
    Word base = tower.word_prefix(target);
    // base is either the full image of the top letter or already target letters
    Word out(k);
    while (out.size() < target) out.append(base, std::min(base.size(), target - out.size()));
    return out;
}

Word minimax_word(const CountVector& counts, std::size_t cap) {
    return minimax_expansion(counts).word(cap);
}

Word brute_force_minimax(const CountVector& counts, const Integer& max_sum) {
    validate_counts(counts);
    const unsigned k = static_cast<unsigned>(counts.size());
    Integer sum = 0;
    for (const Integer& c : counts) sum += c;
    if (sum > max_sum)
        throw CapExceeded("arrangement sum " + sum.get_str() + " exceeds the oracle cap " +
                          max_sum.get_str());

    // every maximal arrangement starts with its largest letter, which is k here
    std::vector<Letter> rest;
    for (unsigned letter = 1; letter <= k; ++letter) {
        std::size_t copies = static_cast<std::size_t>(counts[letter - 1].get_ui());
        if (letter == k) --copies;
        rest.insert(rest.end(), copies, Letter(letter));
    }
    std::sort(rest.begin(), rest.end());

    do {
        std::vector<Letter> letters;
        letters.reserve(rest.size() + 1);
        letters.push_back(Letter(k));
        letters.insert(letters.end(), rest.begin(), rest.end());
        Word candidate(k, std::move(letters));
        if (is_maximal_word(candidate)) return candidate;
    } while (std::next_permutation(rest.begin(), rest.end()));

    throw InternalError("no maximal arrangement found");
}

CountVector smallest_integer_multiple(const RationalPoint& alpha) {
    Integer lcm = 1;
    for (const Rational& c : alpha.components()) {
        Integer den = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    CountVector counts;
    counts.reserve(alpha.dimension());
    for (const Rational& c : alpha.components()) {
        Rational scaled = c * Rational(lcm);
        if (scaled.get_den() != 1) throw InternalError("integer multiple is not integral");
        counts.push_back(scaled.get_num());
    }
    return counts;
}

Word min_periodic(const RationalPoint& alpha, std::size_t cap) {
    return minimax_word(smallest_integer_multiple(alpha), cap);
}

}  // namespace infimax
