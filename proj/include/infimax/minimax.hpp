#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infimax/numeric.hpp"
#include "infimax/simplex.hpp"
#include "infimax/substitution.hpp"
#include "infimax/word.hpp"

namespace infimax {

// Integer letter counts (alpha-hat): non-negative with a positive last entry.
using CountVector = std::vector<Integer>;

void validate_counts(const CountVector& counts);
CountVector parse_counts(unsigned k, const std::string& text);  // "24,3,14"
std::string counts_str(const CountVector& counts);

// the branch n = floor(v_1 / v_k) containing the count vector
Integer count_branch_index(const CountVector& counts);

// the discrete division-remainder step; entry sum decreases by v_1
CountVector count_step(const CountVector& counts);

bool is_terminal_counts(const CountVector& counts);  // (0, ..., 0, c)

// The full division-remainder run down to (0,...,0,c): every vector visited,
// the branch indices taken, and the terminal multiplicity c.
struct CountChain {
    std::vector<CountVector> vectors;  // input first, terminal last
    std::vector<Integer> entries;      // one branch index per step
    Integer terminal_power;            // c
};
CountChain count_chain(const CountVector& counts, std::size_t max_steps = 10'000'000);

// The minimax word in unexpanded form: a substitution tower applied to the
// terminal power of the top letter. Expansion is on demand so lengths far
// beyond any in-memory word stay representable.
struct MinimaxExpansion {
    unsigned k = 0;
    std::vector<Integer> entries;
    Integer terminal_power;
    Integer length;  // exact number of letters

    Word word(std::size_t cap = default_word_cap) const;  // CapExceeded if length > cap
    Word prefix(std::size_t max_letters) const;           // min(length, max_letters) letters
};
MinimaxExpansion minimax_expansion(const CountVector& counts);

// the smallest maximal arrangement with the given letter counts
Word minimax_word(const CountVector& counts, std::size_t cap = default_word_cap);

// Independent oracle: walk all arrangements with the given counts in
// lexicographic order and return the first maximal one.
Word brute_force_minimax(const CountVector& counts, const Integer& max_sum = 14);

// counts of the smallest integer multiple of a rational direction
CountVector smallest_integer_multiple(const RationalPoint& alpha);

// the period of the minimum periodic maximal sequence with direction alpha
Word min_periodic(const RationalPoint& alpha, std::size_t cap = default_word_cap);

}  // namespace infimax
