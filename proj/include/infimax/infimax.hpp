#pragma once

#include <cstddef>
#include <vector>

#include "infimax/minimax.hpp"
#include "infimax/numeric.hpp"
#include "infimax/simplex.hpp"
#include "infimax/substitution.hpp"
#include "infimax/word.hpp"

namespace infimax {

// A determined prefix of the limit sequence of a substitution tower, together
// with the evidence used to determine it.
struct InfimaxPrefix {
    Word word;                  // the first R letters
    std::size_t depth = 0;      // itinerary entries consumed
    Itinerary itinerary_used;   // the consumed entries (terminated when the zero tail is known)
    Integer exact_total_length; // exact length of the depth-`depth` approximant word
};

InfimaxPrefix infimax_prefix(const ItinerarySource& source, unsigned k, std::size_t R);
InfimaxPrefix infimax_prefix(const RationalPoint& alpha, std::size_t R);

// Compares the infimax prefix against the largest orbit window of w: the
// infimax is a lower bound for every sequence with the right letter balance.
struct LowerBoundCheck {
    bool holds = false;             // infimax side <= sup side
    bool equal = false;
    std::size_t first_difference = 0;  // R when equal
    std::size_t sup_window_start = 0;
    Word infimax_side;
    Word sup_side;
};
LowerBoundCheck check_lower_bound(const RationalPoint& alpha, const Word& w, std::size_t R);

// A maximal word agreeing with the infimax on R letters, assembled as
// U W_0^{p_0} W_1^{p_1} ... from approximant periods, with the powers chosen
// so that running letter balances stay near the target direction.
struct ClosureWitness {
    Word word;
    std::size_t depth = 0;          // tower depth used for the agreement head
    bool periodic_fallback = false; // the plain periodic word already qualifies
    Word head;                      // U (or the period in the fallback)
    std::vector<Word> blocks;       // the W_j actually used
    std::vector<Integer> powers;    // the p_j actually used
};
ClosureWitness closure_witness(const RationalPoint& alpha, std::size_t R,
                               std::size_t max_letters = default_word_cap);

// Almost-periodicity: a window length N such that every length-N window of the
// limit sequence contains the target word.
struct AlmostPeriodWitness {
    std::size_t depth = 0;          // smallest depth whose approximant starts with the target
    Integer window;                 // N
    bool verified = false;          // spot check ran within the letter budget
    std::size_t verified_letters = 0;
};
AlmostPeriodWitness almost_period_witness(const ItinerarySource& source, unsigned k,
                                          const Word& target,
                                          std::size_t verify_cap = 1'000'000);

}  // namespace infimax
