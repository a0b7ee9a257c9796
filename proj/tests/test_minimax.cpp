#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "infimax/minimax.hpp"

using namespace infimax;

namespace {

std::string period41() {
    std::string s = "31";
    for (int i = 0; i < 10; ++i) s += "311";
    for (int i = 0; i < 3; ++i) s += "312";
    return s;
}

CountVector random_counts(std::mt19937_64& rng, unsigned k, unsigned long max_entry) {
    CountVector counts(k);
    for (unsigned i = 0; i < k; ++i) counts[i] = rng() % (max_entry + 1);
    counts[k - 1] = 1 + rng() % max_entry;
    return counts;
}

}  // namespace

TEST_CASE("count parsing and validation") {
    CountVector counts = parse_counts(3, "24,3,14");
    CHECK(counts == CountVector{24, 3, 14});
    CHECK(counts_str(counts) == "24,3,14");
    CHECK_THROWS_AS(parse_counts(3, "24,3"), MalformedInput);
    CHECK_THROWS_AS(parse_counts(3, "24,3,0"), MalformedInput);   // last entry positive
    CHECK_THROWS_AS(parse_counts(3, "-1,3,14"), MalformedInput);
    CHECK_THROWS_AS(parse_counts(3, "1/2,1,1"), MalformedInput);  // integers only
}

TEST_CASE("count chain of (24,3,14)") {
    CountChain chain = count_chain({24, 3, 14});
    REQUIRE(chain.vectors.size() == 5);
    CHECK(chain.vectors[0] == CountVector{24, 3, 14});
    CHECK(chain.vectors[1] == CountVector{3, 10, 4});
    CHECK(chain.vectors[2] == CountVector{10, 3, 1});
    CHECK(chain.vectors[3] == CountVector{3, 0, 1});
    CHECK(chain.vectors[4] == CountVector{0, 0, 1});
    CHECK(chain.entries == std::vector<Integer>{1, 0, 10, 3});
    CHECK(chain.terminal_power == 1);
}

TEST_CASE("count chain of (2,3,1,3)") {
    CountChain chain = count_chain({2, 3, 1, 3});
    REQUIRE(chain.vectors.size() == 5);
    CHECK(chain.vectors[1] == CountVector{3, 1, 2, 1});
    CHECK(chain.vectors[2] == CountVector{1, 2, 0, 1});
    CHECK(chain.vectors[3] == CountVector{2, 0, 0, 1});
    CHECK(chain.vectors[4] == CountVector{0, 0, 0, 1});
    CHECK(chain.entries == std::vector<Integer>{0, 3, 1, 2});
    CHECK(chain.terminal_power == 1);
}

TEST_CASE("each step shrinks the entry sum by the leading entry") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 600; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 4);
        CountVector v = random_counts(rng, k, 40);
        if (is_terminal_counts(v)) continue;
        CountVector next = count_step(v);
        Integer sum = 0, next_sum = 0;
        for (const Integer& x : v) sum += x;
        for (const Integer& x : next) next_sum += x;
        CHECK(next_sum == sum - v[0]);
        CHECK(next.back() >= 1);
    }
}

TEST_CASE("minimax words of the worked examples") {
    CHECK(minimax_word({24, 3, 14}).str() == period41());
    CHECK(minimax_word({2, 3, 1, 3}).str() == "422234141");
    CHECK(minimax_word({0, 0, 5}).str() == "33333");
    CHECK(minimax_word({0, 1, 1}).str() == "32");
    CHECK(minimax_word({1, 0, 1}).str() == "31");
}

TEST_CASE("minimax words are maximal, least, and have the right counts") {
    std::mt19937_64 rng(222);
    for (int trial = 0; trial < 400; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        CountVector counts = random_counts(rng, k, 8);
        Word w = minimax_word(counts);
        CHECK(is_maximal_word(w));
        for (unsigned i = 0; i < k; ++i)
            CHECK(Integer(static_cast<unsigned long>(w.counts()[i])) == counts[i]);
    }
}

TEST_CASE("the expansion reports the exact length without materializing") {
    MinimaxExpansion expansion = minimax_expansion({24, 3, 14});
    CHECK(expansion.length == 41);
    CHECK(expansion.entries == std::vector<Integer>{1, 0, 10, 3});
    CHECK(expansion.terminal_power == 1);
    CHECK(expansion.word().str() == period41());
    CHECK(expansion.prefix(5).str() == "31311");

    // far beyond any in-memory cap the length is still exact
    MinimaxExpansion huge = minimax_expansion({1000000000, 1, 1});
    CHECK(huge.length == Integer("1000000002"));
    CHECK_THROWS_AS(huge.word(1000), CapExceeded);
    Word head = huge.prefix(10);
    CHECK(head.size() == 10);
    CHECK(head.at(0) == 3);
}

TEST_CASE("terminal multiples repeat the top letter") {
    MinimaxExpansion expansion = minimax_expansion({0, 0, 0, 7});
    CHECK(expansion.length == 7);
    CHECK(expansion.terminal_power == 7);
    CHECK(expansion.word().str() == "4444444");
}

TEST_CASE("brute force agrees on a small grid") {
    std::mt19937_64 rng(333);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        CountVector counts = random_counts(rng, k, 3);
        Integer sum = 0;
        for (const Integer& c : counts) sum += c;
        if (sum > 8) continue;
        CHECK(minimax_word(counts) == brute_force_minimax(counts));
    }
}

TEST_CASE("repetition scales the counts") {
    std::mt19937_64 rng(444);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        CountVector counts = random_counts(rng, k, 6);
        std::size_t N = 1 + static_cast<std::size_t>(rng() % 4);
        CountVector scaled(k);
        for (unsigned i = 0; i < k; ++i) scaled[i] = counts[i] * Integer(static_cast<unsigned long>(N));
        CHECK(minimax_word(scaled) == minimax_word(counts).repeated(N));
    }
}

TEST_CASE("smallest integer multiple recovers the counts") {
    CHECK(smallest_integer_multiple(RationalPoint::parse(3, "24/41,3/41,14/41")) ==
          CountVector{24, 3, 14});
    CHECK(smallest_integer_multiple(RationalPoint::parse(3, "1/2,1/4,1/4")) ==
          CountVector{2, 1, 1});
    CHECK(smallest_integer_multiple(RationalPoint::terminal(3)) == CountVector{0, 0, 1});
}

TEST_CASE("min_periodic is the minimax of the smallest multiple") {
    CHECK(min_periodic(RationalPoint::parse(3, "24/41,3/41,14/41")).str() == period41());
    CHECK(min_periodic(RationalPoint::terminal(3)).str() == "3");
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        CountVector counts = random_counts(rng, k, 9);
        RationalPoint alpha = RationalPoint::from_counts(counts);
        Word period = min_periodic(alpha);
        CHECK(is_maximal_word(period));
        // the period realizes the direction
        std::vector<Rational> props = proportions(period);
        for (unsigned i = 0; i < k; ++i) CHECK(props[i] == alpha[i]);
    }
}
