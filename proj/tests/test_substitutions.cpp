#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "infimax/substitution.hpp"
#include "infimax/word.hpp"

using namespace infimax;

namespace {

const std::string fixed64 =
    "3123113122312311311312311312231223123113122312311311312311311312";

std::string period41() {
    std::string s = "31";
    for (int i = 0; i < 10; ++i) s += "311";
    for (int i = 0; i < 3; ++i) s += "312";
    return s;
}

Word random_word(std::mt19937_64& rng, unsigned k, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<Letter> letter_dist(1, k);
    std::vector<Letter> letters(len_dist(rng));
    for (Letter& a : letters) a = letter_dist(rng);
    return Word(k, std::move(letters));
}

}  // namespace

TEST_CASE("branch substitution images") {
    Substitution s = branch_substitution(3, 3);
    CHECK(s.image(1).str() == "2");
    CHECK(s.image(2).str() == "31111");  // k 1^{n+1}
    CHECK(s.image(3).str() == "3111");   // k 1^n

    Substitution z = branch_substitution(0, 4);
    CHECK(z.image(1).str() == "2");
    CHECK(z.image(2).str() == "3");
    CHECK(z.image(3).str() == "41");
    CHECK(z.image(4).str() == "4");  // the zero branch fixes the top letter

    CHECK(apply(z, Word::parse(4, "4111233")).str() == "422234141");
}

TEST_CASE("composition applies right-then-left") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        Substitution s1 = branch_substitution(rng() % 5, k);
        Substitution s2 = branch_substitution(rng() % 5, k);
        Word w = random_word(rng, k, 1, 8);
        CHECK(apply(compose(s1, s2), w) == apply(s1, apply(s2, w)));
    }
}

TEST_CASE("abelianization matches the branch matrix") {
    for (unsigned k = 2; k <= 5; ++k)
        for (unsigned long n = 0; n <= 6; ++n) {
            IntMatrix from_sub = abelian_matrix(branch_substitution(n, k));
            IntMatrix direct = branch_matrix(Integer(n), k);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) CHECK(from_sub.at(i, j) == direct.at(i, j));
        }
}

TEST_CASE("branch matrix entries at k=3") {
    IntMatrix m = branch_matrix(1, 3);
    const long expected[3][3] = {{0, 2, 1}, {1, 0, 0}, {0, 1, 1}};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) CHECK(m.at(i, j) == expected[i][j]);

    IntMatrix cube = power(m, 3);
    const long expected3[3][3] = {{1, 5, 3}, {2, 1, 1}, {1, 3, 2}};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) CHECK(cube.at(i, j) == expected3[i][j]);
}

TEST_CASE("matrix power agrees with repeated multiplication") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        IntMatrix a = branch_matrix(Integer(rng() % 7), k);
        unsigned long e = rng() % 6;
        IntMatrix by_power = power(a, e);
        IntMatrix by_mult = identity_matrix(k);
        for (unsigned long i = 0; i < e; ++i) by_mult = multiply(by_mult, a);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) CHECK(by_power.at(i, j) == by_mult.at(i, j));
    }
}

TEST_CASE("column lengths count image letters") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        Substitution s = branch_substitution(rng() % 6, k);
        std::vector<Integer> lengths = column_lengths(abelian_matrix(s));
        for (unsigned a = 1; a <= k; ++a)
            CHECK(lengths[a - 1] == Integer(static_cast<unsigned long>(s.image(a).size())));
    }
}

TEST_CASE("towers expand the worked examples") {
    CHECK(tower_prefix({1, 0, 10, 3}, 3).str() == period41());
    CHECK(tower_prefix({0, 3, 1, 2}, 4).str() == "422234141");
    CHECK(tower_prefix(std::vector<Integer>(8, Integer(1)), 3, 64).str() == fixed64);
}

TEST_CASE("tower images nest as prefixes") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        SubstitutionTower tower(k, 4000);
        Word previous = tower.image_prefix(Letter(k));
        for (int step = 0; step < 6; ++step) {
            tower.extend(Integer(rng() % 4));
            const Word& current = tower.image_prefix(Letter(k));
            REQUIRE(current.size() >= previous.size());
            CHECK(current.prefix(previous.size()) == previous);
            previous = current;
        }
    }
}

TEST_CASE("exact lengths survive the cap") {
    std::vector<Integer> entries{2, 1, 3, 0, 2, 4};
    SubstitutionTower capped(3, 10);
    SubstitutionTower wide(3, unlimited);
    IntMatrix product = identity_matrix(3);
    for (const Integer& n : entries) {
        capped.extend(n);
        wide.extend(n);
        product = multiply(product, branch_matrix(n, 3));
    }
    std::vector<Integer> lengths = column_lengths(product);
    for (unsigned a = 1; a <= 3; ++a) {
        CHECK(capped.image_length(a) == lengths[a - 1]);
        CHECK(wide.image_length(a) == lengths[a - 1]);
        CHECK(wide.image_exact(a));
        CHECK(Integer(static_cast<unsigned long>(wide.image_prefix(a).size())) == lengths[a - 1]);
        if (!capped.image_exact(a)) {
            CHECK(capped.image_prefix(a).size() == capped.cap());
            CHECK(capped.image_prefix(a) == wide.image_prefix(a).prefix(capped.cap()));
        }
    }
}

TEST_CASE("zero runs telescope") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        std::size_t run = 1 + static_cast<std::size_t>(rng() % 200);

        SubstitutionTower bulk(k, 500);
        bulk.extend(1);
        bulk.extend_zero_run(run);
        bulk.extend(2);

        SubstitutionTower stepwise(k, 500);
        stepwise.extend(1);
        for (std::size_t i = 0; i < run; ++i) stepwise.extend(0);
        stepwise.extend(2);

        CHECK(bulk.depth() == stepwise.depth());
        for (unsigned a = 1; a <= k; ++a) {
            CHECK(bulk.image_length(a) == stepwise.image_length(a));
            CHECK(bulk.image_prefix(a) == stepwise.image_prefix(a));
        }
    }
}

TEST_CASE("build_tower handles zero runs beyond the telescoping threshold") {
    std::vector<Integer> entries;
    entries.push_back(1);
    for (int i = 0; i < 300; ++i) entries.push_back(0);
    entries.push_back(3);
    SubstitutionTower tower = build_tower(entries, 3, 200);
    CHECK(tower.depth() == entries.size());

    SubstitutionTower reference(3, 200);
    for (const Integer& n : entries) reference.extend(n);
    CHECK(tower.image_length(3) == reference.image_length(3));
    CHECK(tower.image_prefix(3) == reference.image_prefix(3));
}

TEST_CASE("the zero branch fixes the top letter image") {
    SubstitutionTower tower(3, 100);
    tower.extend(2);
    Word before = tower.image_prefix(3);
    Integer length_before = tower.image_length(3);
    tower.extend(0);
    CHECK(tower.image_prefix(3) == before);
    CHECK(tower.image_length(3) == length_before);
}

TEST_CASE("tower word structure: the top letter leads and ones follow") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        std::vector<Integer> entries;
        std::size_t depth = 2 + static_cast<std::size_t>(rng() % 5);
        for (std::size_t i = 0; i < depth; ++i) entries.push_back(Integer(rng() % 4));
        Word w = tower_prefix(entries, k, 2000);
        if (w.empty()) continue;
        CHECK(w.at(0) == Letter(k));
        CHECK(is_maximal_prefix_consistent(w));
    }
}
