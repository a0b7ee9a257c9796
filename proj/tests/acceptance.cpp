// Acceptance gate: eight high-level criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails. Numeric thresholds are pinned
// below so a regression cannot silently loosen them.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "infimax/cli.hpp"
#include "infimax/infimax.hpp"
#include "infimax/minimax.hpp"
#include "infimax/regularity.hpp"
#include "infimax/simplex.hpp"
#include "infimax/substitution.hpp"
#include "infimax/word.hpp"

using namespace infimax;

namespace {

// ---- pinned thresholds ------------------------------------------------
constexpr int kPropertyCases = 500;              // per suite in criterion 4
constexpr double kOracleSweepSecondsLimit = 300.0;
constexpr double kSeparationSecondsLimit = 10.0;
constexpr double kLogContractionSlack = 1e-9;    // float slack in criterion 7
const Rational kSeparationThreshold(3, 4);       // delta_r must stay above
const Rational kDiameterThreshold(1001, 1000);   // contraction target
constexpr std::size_t kContractionBudget = 60;   // levels allowed to reach it
constexpr std::size_t kTerminationDenominator = 200;
constexpr std::size_t kTerminationStepBudget = 10000;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " - criterion " << id << ": " << name;
    if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

// collects the first few sub-failures of a criterion for the detail field
struct Collector {
    std::ostringstream detail;
    int count = 0;
    void fail(const std::string& message) {
        if (count < 3) detail << (count ? "; " : "") << message;
        ++count;
    }
    bool ok() const { return count == 0; }
    std::string str() const {
        std::string s = detail.str();
        if (count > 3) s += "; ... " + std::to_string(count - 3) + " more";
        return s;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string period41() {
    std::string s = "31";
    for (int i = 0; i < 10; ++i) s += "311";
    for (int i = 0; i < 3; ++i) s += "312";
    return s;
}

const char* const kFixedPoint64 =
    "3123113122312311311312311312231223123113122312311311312311311312";

CountVector random_counts(std::mt19937_64& rng, unsigned k, unsigned long max_entry) {
    CountVector counts(k);
    for (unsigned i = 0; i < k; ++i) counts[i] = rng() % (max_entry + 1);
    counts[k - 1] = 1 + rng() % max_entry;
    return counts;
}

// ---- criterion 1: the worked examples reproduce exactly ----------------

void criterion1() {
    Collector c;

    CountChain chain3 = count_chain({24, 3, 14});
    std::vector<CountVector> expected3{
        {24, 3, 14}, {3, 10, 4}, {10, 3, 1}, {3, 0, 1}, {0, 0, 1}};
    if (chain3.vectors != expected3) c.fail("three-letter chain vectors");
    if (chain3.entries != std::vector<Integer>{1, 0, 10, 3}) c.fail("three-letter chain entries");

    CountChain chain4 = count_chain({2, 3, 1, 3});
    std::vector<CountVector> expected4{
        {2, 3, 1, 3}, {3, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 0, 1}, {0, 0, 0, 1}};
    if (chain4.vectors != expected4) c.fail("four-letter chain vectors");
    if (chain4.entries != std::vector<Integer>{0, 3, 1, 2}) c.fail("four-letter chain entries");

    Word w3 = minimax_word({24, 3, 14});
    if (w3.str() != period41()) c.fail("41-letter minimax word");
    if (render_power_form(w3) != "31 311^10 312^3") c.fail("power form rendering");
    if (minimax_word({2, 3, 1, 3}).str() != "422234141") c.fail("nine-letter minimax word");
    if (brute_force_minimax({2, 3, 1, 3}).str() != "422234141") c.fail("brute-force cross-check");

    RationalPoint alpha3 = RationalPoint::parse(3, "24/41,3/41,14/41");
    if (branch_index(alpha3) != 1) c.fail("branch index of the 41-denominator direction");
    if (branch_index(RationalPoint::parse(3, "10/14,3/14,1/14")) != 10)
        c.fail("branch index of the 14-denominator direction");
    if (step(alpha3) != RationalPoint::parse(3, "3/17,10/17,4/17")) c.fail("three-letter step");
    RationalPoint alpha4 = RationalPoint::parse(4, "2/9,3/9,1/9,3/9");
    if (step(alpha4) != RationalPoint::parse(4, "3/7,1/7,2/7,1/7")) c.fail("four-letter step");

    Itinerary it3 = itinerary(alpha3);
    if (!it3.terminated || it3.entries != std::vector<Integer>{1, 0, 10, 3})
        c.fail("three-letter itinerary");
    Itinerary it4 = itinerary(alpha4);
    if (!it4.terminated || it4.entries != std::vector<Integer>{0, 3, 1, 2})
        c.fail("four-letter itinerary");
    if (point_from_finite_itinerary({1, 0, 10, 3}, 3) != alpha3) c.fail("point reconstruction k=3");
    if (point_from_finite_itinerary({0, 3, 1, 2}, 4) != alpha4) c.fail("point reconstruction k=4");

    if (tower_prefix({1, 0, 10, 3}, 3).str() != period41()) c.fail("tower expansion k=3");
    if (tower_prefix({0, 3, 1, 2}, 4).str() != "422234141") c.fail("tower expansion k=4");

    report(1, "worked examples reproduce exactly", c.ok(), c.str());
}

// ---- criterion 2: fixed-point prefix of the all-ones itinerary ---------

void criterion2() {
    Collector c;

    Word prefix = infimax_prefix(ItinerarySource::parse("periodic:1"), 3, 64).word;
    if (prefix.str() != kFixedPoint64) c.fail("library prefix mismatch");
    for (std::size_t r = 1; r <= 64; ++r)
        if (!is_maximal_prefix_consistent(prefix.prefix(r))) {
            c.fail("prefix inconsistent at length " + std::to_string(r));
            break;
        }

    std::ostringstream out, err;
    int code = run_cli({"infimax", "-k", "3", "--itinerary", "periodic:1", "-R", "64"}, out, err);
    if (code != 0 || out.str() != std::string(kFixedPoint64) + "\n") c.fail("CLI prefix mismatch");

    report(2, "the all-ones substitution fixed point is reproduced to 64 letters", c.ok(), c.str());
}

// ---- criterion 3: brute-force oracle sweeps ----------------------------

void sweep_grid(unsigned k, unsigned long max_sum, std::size_t expected_total,
                std::size_t expected_valid, Collector& c) {
    std::size_t total = 0, valid = 0;
    CountVector current(k, Integer(0));
    std::function<void(unsigned, unsigned long)> rec = [&](unsigned pos, unsigned long left) {
        if (pos + 1 == k) {
            for (unsigned long last = 0; last <= left; ++last) {
                current[pos] = last;
                ++total;
                if (last == 0) continue;
                ++valid;
                Word fast = minimax_word(current);
                Word slow = brute_force_minimax(current, Integer(max_sum));
                if (!(fast == slow))
                    c.fail("mismatch at " + counts_str(current) + ": " + fast.str() + " vs " +
                           slow.str());
            }
            return;
        }
        for (unsigned long value = 0; value <= left; ++value) {
            current[pos] = value;
            rec(pos + 1, left - value);
        }
    };
    rec(0, max_sum);
    if (total != expected_total)
        c.fail("k=" + std::to_string(k) + " grid size " + std::to_string(total));
    if (valid != expected_valid)
        c.fail("k=" + std::to_string(k) + " valid size " + std::to_string(valid));
}

void criterion3() {
    Collector c;
    auto start = std::chrono::steady_clock::now();
    sweep_grid(3, 10, 286, 220, c);
    sweep_grid(4, 9, 715, 495, c);
    double elapsed = seconds_since(start);
    if (elapsed >= kOracleSweepSecondsLimit)
        c.fail("sweep took " + std::to_string(elapsed) + " s");
    report(3, "exhaustive brute-force sweeps agree with the fast construction", c.ok(), c.str());
}

// ---- criterion 4: five algebraic property suites, 500 cases each -------

void criterion4() {
    Collector c;

    {  // order and maximality preservation under every branch substitution
        std::mt19937_64 rng(20240001);
        for (int i = 0; i < kPropertyCases; ++i) {
            unsigned k = 2 + static_cast<unsigned>(rng() % 3);
            Substitution s = branch_substitution(rng() % 6, k);
            std::uniform_int_distribution<std::size_t> len(1, 10);
            std::uniform_int_distribution<Letter> letter(1, k);
            std::vector<Letter> lu(len(rng)), lv(len(rng));
            for (Letter& a : lu) a = letter(rng);
            for (Letter& a : lv) a = letter(rng);
            Word u(k, lu), v(k, lv);
            int before = word_compare(u, v);
            int after = word_compare(apply(s, u), apply(s, v));
            if ((before < 0) != (after < 0) || (before > 0) != (after > 0)) {
                c.fail("order broken: " + u.str() + " vs " + v.str());
                break;
            }
            Word maximal = minimax_word(random_counts(rng, k, 5));
            if (!is_maximal_word(apply(s, maximal))) {
                c.fail("maximality broken at " + maximal.str());
                break;
            }
        }
    }

    {  // the integer division-remainder step commutes with normalization
        std::mt19937_64 rng(20240002);
        for (int i = 0; i < kPropertyCases; ++i) {
            unsigned k = 2 + static_cast<unsigned>(rng() % 3);
            CountVector v = random_counts(rng, k, 30);
            if (is_terminal_counts(v)) continue;
            RationalPoint lifted = RationalPoint::from_counts(v);
            if (count_branch_index(v) != branch_index(lifted)) {
                c.fail("branch mismatch at " + counts_str(v));
                break;
            }
            if (RationalPoint::from_counts(count_step(v)) != step(lifted)) {
                c.fail("diagram broken at " + counts_str(v));
                break;
            }
        }
    }

    {  // forward and inverse steps undo each other
        std::mt19937_64 rng(20240003);
        for (int i = 0; i < kPropertyCases; ++i) {
            unsigned k = 2 + static_cast<unsigned>(rng() % 3);
            RationalPoint alpha = RationalPoint::from_counts(random_counts(rng, k, 30));
            Integer n = rng() % 15;
            if (step(step_inverse(n, alpha)) != alpha) {
                c.fail("inverse-then-step broken at " + alpha.str());
                break;
            }
            if (!is_terminal(alpha) &&
                step_inverse(branch_index(alpha), step(alpha)) != alpha) {
                c.fail("step-then-inverse broken at " + alpha.str());
                break;
            }
        }
    }

    {  // repeating the counts N times repeats the word N times
        std::mt19937_64 rng(20240004);
        for (int i = 0; i < kPropertyCases; ++i) {
            unsigned k = 2 + static_cast<unsigned>(rng() % 3);
            CountVector counts = random_counts(rng, k, 6);
            std::size_t N = 1 + static_cast<std::size_t>(rng() % 4);
            CountVector scaled(k);
            for (unsigned j = 0; j < k; ++j)
                scaled[j] = counts[j] * Integer(static_cast<unsigned long>(N));
            if (!(minimax_word(scaled) == minimax_word(counts).repeated(N))) {
                c.fail("power law broken at " + counts_str(counts) + " x" + std::to_string(N));
                break;
            }
        }
    }

    {  // vanishing components match the vanishing itinerary classes
        std::mt19937_64 rng(20240005);
        for (int i = 0; i < kPropertyCases; ++i) {
            unsigned k = 2 + static_cast<unsigned>(rng() % 3);
            CountVector counts = random_counts(rng, k, 60 / k);
            Integer sum = std::accumulate(counts.begin(), counts.end(), Integer(0));
            if (sum > 60) continue;
            RationalPoint alpha = RationalPoint::from_counts(counts);
            ZeroComponentReport profile = zero_component_profile(alpha, itinerary(alpha));
            if (!profile.decidable || !profile.all_consistent) {
                c.fail("zero profile broken at " + alpha.str());
                break;
            }
        }
    }

    report(4, "five property suites of 500 randomized cases each hold", c.ok(), c.str());
}

// ---- criterion 5: the infimax lower-bounds same-direction words --------

void criterion5() {
    Collector c;
    std::mt19937_64 rng(20240006);
    int directions = 0;
    while (directions < 100) {
        unsigned k = 3 + static_cast<unsigned>(rng() % 2);
        CountVector counts = random_counts(rng, k, 9);
        Integer sum = std::accumulate(counts.begin(), counts.end(), Integer(0));
        if (sum > 40 || sum < 2) continue;
        RationalPoint alpha = RationalPoint::from_counts(counts);
        Word period = min_periodic(alpha);
        const std::size_t R = period.size();
        if (R < 2) continue;
        ++directions;

        for (int candidate = 0; candidate < 10; ++candidate) {
            Word w(k);
            if (candidate < 5) {
                Word doubled = period.repeated(2);
                w = rotation(doubled, rng() % doubled.size());
            } else if (candidate < 8) {
                Word tripled = period.repeated(3);
                w = rotation(tripled, rng() % tripled.size());
            } else {
                std::vector<Letter> letters = period.letters();
                std::shuffle(letters.begin(), letters.end(), rng);
                w = Word(k, std::move(letters)).repeated(2);
            }
            LowerBoundCheck check = check_lower_bound(alpha, w, R);
            if (!check.holds) {
                c.fail("violated at " + alpha.str() + " by " + w.str());
                break;
            }
        }
        if (!c.ok()) break;
    }
    report(5, "the infimax prefix lower-bounds 10 same-direction words for each of 100 directions",
           c.ok(), c.str());
}

// ---- criterion 6: separation along the superexponential itinerary ------

void criterion6() {
    Collector c;
    auto start = std::chrono::steady_clock::now();
    for (unsigned k = 3; k <= 4; ++k) {
        std::vector<Integer> entries = exceptional_entries(1, 6);
        VertexImages deepest;
        for (std::size_t r = 0; r < 6; ++r) {
            std::vector<Integer> head(entries.begin(), entries.begin() + r + 1);
            VertexImages images = vertex_images(head, k);
            Rational delta = separation_delta(images);
            if (!(delta > kSeparationThreshold))
                c.fail("separation at k=" + std::to_string(k) + ", r=" + std::to_string(r));
            deepest = images;
        }
        std::vector<SimplexVector> face(deepest.vertices.begin(),
                                        deepest.vertices.begin() + (k - 1));
        if (affine_rank(face) != k - 2)
            c.fail("face rank at k=" + std::to_string(k));
    }
    double elapsed = seconds_since(start);
    if (elapsed >= kSeparationSecondsLimit)
        c.fail("separation took " + std::to_string(elapsed) + " s");
    report(6, "exact vertex separation stays above 3/4 through depth 5 within 10 s", c.ok(),
           c.str());
}

// ---- criterion 7: Hilbert-diameter contraction along the all-ones path -

void criterion7() {
    Collector c;

    const double tau = birkhoff_tau(cross_ratio_d(power(branch_matrix(1, 3), 3)));
    std::vector<HilbertRatio> diameters;
    std::vector<Integer> ones;
    for (std::size_t r = 0; r < kContractionBudget; ++r) {
        ones.push_back(1);
        diameters.push_back(vertex_diameter(vertex_images(ones, 3)));
    }

    for (std::size_t r = 1; r < diameters.size(); ++r) {
        if (!diameters[r - 1].finite) continue;
        if (!diameters[r].finite || diameters[r].ratio > diameters[r - 1].ratio) {
            c.fail("diameter grew at level " + std::to_string(r));
            break;
        }
    }
    bool reached = false;
    for (const HilbertRatio& d : diameters)
        if (d.finite && d.ratio < kDiameterThreshold) {
            reached = true;
            break;
        }
    if (!reached) c.fail("never contracted below 1001/1000");

    for (std::size_t r = 2; r + 3 < diameters.size(); ++r) {
        if (!diameters[r].finite) continue;
        if (!diameters[r + 3].finite) {
            c.fail("diameter infinite at level " + std::to_string(r + 3));
            break;
        }
        double before = diameters[r].log_value();
        double after = diameters[r + 3].log_value();
        if (after > tau * before + kLogContractionSlack) {
            c.fail("weak contraction at level " + std::to_string(r));
            break;
        }
    }

    report(7, "the all-ones vertex diameter contracts monotonically at the predicted rate", c.ok(),
           c.str());
}

// ---- criterion 8: every rational direction reaches the terminal point --

void criterion8() {
    Collector c;
    std::size_t points = 0;
    for (unsigned long a = 0; a < kTerminationDenominator; ++a) {
        for (unsigned long b = 0; a + b < kTerminationDenominator; ++b) {
            for (unsigned long cc = 1; a + b + cc <= kTerminationDenominator; ++cc) {
                if (std::gcd(std::gcd(a, b), cc) != 1) continue;  // skip duplicates
                ++points;
                RationalPoint alpha = RationalPoint::from_counts(
                    {Integer(a), Integer(b), Integer(cc)});
                Itinerary itin = itinerary(alpha, kTerminationStepBudget);
                if (!itin.terminated) {
                    c.fail("no termination at " + alpha.str());
                    if (c.count > 3) {
                        report(8, "itineraries terminate for every denominator-200 direction",
                               false, c.str());
                        return;
                    }
                }
            }
        }
    }
    if (points == 0) c.fail("no points enumerated");
    report(8,
           "itineraries of all " + std::to_string(points) +
               " rational directions with denominator <= 200 terminate",
           c.ok(), c.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures == 0 ? "acceptance: all 8 criteria hold"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
