#include "infimax/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "infimax/infimax.hpp"
#include "infimax/minimax.hpp"
#include "infimax/numeric.hpp"
#include "infimax/regularity.hpp"
#include "infimax/simplex.hpp"
#include "infimax/substitution.hpp"
#include "infimax/word.hpp"

namespace infimax {

namespace {

using nlohmann::json;

constexpr const char* zero_tail_mark = "0̄";  // characters "0" + combining macron

std::string format_double(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream out;
    out << std::setprecision(10) << v;
    return out.str();
}

json trace_json(const std::vector<double>& trace) {
    json arr = json::array();
    for (double v : trace) {
        if (std::isinf(v))
            arr.push_back("inf");
        else
            arr.push_back(v);
    }
    return arr;
}

json entries_json(const std::vector<Integer>& entries) {
    json arr = json::array();
    for (const Integer& e : entries) arr.push_back(e.get_str());
    return arr;
}

std::string entries_text(const std::vector<Integer>& entries) {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ' ';
        out << entries[i].get_str();
    }
    return out.str();
}

bool looks_rational(const std::string& payload) { return payload.find('/') != std::string::npos; }

void emit(std::ostream& out, const std::string& format, const json& record,
          const std::function<void(std::ostream&)>& text_writer) {
    if (format == "json")
        out << record.dump(2) << "\n";
    else
        text_writer(out);
}

// ---------------------------------------------------------------- commands

int cmd_minimax(unsigned k, const std::string& payload, std::size_t cap,
                const std::string& format, std::ostream& out) {
    CountVector counts = parse_counts(k, payload);
    MinimaxExpansion expansion = minimax_expansion(counts);

    json record;
    record["command"] = "minimax";
    record["k"] = k;
    record["counts"] = counts_str(counts);
    record["length"] = expansion.length.get_str();
    record["itinerary"] = entries_json(expansion.entries);
    record["terminal_power"] = expansion.terminal_power.get_str();

    if (expansion.length <= Integer(static_cast<unsigned long>(cap))) {
        Word word = expansion.word(cap);
        const std::string power = render_power_form(word);
        record["word"] = word.str();
        record["power_form"] = power;
        emit(out, format, record, [&](std::ostream& o) { o << power << "\n"; });
    } else {
        Word head = expansion.prefix(cap);
        record["prefix"] = head.str();
        emit(out, format, record, [&](std::ostream& o) {
            o << "length: " << expansion.length.get_str() << "\n";
            o << "itinerary: " << entries_text(expansion.entries) << "\n";
            o << "terminal_power: " << expansion.terminal_power.get_str() << "\n";
            o << "prefix: " << head.str() << "\n";
        });
    }
    return 0;
}

// enumerates every count vector over k letters with entry sum <= max_sum
void for_each_grid_point(unsigned k, unsigned long max_sum,
                         const std::function<void(const CountVector&)>& visit) {
    CountVector current(k, Integer(0));
    std::function<void(unsigned, unsigned long)> rec = [&](unsigned pos, unsigned long left) {
        if (pos + 1 == k) {
            for (unsigned long last = 0; last <= left; ++last) {
                current[pos] = static_cast<unsigned long>(last);
                visit(current);
            }
            return;
        }
        for (unsigned long value = 0; value <= left; ++value) {
            current[pos] = value;
            rec(pos + 1, left - value);
        }
    };
    rec(0, max_sum);
}

int cmd_oracle(unsigned k, const std::string& payload, unsigned long max_sum,
               const std::string& format, std::ostream& out) {
    json record;
    record["command"] = "oracle";
    record["k"] = k;

    if (!payload.empty()) {
        CountVector counts = parse_counts(k, payload);
        Word fast = minimax_word(counts);
        // For an explicit point the sweep bound only raises the brute-force
        // guard above its built-in tractability default, never lowers it.
        Integer guard = std::max(Integer(static_cast<unsigned long>(max_sum)), Integer(14));
        Word slow = brute_force_minimax(counts, guard);
        if (!(fast == slow))
            throw InternalError("oracle mismatch at " + counts_str(counts) + ": " + fast.str() +
                                " vs " + slow.str());
        record["counts"] = counts_str(counts);
        record["word"] = fast.str();
        record["result"] = "match";
        emit(out, format, record, [&](std::ostream& o) {
            o << "counts: " << counts_str(counts) << "\n";
            o << "word: " << fast.str() << "\n";
            o << "result: match\n";
        });
        return 0;
    }

    std::size_t total = 0, valid = 0;
    for_each_grid_point(k, max_sum, [&](const CountVector& counts) {
        ++total;
        if (counts.back() <= 0) return;
        ++valid;
        Word fast = minimax_word(counts);
        Word slow = brute_force_minimax(counts, Integer(static_cast<unsigned long>(max_sum)));
        if (!(fast == slow))
            throw InternalError("oracle mismatch at " + counts_str(counts) + ": " + fast.str() +
                                " vs " + slow.str());
    });
    record["max_sum"] = max_sum;
    record["grid_points"] = total;
    record["valid_points"] = valid;
    record["result"] = "pass";
    emit(out, format, record, [&](std::ostream& o) {
        o << "grid: sum <= " << max_sum << ", k = " << k << "\n";
        o << "points: " << total << " (" << valid << " in the count simplex)\n";
        o << "result: all match\n";
    });
    return 0;
}

int cmd_itinerary(unsigned k, const std::string& payload, std::size_t max_steps,
                  const std::string& format, std::ostream& out) {
    json record;
    record["command"] = "itinerary";
    record["k"] = k;

    if (looks_rational(payload)) {
        RationalPoint alpha = RationalPoint::parse(k, payload);
        Itinerary itin = itinerary(alpha, max_steps);
        record["point"] = alpha.str();
        record["entries"] = entries_json(itin.entries);
        record["terminated"] = itin.terminated;
        emit(out, format, record, [&](std::ostream& o) {
            o << entries_text(itin.entries);
            if (itin.terminated) {
                if (!itin.entries.empty()) o << ' ';
                o << "| " << zero_tail_mark;
            }
            o << "\n";
        });
        return 0;
    }

    CountChain chain = count_chain(parse_counts(k, payload), max_steps);
    record["counts"] = counts_str(chain.vectors.front());
    record["entries"] = entries_json(chain.entries);
    record["terminated"] = true;
    record["terminal_power"] = chain.terminal_power.get_str();
    json chain_json = json::array();
    for (const CountVector& v : chain.vectors) chain_json.push_back(counts_str(v));
    record["chain"] = chain_json;
    emit(out, format, record, [&](std::ostream& o) {
        o << entries_text(chain.entries);
        if (!chain.entries.empty()) o << ' ';
        o << "| " << zero_tail_mark << "\n";
        for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
            if (i) o << "→";
            o << "(" << counts_str(chain.vectors[i]) << ")";
        }
        o << "\n";
    });
    return 0;
}

int cmd_point(unsigned k, const std::string& payload, const std::string& itinerary_text,
              const std::string& format, std::ostream& out) {
    std::vector<Integer> entries;
    if (!itinerary_text.empty()) {
        ItinerarySource source = ItinerarySource::parse(itinerary_text);
        if (source.kind() != ItinerarySource::Kind::terminated_list)
            throw MalformedInput("only terminating itineraries (list:...) define a rational point");
        entries = source.base();
    } else if (!payload.empty()) {
        entries = ItinerarySource::parse("list:" + payload).base();
    } else {
        throw MalformedInput("give the itinerary entries (positional or --itinerary list:...)");
    }

    RationalPoint alpha = point_from_finite_itinerary(entries, k);
    json record;
    record["command"] = "point";
    record["k"] = k;
    record["itinerary"] = entries_json(entries);
    record["point"] = alpha.str();
    emit(out, format, record, [&](std::ostream& o) { o << alpha.str() << "\n"; });
    return 0;
}

int cmd_infimax(unsigned k, const std::string& payload, const std::string& itinerary_text,
                std::size_t R, std::size_t cap, bool run_length, const std::string& format,
                std::ostream& out) {
    if (R > cap)
        throw CapExceeded("prefix length " + std::to_string(R) + " exceeds the cap " +
                          std::to_string(cap));
    InfimaxPrefix result;
    json record;
    record["command"] = "infimax";
    record["k"] = k;
    if (!itinerary_text.empty()) {
        ItinerarySource source = ItinerarySource::parse(itinerary_text);
        record["itinerary"] = source.str();
        result = infimax_prefix(source, k, R);
    } else if (!payload.empty()) {
        RationalPoint alpha = RationalPoint::parse(k, payload);
        record["point"] = alpha.str();
        result = infimax_prefix(alpha, R);
    } else {
        throw MalformedInput("give a rational direction or --itinerary source");
    }

    record["R"] = R;
    record["prefix"] = result.word.str();
    record["power_form"] = render_power_form(result.word);
    record["depth"] = result.depth;
    record["entries_used"] = entries_json(result.itinerary_used.entries);
    record["terminated_tail"] = result.itinerary_used.terminated;
    record["exact_total_length"] = result.exact_total_length.get_str();
    emit(out, format, record, [&](std::ostream& o) {
        o << (run_length ? render_power_form(result.word) : result.word.str()) << "\n";
    });
    return 0;
}

int cmd_regularity(unsigned k, const std::string& itinerary_text, std::size_t depth,
                   const std::string& format, std::ostream& out) {
    if (itinerary_text.empty()) throw MalformedInput("give --itinerary (list:/prefix:/periodic:/growth:)");
    ItinerarySource source = ItinerarySource::parse(itinerary_text);
    ClassificationRecord rec = classify(source, k, depth);

    json record;
    record["command"] = "regularity";
    record["k"] = k;
    record["itinerary"] = source.str();
    record["verdict"] = verdict_name(rec.verdict);
    record["criterion"] = rec.criterion;
    record["depth"] = rec.depth;
    record["delta_trace"] = trace_json(rec.delta_trace);
    record["diameter_trace"] = trace_json(rec.diameter_trace);
    if (rec.dimension_estimate) {
        record["dimension_estimate"] = *rec.dimension_estimate;
        record["dimension_estimate_depth"] = rec.depth;
    }
    emit(out, format, record, [&](std::ostream& o) {
        o << "verdict: " << verdict_name(rec.verdict) << "\n";
        o << "criterion: " << rec.criterion << "\n";
        o << "depth: " << rec.depth << "\n";
        o << "delta_trace:";
        for (double v : rec.delta_trace) o << ' ' << format_double(v);
        o << "\n";
        o << "diameter_trace:";  // log scale
        for (double v : rec.diameter_trace) o << ' ' << format_double(v);
        o << "\n";
        if (rec.dimension_estimate)
            o << "dimension_estimate: " << *rec.dimension_estimate << " (depth-" << rec.depth
              << " estimate)\n";
    });
    return 0;
}

int cmd_vertices(unsigned k, const std::string& itinerary_text, long depth_flag,
                 const std::string& format, std::ostream& out) {
    if (itinerary_text.empty()) throw MalformedInput("give --itinerary (list:/prefix:/periodic:/growth:)");
    ItinerarySource source = ItinerarySource::parse(itinerary_text);

    std::size_t r = 0;
    if (depth_flag >= 0) {
        r = static_cast<std::size_t>(depth_flag);
    } else if (source.kind() == ItinerarySource::Kind::terminated_list ||
               source.kind() == ItinerarySource::Kind::bare_prefix) {
        if (source.base().empty())
            throw MalformedInput("the itinerary has no entries; give -r explicitly");
        r = source.base().size() - 1;
    } else {
        throw MalformedInput("give -r for non-terminating itineraries");
    }

    VertexImages images = vertex_images(source, k, r);
    std::vector<Integer> lengths = column_lengths(images.product);

    json record;
    record["command"] = "vertices";
    record["k"] = k;
    record["itinerary"] = source.str();
    record["depth"] = images.depth;
    json verts = json::array();
    for (const SimplexVector& v : images.vertices) {
        std::ostringstream line;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) line << ',';
            line << to_string(v[i]);
        }
        verts.push_back(line.str());
    }
    record["vertices"] = verts;
    record["lengths"] = entries_json(lengths);
    json matrix = json::array();
    for (unsigned i = 0; i < k; ++i) {
        json row = json::array();
        for (unsigned j = 0; j < k; ++j) row.push_back(images.product.at(i, j).get_str());
        matrix.push_back(row);
    }
    record["matrix"] = matrix;

    emit(out, format, record, [&](std::ostream& o) {
        o << "depth: " << images.depth << "\n";
        for (unsigned i = 0; i < k; ++i)
            o << "vertex " << (i + 1) << ": " << verts[i].get<std::string>() << "\n";
        o << "lengths: ";
        for (unsigned i = 0; i < k; ++i) o << (i ? "," : "") << lengths[i].get_str();
        o << "\n";
    });
    return 0;
}

// ---------------------------------------------------------------- selftest

struct SelfCheck {
    std::string name;
    std::function<bool(std::string&)> run;  // fills detail on failure
};

bool expect(bool condition, const std::string& detail, std::string& out_detail) {
    if (!condition) out_detail = detail;
    return condition;
}

const char* const fixed_point_64 =
    "3123113122312311311312311312231223123113122312311311312311311312";

std::vector<SelfCheck> build_selftest() {
    std::vector<SelfCheck> checks;
    auto add = [&](const std::string& name, std::function<bool(std::string&)> fn) {
        checks.push_back({name, std::move(fn)});
    };

    const std::string period41 = [] {
        std::string s = "31";
        for (int i = 0; i < 10; ++i) s += "311";
        for (int i = 0; i < 3; ++i) s += "312";
        return s;
    }();

    add("finite-word order: 31 > 311 (initial subword greater)", [](std::string& d) {
        Word u = Word::parse(3, "31"), v = Word::parse(3, "311");
        return expect(word_compare(u, v) > 0 && word_compare(v, u) < 0, "comparison sign wrong", d);
    });
    add("422234141 is maximal (k=4)", [](std::string& d) {
        return expect(is_maximal_word(Word::parse(4, "422234141")), "not maximal", d);
    });
    add("fixed-point prefix 31231131 is maximal-consistent", [](std::string& d) {
        return expect(is_maximal_prefix_consistent(Word::parse(3, "31231131")), "rejected", d);
    });
    add("letter proportions of the 41-letter period", [&, period41](std::string& d) {
        std::vector<Rational> p = proportions(Word::parse(3, period41));
        return expect(p[0] == Rational(24, 41) && p[1] == Rational(3, 41) &&
                          p[2] == Rational(14, 41),
                      "got " + to_string(p[0]) + "," + to_string(p[1]) + "," + to_string(p[2]), d);
    });
    add("branch substitution: 3 -> 3111 at n=3, k=3", [](std::string& d) {
        Word image = branch_substitution(3, 3).image(3);
        return expect(image.str() == "3111", "got " + image.str(), d);
    });
    add("branch substitution: 4 -> 411 at n=2, k=4", [](std::string& d) {
        Word image = branch_substitution(2, 4).image(4);
        return expect(image.str() == "411", "got " + image.str(), d);
    });
    add("branch 0 image of 4111233 (k=4)", [](std::string& d) {
        Word w = apply(branch_substitution(0, 4), Word::parse(4, "4111233"));
        return expect(w.str() == "422234141", "got " + w.str(), d);
    });
    add("branch image of the top letter is k 1^n", [](std::string& d) {
        Word w = branch_substitution(5, 3).image(3);
        return expect(w.str() == "3111" + std::string("11"), "got " + w.str(), d);
    });
    add("tower [1,0,10,3] over k=3 expands the 41-letter period", [&, period41](std::string& d) {
        Word w = tower_prefix({1, 0, 10, 3}, 3);
        return expect(w.str() == period41, "got " + w.str(), d);
    });
    add("tower [0,3,1,2] over k=4 expands 422234141", [](std::string& d) {
        Word w = tower_prefix({0, 3, 1, 2}, 4);
        return expect(w.str() == "422234141", "got " + w.str(), d);
    });
    add("tower over 1-repeated prefixes the fixed point", [](std::string& d) {
        Word w = tower_prefix(std::vector<Integer>(8, Integer(1)), 3, 64);
        const std::string expected(fixed_point_64, fixed_point_64 + w.size());
        return expect(w.str() == expected.substr(0, w.size()), "prefix mismatch", d);
    });
    add("branch matrix displayed shape at k=5", [](std::string& d) {
        IntMatrix m = branch_matrix(2, 5);
        bool ok = m.at(0, 3) == 3 && m.at(0, 4) == 2 && m.at(4, 4) == 1;
        for (unsigned i = 1; i < 5; ++i) ok = ok && m.at(i, i - 1) == 1;
        ok = ok && m.at(0, 0) == 0 && m.at(2, 4) == 0;
        return expect(ok, "matrix entries wrong", d);
    });
    add("branch matrix A(1) at k=3", [](std::string& d) {
        IntMatrix m = branch_matrix(1, 3);
        bool ok = m.at(0, 0) == 0 && m.at(0, 1) == 2 && m.at(0, 2) == 1 && m.at(1, 0) == 1 &&
                  m.at(1, 1) == 0 && m.at(1, 2) == 0 && m.at(2, 0) == 0 && m.at(2, 1) == 1 &&
                  m.at(2, 2) == 1;
        return expect(ok, "matrix entries wrong", d);
    });
    add("branch index of (24/41,3/41,14/41) is 1", [](std::string& d) {
        return expect(branch_index(RationalPoint::parse(3, "24/41,3/41,14/41")) == 1, "wrong", d);
    });
    add("branch index of (10/14,3/14,1/14) is 10", [](std::string& d) {
        return expect(branch_index(RationalPoint::parse(3, "10/14,3/14,1/14")) == 10, "wrong", d);
    });
    add("step (24/41,...) -> (3/17,10/17,4/17)", [](std::string& d) {
        RationalPoint got = step(RationalPoint::parse(3, "24/41,3/41,14/41"));
        return expect(got == RationalPoint::parse(3, "3/17,10/17,4/17"), "got " + got.str(), d);
    });
    add("step (2/9,3/9,1/9,3/9) -> (3/7,1/7,2/7,1/7)", [](std::string& d) {
        RationalPoint got = step(RationalPoint::parse(4, "2/9,3/9,1/9,3/9"));
        return expect(got == RationalPoint::parse(4, "3/7,1/7,2/7,1/7"), "got " + got.str(), d);
    });
    add("inverse branch 1 of (3/17,10/17,4/17)", [](std::string& d) {
        RationalPoint got = step_inverse(1, RationalPoint::parse(3, "3/17,10/17,4/17"));
        return expect(got == RationalPoint::parse(3, "24/41,3/41,14/41"), "got " + got.str(), d);
    });
    add("itinerary of (24/41,3/41,14/41) is [1,0,10,3] then zeros", [](std::string& d) {
        Itinerary itin = itinerary(RationalPoint::parse(3, "24/41,3/41,14/41"));
        std::vector<Integer> expected{1, 0, 10, 3};
        return expect(itin.terminated && itin.entries == expected, "wrong entries", d);
    });
    add("itinerary of (2/9,3/9,1/9,3/9) is [0,3,1,2] then zeros", [](std::string& d) {
        Itinerary itin = itinerary(RationalPoint::parse(4, "2/9,3/9,1/9,3/9"));
        std::vector<Integer> expected{0, 3, 1, 2};
        return expect(itin.terminated && itin.entries == expected, "wrong entries", d);
    });
    add("point of itinerary [1,0,10,3] at k=3", [](std::string& d) {
        RationalPoint got = point_from_finite_itinerary({1, 0, 10, 3}, 3);
        return expect(got == RationalPoint::parse(3, "24/41,3/41,14/41"), "got " + got.str(), d);
    });
    add("point of itinerary [0,3,1,2] at k=4", [](std::string& d) {
        RationalPoint got = point_from_finite_itinerary({0, 3, 1, 2}, 4);
        return expect(got == RationalPoint::parse(4, "2/9,3/9,1/9,3/9"), "got " + got.str(), d);
    });
    add("zero-component profile of (24/41,3/41,14/41)", [](std::string& d) {
        RationalPoint alpha = RationalPoint::parse(3, "24/41,3/41,14/41");
        ZeroComponentReport rep = zero_component_profile(alpha, itinerary(alpha));
        return expect(rep.decidable && rep.all_consistent, "inconsistent", d);
    });
    add("count step (24,3,14) -> branch 1, (3,10,4)", [](std::string& d) {
        CountVector v{24, 3, 14};
        CountVector expected{3, 10, 4};
        return expect(count_branch_index(v) == 1 && count_step(v) == expected, "wrong", d);
    });
    add("count step (3,0,1) -> branch 3, (0,0,1)", [](std::string& d) {
        CountVector v{3, 0, 1};
        CountVector expected{0, 0, 1};
        return expect(count_branch_index(v) == 3 && count_step(v) == expected, "wrong", d);
    });
    add("minimax(24,3,14) expands and renders as 31 311^10 312^3", [&, period41](std::string& d) {
        Word w = minimax_word({24, 3, 14});
        return expect(w.str() == period41 && render_power_form(w) == "31 311^10 312^3",
                      "got " + render_power_form(w), d);
    });
    add("minimax(2,3,1,3) = 422234141", [](std::string& d) {
        Word w = minimax_word({2, 3, 1, 3});
        return expect(w.str() == "422234141", "got " + w.str(), d);
    });
    add("minimax(0,0,5) = 33333", [](std::string& d) {
        Word w = minimax_word({0, 0, 5});
        return expect(w.str() == "33333", "got " + w.str(), d);
    });
    add("brute force agrees at (2,3,1,3)", [](std::string& d) {
        Word w = brute_force_minimax({2, 3, 1, 3});
        return expect(w.str() == "422234141", "got " + w.str(), d);
    });
    add("minimum periodic element of (24/41,3/41,14/41)", [&, period41](std::string& d) {
        Word w = min_periodic(RationalPoint::parse(3, "24/41,3/41,14/41"));
        return expect(w.str() == period41, "got " + w.str(), d);
    });
    add("infimax of the 1-repeated itinerary, 64 letters", [](std::string& d) {
        InfimaxPrefix p = infimax_prefix(ItinerarySource::parse("periodic:1"), 3, 64);
        return expect(p.word.str() == fixed_point_64, "got " + p.word.str(), d);
    });
    add("infimax of (24/41,3/41,14/41) at R=82 is the period squared", [&, period41](std::string& d) {
        InfimaxPrefix p = infimax_prefix(RationalPoint::parse(3, "24/41,3/41,14/41"), 82);
        return expect(p.word.str() == period41 + period41, "mismatch", d);
    });
    add("infimax of the terminal point is k^R", [](std::string& d) {
        InfimaxPrefix p = infimax_prefix(RationalPoint::parse(3, "0,0,1"), 7);
        return expect(p.word.str() == "3333333", "got " + p.word.str(), d);
    });
    add("vertex images at depth 0 for n_0=1, k=3", [](std::string& d) {
        VertexImages v = vertex_images({Integer(1)}, 3);
        auto eq = [](const SimplexVector& a, std::initializer_list<Rational> b) {
            return a == SimplexVector(b);
        };
        return expect(eq(v.vertices[0], {Rational(0), Rational(1), Rational(0)}) &&
                          eq(v.vertices[1], {Rational(2, 3), Rational(0), Rational(1, 3)}) &&
                          eq(v.vertices[2], {Rational(1, 2), Rational(0), Rational(1, 2)}),
                      "wrong vertices", d);
    });
    add("vertex shift identity between depths", [](std::string& d) {
        VertexImages shallow = vertex_images({Integer(1)}, 3);
        VertexImages deep = vertex_images({Integer(1), Integer(24)}, 3);
        return expect(deep.vertices[0] == shallow.vertices[1], "shift identity fails", d);
    });
    add("vertex k of [1,0,10,3] is (24/41,3/41,14/41)", [](std::string& d) {
        VertexImages v = vertex_images({1, 0, 10, 3}, 3);
        SimplexVector expected{Rational(24, 41), Rational(3, 41), Rational(14, 41)};
        return expect(v.vertices[2] == expected, "wrong vertex", d);
    });
    add("2k-3 positive branch matrices give a strictly positive product", [](std::string& d) {
        IntMatrix p = multiply(multiply(branch_matrix(1, 3), branch_matrix(2, 3)),
                               branch_matrix(3, 3));
        HilbertRatio ratio = cross_ratio_d(p);  // throws if any entry vanishes
        return expect(ratio.finite && ratio.ratio >= 1, "cross ratio invalid", d);
    });
    add("delta_0 = 1 at k=3", [](std::string& d) {
        VertexImages v = vertex_images({Integer(7)}, 3);
        return expect(separation_delta(v) == 1, "delta_0 wrong", d);
    });
    add("growth generator keeps delta_r > 3/4 through r=4 (k=3)", [](std::string& d) {
        std::vector<Integer> entries = exceptional_entries(1, 5);
        for (std::size_t r = 0; r < 5; ++r) {
            std::vector<Integer> head(entries.begin(), entries.begin() + r + 1);
            if (!(separation_delta(vertex_images(head, 3)) > Rational(3, 4)))
                return expect(false, "delta at r=" + std::to_string(r) + " too small", d);
        }
        return true;
    });
    add("image length bound against the entry products", [](std::string& d) {
        std::vector<Integer> entries = exceptional_entries(1, 5);
        Integer product = 1;
        SubstitutionTower t(3, 1);
        for (std::size_t r = 0; r < 5; ++r) {
            t.extend(entries[r]);
            product *= entries[r] + 2;
            if (!(t.image_length(3) <= product))
                return expect(false, "bound fails at r=" + std::to_string(r), d);
        }
        return true;
    });
    add("classify: terminating list is Regular", [](std::string& d) {
        ClassificationRecord rec = classify(ItinerarySource::parse("list:1,0,10,3"), 3);
        return expect(rec.verdict == Verdict::Regular, "got " + verdict_name(rec.verdict), d);
    });
    add("classify: 1-repeated itinerary is Regular", [](std::string& d) {
        ClassificationRecord rec = classify(ItinerarySource::parse("periodic:1"), 3);
        return expect(rec.verdict == Verdict::Regular, "got " + verdict_name(rec.verdict), d);
    });
    add("classify: minimal growth generator is Exceptional", [](std::string& d) {
        ClassificationRecord rec = classify(ItinerarySource::parse("growth:minimal,n0=1,r=5"), 3);
        return expect(rec.verdict == Verdict::Exceptional, "got " + verdict_name(rec.verdict), d);
    });
    add("strict Hilbert contraction after a full positive block", [](std::string& d) {
        RationalPoint a = RationalPoint::parse(3, "1/2,1/4,1/4");
        RationalPoint b = RationalPoint::parse(3, "1/4,1/2,1/4");
        HilbertRatio before = hilbert_ratio(a.components(), b.components());
        for (int i = 0; i < 3; ++i) {
            a = step_inverse(1, a);
            b = step_inverse(1, b);
        }
        HilbertRatio after = hilbert_ratio(a.components(), b.components());
        return expect(after.ratio < before.ratio, "no strict contraction", d);
    });
    add("cli: minimax -k 3 24,3,14", [](std::string& d) {
        std::ostringstream out, err;
        int code = run_cli({"minimax", "-k", "3", "24,3,14"}, out, err);
        return expect(code == 0 && out.str() == "31 311^10 312^3\n", "got '" + out.str() + "'", d);
    });
    add("cli: infimax -k 3 --itinerary periodic:1 -R 64", [](std::string& d) {
        std::ostringstream out, err;
        int code = run_cli({"infimax", "-k", "3", "--itinerary", "periodic:1", "-R", "64"}, out, err);
        return expect(code == 0 && out.str() == std::string(fixed_point_64) + "\n",
                      "got '" + out.str() + "'", d);
    });
    add("cli: itinerary -k 4 2/9,3/9,1/9,3/9", [](std::string& d) {
        std::ostringstream out, err;
        int code = run_cli({"itinerary", "-k", "4", "2/9,3/9,1/9,3/9"}, out, err);
        return expect(code == 0 && out.str() == std::string("0 3 1 2 | ") + zero_tail_mark + "\n",
                      "got '" + out.str() + "'", d);
    });
    return checks;
}

int cmd_selftest(std::ostream& out) {
    std::vector<SelfCheck> checks = build_selftest();
    std::size_t failures = 0;
    for (const SelfCheck& check : checks) {
        std::string detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) {
            out << "ok   " << check.name << "\n";
        } else {
            ++failures;
            out << "FAIL " << check.name << (detail.empty() ? "" : " — " + detail) << "\n";
        }
    }
    out << "selftest: " << checks.size() << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact minimax/infimax words, simplex itineraries, and regularity evidence"};
    app.require_subcommand(1);

    struct {
        unsigned k = 3;
        std::string payload, itinerary;
        std::size_t R = 1;
        std::size_t cap = default_word_cap;
        std::size_t max_steps = 10000;
        std::size_t depth = 40;
        unsigned long max_sum = 8;
        long r = -1;
        bool run_length = false;
        std::string format = "text";
    } opt;

    auto add_common = [&](CLI::App* cmd, bool with_k = true) {
        if (with_k) cmd->add_option("-k", opt.k, "alphabet size")->required();
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_minimax = app.add_subcommand("minimax", "smallest maximal word with given counts");
    add_common(c_minimax);
    c_minimax->add_option("counts", opt.payload, "count vector, e.g. 24,3,14")->required();
    c_minimax->add_option("--cap", opt.cap, "letter cap for materialization");
    c_minimax->add_flag("--run-length", opt.run_length, "print in power notation (default here)");

    CLI::App* c_oracle = app.add_subcommand("oracle", "compare against the brute-force oracle");
    add_common(c_oracle);
    c_oracle->add_option("counts", opt.payload, "single count vector (omit to sweep a grid)");
    c_oracle->add_option("--max-sum", opt.max_sum,
                         "grid sweep bound; for a single point, raises the brute-force guard");

    CLI::App* c_itinerary = app.add_subcommand("itinerary", "branch entries of a direction");
    add_common(c_itinerary);
    c_itinerary->add_option("point", opt.payload, "rational direction or count vector")->required();
    c_itinerary->add_option("--max-steps", opt.max_steps, "step budget");

    CLI::App* c_point = app.add_subcommand("point", "direction with a given finite itinerary");
    add_common(c_point);
    c_point->add_option("entries", opt.payload, "itinerary entries, e.g. 1,0,10,3");
    c_point->add_option("--itinerary", opt.itinerary, "itinerary source (list:...)");

    CLI::App* c_infimax = app.add_subcommand("infimax", "prefix of the limit word");
    add_common(c_infimax);
    c_infimax->add_option("point", opt.payload, "rational direction");
    c_infimax->add_option("--itinerary", opt.itinerary, "itinerary source");
    c_infimax->add_option("-R", opt.R, "prefix length")->required();
    c_infimax->add_option("--cap", opt.cap, "letter cap");
    c_infimax->add_flag("--run-length", opt.run_length, "print in power notation");

    CLI::App* c_regularity = app.add_subcommand("regularity", "classification with evidence");
    add_common(c_regularity);
    c_regularity->add_option("--itinerary", opt.itinerary, "itinerary source")->required();
    c_regularity->add_option("--depth", opt.depth, "evidence depth budget");

    CLI::App* c_vertices = app.add_subcommand("vertices", "vertex images at a given depth");
    add_common(c_vertices);
    c_vertices->add_option("--itinerary", opt.itinerary, "itinerary source")->required();
    c_vertices->add_option("-r", opt.r, "depth (entries 0..r)");

    CLI::App* c_selftest = app.add_subcommand("selftest", "re-derive the built-in examples");
    (void)c_selftest;

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("infimax");
    for (const std::string& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_minimax))
            return cmd_minimax(opt.k, opt.payload, opt.cap, opt.format, out);
        if (app.got_subcommand(c_oracle))
            return cmd_oracle(opt.k, opt.payload, opt.max_sum, opt.format, out);
        if (app.got_subcommand(c_itinerary))
            return cmd_itinerary(opt.k, opt.payload, opt.max_steps, opt.format, out);
        if (app.got_subcommand(c_point))
            return cmd_point(opt.k, opt.payload, opt.itinerary, opt.format, out);
        if (app.got_subcommand(c_infimax))
            return cmd_infimax(opt.k, opt.payload, opt.itinerary, opt.R, opt.cap, opt.run_length,
                               opt.format, out);
        if (app.got_subcommand(c_regularity))
            return cmd_regularity(opt.k, opt.itinerary, opt.depth, opt.format, out);
        if (app.got_subcommand(c_vertices))
            return cmd_vertices(opt.k, opt.itinerary, opt.r, opt.format, out);
        if (app.got_subcommand(c_selftest)) return cmd_selftest(out);
        err << "error: no command\n";
        return 2;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace infimax
