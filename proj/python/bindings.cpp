#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "infimax/infimax.hpp"
#include "infimax/minimax.hpp"
#include "infimax/regularity.hpp"
#include "infimax/simplex.hpp"
#include "infimax/word.hpp"

namespace py = pybind11;
using namespace infimax;

namespace {

py::object to_py_int(const Integer& n) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::list to_py_ints(const std::vector<Integer>& values) {
    py::list out;
    for (const Integer& n : values) out.append(to_py_int(n));
    return out;
}

Integer from_py_int(const py::object& value) {
    return Integer(py::str(value).cast<std::string>());
}

CountVector counts_from(const py::sequence& seq) {
    CountVector counts;
    for (const auto& item : seq) counts.push_back(from_py_int(py::reinterpret_borrow<py::object>(item)));
    validate_counts(counts);
    return counts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact minimax/infimax words, simplex itineraries, and regularity evidence";

    py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def(
        "minimax",
        [](const py::sequence& counts, std::size_t cap) {
            return minimax_word(counts_from(counts), cap).str();
        },
        py::arg("counts"), py::arg("cap") = default_word_cap,
        "Smallest maximal word with the given letter counts.");

    m.def(
        "minimax_power_form",
        [](const py::sequence& counts, std::size_t cap) {
            return render_power_form(minimax_word(counts_from(counts), cap));
        },
        py::arg("counts"), py::arg("cap") = default_word_cap,
        "The minimax word in power notation, e.g. '31 311^10 312^3'.");

    m.def(
        "minimax_length",
        [](const py::sequence& counts) {
            return to_py_int(minimax_expansion(counts_from(counts)).length);
        },
        py::arg("counts"), "Exact length of the minimax word, without materializing it.");

    m.def(
        "count_chain",
        [](const py::sequence& counts) {
            CountChain chain = count_chain(counts_from(counts));
            py::list vectors;
            for (const CountVector& v : chain.vectors) vectors.append(to_py_ints(v));
            py::dict out;
            out["chain"] = vectors;
            out["entries"] = to_py_ints(chain.entries);
            out["terminal_power"] = to_py_int(chain.terminal_power);
            return out;
        },
        py::arg("counts"), "Division-remainder chain from the counts down to the terminal vector.");

    m.def(
        "itinerary",
        [](unsigned k, const std::string& point, std::size_t max_steps) {
            Itinerary itin = itinerary(RationalPoint::parse(k, point), max_steps);
            return py::make_tuple(to_py_ints(itin.entries), itin.terminated);
        },
        py::arg("k"), py::arg("point"), py::arg("max_steps") = 10000,
        "Branch entries of a rational direction; the flag marks the all-zero tail.");

    m.def(
        "point_from_itinerary",
        [](unsigned k, const py::sequence& entries) {
            std::vector<Integer> parsed;
            for (const auto& item : entries)
                parsed.push_back(from_py_int(py::reinterpret_borrow<py::object>(item)));
            return point_from_finite_itinerary(parsed, k).str();
        },
        py::arg("k"), py::arg("entries"),
        "The rational direction whose itinerary is the given entries then zeros.");

    m.def(
        "infimax",
        [](unsigned k, const std::string& source, std::size_t R) {
            if (source.find('/') != std::string::npos)
                return infimax_prefix(RationalPoint::parse(k, source), R).word.str();
            return infimax_prefix(ItinerarySource::parse(source), k, R).word.str();
        },
        py::arg("k"), py::arg("source"), py::arg("R"),
        "First R letters of the limit word of an itinerary source or rational direction.");

    m.def(
        "is_maximal",
        [](unsigned k, const std::string& word) { return is_maximal_word(Word::parse(k, word)); },
        py::arg("k"), py::arg("word"), "Is the word at least as large as all its rotations?");

    m.def(
        "regularity",
        [](unsigned k, const std::string& source, std::size_t depth) {
            ClassificationRecord rec = classify(ItinerarySource::parse(source), k, depth);
            py::dict out;
            out["verdict"] = verdict_name(rec.verdict);
            out["criterion"] = rec.criterion;
            out["depth"] = rec.depth;
            out["delta_trace"] = rec.delta_trace;
            out["diameter_trace"] = rec.diameter_trace;
            if (rec.dimension_estimate)
                out["dimension_estimate"] = *rec.dimension_estimate;
            return out;
        },
        py::arg("k"), py::arg("source"), py::arg("depth") = 40,
        "Evidence-backed classification of the directions with a given itinerary.");

    m.def(
        "vertices",
        [](unsigned k, const std::string& source, std::size_t r) {
            VertexImages images = vertex_images(ItinerarySource::parse(source), k, r);
            py::list verts;
            for (const SimplexVector& v : images.vertices) {
                py::list row;
                for (const Rational& x : v) row.append(to_string(x));
                verts.append(row);
            }
            return verts;
        },
        py::arg("k"), py::arg("source"), py::arg("r"),
        "Exact vertex images at depth r, each component as a rational string.");
}
