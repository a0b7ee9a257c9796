#include "infimax/simplex.hpp"

#include <sstream>
#include <utility>

namespace infimax {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string join_integers(const std::vector<Integer>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i].get_str();
    }
    return out.str();
}

}  // namespace

RationalPoint::RationalPoint(std::vector<Rational> components) : comps_(std::move(components)) {
    if (comps_.size() < 2) throw MalformedInput("a direction needs at least 2 components");
    Rational sum = 0;
    for (const Rational& c : comps_) {
        if (c < 0) throw MalformedInput("components must be non-negative");
        sum += c;
    }
    if (sum != 1) throw MalformedInput("components must sum to 1 (got " + to_string(sum) + ")");
    if (comps_.back() == 0)
        throw MalformedInput(
            "last component is zero; the direction lives over a smaller alphabet "
            "(drop it and use k-1 letters)");
}

RationalPoint RationalPoint::parse(unsigned k, const std::string& text) {
    std::vector<std::string> parts = split_commas(text);
    if (parts.size() != k)
        throw MalformedInput("expected " + std::to_string(k) + " components, got " +
                             std::to_string(parts.size()));
    std::vector<Rational> comps;
    comps.reserve(parts.size());
    Rational sum = 0;
    for (const std::string& part : parts) {
        Rational value = parse_rational(part);
        if (value < 0) throw MalformedInput("components must be non-negative");
        sum += value;
        comps.push_back(value);
    }
    if (sum == 0) throw MalformedInput("components must not all vanish");
    if (sum != 1)
        for (Rational& c : comps) c /= sum;
    return RationalPoint(std::move(comps));
}

RationalPoint RationalPoint::from_counts(const std::vector<Integer>& counts) {
    std::vector<Rational> comps;
    comps.reserve(counts.size());
    Integer sum = 0;
    for (const Integer& c : counts) {
        if (c < 0) throw MalformedInput("counts must be non-negative");
        sum += c;
    }
    if (sum == 0) throw MalformedInput("counts must not all vanish");
    for (const Integer& c : counts) comps.emplace_back(Rational(c) / Rational(sum));
    return RationalPoint(std::move(comps));
}

RationalPoint RationalPoint::terminal(unsigned k) {
    std::vector<Rational> comps(k, Rational(0));
    comps.back() = 1;
    return RationalPoint(std::move(comps));
}

std::string RationalPoint::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out << ',';
        out << to_string(comps_[i]);
    }
    return out.str();
}

Integer branch_index(const RationalPoint& alpha) {
    const unsigned k = alpha.dimension();
    return floor_quotient(alpha[0], alpha[k - 1]);
}

RationalPoint step(const RationalPoint& alpha) {
    const unsigned k = alpha.dimension();
    const Integer n = branch_index(alpha);
    const Rational denom = Rational(1) - alpha[0];
    if (denom == 0) throw InternalError("step at a point with first component 1");
    std::vector<Rational> out(k);
    for (unsigned j = 0; j + 2 < k; ++j) out[j] = alpha[j + 1] / denom;
    out[k - 2] = (alpha[0] - Rational(n) * alpha[k - 1]) / denom;
    out[k - 1] = (Rational(n + 1) * alpha[k - 1] - alpha[0]) / denom;
    return RationalPoint(std::move(out));
}

RationalPoint step_inverse(const Integer& n, const RationalPoint& alpha) {
    if (n < 0) throw MalformedInput("branch indices must be non-negative");
    const unsigned k = alpha.dimension();
    const Rational head = Rational(n + 1) * alpha[k - 2] + Rational(n) * alpha[k - 1];
    const Rational denom = head + 1;
    std::vector<Rational> out(k);
    out[0] = head / denom;
    for (unsigned j = 1; j + 1 < k; ++j) out[j] = alpha[j - 1] / denom;
    out[k - 1] = (alpha[k - 2] + alpha[k - 1]) / denom;
    return RationalPoint(std::move(out));
}

bool is_terminal(const RationalPoint& alpha) {
    const unsigned k = alpha.dimension();
    for (unsigned i = 0; i + 1 < k; ++i)
        if (alpha[i] != 0) return false;
    return true;
}

Itinerary itinerary(const RationalPoint& alpha, std::size_t max_steps) {
    Itinerary result;
    RationalPoint current = alpha;
    for (std::size_t steps = 0; steps < max_steps; ++steps) {
        if (is_terminal(current)) {
            result.terminated = true;
            return result;
        }
        result.entries.push_back(branch_index(current));
        current = step(current);
    }
    result.terminated = is_terminal(current);
    return result;
}

RationalPoint point_from_finite_itinerary(const std::vector<Integer>& entries, unsigned k) {
    if (k < 2) throw MalformedInput("alphabet size must be at least 2");
    RationalPoint current = RationalPoint::terminal(k);
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        current = step_inverse(*it, current);
    return current;
}

ZeroComponentReport zero_component_profile(const RationalPoint& alpha, const Itinerary& itin) {
    const unsigned k = alpha.dimension();
    ZeroComponentReport report;
    report.decidable = itin.terminated;
    for (unsigned i = 1; i <= k - 1; ++i) {
        ZeroComponentReport::Row row;
        row.component = i;
        row.component_zero = (alpha[i - 1] == 0);
        row.entries_zero = true;
        for (std::size_t r = i - 1; r < itin.entries.size(); r += k - 1)
            if (itin.entries[r] != 0) {
                row.entries_zero = false;
                break;
            }
        row.consistent = report.decidable ? (row.component_zero == row.entries_zero)
                                          : !(row.component_zero && !row.entries_zero);
        report.all_consistent = report.all_consistent && row.consistent;
        report.rows.push_back(row);
    }
    return report;
}

Itinerary reduce_itinerary(const Itinerary& itin, unsigned i, unsigned k) {
    if (k < 3) throw MalformedInput("dimension reduction needs at least 3 letters");
    if (i < 1 || i > k - 1) throw MalformedInput("reduced component must lie in 1..k-1");
    Itinerary result;
    result.terminated = itin.terminated;
    for (std::size_t r = 0; r < itin.entries.size(); ++r) {
        if (r % (k - 1) == i - 1) {
            if (itin.entries[r] != 0)
                throw MalformedInput("entry at position " + std::to_string(r) +
                                     " is non-zero; component " + std::to_string(i) +
                                     " does not vanish");
        } else {
            result.entries.push_back(itin.entries[r]);
        }
    }
    return result;
}

DimensionReduction reduce_dimension(const RationalPoint& alpha, unsigned i) {
    const unsigned k = alpha.dimension();
    if (k < 3) throw MalformedInput("dimension reduction needs at least 3 letters");
    if (i < 1 || i > k - 1) throw MalformedInput("reduced component must lie in 1..k-1");
    if (alpha[i - 1] != 0)
        throw MalformedInput("component " + std::to_string(i) + " does not vanish");

    Itinerary full = itinerary(alpha);
    if (!full.terminated)
        throw CapExceeded("itinerary did not terminate within the step budget");

    std::vector<Rational> comps;
    comps.reserve(k - 1);
    for (unsigned j = 0; j < k; ++j)
        if (j != i - 1) comps.push_back(alpha[j]);

    DimensionReduction out{RationalPoint(std::move(comps)), reduce_itinerary(full, i, k), i};
    return out;
}

ItinerarySource ItinerarySource::terminated(std::vector<Integer> entries) {
    for (const Integer& e : entries)
        if (e < 0) throw MalformedInput("itinerary entries must be non-negative");
    ItinerarySource src;
    src.kind_ = Kind::terminated_list;
    src.base_ = std::move(entries);
    while (!src.base_.empty() && src.base_.back() == 0) src.base_.pop_back();
    return src;
}

ItinerarySource ItinerarySource::prefix_only(std::vector<Integer> entries) {
    for (const Integer& e : entries)
        if (e < 0) throw MalformedInput("itinerary entries must be non-negative");
    ItinerarySource src;
    src.kind_ = Kind::bare_prefix;
    src.base_ = std::move(entries);
    return src;
}

ItinerarySource ItinerarySource::periodic(std::vector<Integer> block) {
    if (block.empty()) throw MalformedInput("periodic itinerary needs a non-empty block");
    bool all_zero = true;
    for (const Integer& e : block) {
        if (e < 0) throw MalformedInput("itinerary entries must be non-negative");
        if (e != 0) all_zero = false;
    }
    if (all_zero) return terminated({});
    ItinerarySource src;
    src.kind_ = Kind::periodic;
    src.base_ = std::move(block);
    return src;
}

ItinerarySource ItinerarySource::growth_minimal(const Integer& n0,
                                                std::optional<std::size_t> depth_hint) {
    if (n0 < 1) throw MalformedInput("growth itinerary needs n0 >= 1");
    ItinerarySource src;
    src.kind_ = Kind::growth;
    src.base_ = {n0};
    src.depth_hint_ = depth_hint;
    return src;
}

ItinerarySource ItinerarySource::parse(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw MalformedInput(
            "itinerary sources look like list:..., prefix:..., periodic:... or "
            "growth:minimal,n0=...");
    const std::string head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);

    auto parse_entries = [](const std::string& body) {
        std::vector<Integer> entries;
        for (const std::string& token : split_commas(body)) entries.push_back(parse_integer(token));
        return entries;
    };

    if (head == "list") return terminated(parse_entries(rest));
    if (head == "prefix") return prefix_only(parse_entries(rest));
    if (head == "periodic") return periodic(parse_entries(rest));
    if (head == "growth") {
        std::vector<std::string> parts = split_commas(rest);
        if (parts.empty() || (parts[0] != "minimal" && parts[0] != "min63b"))
            throw MalformedInput("unknown growth variant; use growth:minimal,n0=...");
        std::optional<Integer> n0;
        std::optional<std::size_t> depth;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const std::size_t eq = parts[i].find('=');
            if (eq == std::string::npos)
                throw MalformedInput("growth options look like n0=1 or r=5");
            const std::string key = parts[i].substr(0, eq);
            const std::string value = parts[i].substr(eq + 1);
            if (key == "n0") {
                n0 = parse_integer(value);
            } else if (key == "r") {
                Integer depth_value = parse_integer(value);
                if (depth_value < 0 || depth_value > 1000000)
                    throw MalformedInput("growth depth r out of range");
                depth = static_cast<std::size_t>(depth_value.get_ui());
            } else {
                throw MalformedInput("unknown growth option '" + key + "'");
            }
        }
        if (!n0) throw MalformedInput("growth itinerary needs n0=...");
        return growth_minimal(*n0, depth);
    }
    throw MalformedInput("unknown itinerary source '" + head + "'");
}

bool ItinerarySource::has_entry(std::size_t r) const {
    if (kind_ == Kind::bare_prefix) return r < base_.size();
    return true;
}

Integer ItinerarySource::entry(std::size_t r) const {
    switch (kind_) {
        case Kind::terminated_list:
            return r < base_.size() ? base_[r] : Integer(0);
        case Kind::bare_prefix:
            if (r >= base_.size())
                throw MalformedInput("itinerary exhausted: only " + std::to_string(base_.size()) +
                                     " entries are known");
            return base_[r];
        case Kind::periodic:
            return base_[r % base_.size()];
        case Kind::growth:
            break;
    }
    if (growth_cache_.empty()) {
        growth_cache_.push_back(base_[0]);
        growth_product_ = base_[0] + 2;
    }
    while (growth_cache_.size() <= r) {
        const std::size_t depth = growth_cache_.size();
        Integer next = Integer(1) << (depth + 2);
        next *= growth_product_;
        growth_product_ *= next + 2;
        growth_cache_.push_back(std::move(next));
    }
    return growth_cache_[r];
}

Itinerary ItinerarySource::prefix(std::size_t len) const {
    Itinerary out;
    out.terminated = (kind_ == Kind::terminated_list);
    out.entries.reserve(len);
    for (std::size_t r = 0; r < len; ++r) {
        if (kind_ == Kind::terminated_list && r >= base_.size()) break;
        out.entries.push_back(entry(r));
    }
    return out;
}

bool ItinerarySource::all_entries_positive() const {
    switch (kind_) {
        case Kind::terminated_list:
        case Kind::bare_prefix:
            return false;  // zero tail / unknown tail
        case Kind::periodic:
            for (const Integer& e : base_)
                if (e == 0) return false;
            return true;
        case Kind::growth:
            return base_[0] >= 1;
    }
    return false;
}

bool ItinerarySource::guarantees_ones_blocks(std::size_t len) const {
    if (kind_ != Kind::periodic) return false;
    if (len == 0) return true;
    bool all_ones = true;
    for (const Integer& e : base_)
        if (e != 1) {
            all_ones = false;
            break;
        }
    if (all_ones) return true;
    // a maximal run in the infinite repetition shows up inside two adjacent copies
    std::size_t best = 0, run = 0;
    for (std::size_t pass = 0; pass < 2; ++pass)
        for (const Integer& e : base_) {
            if (e == 1) {
                ++run;
                if (run > best) best = run;
            } else {
                run = 0;
            }
        }
    return best >= len;
}

std::string ItinerarySource::str() const {
    switch (kind_) {
        case Kind::terminated_list:
            return "list:" + join_integers(base_);
        case Kind::bare_prefix:
            return "prefix:" + join_integers(base_);
        case Kind::periodic:
            return "periodic:" + join_integers(base_);
        case Kind::growth:
            break;
    }
    std::string out = "growth:minimal,n0=" + base_[0].get_str();
    if (depth_hint_) out += ",r=" + std::to_string(*depth_hint_);
    return out;
}

}  // namespace infimax
