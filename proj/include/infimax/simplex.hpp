#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infimax/numeric.hpp"

namespace infimax {

// A point of the simplex: exact rationals, non-negative, summing to 1, with a
// positive last component (directions with a vanishing last component belong
// to a smaller alphabet; see reduce_dimension).
class RationalPoint {
  public:
    explicit RationalPoint(std::vector<Rational> components);

    // "24/41,3/41,14/41" or the count shorthand "24,3,14" (normalized by the
    // sum when the entries do not already sum to 1).
    static RationalPoint parse(unsigned k, const std::string& text);
    static RationalPoint from_counts(const std::vector<Integer>& counts);
    static RationalPoint terminal(unsigned k);  // (0, ..., 0, 1)

    unsigned dimension() const { return static_cast<unsigned>(comps_.size()); }
    const std::vector<Rational>& components() const { return comps_; }
    const Rational& operator[](unsigned i) const { return comps_[i]; }  // 0-based

    std::string str() const;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.comps_ == b.comps_;
    }

  private:
    std::vector<Rational> comps_;
};

struct Itinerary {
    std::vector<Integer> entries;
    bool terminated = false;  // stored entries are followed by the all-zero tail
};

// the branch n = floor(alpha_1 / alpha_k) containing alpha
Integer branch_index(const RationalPoint& alpha);

// one application of the continued-fraction map (exact)
RationalPoint step(const RationalPoint& alpha);

// the branch-n inverse; step(step_inverse(n, alpha)) == alpha
RationalPoint step_inverse(const Integer& n, const RationalPoint& alpha);

bool is_terminal(const RationalPoint& alpha);  // alpha == (0,...,0,1)

// Iterates step, recording branch indices. Rational points always reach
// (0,...,0,1); the result is marked terminated when they do within max_steps.
Itinerary itinerary(const RationalPoint& alpha, std::size_t max_steps = 10000);

// the unique point whose itinerary is the given entries followed by zeros
RationalPoint point_from_finite_itinerary(const std::vector<Integer>& entries, unsigned k);

// Component i vanishes exactly when every entry at positions r = i-1 (mod k-1)
// vanishes. Decidable for terminated itineraries; a prefix can only refute.
struct ZeroComponentReport {
    struct Row {
        unsigned component;        // 1-based, 1..k-1
        bool component_zero;
        bool entries_zero;         // all observed entries in the congruence class vanish
        bool consistent;
    };
    std::vector<Row> rows;
    bool decidable = false;        // itinerary carried the all-zero-tail marker
    bool all_consistent = true;
};
ZeroComponentReport zero_component_profile(const RationalPoint& alpha, const Itinerary& itin);

// Deletes entries at positions r = i-1 (mod k-1); they must all vanish.
Itinerary reduce_itinerary(const Itinerary& itin, unsigned i, unsigned k);

// Drops a vanishing component i <= k-1, yielding the point over k-1 letters
// together with the transformed itinerary.
struct DimensionReduction {
    RationalPoint point;
    Itinerary itinerary;
    unsigned removed_component;
};
DimensionReduction reduce_dimension(const RationalPoint& alpha, unsigned i);

// An itinerary given by rule rather than value — the only faithful way to feed
// irrational directions into the system.
//   "list:1,0,10,3"        entries then the all-zero tail (terminated)
//   "prefix:1,0,10"        entries with nothing asserted about the tail
//   "periodic:2,3"         the block repeated forever
//   "growth:minimal,n0=1"  minimal superexponential generator
//                          n_r = 2^{r+2} * prod_{i<r}(n_i + 2); optional ",r=D"
//                          records a preferred evidence depth
class ItinerarySource {
  public:
    enum class Kind { terminated_list, bare_prefix, periodic, growth };

    static ItinerarySource parse(const std::string& text);
    static ItinerarySource terminated(std::vector<Integer> entries);
    static ItinerarySource prefix_only(std::vector<Integer> entries);
    static ItinerarySource periodic(std::vector<Integer> block);
    static ItinerarySource growth_minimal(const Integer& n0, std::optional<std::size_t> depth_hint = {});

    Kind kind() const { return kind_; }
    const std::vector<Integer>& base() const { return base_; }
    std::optional<std::size_t> depth_hint() const { return depth_hint_; }

    // Entries available beyond the stored block? (false only for bare prefixes)
    bool has_entry(std::size_t r) const;
    Integer entry(std::size_t r) const;
    Itinerary prefix(std::size_t len) const;

    bool all_entries_positive() const;
    // Does the (infinite) itinerary contain arbitrarily late runs of `len`
    // consecutive entries equal to 1?
    bool guarantees_ones_blocks(std::size_t len) const;

    std::string str() const;

  private:
    ItinerarySource() = default;

    Kind kind_ = Kind::terminated_list;
    std::vector<Integer> base_;
    std::optional<std::size_t> depth_hint_;
    mutable std::vector<Integer> growth_cache_;
    mutable Integer growth_product_ = 1;  // prod (n_i + 2) over cached entries
};

}  // namespace infimax
