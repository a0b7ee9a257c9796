#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infimax/numeric.hpp"
#include "infimax/simplex.hpp"
#include "infimax/substitution.hpp"

namespace infimax {

// Plain rational simplex vectors: unlike RationalPoint, boundary points
// (zero entries anywhere) are allowed here.
using SimplexVector = std::vector<Rational>;

// sup-norm distance, exact
Rational d_infinity(const SimplexVector& a, const SimplexVector& b);

// exp of the Hilbert projective distance, kept exact; infinite when the two
// points have different zero patterns
struct HilbertRatio {
    bool finite = true;
    Rational ratio = 1;  // D >= 1 when finite

    double log_value() const;  // the distance itself (for display)
};

HilbertRatio hilbert_ratio(const SimplexVector& a, const SimplexVector& b);

// d(A) = max over index pairs of (a_il a_jm)/(a_im a_jl); requires a strictly
// positive matrix
HilbertRatio cross_ratio_d(const IntMatrix& A);

// Birkhoff contraction coefficient tau(d) = (sqrt(d)-1)/(sqrt(d)+1), as
// tanh(log(d)/4) so astronomically large d stay representable; 1 for infinite d
double birkhoff_tau(const HilbertRatio& d);

// The k vertex images at depth r: normalized columns of A(n_0)...A(n_r).
struct VertexImages {
    std::size_t depth = 0;  // r; entries 0..r are consumed
    unsigned k = 0;
    std::vector<SimplexVector> vertices;  // k vertices, one per letter
    IntMatrix product;                    // the unnormalized column matrix
};

VertexImages vertex_images(const std::vector<Integer>& entries, unsigned k);
VertexImages vertex_images(const ItinerarySource& source, unsigned k, std::size_t r);

// max pairwise Hilbert ratio over the vertex set (the diameter is attained
// at vertices)
HilbertRatio vertex_diameter(const VertexImages& images);

// delta_r: minimum pairwise d_infinity among the first k-1 vertices
Rational separation_delta(const VertexImages& images);

// dimension of the affine hull of the given points (exact rational rank)
unsigned affine_rank(const std::vector<SimplexVector>& points);

// minimal superexponential entries n_r = 2^{r+2} * prod_{i<r}(n_i + 2)
std::vector<Integer> exceptional_entries(const Integer& n0, std::size_t count);

// the inverse branch never expands the Hilbert metric
struct NonExpansionCheck {
    HilbertRatio before;
    HilbertRatio after;
    bool holds = false;
};
NonExpansionCheck check_non_expansion(const Integer& n, const RationalPoint& a,
                                      const RationalPoint& b);

enum class Verdict { Regular, Exceptional, Unknown };

std::string verdict_name(Verdict v);

// Evidence-backed classification of the directions with a given itinerary.
// delta_trace[r] is delta_r; diameter_trace[r] is the log Hilbert diameter of
// the depth-r vertex set (infinity while the set touches the boundary).
struct ClassificationRecord {
    Verdict verdict = Verdict::Unknown;
    std::string criterion;
    std::size_t depth = 0;  // deepest evidence level computed
    std::vector<double> delta_trace;
    std::vector<double> diameter_trace;
    std::optional<unsigned> dimension_estimate;  // affine rank of the first k-1
                                                 // vertices at the deepest level
};

ClassificationRecord classify(const ItinerarySource& source, unsigned k,
                              std::size_t max_depth = 40);

}  // namespace infimax
