#include "infimax/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace infimax {

namespace {

void require_same_dimension(const SimplexVector& a, const SimplexVector& b) {
    if (a.size() != b.size() || a.empty()) throw MalformedInput("dimension mismatch");
}

VertexImages images_from_product(IntMatrix product, std::size_t depth, unsigned k) {
    VertexImages out;
    out.depth = depth;
    out.k = k;
    out.vertices.reserve(k);
    for (unsigned col = 0; col < k; ++col) {
        Integer sum = 0;
        for (unsigned row = 0; row < k; ++row) sum += product.at(row, col);
        if (sum <= 0) throw InternalError("vertex image column with non-positive sum");
        SimplexVector vertex(k);
        // Divide instead of constructing mpq from (num, den): mpq_class's
        // two-argument constructor does not canonicalize, and GMP comparisons
        // assume canonical operands.
        for (unsigned row = 0; row < k; ++row)
            vertex[row] = Rational(product.at(row, col)) / Rational(sum);
        out.vertices.push_back(std::move(vertex));
    }
    out.product = std::move(product);
    return out;
}

}  // namespace

Rational d_infinity(const SimplexVector& a, const SimplexVector& b) {
    require_same_dimension(a, b);
    Rational best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational diff = a[i] - b[i];
        if (diff < 0) diff = -diff;
        if (diff > best) best = diff;
    }
    return best;
}

double HilbertRatio::log_value() const {
    if (!finite) return std::numeric_limits<double>::infinity();
    return log_rational(ratio);
}

HilbertRatio hilbert_ratio(const SimplexVector& a, const SimplexVector& b) {
    require_same_dimension(a, b);
    HilbertRatio out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0) throw MalformedInput("simplex vectors must be non-negative");
        if ((a[i] == 0) != (b[i] == 0)) {
            out.finite = false;
            return out;
        }
    }
    // supports agree: maximize (a_i b_j) / (a_j b_i) over the common support
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j || a[j] == 0) continue;
            Rational candidate = (a[i] * b[j]) / (a[j] * b[i]);
            if (candidate > out.ratio) out.ratio = candidate;
        }
    }
    return out;
}

HilbertRatio cross_ratio_d(const IntMatrix& A) {
    const unsigned k = A.k;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            if (A.at(i, j) <= 0)
                throw MalformedInput("cross-ratio needs a strictly positive matrix");
    HilbertRatio out;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            if (i == j) continue;
            for (unsigned l = 0; l < k; ++l)
                for (unsigned m = 0; m < k; ++m) {
                    if (l == m) continue;
                    Rational candidate(A.at(i, l) * A.at(j, m), A.at(i, m) * A.at(j, l));
                    candidate.canonicalize();
                    if (candidate > out.ratio) out.ratio = candidate;
                }
        }
    return out;
}

double birkhoff_tau(const HilbertRatio& d) {
    if (!d.finite) return 1.0;
    if (d.ratio < 1) throw MalformedInput("cross-ratio below 1");
    // (sqrt(d)-1)/(sqrt(d)+1) = tanh(log(d)/4)
    return std::tanh(log_rational(d.ratio) / 4.0);
}

VertexImages vertex_images(const std::vector<Integer>& entries, unsigned k) {
    Alphabet alphabet(k);
    if (entries.empty()) throw MalformedInput("vertex images need at least one entry");
    IntMatrix product = identity_matrix(k);
    for (const Integer& n : entries) product = multiply(product, branch_matrix(n, k));
    return images_from_product(std::move(product), entries.size() - 1, k);
}

VertexImages vertex_images(const ItinerarySource& source, unsigned k, std::size_t r) {
    std::vector<Integer> entries;
    entries.reserve(r + 1);
    for (std::size_t i = 0; i <= r; ++i) entries.push_back(source.entry(i));
    return vertex_images(entries, k);
}

HilbertRatio vertex_diameter(const VertexImages& images) {
    HilbertRatio out;
    for (std::size_t i = 0; i < images.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < images.vertices.size(); ++j) {
            HilbertRatio pair = hilbert_ratio(images.vertices[i], images.vertices[j]);
            if (!pair.finite) return pair;
            if (pair.ratio > out.ratio) out.ratio = pair.ratio;
        }
    return out;
}

Rational separation_delta(const VertexImages& images) {
    const unsigned k = images.k;
    if (k < 3) throw MalformedInput("vertex separation needs at least 3 letters");
    Rational best = 2;  // above any d_infinity value on the simplex
    for (unsigned i = 0; i + 1 < k; ++i)
        for (unsigned j = i + 1; j + 1 < k; ++j) {
            Rational d = d_infinity(images.vertices[i], images.vertices[j]);
            if (d < best) best = d;
        }
    return best;
}

unsigned affine_rank(const std::vector<SimplexVector>& points) {
    if (points.size() <= 1) return 0;
    const std::size_t cols = points[0].size();
    std::vector<SimplexVector> rows;
    rows.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        require_same_dimension(points[i], points[0]);
        SimplexVector row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = points[i][j] - points[0][j];
        rows.push_back(std::move(row));
    }
    unsigned rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[pivot_row][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<Integer> exceptional_entries(const Integer& n0, std::size_t count) {
    ItinerarySource source = ItinerarySource::growth_minimal(n0);
    std::vector<Integer> out;
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r) out.push_back(source.entry(r));
    return out;
}

NonExpansionCheck check_non_expansion(const Integer& n, const RationalPoint& a,
                                      const RationalPoint& b) {
    if (a.dimension() != b.dimension()) throw MalformedInput("dimension mismatch");
    for (unsigned i = 0; i < a.dimension(); ++i)
        if (a[i] == 0 || b[i] == 0)
            throw MalformedInput("non-expansion check needs interior points");
    NonExpansionCheck out;
    out.before = hilbert_ratio(a.components(), b.components());
    RationalPoint ia = step_inverse(n, a);
    RationalPoint ib = step_inverse(n, b);
    out.after = hilbert_ratio(ia.components(), ib.components());
    if (!out.after.finite) throw InternalError("inverse branch left the interior");
    out.holds = out.after.ratio <= out.before.ratio;
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Regular:
            return "Regular";
        case Verdict::Exceptional:
            return "Exceptional";
        case Verdict::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

ClassificationRecord classify(const ItinerarySource& source, unsigned k,
                              std::size_t max_depth) {
    Alphabet alphabet(k);
    using Kind = ItinerarySource::Kind;
    ClassificationRecord rec;

    if (k == 2) {
        rec.verdict = Verdict::Regular;
        rec.criterion = "two letters: each itinerary corresponds to a single direction";
        return rec;
    }

    std::size_t depth_budget = max_depth;
    switch (source.kind()) {
        case Kind::terminated_list:
        case Kind::bare_prefix:
            depth_budget = std::min(max_depth, source.base().size());
            break;
        case Kind::periodic:
            if (source.all_entries_positive())
                depth_budget = std::min<std::size_t>(max_depth, 12);
            break;
        case Kind::growth:
            depth_budget = std::min<std::size_t>(
                max_depth, source.depth_hint() ? *source.depth_hint() + 1 : 8);
            break;
    }

    const std::size_t ones_block = 2 * static_cast<std::size_t>(k) - 3;
    const bool block_class =
        source.kind() == Kind::periodic && source.guarantees_ones_blocks(ones_block);
    const Rational contraction_threshold(1001, 1000);

    IntMatrix product = identity_matrix(k);
    std::vector<SimplexVector> deepest_vertices;
    std::optional<std::size_t> contracted_at;
    for (std::size_t r = 0; r < depth_budget; ++r) {
        if (!source.has_entry(r)) break;
        product = multiply(product, branch_matrix(source.entry(r), k));
        VertexImages images = images_from_product(product, r, k);
        rec.delta_trace.push_back(to_double(separation_delta(images)));
        HilbertRatio diameter = vertex_diameter(images);
        rec.diameter_trace.push_back(diameter.log_value());
        deepest_vertices = std::move(images.vertices);
        if (!contracted_at && diameter.finite && diameter.ratio < contraction_threshold) {
            contracted_at = r;
            if (block_class) break;  // evidence sufficient for the verdict
        }
    }
    rec.depth = rec.delta_trace.size();
    if (!deepest_vertices.empty()) {
        std::vector<SimplexVector> spanning(deepest_vertices.begin(),
                                            deepest_vertices.begin() + (k - 1));
        rec.dimension_estimate = affine_rank(spanning);
    }

    switch (source.kind()) {
        case Kind::terminated_list:
            rec.verdict = Verdict::Regular;
            rec.criterion = "terminating itinerary: the direction is rational";
            break;
        case Kind::periodic:
            if (source.all_entries_positive()) {
                rec.verdict = Verdict::Regular;
                rec.criterion =
                    "periodic positive itinerary: entries are bounded, within the "
                    "quadratic growth condition";
            } else if (block_class) {
                if (contracted_at) {
                    rec.verdict = Verdict::Regular;
                    rec.criterion =
                        "recurrent ones-blocks: vertex diameter contracted below 1001/1000 "
                        "at level " +
                        std::to_string(*contracted_at);
                } else {
                    rec.verdict = Verdict::Unknown;
                    rec.criterion =
                        "recurrent ones-blocks, but the vertex diameter did not reach "
                        "1001/1000 within the depth budget";
                }
            } else {
                rec.verdict = Verdict::Unknown;
                rec.criterion =
                    "periodic with zero entries and no recurrent ones-blocks: outside "
                    "the implemented regularity criteria";
            }
            break;
        case Kind::growth:
            rec.verdict = Verdict::Exceptional;
            rec.criterion =
                "superexponential growth: the limiting vertex set stays separated, so "
                "the direction set has positive dimension";
            break;
        case Kind::bare_prefix:
            rec.verdict = Verdict::Unknown;
            rec.criterion =
                "finite prefix only: the asymptotic class is not determined by finitely "
                "many entries";
            break;
    }
    return rec;
}

}  // namespace infimax
