#include "infimax/infimax.hpp"

#include <algorithm>
#include <optional>

namespace infimax {

namespace {

// True once the consumed position sits in the known all-zero tail of a
// terminated itinerary.
bool in_zero_tail(const ItinerarySource& source, std::size_t position) {
    return source.kind() == ItinerarySource::Kind::terminated_list &&
           position >= source.base().size();
}

// Consumes entries until the tower word has `target` letters, batching zero
// runs. Returns true when growth stopped because only the zero tail remains
// (the limit word is then the periodic repetition of the tower word).
bool grow_tower(SubstitutionTower& tower, const ItinerarySource& source, const Integer& target) {
    const Letter top = Letter(tower.alphabet_size());
    std::size_t consumed = tower.depth();
    while (tower.image_length(top) < target) {
        if (in_zero_tail(source, consumed)) return true;
        if (!source.has_entry(consumed))
            throw MalformedInput("itinerary exhausted after " + std::to_string(consumed) +
                                 " entries; more are needed for the requested prefix");
        Integer n = source.entry(consumed);
        if (n == 0) {
            std::size_t run = 1;
            while (!in_zero_tail(source, consumed + run) && source.has_entry(consumed + run) &&
                   source.entry(consumed + run) == 0)
                ++run;
            tower.extend_zero_run(run);
            consumed += run;
        } else {
            tower.extend(n);
            ++consumed;
        }
    }
    return false;
}

Word repeat_to(const Word& block, unsigned k, std::size_t total) {
    Word out(k);
    while (out.size() < total) out.append(block, std::min(block.size(), total - out.size()));
    return out;
}

}  // namespace

InfimaxPrefix infimax_prefix(const ItinerarySource& source, unsigned k, std::size_t R) {
    Alphabet alphabet(k);
    if (R < 1) throw MalformedInput("prefix length must be at least 1");

    SubstitutionTower tower(k, R);
    const bool periodic_tail = grow_tower(tower, source, Integer(static_cast<unsigned long>(R)));

    InfimaxPrefix out;
    out.depth = tower.depth();
    out.itinerary_used.entries = tower.entries();
    out.itinerary_used.terminated = in_zero_tail(source, tower.depth());
    out.exact_total_length = tower.image_length(Letter(k));
    if (periodic_tail) {
        // the zero tail fixes the top letter, so the limit is the periodic word
        out.word = repeat_to(tower.word_prefix(R), k, R);
    } else {
        out.word = tower.word_prefix(R);
    }
    return out;
}

InfimaxPrefix infimax_prefix(const RationalPoint& alpha, std::size_t R) {
    Itinerary itin = itinerary(alpha);
    if (!itin.terminated)
        throw CapExceeded("itinerary did not terminate within the step budget");
    return infimax_prefix(ItinerarySource::terminated(std::move(itin.entries)),
                          alpha.dimension(), R);
}

LowerBoundCheck check_lower_bound(const RationalPoint& alpha, const Word& w, std::size_t R) {
    if (w.alphabet_size() != alpha.dimension()) throw MalformedInput("alphabet mismatch");
    InfimaxPrefix lower = infimax_prefix(alpha, R);
    SupWindow sup = sup_orbit_window(w, R);

    LowerBoundCheck out;
    out.infimax_side = std::move(lower.word);
    out.sup_side = std::move(sup.word);
    out.sup_window_start = sup.start;
    const int cmp = lex_compare(out.infimax_side, out.sup_side);
    out.holds = cmp <= 0;
    out.equal = cmp == 0;
    out.first_difference = R;
    for (std::size_t i = 0; i < R; ++i)
        if (out.infimax_side.at(i) != out.sup_side.at(i)) {
            out.first_difference = i;
            break;
        }
    return out;
}

ClosureWitness closure_witness(const RationalPoint& alpha, std::size_t R,
                               std::size_t max_letters) {
    if (R < 1) throw MalformedInput("agreement length must be at least 1");
    if (max_letters < R) throw CapExceeded("letter budget below the agreement length");
    const unsigned k = alpha.dimension();

    Itinerary itin = itinerary(alpha);
    if (!itin.terminated)
        throw CapExceeded("itinerary did not terminate within the step budget");
    const std::vector<Integer>& e = itin.entries;
    const std::size_t D = e.size();

    // approximant period lengths by inclusive depth
    std::vector<Integer> period_lengths;
    period_lengths.reserve(D);
    {
        SubstitutionTower probe(k, 1);
        for (std::size_t t = 0; t < D; ++t) {
            probe.extend(e[t]);
            period_lengths.push_back(probe.image_length(Letter(k)));
        }
    }

    ClosureWitness out;
    const Integer agreement(static_cast<unsigned long>(R));

    std::optional<std::size_t> head_depth;
    for (std::size_t d = 0; d + 1 < D; ++d)
        if (period_lengths[d] >= agreement && e[d + 1] > 0) {
            head_depth = d;
            break;
        }

    if (!head_depth) {
        // the zero tail arrives before a deeper positive entry: the periodic
        // word itself realizes the agreement
        MinimaxExpansion expansion = minimax_expansion(smallest_integer_multiple(alpha));
        out.periodic_fallback = true;
        out.depth = D;
        if (expansion.length > Integer(static_cast<unsigned long>(max_letters))) {
            out.word = expansion.prefix(max_letters);
            out.head = out.word;
        } else {
            Word period = expansion.word(max_letters);
            std::size_t total = std::max(R, 2 * period.size());
            if (total > max_letters) total = max_letters;
            out.word = repeat_to(period, k, total);
            out.head = period;
            out.blocks.push_back(std::move(period));
            out.powers.push_back(Integer(static_cast<unsigned long>(
                (total + out.blocks[0].size() - 1) / out.blocks[0].size())));
        }
    } else {
        const std::size_t d = *head_depth;
        out.depth = d;

        Word word(k);
        bool full = false;
        auto append_piece = [&](const Word& piece, bool piece_exact) {
            const std::size_t take = std::min(piece.size(), max_letters - word.size());
            word.append(piece, take);
            if (take < piece.size() || !piece_exact || word.size() == max_letters) full = true;
        };

        // U = T_d(k) T_d(1)^{n_{d+1}-1}: the head that pins the first R letters
        std::vector<Integer> head_entries(e.begin(), e.begin() + d + 1);
        SubstitutionTower head_tower = build_tower(head_entries, k, max_letters);
        append_piece(head_tower.image_prefix(Letter(k)), head_tower.image_exact(Letter(k)));
        for (Integer c = 1; !full && c < e[d + 1]; ++c)
            append_piece(head_tower.image_prefix(Letter(1)), head_tower.image_exact(Letter(1)));
        out.head = word;

        // blocks W_j: periods of deeper and deeper truncations, with powers
        // chosen so accumulated weight outruns the next block geometrically
        const std::size_t block_count = std::min<std::size_t>(D - d, 5);
        Integer used_weight = 0;
        for (std::size_t j = 0; j < block_count && !full; ++j) {
            const std::size_t m = std::min(d + 1 + j, D - 1);
            std::vector<Integer> block_entries(e.begin(), e.begin() + m + 1);
            SubstitutionTower block_tower = build_tower(block_entries, k, max_letters);
            const Integer block_length = block_tower.image_length(Letter(k));
            const bool block_exact =
                block_length <= Integer(static_cast<unsigned long>(max_letters));
            Word block = block_tower.word_prefix(max_letters);

            const std::size_t m_next = std::min(d + 2 + j, D - 1);
            const Integer schedule_target = (Integer(1) << j) * period_lengths[m_next];
            Integer p = 1;
            if (used_weight + block_length <= schedule_target)
                p = floor_quotient(schedule_target - used_weight, block_length) + 1;

            for (Integer c = 0; !full && c < p; ++c) append_piece(block, block_exact);
            used_weight += p * block_length;
            out.blocks.push_back(std::move(block));
            out.powers.push_back(std::move(p));
        }
        out.word = std::move(word);
    }

    if (out.word.size() < R)
        throw InternalError("closure witness shorter than the agreement length");
    InfimaxPrefix reference = infimax_prefix(alpha, R);
    for (std::size_t i = 0; i < R; ++i)
        if (out.word.at(i) != reference.word.at(i))
            throw InternalError("closure witness disagrees with the infimax prefix");
    if (!is_maximal_prefix_consistent(out.word))
        throw InternalError("closure witness fails the maximality prefix test");
    return out;
}

AlmostPeriodWitness almost_period_witness(const ItinerarySource& source, unsigned k,
                                          const Word& target, std::size_t verify_cap) {
    Alphabet alphabet(k);
    if (target.alphabet_size() != k) throw MalformedInput("alphabet mismatch");
    if (target.size() == 0) throw MalformedInput("target word must be non-empty");
    const std::size_t ts = target.size();

    AlmostPeriodWitness out;
    SubstitutionTower tower(k, ts);
    const bool stalled = grow_tower(tower, source, Integer(static_cast<unsigned long>(ts)));

    if (stalled) {
        // known zero tail: the limit is periodic with the tower word as period
        Word period = tower.word_prefix(ts);
        const std::size_t L = period.size();
        for (std::size_t i = 0; i < ts; ++i)
            if (target.at(i) != period.at(i % L))
                throw MalformedInput("target is not a prefix of the limit sequence");
        const std::size_t copies = (ts + L - 1) / L;
        out.depth = tower.depth();
        out.window = Integer(static_cast<unsigned long>(2 * L * copies));
    } else {
        Word prefix = tower.word_prefix(ts);
        for (std::size_t i = 0; i < ts; ++i)
            if (target.at(i) != prefix.at(i))
                throw MalformedInput("target is not a prefix of the limit sequence");
        out.depth = tower.depth();
        // k-1 more levels: every letter image at that depth contains the
        // depth-r approximant, so twice the longest image is a safe window
        for (unsigned extra = 0; extra + 1 < k; ++extra)
            tower.extend(source.entry(tower.depth()));
        Integer longest = 0;
        for (unsigned letter = 1; letter <= k; ++letter)
            longest = std::max(longest, tower.image_length(Letter(letter)));
        out.window = 2 * longest;
    }

    // spot verification on a generated prefix
    if (out.window.fits_ulong_p()) {
        const std::size_t N = static_cast<std::size_t>(out.window.get_ui());
        if (N >= ts && N + ts <= verify_cap) {
            const std::size_t plen = std::min(verify_cap, 3 * N + ts);
            Word generated = infimax_prefix(source, k, plen).word;
            const auto& text = generated.letters();
            const auto& pat = target.letters();
            std::vector<std::size_t> occurrences;
            auto it = text.begin();
            while (true) {
                it = std::search(it, text.end(), pat.begin(), pat.end());
                if (it == text.end()) break;
                occurrences.push_back(static_cast<std::size_t>(it - text.begin()));
                ++it;
            }
            const std::size_t slack = N - ts;
            bool ok = !occurrences.empty() && occurrences.front() <= slack &&
                      occurrences.back() + N >= text.size();
            for (std::size_t i = 0; ok && i + 1 < occurrences.size(); ++i)
                ok = occurrences[i + 1] - occurrences[i] <= slack;
            if (!ok) throw InternalError("almost-periodicity window check failed");
            out.verified = true;
            out.verified_letters = text.size();
        }
    }
    return out;
}

}  // namespace infimax
