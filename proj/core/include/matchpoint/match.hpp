#ifndef MATCHPOINT_MATCH_HPP
#define MATCHPOINT_MATCH_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "matchpoint/player.hpp"
#include "matchpoint/point_probs.hpp"
#include "matchpoint/set.hpp"

namespace matchpoint {

/// Best-of-3 (women's Grand Slam) or best-of-5 (men's).
class MatchFormat {
  public:
    explicit MatchFormat(int best_of);
    int best_of() const { return best_of_; }
    int sets_to_win() const { return best_of_ / 2 + 1; }

    friend bool operator==(const MatchFormat&, const MatchFormat&) = default;

  private:
    int best_of_;
};

/// An ordered, terminal sequence of set scores: exactly one player reaches
/// the required set count, and only at the final element.
class SetSequence {
  public:
    explicit SetSequence(std::vector<SetScore> sets, MatchFormat format);

    const std::vector<SetScore>& sets() const { return sets_; }
    MatchFormat format() const { return format_; }
    std::size_t size() const { return sets_.size(); }
    Player winner() const { return winner_; }
    int games_a() const { return games_a_; }
    int games_b() const { return games_b_; }

  private:
    std::vector<SetScore> sets_;
    MatchFormat format_;
    Player winner_;
    int games_a_;
    int games_b_;
};

/// True iff the match winner took strictly fewer games than the loser.
/// Equal totals never qualify.
bool is_gt(const SetSequence& sequence);

/// Exhaustive per-length counts of terminal sequences and of those that
/// produce a Grand Tiebreak discrepancy.
struct GtCensus {
    struct LengthCount {
        int sets;
        std::int64_t sequences;
        std::int64_t gt_sequences;
    };
    int best_of;
    std::vector<LengthCount> by_length;

    std::int64_t total() const;
    std::int64_t gt_total() const;
    double gt_share() const;  // in [0,1]
};

namespace detail {

/// Streams every terminal sequence as (score indices, length) without
/// materializing SetSequence objects. Scores are canonical SetScore indices.
template <typename Visitor>
void visit_sequences(MatchFormat format, Visitor&& visit) {
    const int need = format.sets_to_win();
    const int max_sets = format.best_of();
    int idx[5] = {};
    // wins[i] says whether the eventual match winner took set i
    bool wins[5] = {};
    for (int length = need; length <= max_sets; ++length) {
        const int losses = length - need;
        // choose positions of the winner's lost sets among the first length-1
        const int slots = length - 1;
        const std::uint32_t limit = 1u << slots;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if (std::popcount(mask) != losses) continue;
            for (int winner_is_a = 1; winner_is_a >= 0; --winner_is_a) {
                for (int i = 0; i < slots; ++i) wins[i] = ((mask >> i) & 1u) == 0;
                wins[length - 1] = true;
                // odometer over the 7 winning scores per set
                for (int i = 0; i < length; ++i) idx[i] = 0;
                while (true) {
                    int scores[5];
                    for (int i = 0; i < length; ++i) {
                        const bool set_won_by_a = wins[i] == (winner_is_a == 1);
                        // indices 0..6 are the A-won scores; +7 mirrors them
                        scores[i] = set_won_by_a ? idx[i] : idx[i] + 7;
                    }
                    visit(scores, length);
                    int pos = length - 1;
                    while (pos >= 0 && idx[pos] == 6) idx[pos--] = 0;
                    if (pos < 0) break;
                    ++idx[pos];
                }
            }
        }
    }
}

}  // namespace detail

/// Calls `fn` once per terminal sequence of the format.
template <typename F>
void for_each_sequence(MatchFormat format, F&& fn) {
    detail::visit_sequences(format, [&](const int* scores, int length) {
        std::vector<SetScore> sets;
        sets.reserve(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) sets.push_back(SetScore::from_index(scores[i]));
        fn(SetSequence{std::move(sets), format});
    });
}

GtCensus gt_census(MatchFormat format);

/// Product of per-set distribution entries, sets treated as independent.
double sequence_probability(const SetSequence& sequence, const PointProbs& probs);

/// Total probability of all GT sequences of the format.
double gt_probability(const PointProbs& probs, MatchFormat format);

/// Probability A wins the match (sum over A-winning sequences).
double match_win_prob(const PointProbs& probs, MatchFormat format);

struct ScanPoint {
    double p;
    double gt_prob;
};
struct ScanResult {
    std::vector<ScanPoint> points;
    std::size_t peak_index = 0;

    const ScanPoint& peak() const { return points.at(peak_index); }
};

/// gt_probability at p = q for each grid value; records the argmax.
ScanResult gt_probability_scan(MatchFormat format, const std::vector<double>& grid);

}  // namespace matchpoint

#endif
