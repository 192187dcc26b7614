#ifndef MATCHPOINT_SIMULATE_HPP
#define MATCHPOINT_SIMULATE_HPP

#include <cstdint>
#include <optional>

#include "matchpoint/match.hpp"
#include "matchpoint/player.hpp"
#include "matchpoint/point_probs.hpp"
#include "matchpoint/rng.hpp"
#include "matchpoint/set.hpp"

namespace matchpoint {

/// Who serves first if the Grand Tiebreak is actually played.
enum class GtServerRule { rotation, player_a, player_b };

struct SimConfig {
    SimConfig(PointProbs probs_in, MatchFormat format_in, std::int64_t trials_in,
              std::uint64_t seed_in);
    PointProbs probs;
    MatchFormat format;
    std::int64_t trials;
    std::uint64_t seed;
};

struct MatchOutcome {
    SetSequence sets;
    Player winner;
    int games_a;
    int games_b;
    bool gt;
    std::optional<Player> gt_winner;  // present iff gt and GT play was requested
};

/// One point-by-point match. Serve rotation is continuous across set
/// boundaries; a tiebreak occupies one slot in the rotation, so the player
/// who did not serve its first point serves the next set's first game.
MatchOutcome simulate_match(const PointProbs& probs, MatchFormat format, RandomStream& rng);

/// As simulate_match, and if the outcome is a GT the extra tiebreak is played
/// out under `rule` and its winner recorded.
MatchOutcome simulate_match_with_gt(const PointProbs& probs, MatchFormat format,
                                    GtServerRule rule, RandomStream& rng);

struct SetResult {
    SetScore score;
    Player next_first_server;  // who serves the first game of the next set
};

/// One set, point by point, `first_server` serving game 1.
SetResult simulate_set(const PointProbs& probs, Player first_server, RandomStream& rng);

/// One game; returns true if the server took it.
bool simulate_game_server_wins(double server_point_prob, RandomStream& rng);

/// One 7-point tiebreak (first to 7, win by two, paired serve order),
/// `first_server` serving point 1.
Player simulate_tiebreak(const PointProbs& probs, Player first_server, RandomStream& rng);

/// The proposed Grand Tiebreak is an ordinary 7-point tiebreak.
Player simulate_grand_tiebreak(const PointProbs& probs, Player first_server, RandomStream& rng);

/// Aggregate over a batch of simulated matches. Counts are integer sums of
/// per-trial results, so they are independent of worker count and order.
struct SimSummary {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t wins_a = 0;
    std::int64_t gt_count = 0;
    std::optional<std::int64_t> gt_wins_a;  // present iff GT play was requested

    double win_freq_a() const;
    double gt_freq() const;
    double gt_stderr() const;  // binomial, sqrt(f(1-f)/n); 0 when degenerate
    bool degenerate() const { return trials < 2; }
};

/// Runs config.trials seeded matches; optionally plays out the GT for the
/// matches that exhibit one. `threads` <= 0 picks the hardware count; results
/// are identical for any thread count because trial streams derive from
/// (seed, index).
SimSummary run_simulation(const SimConfig& config, std::optional<GtServerRule> gt_rule = {},
                          int threads = 0);

struct GtEstimate {
    double estimate;
    double stderr_value;  // binomial standard error sqrt(f(1-f)/n)
    std::int64_t trials;
    std::int64_t gt_count;
    bool degenerate;  // single-trial runs report stderr 0 and set this flag
};

/// Sample frequency of the GT discrepancy over config.trials seeded matches.
GtEstimate estimate_gt_prob(const SimConfig& config, int threads = 0);

}  // namespace matchpoint

#endif
