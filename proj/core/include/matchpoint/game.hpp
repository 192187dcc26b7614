#ifndef MATCHPOINT_GAME_HPP
#define MATCHPOINT_GAME_HPP

#include <array>

namespace matchpoint {

/// Outcome distribution of the pre-deuce phase of a game, keyed by the
/// server's relative score r in {+2, +1, 0, -1, -2}. r = +2 is a direct win
/// for the server (4-0 or 4-1), r = -2 a direct win for the receiver; the
/// three middle states feed the win-by-two race that also covers deuce.
struct GameStateDist {
    double direct_win;   // r = +2
    double ahead;        // r = +1
    double level;        // r =  0
    double behind;       // r = -1
    double direct_loss;  // r = -2

    double at(int relative_score) const;
    std::array<double, 5> as_array() const { return {direct_win, ahead, level, behind, direct_loss}; }
    double total() const { return direct_win + ahead + level + behind + direct_loss; }
};

/// Probability the server wins a game, given their per-point win probability.
/// Closed form; p must be in (0,1).
double game_win_prob(double p);

/// The five pre-deuce state probabilities for a server with point probability p.
GameStateDist pre_deuce_state_dist(double p);

/// Probability the server eventually wins from the win-by-two race at
/// relative score r in {-1, 0, +1} (r = 0 is deuce), server about to serve.
double deuce_win_prob(double p, int relative_score);

/// Independent route to the same number: absorption over the full point-score
/// chain (score pairs up to deuce, then an exact linear solve of the 3-state
/// win-by-two loop). Shares no algebra with game_win_prob.
double game_win_prob_oracle(double p);

}  // namespace matchpoint

#endif
