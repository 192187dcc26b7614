#ifndef MATCHPOINT_TIEBREAK_HPP
#define MATCHPOINT_TIEBREAK_HPP

#include <array>
#include <map>

#include "matchpoint/player.hpp"
#include "matchpoint/point_probs.hpp"

namespace matchpoint {

/// Distribution over 7-point tiebreak outcomes: the 12 decisive scores
/// (7,x)/(x,7) for x = 0..5, plus the probability of reaching 6-6 and
/// continuing into sudden death.
struct TiebreakDist {
    std::array<double, 6> win_a;  // P(7,x), x = 0..5
    std::array<double, 6> win_b;  // P(x,7), x = 0..5
    double continuation;          // P(6,6)

    double total() const;
    double decisive_win_a() const;  // sum of P(7,x)
    double decisive_win_b() const;
};

/// Which player serves point `number` (1-based) when `first` serves point 1,
/// under the A/BB/AA/BB/... pattern.
Player tiebreak_server(int number, Player first);

/// Closed-form tiebreak score distribution, A serving point 1. Each decisive
/// entry sums binomial terms over y, the number of points the winner took on
/// their own serve.
TiebreakDist tiebreak_score_dist(const PointProbs& probs);

/// Same distribution by exhaustive walk of all point-outcome prefixes of
/// length <= 12 under the serve order; independent of the closed forms.
TiebreakDist tiebreak_dist_oracle(const PointProbs& probs, Player first = Player::A);

/// Probability that the player serving first eventually leads by two points
/// in the sudden-death phase entered at 6-6 (serve pattern 1,2,2,...).
double sudden_death_win_prob(const PointProbs& probs);

/// A's probability of winning the tiebreak outright: decisive wins plus the
/// continuation mass times the sudden-death win probability.
double tiebreak_win_prob(const PointProbs& probs);
double tiebreak_win_prob_b(const PointProbs& probs);

/// Enumeration mass per (score, y) where y counts the winner's points won on
/// the winner's own serves; continuation keyed by A's own-serve points at 6-6.
/// Lets callers check each closed-form term against the walk.
struct TiebreakDecomp {
    std::array<std::map<int, double>, 6> win_a;
    std::array<std::map<int, double>, 6> win_b;
    std::map<int, double> continuation;
};
TiebreakDecomp tiebreak_oracle_decomposition(const PointProbs& probs);

/// One y-term of the closed-form expression for a decisive score (or for the
/// continuation when `x` is 6 and `a_wins` ignored). Zero outside the
/// formula's summation range.
double tiebreak_closed_term(bool a_wins, int x, int y, const PointProbs& probs);

}  // namespace matchpoint

#endif
