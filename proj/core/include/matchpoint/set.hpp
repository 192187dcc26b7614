#ifndef MATCHPOINT_SET_HPP
#define MATCHPOINT_SET_HPP

#include <array>
#include <compare>

#include "matchpoint/player.hpp"
#include "matchpoint/point_probs.hpp"

namespace matchpoint {

/// A terminal set score. The only valid endings are (6,x)/(x,6) with x <= 4,
/// (7,5)/(5,7), and the tiebreak sets (7,6)/(6,7).
class SetScore {
  public:
    SetScore(int games_a, int games_b);

    static bool valid(int games_a, int games_b);

    int games_a() const { return a_; }
    int games_b() const { return b_; }
    Player winner() const { return a_ > b_ ? Player::A : Player::B; }
    bool tiebreak() const { return (a_ == 7 && b_ == 6) || (a_ == 6 && b_ == 7); }
    SetScore reversed() const { return {b_, a_}; }

    /// Canonical position in [0, 14): A-won scores first, by games conceded.
    int index() const;
    static SetScore from_index(int index);
    static const std::array<SetScore, 14>& all();
    static constexpr int kCount = 14;

    friend bool operator==(const SetScore&, const SetScore&) = default;

  private:
    int a_;
    int b_;
};

/// Per-game hold probabilities: hold_a for A's service games, hold_b for B's.
struct GameProbs {
    GameProbs(double hold_a_in, double hold_b_in);
    double hold_a;
    double hold_b;
};

/// Hold probabilities induced by point probabilities through the game chain.
GameProbs game_probs_from_points(const PointProbs& probs);

/// Distribution over the 14 terminal set scores, plus the probability mass
/// that passed through 6-6 (already split into the (7,6)/(6,7) entries).
class SetScoreDist {
  public:
    SetScoreDist(std::array<double, 14> probs, double tiebreak_reach)
        : probs_(probs), tiebreak_reach_(tiebreak_reach) {}

    double at(const SetScore& score) const { return probs_[score.index()]; }
    double at_index(int index) const { return probs_.at(index); }
    const std::array<double, 14>& values() const { return probs_; }
    double tiebreak_reach() const { return tiebreak_reach_; }

    double win_prob_a() const;
    double total() const;

  private:
    std::array<double, 14> probs_;
    double tiebreak_reach_;
};

/// Closed-form set-score distribution; A serves the first game, servers
/// alternate, and the 6-6 mass is split by the tiebreak win probability
/// (A serves the tiebreak's first point).
SetScoreDist set_score_dist(const PointProbs& probs);

/// Same distribution by forward DP over game-by-game score states with
/// alternating servers; independent of the closed forms apart from sharing
/// the tiebreak split.
SetScoreDist set_dist_oracle(const PointProbs& probs);

/// Probability A wins the set: sum of the seven A-winning entries.
double set_win_prob(const PointProbs& probs);

/// One closed-form direct-score probability expressed in hold probabilities:
/// the winner takes the set 6-x (x <= 4) or 7-5. Exposed for term-level
/// cross-checks against the DP route.
double set_direct_score_formula(int loser_games, bool a_wins, const GameProbs& games);

}  // namespace matchpoint

#endif
