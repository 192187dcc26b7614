#ifndef MATCHPOINT_POINT_PROBS_HPP
#define MATCHPOINT_POINT_PROBS_HPP

#include <stdexcept>
#include <string>

#include "matchpoint/player.hpp"

namespace matchpoint {

namespace detail {
/// Rejects probabilities outside the open interval (0,1); endpoints included.
inline double require_unit_open(double value, const char* name) {
    if (!(value > 0.0 && value < 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in the open interval (0,1), got " +
                                std::to_string(value));
    }
    return value;
}
}  // namespace detail

/// Per-point serve-win probabilities: p for player A serving, q for player B
/// serving. Both strictly inside (0,1).
class PointProbs {
  public:
    PointProbs(double p, double q)
        : p_(detail::require_unit_open(p, "p")), q_(detail::require_unit_open(q, "q")) {}

    double p() const { return p_; }
    double q() const { return q_; }

    /// Probability the named player wins a point on their own serve.
    double serve_win(Player who) const { return who == Player::A ? p_ : q_; }

    /// The same match seen with the players relabeled.
    PointProbs swapped() const { return {q_, p_}; }

  private:
    double p_;
    double q_;
};

}  // namespace matchpoint

#endif
