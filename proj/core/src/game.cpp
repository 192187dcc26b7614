#include "matchpoint/game.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "matchpoint/point_probs.hpp"

namespace matchpoint {

double GameStateDist::at(int relative_score) const {
    switch (relative_score) {
        case 2: return direct_win;
        case 1: return ahead;
        case 0: return level;
        case -1: return behind;
        case -2: return direct_loss;
        default: throw std::domain_error("relative score must be in {-2,-1,0,1,2}");
    }
}

double game_win_prob(double p) {
    detail::require_unit_open(p, "p");
    const double denom = 1.0 - 2.0 * p + 2.0 * p * p;
    const double p4 = p * p * p * p;
    return p4 * (15.0 - 34.0 * p + 28.0 * p * p - 8.0 * p * p * p) / denom;
}

GameStateDist pre_deuce_state_dist(double p) {
    detail::require_unit_open(p, "p");
    const double u = 1.0 - p;
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    return GameStateDist{
        .direct_win = p4 * (5.0 - 4.0 * p),
        .ahead = 4.0 * p3 * u2,
        .level = 6.0 * p2 * u2,
        .behind = 4.0 * p2 * u3,
        .direct_loss = u4 * (1.0 + 4.0 * p),
    };
}

double deuce_win_prob(double p, int relative_score) {
    detail::require_unit_open(p, "p");
    const double denom = 1.0 - 2.0 * p + 2.0 * p * p;
    switch (relative_score) {
        case 1: return (p - p * p + p * p * p) / denom;
        case 0: return p * p / denom;
        case -1: return p * p * p / denom;
        default: throw std::domain_error("relative score must be in {-1,0,1}");
    }
}

namespace {

// Win probabilities of the win-by-two race from relative scores {+1, 0, -1},
// obtained by Gaussian elimination on the 3x3 linear system
//   x(+1) = p + (1-p) x(0)
//   x(0)  = p x(+1) + (1-p) x(-1)
//   x(-1) = p x(0)
// rather than by reusing any closed form.
std::array<double, 3> solve_race(double p) {
    double m[3][4] = {
        {1.0, -(1.0 - p), 0.0, p},
        {-p, 1.0, -(1.0 - p), 0.0},
        {0.0, -p, 1.0, 0.0},
    };
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row) {
            if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
        }
        for (int k = 0; k < 4; ++k) std::swap(m[col][k], m[pivot][k]);
        for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

double game_win_prob_oracle(double p) {
    detail::require_unit_open(p, "p");
    const auto race = solve_race(p);
    const double from_deuce = race[1];

    // Forward accumulation over point scores (server, receiver), both <= 3.
    // Absorption: server reaches 4 with receiver <= 2; receiver reaches 4 with
    // server <= 2; (3,3) enters the win-by-two race.
    double reach[4][4] = {};
    reach[0][0] = 1.0;
    double win = 0.0;
    double race_mass = 0.0;
    for (int total = 0; total <= 5; ++total) {
        for (int a = 0; a <= 3; ++a) {
            const int b = total - a;
            if (b < 0 || b > 3) continue;
            const double mass = reach[a][b];
            if (mass == 0.0) continue;
            // server wins the point
            if (a + 1 == 4) {
                if (b <= 2) win += mass * p;
            } else if (a + 1 == 3 && b == 3) {
                race_mass += mass * p;
            } else {
                reach[a + 1][b] += mass * p;
            }
            // receiver wins the point
            if (b + 1 == 4) {
                // loss when a <= 2; contributes nothing
            } else if (a == 3 && b + 1 == 3) {
                race_mass += mass * (1.0 - p);
            } else {
                reach[a][b + 1] += mass * (1.0 - p);
            }
        }
    }
    return win + race_mass * from_deuce;
}

}  // namespace matchpoint
