#include "matchpoint/set.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "matchpoint/game.hpp"
#include "matchpoint/tiebreak.hpp"

namespace matchpoint {

bool SetScore::valid(int a, int b) {
    if (a == 6 && b >= 0 && b <= 4) return true;
    if (b == 6 && a >= 0 && a <= 4) return true;
    if ((a == 7 && b == 5) || (a == 5 && b == 7)) return true;
    if ((a == 7 && b == 6) || (a == 6 && b == 7)) return true;
    return false;
}

SetScore::SetScore(int games_a, int games_b) : a_(games_a), b_(games_b) {
    if (!valid(games_a, games_b)) {
        throw std::domain_error("not a terminal set score: " + std::to_string(games_a) + "-" +
                                std::to_string(games_b));
    }
}

int SetScore::index() const {
    // 0..4: (6,0)..(6,4); 5: (7,5); 6: (7,6); 7..11: (0,6)..(4,6); 12: (5,7); 13: (6,7)
    if (a_ > b_) {
        if (a_ == 6) return b_;
        return b_ == 5 ? 5 : 6;
    }
    if (b_ == 6) return 7 + a_;
    return a_ == 5 ? 12 : 13;
}

SetScore SetScore::from_index(int index) {
    if (index < 0 || index >= kCount) throw std::domain_error("set score index out of range");
    if (index <= 4) return {6, index};
    if (index == 5) return {7, 5};
    if (index == 6) return {7, 6};
    if (index <= 11) return {index - 7, 6};
    if (index == 12) return {5, 7};
    return {6, 7};
}

const std::array<SetScore, 14>& SetScore::all() {
    static const std::array<SetScore, 14> scores{
        from_index(0),  from_index(1),  from_index(2),  from_index(3),  from_index(4),
        from_index(5),  from_index(6),  from_index(7),  from_index(8),  from_index(9),
        from_index(10), from_index(11), from_index(12), from_index(13)};
    return scores;
}

GameProbs::GameProbs(double hold_a_in, double hold_b_in)
    : hold_a(detail::require_unit_open(hold_a_in, "hold_a")),
      hold_b(detail::require_unit_open(hold_b_in, "hold_b")) {}

GameProbs game_probs_from_points(const PointProbs& probs) {
    return {game_win_prob(probs.p()), game_win_prob(probs.q())};
}

double SetScoreDist::win_prob_a() const {
    double s = 0.0;
    for (int i = 0; i <= 6; ++i) s += probs_[i];
    return s;
}

double SetScoreDist::total() const {
    return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

double set_direct_score_formula(int loser_games, bool a_wins, const GameProbs& games) {
    const double pb = games.hold_a, qb = games.hold_b;
    const double upb = 1.0 - pb, uqb = 1.0 - qb;
    const int x = loser_games;
    if (x < 0 || x > 5) throw std::domain_error("direct set scores concede at most 5 games");
    double sum = 0.0;
    if (a_wins) {
        if (x == 5) {
            // 7-5: level at 5-5, then the winner takes games 11 and 12
            for (int y = 0; y <= 5; ++y)
                sum += binom(5, y) * binom(5, 5 - y) * ipow(pb, 6 - y) * ipow(upb, y) * ipow(qb, 5 - y) * ipow(uqb, y + 1);
        } else if (x % 2 == 0) {
            const int m = x / 2;
            for (int y = 3 - m; y <= 3 + m; ++y)
                sum += binom(2 + m, y - 1) * binom(3 + m, 6 - y) * ipow(pb, 6 - y) * ipow(upb, y - 3 + m) *
                       ipow(qb, 3 + m - y) * ipow(uqb, y);
        } else {
            const int m = (x - 1) / 2;
            for (int y = 2 - m; y <= 3 + m; ++y)
                sum += binom(3 + m, y) * binom(3 + m, 5 - y) * ipow(pb, 6 - y) * ipow(upb, y - 2 + m) *
                       ipow(qb, 3 + m - y) * ipow(uqb, y);
        }
    } else {
        if (x == 5) {
            for (int y = 0; y <= 5; ++y)
                sum += binom(5, y) * binom(5, 5 - y) * ipow(pb, 5 - y) * ipow(upb, y + 1) * ipow(qb, 6 - y) * ipow(uqb, y);
        } else if (x % 2 == 0) {
            const int m = x / 2;
            for (int y = 3 - m; y <= 3 + m; ++y)
                sum += binom(3 + m, y) * binom(2 + m, 5 - y) * ipow(pb, 3 + m - y) * ipow(upb, y) *
                       ipow(qb, 6 - y) * ipow(uqb, y - 3 + m);
        } else {
            const int m = (x - 1) / 2;
            for (int y = 3 - m; y <= 4 + m; ++y)
                sum += binom(3 + m, y - 1) * binom(3 + m, 6 - y) * ipow(pb, 4 + m - y) * ipow(upb, y) *
                       ipow(qb, 6 - y) * ipow(uqb, y - 3 + m);
        }
    }
    return sum;
}

namespace {

SetScoreDist assemble(const std::array<double, 12>& direct, double reach, const PointProbs& probs) {
    const double tb_a = tiebreak_win_prob(probs);
    std::array<double, 14> out{};
    for (int x = 0; x <= 4; ++x) {
        out[x] = direct[x];           // (6,x)
        out[7 + x] = direct[6 + x];   // (x,6)
    }
    out[5] = direct[5];    // (7,5)
    out[12] = direct[11];  // (5,7)
    out[6] = reach * tb_a;
    out[13] = reach * (1.0 - tb_a);
    return SetScoreDist{out, reach};
}

}  // namespace

SetScoreDist set_score_dist(const PointProbs& probs) {
    const GameProbs games = game_probs_from_points(probs);
    std::array<double, 12> direct{};
    double direct_total = 0.0;
    for (int x = 0; x <= 5; ++x) {
        direct[x] = set_direct_score_formula(x, true, games);
        direct[6 + x] = set_direct_score_formula(x, false, games);
        direct_total += direct[x] + direct[6 + x];
    }
    const double reach = 1.0 - direct_total;
    return assemble(direct, reach, probs);
}

SetScoreDist set_dist_oracle(const PointProbs& probs) {
    const GameProbs games = game_probs_from_points(probs);
    // Forward DP over game scores (a,b), A serving odd-numbered games.
    // Terminal: 6 games with a margin of two, 7-5/5-7 from 6-5/5-6, or 6-6.
    double reach[8][8] = {};
    reach[0][0] = 1.0;
    std::array<double, 12> direct{};  // (6,0..4),(7,5) then (0..4,6),(5,7)
    double cont = 0.0;
    for (int total = 0; total <= 11; ++total) {
        for (int a = 0; a <= 6; ++a) {
            const int b = total - a;
            if (b < 0 || b > 6) continue;
            const double mass = reach[a][b];
            if (mass == 0.0) continue;
            const int game_number = a + b + 1;
            const double a_wins_game = (game_number % 2 == 1) ? games.hold_a : 1.0 - games.hold_b;
            for (const auto& [na, nb, w] :
                 {std::tuple{a + 1, b, mass * a_wins_game}, std::tuple{a, b + 1, mass * (1.0 - a_wins_game)}}) {
                if (na == 6 && nb == 6) {
                    cont += w;
                } else if (na == 6 && nb <= 4) {
                    direct[nb] += w;
                } else if (nb == 6 && na <= 4) {
                    direct[6 + na] += w;
                } else if (na == 7) {
                    direct[5] += w;
                } else if (nb == 7) {
                    direct[11] += w;
                } else {
                    reach[na][nb] += w;
                }
            }
        }
    }
    return assemble(direct, cont, probs);
}

double set_win_prob(const PointProbs& probs) {
    return set_score_dist(probs).win_prob_a();
}

}  // namespace matchpoint
