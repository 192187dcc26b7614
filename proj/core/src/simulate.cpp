#include "matchpoint/simulate.hpp"

#include "matchpoint/tiebreak.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace matchpoint {

SimConfig::SimConfig(PointProbs probs_in, MatchFormat format_in, std::int64_t trials_in,
                     std::uint64_t seed_in)
    : probs(probs_in), format(format_in), trials(trials_in), seed(seed_in) {
    if (trials < 1) throw std::domain_error("trials must be >= 1");
}

bool simulate_game_server_wins(double server_point_prob, RandomStream& rng) {
    int server = 0, receiver = 0;
    while (true) {
        (rng.bernoulli(server_point_prob) ? server : receiver) += 1;
        if ((server >= 4 || receiver >= 4) && std::abs(server - receiver) >= 2) {
            return server > receiver;
        }
    }
}

Player simulate_tiebreak(const PointProbs& probs, Player first_server, RandomStream& rng) {
    int a = 0, b = 0;
    int number = 0;
    while (true) {
        ++number;
        const Player server = tiebreak_server(number, first_server);
        const double a_wins_point = server == Player::A ? probs.p() : 1.0 - probs.q();
        (rng.bernoulli(a_wins_point) ? a : b) += 1;
        if ((a >= 7 || b >= 7) && std::abs(a - b) >= 2) {
            return a > b ? Player::A : Player::B;
        }
    }
}

Player simulate_grand_tiebreak(const PointProbs& probs, Player first_server, RandomStream& rng) {
    return simulate_tiebreak(probs, first_server, rng);
}

SetResult simulate_set(const PointProbs& probs, Player first_server, RandomStream& rng) {
    int games_a = 0, games_b = 0;
    Player server = first_server;
    while (true) {
        if (games_a == 6 && games_b == 6) {
            const Player tb_winner = simulate_tiebreak(probs, server, rng);
            (tb_winner == Player::A ? games_a : games_b) += 1;
            // the tiebreak takes one slot in the serving rotation
            return {SetScore{games_a, games_b}, opponent(server)};
        }
        const bool server_wins = simulate_game_server_wins(probs.serve_win(server), rng);
        const Player game_winner = server_wins ? server : opponent(server);
        (game_winner == Player::A ? games_a : games_b) += 1;
        server = opponent(server);
        if ((games_a >= 6 || games_b >= 6) && std::abs(games_a - games_b) >= 2) break;
    }
    return {SetScore{games_a, games_b}, server};
}

namespace {

MatchOutcome play_match(const PointProbs& probs, MatchFormat format,
                        const GtServerRule* gt_rule, RandomStream& rng) {
    const int need = format.sets_to_win();
    int sets_a = 0, sets_b = 0, games_a = 0, games_b = 0;
    Player next_server = Player::A;
    std::vector<SetScore> scores;
    scores.reserve(static_cast<std::size_t>(format.best_of()));
    while (sets_a < need && sets_b < need) {
        const SetResult set = simulate_set(probs, next_server, rng);
        next_server = set.next_first_server;
        scores.push_back(set.score);
        games_a += set.score.games_a();
        games_b += set.score.games_b();
        (set.score.winner() == Player::A ? sets_a : sets_b) += 1;
    }
    const Player winner = sets_a == need ? Player::A : Player::B;
    const int winner_games = winner == Player::A ? games_a : games_b;
    const int loser_games = winner == Player::A ? games_b : games_a;
    const bool gt = winner_games < loser_games;

    std::optional<Player> gt_winner;
    if (gt && gt_rule != nullptr) {
        Player first = next_server;
        if (*gt_rule == GtServerRule::player_a) first = Player::A;
        if (*gt_rule == GtServerRule::player_b) first = Player::B;
        gt_winner = simulate_grand_tiebreak(probs, first, rng);
    }
    return MatchOutcome{.sets = SetSequence{std::move(scores), format},
                        .winner = winner,
                        .games_a = games_a,
                        .games_b = games_b,
                        .gt = gt,
                        .gt_winner = gt_winner};
}

}  // namespace

MatchOutcome simulate_match(const PointProbs& probs, MatchFormat format, RandomStream& rng) {
    return play_match(probs, format, nullptr, rng);
}

MatchOutcome simulate_match_with_gt(const PointProbs& probs, MatchFormat format,
                                    GtServerRule rule, RandomStream& rng) {
    return play_match(probs, format, &rule, rng);
}

GtEstimate estimate_gt_prob(const SimConfig& config, int threads) {
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    const std::int64_t n = config.trials;
    if (static_cast<std::int64_t>(workers) > n) workers = static_cast<int>(n);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
            const std::int64_t end = std::min(n, begin + chunk);
            std::int64_t hits = 0;
            for (std::int64_t trial = begin; trial < end; ++trial) {
                RandomStream rng =
                    RandomStream::for_trial(config.seed, static_cast<std::uint64_t>(trial));
                if (simulate_match(config.probs, config.format, rng).gt) ++hits;
            }
            counts[static_cast<std::size_t>(w)] = hits;
        });
    }
    for (auto& t : pool) t.join();

    std::int64_t gt_count = 0;
    for (const auto c : counts) gt_count += c;
    const double f = static_cast<double>(gt_count) / static_cast<double>(n);
    const bool degenerate = n < 2;
    const double se = degenerate ? 0.0 : std::sqrt(f * (1.0 - f) / static_cast<double>(n));
    return GtEstimate{.estimate = f,
                      .stderr_value = se,
                      .trials = n,
                      .gt_count = gt_count,
                      .degenerate = degenerate};
}

}  // namespace matchpoint
