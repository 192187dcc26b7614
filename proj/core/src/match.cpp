#include "matchpoint/match.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace matchpoint {

MatchFormat::MatchFormat(int best_of) : best_of_(best_of) {
    if (best_of != 3 && best_of != 5) {
        throw std::domain_error("match format must be best-of-3 or best-of-5, got " +
                                std::to_string(best_of));
    }
}

SetSequence::SetSequence(std::vector<SetScore> sets, MatchFormat format)
    : sets_(std::move(sets)), format_(format), winner_(Player::A), games_a_(0), games_b_(0) {
    const int need = format_.sets_to_win();
    int wins_a = 0, wins_b = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        const bool decided = wins_a == need || wins_b == need;
        if (decided) throw std::domain_error("set played after the match was decided");
        const SetScore& s = sets_[i];
        (s.winner() == Player::A ? wins_a : wins_b) += 1;
        games_a_ += s.games_a();
        games_b_ += s.games_b();
    }
    if (wins_a != need && wins_b != need) {
        throw std::domain_error("sequence does not decide the match");
    }
    winner_ = wins_a == need ? Player::A : Player::B;
}

bool is_gt(const SetSequence& sequence) {
    const int winner_games =
        sequence.winner() == Player::A ? sequence.games_a() : sequence.games_b();
    const int loser_games =
        sequence.winner() == Player::A ? sequence.games_b() : sequence.games_a();
    return winner_games < loser_games;
}

std::int64_t GtCensus::total() const {
    std::int64_t n = 0;
    for (const auto& lc : by_length) n += lc.sequences;
    return n;
}

std::int64_t GtCensus::gt_total() const {
    std::int64_t n = 0;
    for (const auto& lc : by_length) n += lc.gt_sequences;
    return n;
}

double GtCensus::gt_share() const {
    const std::int64_t n = total();
    return n == 0 ? 0.0 : static_cast<double>(gt_total()) / static_cast<double>(n);
}

namespace {

struct ScoreTable {
    std::array<int, 14> games_a;
    std::array<int, 14> games_b;
    std::array<bool, 14> a_won;
};

const ScoreTable& score_table() {
    static const ScoreTable table = [] {
        ScoreTable t{};
        for (int i = 0; i < SetScore::kCount; ++i) {
            const SetScore s = SetScore::from_index(i);
            t.games_a[i] = s.games_a();
            t.games_b[i] = s.games_b();
            t.a_won[i] = s.winner() == Player::A;
        }
        return t;
    }();
    return table;
}

bool raw_is_gt(const int* scores, int length, const ScoreTable& t) {
    int ga = 0, gb = 0, sa = 0;
    for (int i = 0; i < length; ++i) {
        ga += t.games_a[scores[i]];
        gb += t.games_b[scores[i]];
        sa += t.a_won[scores[i]] ? 1 : 0;
    }
    const bool a_wins = 2 * sa > length;
    return a_wins ? ga < gb : gb < ga;
}

}  // namespace

GtCensus gt_census(MatchFormat format) {
    const ScoreTable& t = score_table();
    GtCensus census{.best_of = format.best_of(), .by_length = {}};
    const int need = format.sets_to_win();
    for (int len = need; len <= format.best_of(); ++len) {
        census.by_length.push_back({.sets = len, .sequences = 0, .gt_sequences = 0});
    }
    detail::visit_sequences(format, [&](const int* scores, int length) {
        auto& row = census.by_length[static_cast<std::size_t>(length - need)];
        row.sequences += 1;
        if (raw_is_gt(scores, length, t)) row.gt_sequences += 1;
    });
    return census;
}

double sequence_probability(const SetSequence& sequence, const PointProbs& probs) {
    const SetScoreDist dist = set_score_dist(probs);
    double product = 1.0;
    for (const SetScore& s : sequence.sets()) product *= dist.at(s);
    return product;
}

double gt_probability(const PointProbs& probs, MatchFormat format) {
    const ScoreTable& t = score_table();
    const SetScoreDist dist = set_score_dist(probs);
    double sum = 0.0;
    detail::visit_sequences(format, [&](const int* scores, int length) {
        if (!raw_is_gt(scores, length, t)) return;
        double product = 1.0;
        for (int i = 0; i < length; ++i) product *= dist.at_index(scores[i]);
        sum += product;
    });
    return sum;
}

double match_win_prob(const PointProbs& probs, MatchFormat format) {
    const ScoreTable& t = score_table();
    const SetScoreDist dist = set_score_dist(probs);
    double sum = 0.0;
    detail::visit_sequences(format, [&](const int* scores, int length) {
        int sa = 0;
        for (int i = 0; i < length; ++i) sa += t.a_won[scores[i]] ? 1 : 0;
        if (2 * sa <= length) return;
        double product = 1.0;
        for (int i = 0; i < length; ++i) product *= dist.at_index(scores[i]);
        sum += product;
    });
    return sum;
}

ScanResult gt_probability_scan(MatchFormat format, const std::vector<double>& grid) {
    ScanResult result;
    result.points.reserve(grid.size());
    for (const double p : grid) {
        const PointProbs probs{p, p};
        result.points.push_back({.p = p, .gt_prob = gt_probability(probs, format)});
    }
    if (result.points.empty()) throw std::domain_error("scan grid is empty");
    result.peak_index = static_cast<std::size_t>(
        std::max_element(result.points.begin(), result.points.end(),
                         [](const ScanPoint& a, const ScanPoint& b) { return a.gt_prob < b.gt_prob; }) -
        result.points.begin());
    return result;
}

}  // namespace matchpoint
