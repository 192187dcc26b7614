#include "matchpoint/verify.hpp"

#include <cmath>
#include <string>

#include "matchpoint/game.hpp"
#include "matchpoint/set.hpp"
#include "matchpoint/tiebreak.hpp"

namespace matchpoint {

namespace {

constexpr double kFormulaTol = 1e-12;   // closed form vs oracle, per entry
constexpr double kGameTol = 1e-10;      // game chain, per the looser contract
constexpr double kInvariantTol = 1e-12; // sums-to-one, symmetry

struct Sweep {
    CheckResult result;
    std::vector<Divergence>* sink;
    std::string component;

    Sweep(std::string name, double tolerance, std::string component_in,
          std::vector<Divergence>* divergences)
        : result{.name = std::move(name), .points = 0, .max_abs_diff = 0.0, .tolerance = tolerance, .pass = true},
          sink(divergences),
          component(std::move(component_in)) {}

    void observe(const std::string& entry, double p, double q, double formula, double oracle) {
        result.points += 1;
        const double diff = std::fabs(formula - oracle);
        if (diff > result.max_abs_diff) result.max_abs_diff = diff;
        if (diff > result.tolerance) {
            result.pass = false;
            if (sink) {
                sink->push_back({.component = component,
                                 .entry = entry,
                                 .p = p,
                                 .q = q,
                                 .formula_value = formula,
                                 .oracle_value = oracle,
                                 .abs_diff = diff,
                                 .tolerance = result.tolerance});
            }
        }
    }
};

std::string score_label(bool a_wins, int x) {
    return a_wins ? "P(7," + std::to_string(x) + ")" : "P(" + std::to_string(x) + ",7)";
}

}  // namespace

VerifyReport run_verification() {
    VerifyReport report;

    // game: closed form vs the point-chain solve
    {
        Sweep sweep("game_closed_vs_oracle", kGameTol, "game", &report.divergences);
        for (int i = 1; i <= 99; ++i) {
            const double p = i / 100.0;
            sweep.observe("game_win", p, p, game_win_prob(p), game_win_prob_oracle(p));
        }
        report.checks.push_back(sweep.result);
    }
    {
        Sweep sweep("game_pre_deuce_recomposition", kInvariantTol, "game", &report.divergences);
        for (int i = 1; i <= 99; ++i) {
            const double p = i / 100.0;
            const GameStateDist d = pre_deuce_state_dist(p);
            const double recomposed = d.direct_win + d.ahead * deuce_win_prob(p, 1) +
                                      d.level * deuce_win_prob(p, 0) + d.behind * deuce_win_prob(p, -1);
            sweep.observe("recomposition", p, p, recomposed, game_win_prob(p));
            sweep.observe("state_sum", p, p, d.total(), 1.0);
        }
        report.checks.push_back(sweep.result);
    }

    // tiebreak: closed forms (whole entries and individual serve-count terms)
    // against exhaustive enumeration
    {
        Sweep entries("tiebreak_closed_vs_oracle", kFormulaTol, "tiebreak", &report.divergences);
        Sweep terms("tiebreak_terms_vs_serve_decomposition", kFormulaTol, "tiebreak",
                    &report.divergences);
        Sweep invariants("tiebreak_invariants", kInvariantTol, "tiebreak", &report.divergences);
        for (int pi = 1; pi <= 9; ++pi) {
            for (int qi = 1; qi <= 9; ++qi) {
                const PointProbs probs{pi / 10.0, qi / 10.0};
                const TiebreakDist closed = tiebreak_score_dist(probs);
                const TiebreakDist oracle = tiebreak_dist_oracle(probs);
                const TiebreakDecomp decomp = tiebreak_oracle_decomposition(probs);
                for (int x = 0; x <= 5; ++x) {
                    entries.observe(score_label(true, x), probs.p(), probs.q(), closed.win_a[x],
                                    oracle.win_a[x]);
                    entries.observe(score_label(false, x), probs.p(), probs.q(), closed.win_b[x],
                                    oracle.win_b[x]);
                    for (int y = 0; y <= 7; ++y) {
                        const double term_a = tiebreak_closed_term(true, x, y, probs);
                        const double mass_a = [&] {
                            const auto it = decomp.win_a[x].find(y);
                            return it == decomp.win_a[x].end() ? 0.0 : it->second;
                        }();
                        if (term_a != 0.0 || mass_a != 0.0) {
                            terms.observe(score_label(true, x) + " y=" + std::to_string(y),
                                          probs.p(), probs.q(), term_a, mass_a);
                        }
                        const double term_b = tiebreak_closed_term(false, x, y, probs);
                        const double mass_b = [&] {
                            const auto it = decomp.win_b[x].find(y);
                            return it == decomp.win_b[x].end() ? 0.0 : it->second;
                        }();
                        if (term_b != 0.0 || mass_b != 0.0) {
                            terms.observe(score_label(false, x) + " y=" + std::to_string(y),
                                          probs.p(), probs.q(), term_b, mass_b);
                        }
                    }
                }
                entries.observe("P(6,6)", probs.p(), probs.q(), closed.continuation,
                                oracle.continuation);
                // continuation terms are keyed by 6-y in the walk (y counts
                // off-serve points in the closed expression)
                for (int y = 0; y <= 6; ++y) {
                    const double term = tiebreak_closed_term(true, 6, y, probs);
                    const auto it = decomp.continuation.find(6 - y);
                    const double mass = it == decomp.continuation.end() ? 0.0 : it->second;
                    terms.observe("P(6,6) y=" + std::to_string(y), probs.p(), probs.q(), term, mass);
                }
                invariants.observe("total", probs.p(), probs.q(), closed.total(), 1.0);
                invariants.observe("win_split", probs.p(), probs.q(),
                                   tiebreak_win_prob(probs) + tiebreak_win_prob_b(probs), 1.0);
                // relabeling: P(7,x)(p,q) = P(x,7)(q,p)
                const TiebreakDist swapped = tiebreak_score_dist(probs.swapped());
                for (int x = 0; x <= 5; ++x) {
                    invariants.observe("swap " + score_label(true, x), probs.p(), probs.q(),
                                       closed.win_a[x], swapped.win_b[x]);
                }
            }
        }
        report.checks.push_back(entries.result);
        report.checks.push_back(terms.result);
        report.checks.push_back(invariants.result);
    }

    // set: closed forms against the game-by-game DP
    {
        Sweep entries("set_closed_vs_oracle", kFormulaTol, "set", &report.divergences);
        Sweep invariants("set_invariants", kInvariantTol, "set", &report.divergences);
        for (int pi = 1; pi <= 9; ++pi) {
            for (int qi = 1; qi <= 9; ++qi) {
                const PointProbs probs{pi / 10.0, qi / 10.0};
                const SetScoreDist closed = set_score_dist(probs);
                const SetScoreDist oracle = set_dist_oracle(probs);
                for (int i = 0; i < SetScore::kCount; ++i) {
                    const SetScore score = SetScore::from_index(i);
                    const std::string label = "P(" + std::to_string(score.games_a()) + "," +
                                              std::to_string(score.games_b()) + ")";
                    entries.observe(label, probs.p(), probs.q(), closed.at_index(i),
                                    oracle.at_index(i));
                }
                entries.observe("P(6,6) reach", probs.p(), probs.q(), closed.tiebreak_reach(),
                                oracle.tiebreak_reach());
                invariants.observe("total", probs.p(), probs.q(), closed.total(), 1.0);
                // relabeling: dist(p,q) score-reversed equals dist(q,p)
                const SetScoreDist swapped = set_score_dist(probs.swapped());
                for (int i = 0; i < SetScore::kCount; ++i) {
                    const SetScore score = SetScore::from_index(i);
                    invariants.observe("swap index " + std::to_string(i), probs.p(), probs.q(),
                                       closed.at_index(i), swapped.at(score.reversed()));
                }
            }
        }
        report.checks.push_back(entries.result);
        report.checks.push_back(invariants.result);
    }

    report.pass = report.divergences.empty();
    for (const auto& check : report.checks) report.pass = report.pass && check.pass;
    return report;
}

}  // namespace matchpoint
