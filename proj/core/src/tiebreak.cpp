#include "matchpoint/tiebreak.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace matchpoint {

double TiebreakDist::total() const {
    return decisive_win_a() + decisive_win_b() + continuation;
}

double TiebreakDist::decisive_win_a() const {
    return std::accumulate(win_a.begin(), win_a.end(), 0.0);
}

double TiebreakDist::decisive_win_b() const {
    return std::accumulate(win_b.begin(), win_b.end(), 0.0);
}

Player tiebreak_server(int number, Player first) {
    if (number < 1) throw std::domain_error("point number is 1-based");
    // Points pair up after the opener: 1 | 2,3 | 4,5 | 6,7 | ...
    const bool first_serves = ((number / 2) % 2) == 0;
    return first_serves ? first : opponent(first);
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

double tiebreak_closed_term(bool a_wins, int x, int y, const PointProbs& probs) {
    const double p = probs.p(), q = probs.q();
    const double up = 1.0 - p, uq = 1.0 - q;
    if (x == 6) {
        // continuation term: both players take 6-y points on serve and y off serve
        if (y < 0 || y > 6) return 0.0;
        return binom(6, y) * binom(6, 6 - y) * ipow(p, 6 - y) * ipow(up, y) * ipow(q, 6 - y) * ipow(uq, y);
    }
    if (x < 0 || x > 5) throw std::domain_error("decisive tiebreak scores have x in 0..5");
    if (a_wins) {
        switch (x) {
            case 0: return y == 3 ? ipow(p, 3) * ipow(uq, 4) : 0.0;
            case 1:
                if (y < 3 || y > 4) return 0.0;
                return binom(3, y - 1) * binom(4, 7 - y) * ipow(p, y) * ipow(up, 4 - y) * ipow(q, y - 3) * ipow(uq, 7 - y);
            case 2:
                if (y < 3 || y > 5) return 0.0;
                return binom(4, y - 1) * binom(4, 7 - y) * ipow(p, y) * ipow(up, 5 - y) * ipow(q, y - 3) * ipow(uq, 7 - y);
            case 3:
                if (y < 2 || y > 5) return 0.0;
                return binom(5, y) * binom(4, 6 - y) * ipow(p, y) * ipow(up, 5 - y) * ipow(q, y - 2) * ipow(uq, 7 - y);
            case 4:
                if (y < 1 || y > 5) return 0.0;
                return binom(5, y) * binom(5, 6 - y) * ipow(p, y) * ipow(up, 5 - y) * ipow(q, y - 1) * ipow(uq, 7 - y);
            case 5:
                if (y < 1 || y > 6) return 0.0;
                return binom(5, y - 1) * binom(6, 7 - y) * ipow(p, y) * ipow(up, 6 - y) * ipow(q, y - 1) * ipow(uq, 7 - y);
        }
    } else {
        switch (x) {
            case 0: return y == 4 ? ipow(up, 3) * ipow(q, 4) : 0.0;
            case 1:
                if (y < 3 || y > 4) return 0.0;
                return binom(4, y) * binom(3, 6 - y) * ipow(p, y - 3) * ipow(up, 7 - y) * ipow(q, y) * ipow(uq, 4 - y);
            case 2:
                if (y < 2 || y > 4) return 0.0;
                return binom(4, y) * binom(4, 6 - y) * ipow(p, y - 2) * ipow(up, 7 - y) * ipow(q, y) * ipow(uq, 4 - y);
            case 3:
                if (y < 2 || y > 5) return 0.0;
                return binom(4, y - 1) * binom(5, 7 - y) * ipow(p, y - 2) * ipow(up, 7 - y) * ipow(q, y) * ipow(uq, 5 - y);
            case 4:
                if (y < 2 || y > 6) return 0.0;
                return binom(5, y - 1) * binom(5, 7 - y) * ipow(p, y - 2) * ipow(up, 7 - y) * ipow(q, y) * ipow(uq, 6 - y);
            case 5:
                if (y < 1 || y > 6) return 0.0;
                return binom(6, y) * binom(5, 6 - y) * ipow(p, y - 1) * ipow(up, 7 - y) * ipow(q, y) * ipow(uq, 6 - y);
        }
    }
    return 0.0;
}

TiebreakDist tiebreak_score_dist(const PointProbs& probs) {
    TiebreakDist d{};
    for (int x = 0; x <= 5; ++x) {
        double wa = 0.0, wb = 0.0;
        for (int y = 0; y <= 7; ++y) {
            wa += tiebreak_closed_term(true, x, y, probs);
            wb += tiebreak_closed_term(false, x, y, probs);
        }
        d.win_a[x] = wa;
        d.win_b[x] = wb;
    }
    double cont = 0.0;
    for (int y = 0; y <= 6; ++y) cont += tiebreak_closed_term(true, 6, y, probs);
    d.continuation = cont;
    return d;
}

namespace {

struct WalkSink {
    TiebreakDist* dist = nullptr;
    TiebreakDecomp* decomp = nullptr;

    // y bookkeeping only matters for the decomposition
    void decisive(int a, int b, double mass, int a_on_serve, int b_on_serve) {
        if (a == 7) {
            if (dist) dist->win_a[b] += mass;
            if (decomp) (*decomp).win_a[b][a_on_serve] += mass;
        } else {
            if (dist) dist->win_b[a] += mass;
            if (decomp) (*decomp).win_b[a][b_on_serve] += mass;
        }
    }
    void continued(double mass, int a_on_serve) {
        if (dist) dist->continuation += mass;
        if (decomp) decomp->continuation[a_on_serve] += mass;
    }
};

void walk_tiebreak(const PointProbs& probs, Player first, WalkSink& sink,
                   int a, int b, double mass, int a_on_serve, int b_on_serve) {
    if (a == 7 || b == 7) {
        sink.decisive(a, b, mass, a_on_serve, b_on_serve);
        return;
    }
    if (a == 6 && b == 6) {
        sink.continued(mass, a_on_serve);
        return;
    }
    const int number = a + b + 1;
    const Player server = tiebreak_server(number, first);
    const double a_wins_point =
        server == Player::A ? probs.p() : 1.0 - probs.q();
    walk_tiebreak(probs, first, sink, a + 1, b, mass * a_wins_point,
                  a_on_serve + (server == Player::A ? 1 : 0), b_on_serve);
    walk_tiebreak(probs, first, sink, a, b + 1, mass * (1.0 - a_wins_point),
                  a_on_serve, b_on_serve + (server == Player::B ? 1 : 0));
}

}  // namespace

TiebreakDist tiebreak_dist_oracle(const PointProbs& probs, Player first) {
    TiebreakDist d{};
    WalkSink sink{.dist = &d, .decomp = nullptr};
    walk_tiebreak(probs, first, sink, 0, 0, 1.0, 0, 0);
    return d;
}

TiebreakDecomp tiebreak_oracle_decomposition(const PointProbs& probs) {
    TiebreakDecomp decomp{};
    WalkSink sink{.dist = nullptr, .decomp = &decomp};
    walk_tiebreak(probs, Player::A, sink, 0, 0, 1.0, 0, 0);
    return decomp;
}

double sudden_death_win_prob(const PointProbs& probs) {
    const double p = probs.p(), q = probs.q();
    return (p - p * q) / (p + q - 2.0 * p * q);
}

double tiebreak_win_prob(const PointProbs& probs) {
    const TiebreakDist d = tiebreak_score_dist(probs);
    return d.decisive_win_a() + d.continuation * sudden_death_win_prob(probs);
}

double tiebreak_win_prob_b(const PointProbs& probs) {
    const TiebreakDist d = tiebreak_score_dist(probs);
    const double p = probs.p(), q = probs.q();
    const double sd_b = (q - p * q) / (p + q - 2.0 * p * q);
    return d.decisive_win_b() + d.continuation * sd_b;
}

}  // namespace matchpoint
