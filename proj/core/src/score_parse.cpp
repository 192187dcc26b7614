#include "matchpoint/score_parse.hpp"

#include <cctype>

namespace matchpoint {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

// Canonical status tokens that end the match early.
std::optional<std::string> status_of(std::string_view token) {
    const std::string u = upper(token);
    if (u == "RET" || u == "W/O" || u == "DEF" || u == "ABN") return u;
    return std::nullopt;
}

// Parses a nonnegative integer span; false on overflow or empty.
bool parse_int(std::string_view s, int& out) {
    if (s.empty() || s.size() > 4) return false;
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

// "a-b" or "a-b(t)"
bool parse_set_token(std::string_view token, SetTally& out) {
    const std::size_t dash = token.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 >= token.size()) return false;
    if (!parse_int(token.substr(0, dash), out.winner_games)) return false;
    std::size_t games_end = token.size();
    std::optional<int> tb;
    const std::size_t open = token.find('(', dash + 1);
    if (open != std::string_view::npos) {
        if (token.back() != ')' || open + 2 > token.size()) return false;
        int t = 0;
        if (!parse_int(token.substr(open + 1, token.size() - open - 2), t)) return false;
        tb = t;
        games_end = open;
    }
    if (!parse_int(token.substr(dash + 1, games_end - dash - 1), out.loser_games)) return false;
    out.tiebreak_loser_points = tb;
    return true;
}

}  // namespace

ParsedScore parse_score(std::string_view raw) {
    ParsedScore result;
    std::size_t pos = 0, token_index = 0;
    while (pos < raw.size()) {
        while (pos < raw.size() && is_space(raw[pos])) ++pos;
        if (pos >= raw.size()) break;
        std::size_t end = pos;
        while (end < raw.size() && !is_space(raw[end])) ++end;
        const std::string_view token = raw.substr(pos, end - pos);

        if (auto status = status_of(token)) {
            result.completed = false;
            result.status_token = std::move(*status);
            break;  // anything after a retirement-style token is not score data
        }
        SetTally tally{};
        if (!parse_set_token(token, tally)) {
            result.error = ParseIssue{.token = std::string(token),
                                      .token_index = token_index,
                                      .char_offset = pos,
                                      .reason = "expected a-b, a-b(t), or RET, W/O, DEF, ABN"};
            result.sets.clear();
            return result;
        }
        result.sets.push_back(tally);
        pos = end;
        ++token_index;
    }
    return result;
}

int ParsedScore::winner_games_total() const {
    int n = 0;
    for (const auto& s : sets) n += s.winner_games;
    return n;
}

int ParsedScore::loser_games_total() const {
    int n = 0;
    for (const auto& s : sets) n += s.loser_games;
    return n;
}

int ParsedScore::loser_set_wins() const {
    int n = 0;
    for (const auto& s : sets) n += s.loser_games > s.winner_games ? 1 : 0;
    return n;
}

bool ParsedScore::empirical_gt() const { return winner_games_total() < loser_games_total(); }

bool ParsedScore::straight_sets() const { return loser_set_wins() == 0; }

std::string ParsedScore::normalized() const {
    std::string out;
    for (const auto& s : sets) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.winner_games);
        out += '-';
        out += std::to_string(s.loser_games);
        if (s.tiebreak_loser_points) {
            out += '(';
            out += std::to_string(*s.tiebreak_loser_points);
            out += ')';
        }
    }
    if (status_token) {
        if (!out.empty()) out += ' ';
        out += *status_token;
    }
    return out;
}

}  // namespace matchpoint
