#ifndef MATCHPOINT_SCORE_PARSE_HPP
#define MATCHPOINT_SCORE_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchpoint {

/// One set from a historical score string, winner's games first. The
/// bracketed value, when present, records the set loser's tiebreak points.
struct SetTally {
    int winner_games;
    int loser_games;
    std::optional<int> tiebreak_loser_points;

    friend bool operator==(const SetTally&, const SetTally&) = default;
};

struct ParseIssue {
    std::string token;
    std::size_t token_index;  // 0-based position among whitespace-split tokens
    std::size_t char_offset;  // offset of the token in the raw string
    std::string reason;
};

/// Result of parsing a score string. Total over arbitrary text: either the
/// sets parsed cleanly (possibly cut short by a retirement-style token, which
/// clears `completed`), or `error` describes the first offending token.
struct ParsedScore {
    std::vector<SetTally> sets;
    bool completed = true;
    std::optional<std::string> status_token;  // canonical RET / W/O / DEF / ABN
    std::optional<ParseIssue> error;

    bool ok() const { return !error.has_value(); }
    int winner_games_total() const;
    int loser_games_total() const;
    int loser_set_wins() const;

    /// Winner took strictly fewer games than the loser; ties never count.
    bool empirical_gt() const;
    /// The loser won no set.
    bool straight_sets() const;

    /// Canonical re-rendering: set tokens joined by single spaces, the status
    /// token (if any) last.
    std::string normalized() const;
};

/// Parses tokens of the form "a-b" or "a-b(t)"; RET / W/O / DEF / ABN
/// (case-insensitive) mark the match incomplete. Never throws.
ParsedScore parse_score(std::string_view raw);

}  // namespace matchpoint

#endif
