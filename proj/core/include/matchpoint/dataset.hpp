#ifndef MATCHPOINT_DATASET_HPP
#define MATCHPOINT_DATASET_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matchpoint/score_parse.hpp"

namespace matchpoint {

enum class Tour { men, women, unspecified };

/// One historical match row: tournament level/round plus the parsed score.
struct MatchRecord {
    Tour tour = Tour::unspecified;
    std::string level;
    std::string round;
    std::string score_raw;
    ParsedScore score;

    bool completed() const { return score.ok() && score.completed; }
};

/// Streaming RFC-4180-ish CSV reader: header row, quoted fields with embedded
/// commas/quotes/newlines, UTF-8 passthrough.
class CsvReader {
  public:
    explicit CsvReader(std::istream& in);

    const std::vector<std::string>& header() const { return header_; }
    std::optional<std::size_t> column(std::string_view name) const;

    /// Next data row, or nullopt at end of input. Rows shorter than the
    /// header are padded with empty fields.
    std::optional<std::vector<std::string>> next_row();

  private:
    std::istream& in_;
    std::vector<std::string> header_;
    bool read_record(std::vector<std::string>& out);
};

/// Streams MatchRecords out of a Sackmann-style CSV. Required columns:
/// tourney_level, round, score. Throws std::runtime_error if any is missing.
void read_match_records(std::istream& csv, Tour tour,
                        const std::function<void(MatchRecord&&)>& sink);

struct RecordFilter {
    std::string level = "G";  // Grand Slam tournament level code
    bool accepts(const MatchRecord& r) const { return r.level == level; }
};

struct GtStats {
    std::int64_t matches = 0;
    std::int64_t empirical_gts = 0;
    std::int64_t excluded_incomplete = 0;
    std::int64_t parse_errors = 0;

    double gt_pct() const;  // 100 * empirical_gts / matches
    GtStats& merge(const GtStats& other);
};

/// Streaming accumulator over records: counts completed filtered matches and
/// strict winner-games < loser-games discrepancies. Merge is associative.
class GtAccumulator {
  public:
    explicit GtAccumulator(RecordFilter filter = {}) : filter_(std::move(filter)) {}
    void add(const MatchRecord& record);
    const GtStats& stats() const { return stats_; }

  private:
    RecordFilter filter_;
    GtStats stats_;
};

struct StraightSetRates {
    std::int64_t early_matches = 0;
    std::int64_t early_straight = 0;
    std::int64_t late_matches = 0;
    std::int64_t late_straight = 0;

    std::optional<double> early_pct() const;  // absent for an empty group
    std::optional<double> late_pct() const;
};

/// Fraction of completed matches won without the loser taking a set, for an
/// early-round group and a late-round group.
class StraightSetAccumulator {
  public:
    StraightSetAccumulator(std::set<std::string> early_rounds, std::set<std::string> late_rounds,
                           RecordFilter filter = {});
    /// First three rounds of a 7-round draw vs the last three; R16 in neither.
    static StraightSetAccumulator grand_slam_default();

    void add(const MatchRecord& record);
    const StraightSetRates& rates() const { return rates_; }

  private:
    std::set<std::string> early_;
    std::set<std::string> late_;
    RecordFilter filter_;
    StraightSetRates rates_;
};

struct AnalysisReport {
    Tour tour = Tour::unspecified;
    GtStats gt;
    StraightSetRates straight_sets;
};

/// One pass over a CSV stream producing both statistics.
AnalysisReport analyze_csv(std::istream& csv, Tour tour, const RecordFilter& filter = {});

const char* tour_name(Tour tour);

}  // namespace matchpoint

#endif
