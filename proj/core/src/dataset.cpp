#include "matchpoint/dataset.hpp"

#include <stdexcept>

namespace matchpoint {

CsvReader::CsvReader(std::istream& in) : in_(in) {
    std::vector<std::string> row;
    if (read_record(row)) header_ = std::move(row);
}

std::optional<std::size_t> CsvReader::column(std::string_view name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (header_[i] == name) return i;
    }
    return std::nullopt;
}

bool CsvReader::read_record(std::vector<std::string>& out) {
    out.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    int c;
    while ((c = in_.get()) != std::istream::traits_type::eof()) {
        any = true;
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    field += '"';
                    in_.get();
                } else {
                    in_quotes = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        switch (ch) {
            case '"':
                in_quotes = true;
                break;
            case ',':
                out.push_back(std::move(field));
                field.clear();
                break;
            case '\r':
                break;
            case '\n':
                out.push_back(std::move(field));
                return true;
            default:
                field += ch;
        }
    }
    if (!any) return false;
    out.push_back(std::move(field));
    return true;
}

std::optional<std::vector<std::string>> CsvReader::next_row() {
    std::vector<std::string> row;
    if (!read_record(row)) return std::nullopt;
    if (row.size() < header_.size()) row.resize(header_.size());
    return row;
}

void read_match_records(std::istream& csv, Tour tour,
                        const std::function<void(MatchRecord&&)>& sink) {
    CsvReader reader(csv);
    const auto level_col = reader.column("tourney_level");
    const auto round_col = reader.column("round");
    const auto score_col = reader.column("score");
    if (!level_col || !round_col || !score_col) {
        throw std::runtime_error("CSV is missing a required column (tourney_level, round, score)");
    }
    while (auto row = reader.next_row()) {
        MatchRecord record;
        record.tour = tour;
        record.level = (*row)[*level_col];
        record.round = (*row)[*round_col];
        record.score_raw = (*row)[*score_col];
        record.score = parse_score(record.score_raw);
        sink(std::move(record));
    }
}

double GtStats::gt_pct() const {
    return matches == 0 ? 0.0
                        : 100.0 * static_cast<double>(empirical_gts) / static_cast<double>(matches);
}

GtStats& GtStats::merge(const GtStats& other) {
    matches += other.matches;
    empirical_gts += other.empirical_gts;
    excluded_incomplete += other.excluded_incomplete;
    parse_errors += other.parse_errors;
    return *this;
}

void GtAccumulator::add(const MatchRecord& record) {
    if (!filter_.accepts(record)) return;
    if (!record.score.ok()) {
        stats_.parse_errors += 1;
        return;
    }
    if (!record.score.completed) {
        stats_.excluded_incomplete += 1;
        return;
    }
    stats_.matches += 1;
    if (record.score.empirical_gt()) stats_.empirical_gts += 1;
}

std::optional<double> StraightSetRates::early_pct() const {
    if (early_matches == 0) return std::nullopt;
    return 100.0 * static_cast<double>(early_straight) / static_cast<double>(early_matches);
}

std::optional<double> StraightSetRates::late_pct() const {
    if (late_matches == 0) return std::nullopt;
    return 100.0 * static_cast<double>(late_straight) / static_cast<double>(late_matches);
}

StraightSetAccumulator::StraightSetAccumulator(std::set<std::string> early_rounds,
                                               std::set<std::string> late_rounds,
                                               RecordFilter filter)
    : early_(std::move(early_rounds)), late_(std::move(late_rounds)), filter_(std::move(filter)) {}

StraightSetAccumulator StraightSetAccumulator::grand_slam_default() {
    return StraightSetAccumulator{{"R128", "R64", "R32"}, {"QF", "SF", "F"}};
}

void StraightSetAccumulator::add(const MatchRecord& record) {
    if (!filter_.accepts(record)) return;
    if (!record.completed()) return;
    const bool straight = record.score.straight_sets();
    if (early_.contains(record.round)) {
        rates_.early_matches += 1;
        if (straight) rates_.early_straight += 1;
    } else if (late_.contains(record.round)) {
        rates_.late_matches += 1;
        if (straight) rates_.late_straight += 1;
    }
}

AnalysisReport analyze_csv(std::istream& csv, Tour tour, const RecordFilter& filter) {
    GtAccumulator gt(filter);
    StraightSetAccumulator straight{{"R128", "R64", "R32"}, {"QF", "SF", "F"}, filter};
    read_match_records(csv, tour, [&](MatchRecord&& record) {
        gt.add(record);
        straight.add(record);
    });
    return AnalysisReport{.tour = tour, .gt = gt.stats(), .straight_sets = straight.rates()};
}

const char* tour_name(Tour tour) {
    switch (tour) {
        case Tour::men: return "men";
        case Tour::women: return "women";
        default: return "unspecified";
    }
}

}  // namespace matchpoint
