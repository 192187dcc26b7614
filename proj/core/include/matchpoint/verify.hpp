#ifndef MATCHPOINT_VERIFY_HPP
#define MATCHPOINT_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace matchpoint {

/// One closed-form-vs-oracle sweep: how many grid points, the worst absolute
/// deviation seen, and the tolerance it was held to.
struct CheckResult {
    std::string name;
    std::size_t points;
    double max_abs_diff;
    double tolerance;
    bool pass;
};

/// A printed formula that disagrees with its oracle beyond tolerance. The
/// oracle value is authoritative; divergent entries are reported, never
/// silently corrected.
struct Divergence {
    std::string component;  // "game", "tiebreak", "set"
    std::string entry;      // e.g. "P(7,1)" or "P(4,6) term y=3"
    double p;
    double q;
    double formula_value;
    double oracle_value;
    double abs_diff;
    double tolerance;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<Divergence> divergences;
    bool pass = false;
};

/// Runs every formula-vs-oracle cross-check: the game closed form against the
/// point-chain solve on p = 0.01..0.99, the tiebreak closed forms (including
/// each per-serve-count term) against exhaustive enumeration and the set
/// closed forms against the game DP on (p,q) in {0.1..0.9}^2, plus the
/// sums-to-one and relabeling-symmetry invariants.
VerifyReport run_verification();

}  // namespace matchpoint

#endif
