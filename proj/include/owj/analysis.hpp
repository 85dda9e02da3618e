#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "owj/engines.hpp"

namespace owj::analysis {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class ScanMode { exhaustive, sampled };
const char* scan_mode_name(ScanMode m);

struct ProfileOptions {
    /// Lengths with alphabet^n <= budget are scanned exhaustively, larger
    /// ones are sampled.
    long long budget = 65536;
    int samples_per_length = 10'000;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0; // 0 = hardware concurrency
};

/// Worst-case measurements for one input length.
struct LengthStats {
    int n = 0;
    int max_sweeps = 0;
    Word witness;              // lexicographically least word attaining max_sweeps
    long long max_jumps = 0;
    double mean_jumps = 0.0;
    long long words_examined = 0;
    ScanMode mode = ScanMode::exhaustive;
};

struct SweepProfile {
    std::string automaton_label;
    std::uint64_t seed = kDefaultSeed;
    std::vector<LengthStats> per_length; // n = 0..n_max
};

/// Scans all words of each length n <= n_max (exhaustively where the budget
/// allows, sampling otherwise) and records the worst-case sweep count with a
/// witness, over accepted and rejected inputs alike.
SweepProfile sweep_complexity(const Automaton& a, int n_max,
                              const ProfileOptions& opts = {},
                              const std::string& label = "");

struct JumpStats {
    int n = 0;
    long long max_jumps = 0;
    double mean_jumps = 0.0;
};

/// Per-length worst-case and mean Skip counts; same scan as sweep_complexity.
std::vector<JumpStats> jump_statistics(const Automaton& a, int n_max,
                                       const ProfileOptions& opts = {});

enum class GrowthClass { constant, sublinear, linear, unclassified };
const char* growth_class_name(GrowthClass c);

struct GrowthOptions {
    double linear_slope_min = 0.05;
    double linear_slope_max = 1.0;
};

struct GrowthReport {
    GrowthClass cls = GrowthClass::unclassified;
    double slope = 0.0; // least-squares slope of max_sweeps vs n, top half
    bool plateau = false;
};

/// Heuristic growth classification over the top half of measured lengths:
/// constant iff that tail is flat, linear iff it increases monotonically
/// with slope in [linear_slope_min, linear_slope_max], sublinear below the
/// range. Never a proof. Throws InsufficientData for fewer than 6 lengths.
GrowthReport classify_growth(const SweepProfile& p, const GrowthOptions& opts = {});

struct StepBoundReport {
    double max_ratio = 0.0; // worst observed steps / n^2
    Word worst_word;
    int worst_n = 0;
};

/// Checks steps <= n^2 on every examined run of lengths 1..n_max and reports
/// the worst ratio. A violation throws BoundViolation carrying the word (it
/// would be an engine bug).
StepBoundReport verify_step_bound(const Automaton& a, int n_max,
                                  const ProfileOptions& opts = {});

/// CSV with fixed column order:
/// n,max_sweeps,witness,max_jumps,mean_jumps,words_examined,mode,seed
void write_profile_csv(const SweepProfile& p, const Alphabet& alphabet, std::ostream& out);

} // namespace owj::analysis
