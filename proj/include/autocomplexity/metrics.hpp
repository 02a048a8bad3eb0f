#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "autocomplexity/cache.hpp"

namespace autocomplexity {

enum class MetricKind { jnum, jnum_max, j, jmax };

std::string to_string(MetricKind kind);
/// "jnum", "jnum-max", "j", "jmax"
MetricKind metric_kind_from_string(const std::string& name);
inline constexpr MetricKind kAllMetrics[] = {MetricKind::jnum, MetricKind::jnum_max,
                                             MetricKind::j, MetricKind::jmax};

/// Which complexity feeds the unconditional and conditional terms.
enum class ComplexityBase {
  unique,         ///< A_Nu throughout
  deterministic,  ///< A^- and A^-(x|y), for comparing J_max readings
};

/// The integer ingredients of all four metrics for one pair.
struct PairComplexities {
  std::size_t x = 1;        // A(x)
  std::size_t y = 1;        // A(y)
  std::size_t x_given_y = 1;
  std::size_t y_given_x = 1;
  std::size_t track = 1;    // A(x#y)
};

PairComplexities pair_complexities(const Word& x, const Word& y, Solver& solver,
                                   ComplexityBase base = ComplexityBase::unique);

/// Metric value from its integer ingredients. 0/0 is 0; values 0 and 1 are
/// decided on the integers.
double metric_from(MetricKind kind, const PairComplexities& c);

/// Inputs are slow-normalized first, so any representative may be passed.
double metric_value(MetricKind kind, const Word& x, const Word& y, Solver& solver,
                    ComplexityBase base = ComplexityBase::unique);

/// J(x,y) == 1 decided on the integers: numerator nonzero and
/// A(x#y) == A(x)A(y).
bool unit_jaccard(const PairComplexities& c);

struct Violation {
  std::vector<std::size_t> indices;  // into the ground set
  std::vector<double> values;
};

struct MetricReport {
  std::size_t n = 0;
  MetricKind kind = MetricKind::j;
  std::size_t ground_set_size = 0;
  std::vector<Violation> identity_violations;
  std::vector<Violation> symmetry_violations;
  std::vector<Violation> triangle_violations;
  std::uint64_t triangle_checks = 0;

  std::size_t violation_count() const {
    return identity_violations.size() + symmetry_violations.size() + triangle_violations.size();
  }
  bool is_metric() const { return violation_count() == 0; }
};

inline constexpr double kTriangleTolerance = 1e-9;

/// Distance matrix d[i][j] on a ground set; `zero[i][j]` says whether the
/// distance is exactly zero (decided on integers where available).
struct DistanceMatrix {
  std::vector<std::vector<double>> d;
  std::vector<std::vector<bool>> zero;
};

/// Checks d(x,x) = 0, d(x,y) = 0 => x = y, symmetry, and every ordered triple
/// for the triangle inequality. At most `max_listed` violations per class
/// are listed.
MetricReport check_metric_axioms(const DistanceMatrix& m, std::size_t max_listed = 100);

/// Ground set: slow words of length n over the alphabet.
std::vector<Word> metric_ground_set(std::size_t n, std::size_t alphabet = 2);

/// Pairwise ingredients for the ground set, row-major, computed on `jobs`
/// threads (deterministic result).
std::vector<PairComplexities> ground_set_complexities(const std::vector<Word>& ground,
                                                      Solver& solver, std::size_t jobs = 1,
                                                      ComplexityBase base =
                                                          ComplexityBase::unique);

MetricReport verify_metric(std::size_t n, MetricKind kind, Solver& solver, std::size_t jobs = 1,
                           std::size_t alphabet = 2);

/// Unordered pairs {x, y} of slow words of length n (x < y) with J = 1.
/// The fast path only computes A(x#y) where A(x)A(y) can still equal it:
/// pairs with a constant word always qualify, and otherwise A(x)A(y) must not
/// exceed the floor(n/2)+1 ceiling on A(x#y).
std::vector<std::pair<Word, Word>> classify_unit_distance(std::size_t n, Solver& solver,
                                                          bool fast_path = true,
                                                          std::size_t alphabet = 2,
                                                          std::size_t jobs = 1);

/// The characterization for binary words: pairs containing 0^n, and for
/// n >= 10 also {(01)^{n/2}, a^{n/3}} with a in {001, 010, 011}, where
/// fractional powers mean length-n prefixes of the periodic word.
std::vector<std::pair<Word, Word>> expected_unit_distance_pairs(std::size_t n);

struct DistributionRow {
  std::size_t n = 0;
  /// counts[q] = number of ordered pairs with A_Nu(x|y) = q; index 0 unused.
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  std::size_t mode() const;
};

DistributionRow distribution_row(std::size_t n, Solver& solver, std::size_t jobs = 1);
std::vector<DistributionRow> distribution_table(std::size_t n_max, Solver& solver,
                                                std::size_t jobs = 1);
/// Independent uniform pairs from 0{0,1}^{n-1}, drawn from a
/// std::mt19937_64 seeded with `seed`.
DistributionRow sample_distribution(std::size_t n, std::size_t samples, std::uint64_t seed,
                                    Solver& solver, std::size_t jobs = 1);

/// Text layout with modes bracketed, CSV with header row, or JSON.
std::string format_table_text(const std::vector<DistributionRow>& rows);
std::string format_table_csv(const std::vector<DistributionRow>& rows);
std::string format_table_json(const std::vector<DistributionRow>& rows);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace autocomplexity
