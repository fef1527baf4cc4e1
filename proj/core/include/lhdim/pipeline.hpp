#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lhdim/geometry.hpp"
#include "lhdim/homology.hpp"
#include "lhdim/schedule.hpp"

namespace lhdim {

enum class Classification { Trivial, Sphere, NonSphere, Skipped };

struct BasePointResult {
    Index point = -1;  // -1 for an arbitrary ambient base point
    LocalHomologyProfile profile;
    Classification classification = Classification::Trivial;
    int sphere_n = -1;               // valid when classification == Sphere
    std::size_t neighbors = 0;       // |P_{3a,r}|, the outer vertex set
    double millis = 0.0;
    std::string skip_reason;
};

std::string to_string(Classification c, int sphere_n = -1);

// Base-point selection for a corpus run.
struct BaseStrategy {
    enum class Kind { Sparse, Centers, All, List };
    Kind kind = Kind::All;
    double min_dist = 0.0;        // Sparse
    double edge_len = 0.0;        // Centers
    std::size_t min_size = 1;     // Centers
    std::vector<Index> list;      // List

    std::string describe() const;
};

struct DimensionReport {
    ParamSchedule schedule;
    std::string strategy;
    std::vector<BasePointResult> per_point;
    std::size_t trivial_count = 0;
    std::size_t non_sphere_count = 0;
    std::size_t skipped_count = 0;
    std::map<int, std::size_t> sphere_tally;  // n -> count
    std::size_t valid_count = 0;              // sum of sphere_tally
    int estimated_dimension = -1;             // -1: no estimate
    bool ambiguous = false;                   // plurality tie
    std::optional<int> truth;
    std::optional<double> correct_ratio;      // among valid points, vs truth
    double avg_neighbors = 0.0;
    double total_millis = 0.0;
};

struct EstimateOptions {
    std::uint64_t seed = 0;
    std::size_t budget = kDefaultSimplexBudget;
    unsigned threads = 0;  // 0: hardware concurrency
    std::optional<int> truth;
};

BasePointResult estimate_local(const PointCloud& cloud, Index p, const ParamSchedule& schedule,
                               std::size_t budget = kDefaultSimplexBudget);
BasePointResult estimate_local(const PointCloud& cloud, std::span<const double> p,
                               const ParamSchedule& schedule,
                               std::size_t budget = kDefaultSimplexBudget, Index label = -1);

DimensionReport estimate_dimension(const PointCloud& cloud, const ParamSchedule& schedule,
                                   const BaseStrategy& strategy,
                                   const EstimateOptions& opts = {});

// Repeated estimation at one center over fresh random local subsamples.
struct RepeatedEstimate {
    std::vector<BasePointResult> trials;
    std::map<int, std::size_t> sphere_tally;
    std::size_t valid_count = 0;
    int estimated_dimension = -1;
    bool ambiguous = false;
    double plurality_percent = 0.0;  // share of the plurality among valid trials
};

RepeatedEstimate repeated_center_estimate(const PointCloud& cloud,
                                          const ParamSchedule& schedule, Index center,
                                          std::size_t subsample_size, std::size_t trials,
                                          std::uint64_t seed,
                                          std::size_t budget = kDefaultSimplexBudget);

// JSON report (machine interface). Timings are omitted unless requested so
// identical runs serialize byte-identically.
std::string report_to_json(const DimensionReport& report, bool include_timings = false);
// One-row CSV summary with the tally columns of the synthetic-data table.
std::string report_to_csv(const DimensionReport& report, const std::string& label);

}  // namespace lhdim
