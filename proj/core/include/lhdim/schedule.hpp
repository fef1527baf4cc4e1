#pragma once

#include <optional>
#include <string>

namespace lhdim {

enum class ScheduleMode { Strict, Relaxed, Manual };

// Scale parameters for one local estimation. The inner pair uses vertex sets
// (alpha, r) / (alpha, r; eta2) with Rips threshold 2*alpha; the outer pair
// uses (3*alpha, r) / (3*alpha, r; eta1) with threshold 6*alpha.
struct ParamSchedule {
    double epsilon = 0.0;  // Hausdorff sampling bound (0 when unknown)
    double rho = 0.0;      // reach (0 when unknown)
    double alpha = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double r = 0.0;
    int k_max = 1;
    ScheduleMode mode = ScheduleMode::Manual;

    void validate() const;  // throws std::invalid_argument on violation
};

double theta1(double epsilon, double rho);
double alpha_upper(double epsilon, double rho);  // (rho - 13 eps) / 22

// Derives a schedule from (epsilon, rho): alpha defaults to the midpoint of
// its admissible interval; eta1 = 9a+4e, eta2 = eta1+12a+6e, r = eta1+eta2.
ParamSchedule parameter_schedule(double epsilon, double rho,
                                 std::optional<double> alpha = std::nullopt,
                                 int k_max = 1);

ParamSchedule manual_schedule(double alpha, double eta1, double eta2, double r, int k_max);

// Looser validation backed by the offset-level interleaving only:
// eta1 ≥ 3a+4e, eta2 ≥ eta1+4a+6e, r > eta2+2a+6e.
ParamSchedule relaxed_schedule(double epsilon, double alpha, double eta1, double eta2,
                               double r, int k_max);

std::string to_string(ScheduleMode mode);

}  // namespace lhdim
