#include "lhdim/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace lhdim {

double theta1(double epsilon, double rho) {
    const double disc = epsilon * epsilon + rho * rho - 6.0 * epsilon * rho;
    if (disc < 0) throw std::invalid_argument("theta1: discriminant negative");
    return ((epsilon + rho) - std::sqrt(disc)) / 2.0;
}

double alpha_upper(double epsilon, double rho) { return (rho - 13.0 * epsilon) / 22.0; }

void ParamSchedule::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("schedule: " + msg); };
    if (k_max < 1) fail("k_max must be >= 1");
    switch (mode) {
        case ScheduleMode::Manual:
            if (!(alpha > 0)) fail("alpha must be positive");
            if (!(eta1 < eta2 && eta2 < r)) fail("need eta1 < eta2 < r");
            break;
        case ScheduleMode::Relaxed: {
            if (!(alpha > 0)) fail("alpha must be positive");
            const double ap = 3.0 * alpha;
            if (!(eta1 >= ap + 4.0 * epsilon)) fail("relaxed: eta1 >= 3a+4e violated");
            if (!(eta2 >= eta1 + alpha + ap + 6.0 * epsilon))
                fail("relaxed: eta2 >= eta1+4a+6e violated");
            if (!(r > eta2 + 2.0 * alpha + 6.0 * epsilon))
                fail("relaxed: r > eta2+2a+6e violated");
            break;
        }
        case ScheduleMode::Strict: {
            if (!(epsilon > 0 && rho > 0)) fail("strict: epsilon and rho must be positive");
            if (!(epsilon < rho / 58.0)) fail("sampling too coarse for guarantee (eps >= rho/58)");
            const double lo = theta1(epsilon, rho);
            const double hi = alpha_upper(epsilon, rho);
            if (!(alpha >= lo && alpha <= hi)) fail("strict: alpha outside [theta1, (rho-13e)/22]");
            if (!(eta1 >= 9.0 * alpha + 4.0 * epsilon)) fail("strict: eta1 >= 9a+4e violated");
            if (!(eta2 >= eta1 + 12.0 * alpha + 6.0 * epsilon))
                fail("strict: eta2 >= eta1+12a+6e violated");
            if (!(r >= eta1 + eta2)) fail("strict: r >= eta1+eta2 violated");
            if (!(epsilon < eta1 && eta1 < rho && eta2 < rho))
                fail("strict: eta range (eps, rho) violated");
            break;
        }
    }
}

ParamSchedule parameter_schedule(double epsilon, double rho, std::optional<double> alpha,
                                 int k_max) {
    if (!(epsilon > 0 && rho > 0))
        throw std::invalid_argument("parameter_schedule: epsilon and rho must be positive");
    if (!(epsilon < rho / 58.0))
        throw std::invalid_argument("sampling too coarse for guarantee (eps >= rho/58)");
    const double lo = theta1(epsilon, rho);
    const double hi = alpha_upper(epsilon, rho);
    double a = alpha ? *alpha : (lo + hi) / 2.0;
    if (a < lo || a > hi)
        throw std::invalid_argument("parameter_schedule: alpha outside [theta1, (rho-13e)/22]");
    ParamSchedule s;
    s.mode = ScheduleMode::Strict;
    s.epsilon = epsilon;
    s.rho = rho;
    s.alpha = a;
    s.eta1 = 9.0 * a + 4.0 * epsilon;
    s.eta2 = s.eta1 + 12.0 * a + 6.0 * epsilon;
    s.r = s.eta1 + s.eta2;
    s.k_max = k_max;
    s.validate();
    return s;
}

ParamSchedule manual_schedule(double alpha, double eta1, double eta2, double r, int k_max) {
    ParamSchedule s;
    s.mode = ScheduleMode::Manual;
    s.alpha = alpha;
    s.eta1 = eta1;
    s.eta2 = eta2;
    s.r = r;
    s.k_max = k_max;
    s.validate();
    return s;
}

ParamSchedule relaxed_schedule(double epsilon, double alpha, double eta1, double eta2,
                               double r, int k_max) {
    ParamSchedule s;
    s.mode = ScheduleMode::Relaxed;
    s.epsilon = epsilon;
    s.alpha = alpha;
    s.eta1 = eta1;
    s.eta2 = eta2;
    s.r = r;
    s.k_max = k_max;
    s.validate();
    return s;
}

std::string to_string(ScheduleMode mode) {
    switch (mode) {
        case ScheduleMode::Strict: return "strict";
        case ScheduleMode::Relaxed: return "relaxed";
        case ScheduleMode::Manual: return "manual";
    }
    return "?";
}

}  // namespace lhdim
