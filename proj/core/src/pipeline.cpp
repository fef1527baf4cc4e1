#include "lhdim/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace lhdim {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Classification c, int sphere_n) {
    switch (c) {
        case Classification::Trivial: return "trivial";
        case Classification::Sphere: return "sphere(" + std::to_string(sphere_n) + ")";
        case Classification::NonSphere: return "non-sphere";
        case Classification::Skipped: return "skipped";
    }
    return "?";
}

std::string BaseStrategy::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Sparse: os << "sparse:" << min_dist; break;
        case Kind::Centers: os << "centers:" << edge_len << "," << min_size; break;
        case Kind::All: os << "all"; break;
        case Kind::List: os << "list[" << list.size() << "]"; break;
    }
    return os.str();
}

BasePointResult estimate_local(const PointCloud& cloud, std::span<const double> p,
                               const ParamSchedule& schedule, std::size_t budget,
                               Index label) {
    BasePointResult res;
    res.point = label;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        LocalPairComplex pair = build_local_pair(cloud, p, schedule, budget);
        res.neighbors = pair.A2.vertices.size();
        BoundaryMatrixZ2 mat = assemble_boundary(pair);
        ReducedMatrix red = reduce(mat);
        res.profile = image_rank(mat, red, schedule.k_max);
        if (res.profile.trivial()) {
            res.classification = Classification::Trivial;
        } else if (int n = res.profile.sphere_dimension(); n >= 0) {
            res.classification = Classification::Sphere;
            res.sphere_n = n;
        } else {
            res.classification = Classification::NonSphere;
        }
    } catch (const BudgetExceeded& e) {
        res.classification = Classification::Skipped;
        res.skip_reason = std::string(e.what()) + " (base point " +
                          std::to_string(label) + ")";
        res.profile.ranks.assign(static_cast<std::size_t>(schedule.k_max) + 1, 0);
    }
    res.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return res;
}

BasePointResult estimate_local(const PointCloud& cloud, Index p, const ParamSchedule& schedule,
                               std::size_t budget) {
    return estimate_local(cloud, cloud.point(p), schedule, budget, p);
}

namespace {

std::vector<Index> select_base_points(const PointCloud& cloud, const BaseStrategy& strategy,
                                      std::uint64_t seed) {
    switch (strategy.kind) {
        case BaseStrategy::Kind::Sparse:
            return farthest_point_subsample(cloud, 0, strategy.min_dist, seed);
        case BaseStrategy::Kind::Centers: {
            auto g = build_neighborhood_graph(cloud, strategy.edge_len);
            return component_centers(g, cloud, strategy.min_size);
        }
        case BaseStrategy::Kind::All: {
            std::vector<Index> all(cloud.size());
            for (std::size_t i = 0; i < cloud.size(); ++i) all[i] = static_cast<Index>(i);
            return all;
        }
        case BaseStrategy::Kind::List:
            return strategy.list;
    }
    return {};
}

void aggregate(DimensionReport& report) {
    double neigh_sum = 0.0;
    for (const auto& r : report.per_point) {
        report.total_millis += r.millis;
        switch (r.classification) {
            case Classification::Trivial: ++report.trivial_count; break;
            case Classification::NonSphere: ++report.non_sphere_count; break;
            case Classification::Skipped: ++report.skipped_count; break;
            case Classification::Sphere:
                ++report.sphere_tally[r.sphere_n];
                ++report.valid_count;
                break;
        }
        neigh_sum += static_cast<double>(r.neighbors);
    }
    if (!report.per_point.empty())
        report.avg_neighbors = neigh_sum / static_cast<double>(report.per_point.size());

    std::size_t best = 0;
    for (const auto& [n, cnt] : report.sphere_tally) {
        if (cnt > best) {
            best = cnt;
            report.estimated_dimension = n;
            report.ambiguous = false;
        } else if (cnt == best && best > 0) {
            report.ambiguous = true;
        }
    }
    if (report.ambiguous) report.estimated_dimension = -1;

    if (report.truth && report.valid_count > 0) {
        const auto it = report.sphere_tally.find(*report.truth);
        const std::size_t correct = (it == report.sphere_tally.end()) ? 0 : it->second;
        report.correct_ratio =
            static_cast<double>(correct) / static_cast<double>(report.valid_count);
    }
}

}  // namespace

DimensionReport estimate_dimension(const PointCloud& cloud, const ParamSchedule& schedule,
                                   const BaseStrategy& strategy, const EstimateOptions& opts) {
    schedule.validate();
    DimensionReport report;
    report.schedule = schedule;
    report.strategy = strategy.describe();
    report.truth = opts.truth;

    const std::vector<Index> bases = select_base_points(cloud, strategy, opts.seed);
    report.per_point.resize(bases.size());

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(bases.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= bases.size()) return;
            report.per_point[i] = estimate_local(cloud, bases[i], schedule, opts.budget);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    aggregate(report);
    return report;
}

RepeatedEstimate repeated_center_estimate(const PointCloud& cloud,
                                          const ParamSchedule& schedule, Index center,
                                          std::size_t subsample_size, std::size_t trials,
                                          std::uint64_t seed, std::size_t budget) {
    if (trials < 1) throw std::invalid_argument("repeated_center_estimate: trials >= 1");
    schedule.validate();

    // candidate pool: everything the outer complex could ever use
    const double reach_out = schedule.r + 3.0 * schedule.alpha;
    std::vector<Index> pool = ball_query(cloud, cloud.point(center), reach_out);
    std::vector<double> center_coords(cloud.point(center).begin(), cloud.point(center).end());

    RepeatedEstimate est;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Index> chosen = pool;
        std::shuffle(chosen.begin(), chosen.end(), rng);
        if (chosen.size() > subsample_size) chosen.resize(subsample_size);
        std::sort(chosen.begin(), chosen.end());
        PointCloud local = cloud.subset(chosen);
        BasePointResult r = estimate_local(local, center_coords, schedule, budget, center);
        if (r.classification == Classification::Sphere) {
            ++est.sphere_tally[r.sphere_n];
            ++est.valid_count;
        }
        est.trials.push_back(std::move(r));
    }
    std::size_t best = 0;
    for (const auto& [n, cnt] : est.sphere_tally) {
        if (cnt > best) {
            best = cnt;
            est.estimated_dimension = n;
            est.ambiguous = false;
        } else if (cnt == best && best > 0) {
            est.ambiguous = true;
        }
    }
    if (est.ambiguous) est.estimated_dimension = -1;
    if (est.valid_count > 0)
        est.plurality_percent =
            100.0 * static_cast<double>(best) / static_cast<double>(est.valid_count);
    return est;
}

namespace {

ordered_json schedule_to_json(const ParamSchedule& s) {
    ordered_json j;
    j["mode"] = to_string(s.mode);
    if (s.mode == ScheduleMode::Strict || s.epsilon > 0) j["epsilon"] = s.epsilon;
    if (s.mode == ScheduleMode::Strict) j["rho"] = s.rho;
    j["alpha"] = s.alpha;
    j["eta1"] = s.eta1;
    j["eta2"] = s.eta2;
    j["r"] = s.r;
    j["k_max"] = s.k_max;
    return j;
}

}  // namespace

std::string report_to_json(const DimensionReport& report, bool include_timings) {
    ordered_json j;
    j["schedule"] = schedule_to_json(report.schedule);
    j["strategy"] = report.strategy;
    j["per_point"] = ordered_json::array();
    for (const auto& r : report.per_point) {
        ordered_json p;
        p["index"] = r.point;
        p["ranks"] = r.profile.ranks;
        p["class"] = to_string(r.classification, r.sphere_n);
        p["neighbors"] = r.neighbors;
        if (include_timings) p["millis"] = r.millis;
        if (!r.skip_reason.empty()) p["reason"] = r.skip_reason;
        j["per_point"].push_back(std::move(p));
    }
    ordered_json tallies;
    tallies["trivial"] = report.trivial_count;
    tallies["non_sphere"] = report.non_sphere_count;
    tallies["skipped"] = report.skipped_count;
    ordered_json spheres = ordered_json::object();
    for (const auto& [n, cnt] : report.sphere_tally) spheres[std::to_string(n)] = cnt;
    tallies["sphere"] = std::move(spheres);
    tallies["valid"] = report.valid_count;
    j["tallies"] = std::move(tallies);
    j["estimated_dimension"] = report.estimated_dimension;
    if (report.ambiguous) j["ambiguous"] = true;
    if (report.per_point.empty() || report.valid_count == 0) j["no_estimate"] = true;
    if (report.correct_ratio) j["correct_ratio"] = *report.correct_ratio;
    j["avg_neighbors"] = report.avg_neighbors;
    if (include_timings) j["total_millis"] = report.total_millis;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const DimensionReport& report, const std::string& label) {
    std::ostringstream os;
    const std::size_t total = report.per_point.size();
    os << "label,sample_points,avg_neighbors,not_n_sphere,trivial,skipped,";
    os << "sphere_groups,estimated_dimension,correct_ratio\n";
    os << label << ',' << total << ',' << report.avg_neighbors << ','
       << report.non_sphere_count << '/' << total << ',' << report.trivial_count << '/'
       << total << ',' << report.skipped_count << '/' << total << ',';
    bool first = true;
    for (const auto& [n, cnt] : report.sphere_tally) {
        if (!first) os << ' ';
        os << "n=" << n << ":" << cnt << '/' << total;
        first = false;
    }
    if (first) os << "-";
    os << ',' << report.estimated_dimension << ',';
    if (report.correct_ratio)
        os << (*report.correct_ratio * 100.0) << '%';
    else
        os << "-";
    os << '\n';
    return os.str();
}

}  // namespace lhdim
