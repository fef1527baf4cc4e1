// Command-line front end: dataset generation, base-point selection,
// dimension estimation, and the oracle cross-check.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lhdim/lhdim.hpp"

using namespace lhdim;
using ordered_json = nlohmann::ordered_json;

namespace {

struct ScheduleFlags {
    std::optional<double> alpha, eta1, eta2, r, rho, epsilon;
    bool relaxed = false;
    int k_max = -1;  // -1: min(d-1, 7)

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "inner offset scale");
        cmd->add_option("--eta1", eta1, "outer-pair complement radius");
        cmd->add_option("--eta2", eta2, "inner-pair complement radius");
        cmd->add_option("--r", r, "neighborhood radius");
        cmd->add_option("--rho", rho, "reach (strict mode)");
        cmd->add_option("--epsilon", epsilon, "sampling bound (strict/relaxed mode)");
        cmd->add_flag("--relaxed", relaxed, "validate against the relaxed constraints");
        cmd->add_option("--kmax", k_max, "highest homology dimension (default min(d-1,7))");
    }

    ParamSchedule resolve(std::size_t ambient_dim) const {
        const int k = k_max >= 0 ? k_max
                                 : std::min<int>(static_cast<int>(ambient_dim) - 1, 7);
        const bool manual_given = eta1 || eta2 || r;
        if (rho) {
            if (manual_given)
                throw std::invalid_argument("--rho conflicts with manual --eta1/--eta2/--r");
            if (!epsilon) throw std::invalid_argument("strict mode needs --epsilon");
            return parameter_schedule(*epsilon, *rho, alpha, k);
        }
        if (!(alpha && eta1 && eta2 && r))
            throw std::invalid_argument("manual mode needs --alpha --eta1 --eta2 --r");
        if (relaxed)
            return relaxed_schedule(epsilon.value_or(0.0), *alpha, *eta1, *eta2, *r, k);
        return manual_schedule(*alpha, *eta1, *eta2, *r, k);
    }
};

BaseStrategy parse_strategy(const std::string& spec) {
    BaseStrategy s;
    if (spec == "all") {
        s.kind = BaseStrategy::Kind::All;
    } else if (spec.rfind("sparse:", 0) == 0) {
        s.kind = BaseStrategy::Kind::Sparse;
        s.min_dist = std::stod(spec.substr(7));
    } else if (spec.rfind("centers:", 0) == 0) {
        s.kind = BaseStrategy::Kind::Centers;
        const std::string rest = spec.substr(8);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--base centers:<edge_len>,<min_size>");
        s.edge_len = std::stod(rest.substr(0, comma));
        s.min_size = std::stoul(rest.substr(comma + 1));
    } else if (spec.rfind("list:", 0) == 0) {
        s.kind = BaseStrategy::Kind::List;
        std::ifstream in(spec.substr(5));
        if (!in) throw std::invalid_argument("cannot open base-point list file");
        Index v;
        while (in >> v) s.list.push_back(v);
    } else {
        throw std::invalid_argument("unknown --base strategy: " + spec);
    }
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

int cmd_estimate(const std::string& input, bool header, const ScheduleFlags& sf,
                 const std::string& base_spec, std::uint64_t seed, std::size_t budget,
                 unsigned threads, std::optional<int> truth, const std::string& out,
                 const std::string& csv_out, bool timings, std::size_t trials,
                 Index center, std::size_t subsample) {
    PointCloud cloud = load_point_cloud(input, header);
    ParamSchedule schedule = sf.resolve(cloud.dim());

    if (trials > 1) {
        if (center < 0) throw std::invalid_argument("--trials needs --center");
        const std::size_t size = subsample ? subsample : cloud.size();
        RepeatedEstimate est =
            repeated_center_estimate(cloud, schedule, center, size, trials, seed, budget);
        ordered_json j;
        j["center"] = center;
        j["trials"] = trials;
        j["valid"] = est.valid_count;
        ordered_json spheres = ordered_json::object();
        for (const auto& [n, cnt] : est.sphere_tally) spheres[std::to_string(n)] = cnt;
        j["sphere"] = std::move(spheres);
        j["estimated_dimension"] = est.estimated_dimension;
        j["plurality_percent"] = est.plurality_percent;
        if (est.ambiguous) j["ambiguous"] = true;
        write_file(out, j.dump(2) + "\n");
        return est.valid_count == 0 ? 2 : 0;
    }

    EstimateOptions opts;
    opts.seed = seed;
    opts.budget = budget;
    opts.threads = threads;
    opts.truth = truth;
    DimensionReport report =
        estimate_dimension(cloud, schedule, parse_strategy(base_spec), opts);
    write_file(out, report_to_json(report, timings));
    if (!csv_out.empty()) write_file(csv_out, report_to_csv(report, input));
    return report.valid_count == 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local-homology intrinsic dimension estimation"};
    app.require_subcommand(1);

    // ---- estimate ----
    auto* est = app.add_subcommand("estimate", "estimate intrinsic dimension from a point file");
    std::string input, out = "-", csv_out, base_spec = "all";
    bool header = false, timings = false;
    std::uint64_t seed = 0;
    std::size_t budget = kDefaultSimplexBudget, trials = 1, subsample = 0;
    unsigned threads = 0;
    Index center = -1;
    std::optional<int> truth;
    ScheduleFlags sf;
    est->add_option("input", input, "point file (CSV/whitespace)")->required();
    est->add_flag("--header", header, "skip the first row");
    sf.attach(est);
    est->add_option("--base", base_spec,
                    "sparse:<min_dist> | centers:<edge_len>,<min_size> | all | list:<file>");
    est->add_option("--seed", seed, "RNG seed");
    est->add_option("--budget", budget, "per-base-point simplex budget");
    est->add_option("--threads", threads, "worker threads (0 = auto)");
    est->add_option("--truth", truth, "ground-truth dimension (enables correct ratio)");
    est->add_option("--out", out, "JSON report path (- for stdout)");
    est->add_option("--csv", csv_out, "CSV summary path");
    est->add_flag("--timings", timings, "include wall-clock timings in the report");
    est->add_option("--trials", trials, "repeated-center trials (needs --center)");
    est->add_option("--center", center, "center index for repeated-center mode");
    est->add_option("--subsample", subsample, "subsample size per repeated-center trial");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a synthetic corpus (CSV + manifest)");
    std::string kind, gen_out = "corpus";
    int cap_n = 2, patch_w = 21, patch_h = 29, stride = 1, grid = 40;
    double cap_angle = 0.5, gen_eps = 0.05, noise = 0.0;
    std::uint64_t gen_seed = 0;
    std::size_t probes = 200000;
    std::size_t initial = 1;
    gen->add_option("kind", kind, "sphere-cap | shift | torus")->required();
    gen->add_option("-n,--dim", cap_n, "intrinsic dimension (sphere-cap)");
    gen->add_option("--cap-angle", cap_angle, "cap angle in radians (sphere-cap)");
    gen->add_option("--epsilon", gen_eps, "target covering radius (sphere-cap)");
    gen->add_option("--probes", probes, "probe-set size for the covering check");
    gen->add_option("--initial", initial, "uniform batch size before densification");
    gen->add_option("--patch-w", patch_w, "patch width (shift)");
    gen->add_option("--patch-h", patch_h, "patch height (shift)");
    gen->add_option("--stride", stride, "translation stride (shift)");
    gen->add_option("--grid", grid, "grid points per parameter axis (torus)");
    gen->add_option("--noise", noise, "Hausdorff noise magnitude (torus)");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "output base path (writes <out>.csv, <out>.json)");

    // ---- centers ----
    auto* ctr = app.add_subcommand("centers", "graph-based component centers");
    std::string ctr_input, ctr_out = "-";
    bool ctr_header = false;
    double edge_len = 0.0;
    std::size_t min_size = 1;
    ctr->add_option("input", ctr_input, "point file")->required();
    ctr->add_flag("--header", ctr_header, "skip the first row");
    ctr->add_option("--edge-len", edge_len, "graph connection distance")->required();
    ctr->add_option("--min-size", min_size, "minimum component size");
    ctr->add_option("--out", ctr_out, "output path (- for stdout)");

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "cross-check the matrix route against the cone oracle");
    std::size_t instances = 200;
    std::uint64_t ver_seed = 7;
    ver->add_option("--instances", instances, "number of random instances");
    ver->add_option("--seed", ver_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (est->parsed())
            return cmd_estimate(input, header, sf, base_spec, seed, budget, threads, truth,
                                out, csv_out, timings, trials, center, subsample);

        if (gen->parsed()) {
            PointCloud cloud;
            ordered_json manifest;
            manifest["generator"] = kind;
            manifest["seed"] = gen_seed;
            if (kind == "sphere-cap") {
                cloud = sphere_cap(cap_n, cap_angle, gen_eps, gen_seed, probes, initial);
                manifest["n"] = cap_n;
                manifest["cap_angle"] = cap_angle;
                manifest["target_epsilon"] = gen_eps;
                manifest["probes"] = probes;
                manifest["initial"] = initial;
            } else if (kind == "shift") {
                cloud = shift_images(60, 84, patch_w, patch_h, stride);
                manifest["image"] = {60, 84};
                manifest["patch"] = {patch_w, patch_h};
                manifest["stride"] = stride;
            } else if (kind == "torus") {
                cloud = parametric_noisy(flat_torus_map, 2, {0.0, 0.0},
                                         {2 * 3.14159265358979323846, 2 * 3.14159265358979323846},
                                         grid, noise, gen_seed);
                manifest["grid"] = grid;
                manifest["noise"] = noise;
            } else {
                std::cerr << "unknown generator: " << kind << "\n";
                return 1;
            }
            manifest["points"] = cloud.size();
            manifest["ambient_dim"] = cloud.dim();
            save_point_cloud(cloud, gen_out + ".csv");
            write_file(gen_out + ".json", manifest.dump(2) + "\n");
            std::cerr << "wrote " << cloud.size() << " points in R^" << cloud.dim() << " to "
                      << gen_out << ".csv\n";
            return 0;
        }

        if (ctr->parsed()) {
            PointCloud cloud = load_point_cloud(ctr_input, ctr_header);
            auto g = build_neighborhood_graph(cloud, edge_len);
            auto centers = component_centers(g, cloud, min_size);
            std::ostringstream os;
            for (Index c : centers) os << c << "\n";
            write_file(ctr_out, os.str());
            return 0;
        }

        if (ver->parsed()) {
            std::mt19937_64 rng(ver_seed);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            std::size_t failures = 0;
            for (std::size_t t = 0; t < instances; ++t) {
                const std::size_t n = 4 + rng() % 9;
                const std::size_t d = 1 + rng() % 3;
                std::vector<double> coords(n * d);
                for (auto& x : coords) x = unif(rng);
                PointCloud cloud(std::move(coords), d);
                const double alpha = 0.05 + 0.25 * unif(rng);
                const double eta1 = alpha + 0.4 * unif(rng);
                const double eta2 = eta1 + 0.4 * unif(rng) + 1e-3;
                const double r = eta2 + 0.5 * unif(rng) + 1e-3;
                ParamSchedule s = manual_schedule(alpha, eta1, eta2, r, 2);
                const Index p = static_cast<Index>(rng() % n);
                LocalPairComplex pair = build_local_pair(cloud, cloud.point(p), s);
                BoundaryMatrixZ2 mat = assemble_boundary(pair);
                ReducedMatrix red = reduce(mat);
                const auto matrix_route = image_rank(mat, red, s.k_max);
                const auto cone_route = cone_oracle_rank(pair, s.k_max);
                if (matrix_route.ranks != cone_route.ranks) {
                    ++failures;
                    std::cerr << "disagreement at instance " << t << "\n";
                }
            }
            std::cout << (instances - failures) << "/" << instances
                      << " instances agree between the matrix and cone routes\n";
            return failures ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
