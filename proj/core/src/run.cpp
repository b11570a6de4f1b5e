#include "smig/run.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smig/errors.hpp"
#include "smig/io.hpp"
#include "smig/specfun.hpp"

namespace smig {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("config key '" + key + "': expected integer");
    return i;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "frequency_hz") cfg.frequency_hz = parse_number(key, value);
    else if (key == "eps_b_rel") cfg.eps_b_rel = parse_number(key, value);
    else if (key == "sigma_b") cfg.sigma_b = parse_number(key, value);
    else if (key == "n_antennas") cfg.n_antennas = parse_int(key, value);
    else if (key == "radius_m") cfg.radius_m = parse_number(key, value);
    else if (key == "x_min") cfg.x_min = parse_number(key, value);
    else if (key == "x_max") cfg.x_max = parse_number(key, value);
    else if (key == "y_min") cfg.y_min = parse_number(key, value);
    else if (key == "y_max") cfg.y_max = parse_number(key, value);
    else if (key == "grid_n") cfg.grid_n = parse_int(key, value);
    else if (key == "c_re") cfg.constant_c.real(parse_number(key, value));
    else if (key == "c_im") cfg.constant_c.imag(parse_number(key, value));
    else if (key == "truncation_l") cfg.truncation_l = parse_int(key, value);
    else if (key == "subdivisions") cfg.subdivisions = parse_int(key, value);
    else if (key == "norm_tau1") cfg.norm_tau1 = parse_number(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "rank") {
        if (value == "auto") {
            cfg.rank_auto = true;
        } else {
            cfg.rank_auto = false;
            cfg.rank_fixed = parse_int(key, value);
        }
    } else if (key == "source") {
        if (value == "born") cfg.source = DataSource::born;
        else if (value == "farfield") cfg.source = DataSource::farfield;
        else if (value.rfind("external:", 0) == 0) {
            cfg.source = DataSource::external;
            cfg.external_path = value.substr(9);
            cfg.norm_tau1 = 0.0;  // measured data is never rescaled by default
        } else
            throw ConfigError("config key 'source': expected born, farfield or external:PATH");
    } else if (key == "object") {
        std::istringstream ss(value);
        ObjectSpec o{};
        if (!(ss >> o.cx >> o.cy >> o.radius >> o.eps_rel >> o.sigma))
            throw ConfigError("config key 'object': expected 'cx cy radius eps_rel sigma'");
        std::string rest;
        if (ss >> rest) throw ConfigError("config key 'object': trailing tokens");
        cfg.objects.push_back(o);
    } else
        throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    RunConfig cfg;
    cfg.objects.clear();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

RunConfig preset(const std::string& name) {
    RunConfig cfg;  // defaults already encode the shared medium/array/grid
    cfg.out_dir = "out_" + name;
    if (name == "example1") {
        cfg.objects = {{0.01, 0.03, 0.01, 55.0, 1.2}};
    } else if (name == "example2") {
        cfg.objects = {{0.01, 0.03, 0.01, 55.0, 1.2},
                       {-0.04, -0.02, 0.01, 45.0, 1.0}};
    } else if (name == "example3") {
        cfg.objects = {{0.03, 0.03, 0.048, 15.0, 0.5}};
    } else if (name == "table1") {
        cfg.table1_mode = true;
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return cfg;
}

Scene build_scene(const RunConfig& config) {
    Scene scene;
    scene.medium = make_medium(config.frequency_hz, config.eps_b_rel, config.sigma_b);
    scene.array = uniform_array(config.n_antennas, config.radius_m);
    for (const ObjectSpec& o : config.objects)
        scene.objects.push_back({{o.cx, o.cy},
                                 o.radius,
                                 o.eps_rel * kVacuumPermittivity,
                                 o.sigma});
    scene.grid = make_grid(config.x_min, config.x_max, config.y_min, config.y_max,
                           config.grid_n, config.grid_n);
    validate_scene(scene);
    return scene;
}

namespace {

/// Shared pipeline tail: mask, decompose, image, extract, serialize.
RunSummary run_with_matrix(const RunConfig& config, const Scene& scene,
                           const ScatteringMatrix& raw,
                           std::chrono::steady_clock::time_point t0) {
    ScatteringMatrix data = raw;
    if (config.norm_tau1 > 0.0) {
        const SvdFactors zero = svd(mask_diagonal(raw, Complex(0.0, 0.0)));
        const double tau1 = zero.singular_values(0);
        if (tau1 > 0.0) data.entries *= config.norm_tau1 / tau1;
    }
    const ScatteringMatrix masked = mask_diagonal(data, config.constant_c);
    const RankStrategy strategy = config.rank_auto
                                      ? RankStrategy::gap()
                                      : RankStrategy::fixed(config.rank_fixed);
    const ImagingMap map = imaging_map(scene, masked, strategy, VectorMode::farfield);
    const SvdFactors factors = svd(masked);

    const int peak_count = std::max<int>(1, static_cast<int>(scene.objects.size()));
    const PeakResult peaks = peak_extract(map, peak_count, 0.02);

    RunSummary summary;
    summary.singular_values.assign(
        factors.singular_values.data(),
        factors.singular_values.data() + factors.singular_values.size());
    summary.rank = map.rank_used;
    for (std::size_t i = 0; i < peaks.points.size(); ++i)
        summary.peaks.push_back({peaks.points[i], peaks.values[i]});
    const Point2 probe = summary.peaks.empty() ? Point2{0.0, 0.0}
                                               : summary.peaks.front().location;
    summary.farfield = farfield_condition(probe, scene);
    summary.born = validate_born(scene);
    summary.constant_c = config.constant_c;
    summary.grid_n = config.grid_n;
    summary.out_dir = config.out_dir;

    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    export_map_csv(map, dir / "map.csv");
    export_map_pgm(map, dir / "map.pgm");

    json sv = json::array();
    for (double t : summary.singular_values) sv.push_back(t);
    {
        std::ofstream out(dir / "singular_values.json");
        out << json{{"singular_values", sv}}.dump(2) << '\n';
    }
    json jpeaks = json::array();
    for (const PeakInfo& p : summary.peaks)
        jpeaks.push_back({{"x", p.location.x}, {"y", p.location.y}, {"value", p.value}});
    json jborn = json::array();
    for (const BornObjectReport& o : summary.born.objects)
        jborn.push_back({{"size_lhs", o.size_lhs},
                         {"size_rhs", o.size_rhs},
                         {"size_ok", o.size_ok}});
    json jsummary = {
        {"singular_values", sv},
        {"rank", summary.rank},
        {"peaks", jpeaks},
        {"constant_c", {{"re", config.constant_c.real()}, {"im", config.constant_c.imag()}}},
        {"grid_n", config.grid_n},
        {"farfield_condition",
         {{"min_value", summary.farfield.min_value}, {"pass", summary.farfield.pass}}},
        {"born_validity",
         {{"objects", jborn},
          {"loss_ratio", summary.born.loss_ratio},
          {"loss_ok", summary.born.loss_ok}}},
    };
    {
        std::ofstream out(dir / "summary.json");
        out << jsummary.dump(2) << '\n';
    }
    summary.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    {  // timings kept out of the JSON so reruns stay byte-identical
        std::ofstream out(dir / "timings.txt");
        out << "elapsed_ms " << summary.elapsed_ms << '\n';
    }
    return summary;
}

RunSummary run_table1(const RunConfig& config) {
    const AntennaArray array = uniform_array(config.n_antennas, config.radius_m);
    const std::vector<double> xs = {0.1, 0.3, 0.5, 0.7, 1.0};
    const std::vector<int> ls = {1, 3, 5, 10, 15};
    const auto table = table1(array, xs, ls, 0.0);
    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "table1.csv");
        out << "x";
        for (int l : ls) out << ",L=" << l;
        out << '\n';
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out << format_double(xs[i]);
            for (double v : table[i]) out << ',' << format_double(v);
            out << '\n';
        }
    }
    double worst = 0.0;
    for (const auto& row : table)
        for (double v : row) worst = std::max(worst, v);
    json jsummary = {{"table", "table1"}, {"max_abs_entry", worst}};
    {
        std::ofstream out(dir / "summary.json");
        out << jsummary.dump(2) << '\n';
    }
    RunSummary summary;
    summary.out_dir = config.out_dir;
    return summary;
}

}  // namespace

RunSummary run(const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    if (config.table1_mode) return run_table1(config);
    const Scene scene = build_scene(config);
    if (scene.objects.empty() && config.source != DataSource::external)
        throw ConfigError("run: no objects configured and no external data");
    ScatteringMatrix raw;
    if (config.source == DataSource::external) {
        raw = import_matrix_csv(config.external_path);
        if (raw.size() != scene.array.count())
            throw ConfigError("run: external matrix size does not match the array");
    } else {
        raw = assemble(scene, config.source, QuadratureSpec{config.subdivisions});
    }
    return run_with_matrix(config, scene, raw, t0);
}

std::vector<RunSummary> sweep_constant(const RunConfig& config,
                                       const std::vector<Complex>& c_list) {
    if (c_list.empty()) throw ConfigError("sweep_constant: empty constant list");
    if (config.table1_mode)
        throw ConfigError("sweep_constant: not applicable to the table preset");
    const auto t0 = std::chrono::steady_clock::now();
    const Scene scene = build_scene(config);
    ScatteringMatrix raw;
    if (config.source == DataSource::external)
        raw = import_matrix_csv(config.external_path);
    else
        raw = assemble(scene, config.source, QuadratureSpec{config.subdivisions});

    std::vector<Point2> centers;
    for (const DiskObject& obj : scene.objects) centers.push_back(obj.center);

    std::vector<RunSummary> summaries;
    std::vector<double> contrasts;
    for (std::size_t i = 0; i < c_list.size(); ++i) {
        RunConfig sub = config;
        sub.constant_c = c_list[i];
        sub.out_dir = (std::filesystem::path(config.out_dir) /
                       ("c" + std::to_string(i)))
                          .string();
        summaries.push_back(run_with_matrix(sub, scene, raw, t0));
        // Recompute the map for the contrast metric from the written values.
        ScatteringMatrix data = raw;
        if (sub.norm_tau1 > 0.0) {
            const SvdFactors zero = svd(mask_diagonal(raw, Complex(0.0, 0.0)));
            if (zero.singular_values(0) > 0.0)
                data.entries *= sub.norm_tau1 / zero.singular_values(0);
        }
        const ScatteringMatrix masked = mask_diagonal(data, c_list[i]);
        const RankStrategy strategy = sub.rank_auto ? RankStrategy::gap()
                                                    : RankStrategy::fixed(sub.rank_fixed);
        const ImagingMap map = imaging_map(scene, masked, strategy, VectorMode::farfield);
        contrasts.push_back(contrast_metric(map, centers, 0.02));
    }
    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "sweep_contrast.csv");
    out << "c_re,c_im,contrast\n";
    for (std::size_t i = 0; i < c_list.size(); ++i)
        out << format_double(c_list[i].real()) << ',' << format_double(c_list[i].imag())
            << ',' << format_double(contrasts[i]) << '\n';
    return summaries;
}

double contrast_metric(const ImagingMap& map, const std::vector<Point2>& centers,
                       double exclusion) {
    double peak = 0.0;
    double outside = 0.0;
    for (std::size_t i = 0; i < map.values.size(); ++i) {
        peak = std::max(peak, map.values[i]);
        bool near = false;
        for (const Point2& c : centers)
            if (norm(map.grid.points[i] - c) <= exclusion) {
                near = true;
                break;
            }
        if (!near) outside = std::max(outside, map.values[i]);
    }
    if (outside <= 0.0) throw NumericalError("contrast_metric: empty exclusion complement");
    return peak / outside;
}

}  // namespace smig
