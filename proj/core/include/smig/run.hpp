#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "smig/imaging.hpp"
#include "smig/scene.hpp"
#include "smig/smatrix.hpp"
#include "smig/theory.hpp"

namespace smig {

struct ObjectSpec {
    double cx, cy, radius, eps_rel, sigma;
};

/// Flat key = value experiment description (see parse_config for keys).
struct RunConfig {
    double frequency_hz = 1e9;
    double eps_b_rel = 20.0;
    double sigma_b = 0.2;
    int n_antennas = 16;
    double radius_m = 0.09;
    std::vector<ObjectSpec> objects;
    double x_min = -0.08, x_max = 0.08, y_min = -0.08, y_max = 0.08;
    int grid_n = 128;
    Complex constant_c{0.0, 0.0};
    bool rank_auto = true;  // gap strategy; otherwise fixed(rank_fixed)
    int rank_fixed = 1;
    DataSource source = DataSource::born;
    std::string external_path;
    int truncation_l = 0;  // 0 -> default rule
    int subdivisions = 32;
    double norm_tau1 = 0.02;  // rescale so tau1(K(0)) hits this; 0 disables
    std::string out_dir = "out";
    bool table1_mode = false;
};

/// Parses a key = value config file ('#' comments; `object = cx cy r eps_rel sigma`
/// may repeat). Unknown keys are rejected.
RunConfig parse_config(const std::filesystem::path& path);

/// Built-in configurations: example1, example2, example3, table1.
RunConfig preset(const std::string& name);

Scene build_scene(const RunConfig& config);

struct PeakInfo {
    Point2 location;
    double value;
};

struct RunSummary {
    std::vector<double> singular_values;
    int rank = 0;
    std::vector<PeakInfo> peaks;
    FarfieldConditionReport farfield{0.0, false};  // at the strongest peak
    BornReport born;
    Complex constant_c{0.0, 0.0};
    int grid_n = 0;
    double elapsed_ms = 0.0;
    std::filesystem::path out_dir;
};

/// Executes one experiment and writes map.csv, map.pgm, singular_values.json,
/// summary.json (plus table1.csv for the table preset) under config.out_dir.
RunSummary run(const RunConfig& config);

/// One run per C over shared synthetic data; writes sweep_contrast.csv with
/// the contrast metric (peak value / max value outside 0.02 m of every object).
std::vector<RunSummary> sweep_constant(const RunConfig& config,
                                       const std::vector<Complex>& c_list);

/// Peak value divided by the largest value farther than `exclusion` from every
/// object center.
double contrast_metric(const ImagingMap& map, const std::vector<Point2>& centers,
                       double exclusion);

}  // namespace smig
