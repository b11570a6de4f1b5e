#include "smig/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "smig/errors.hpp"

namespace smig {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void export_matrix_csv(const ScatteringMatrix& k, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path.string());
    out << "row,col,re,im\n";
    for (int r = 0; r < k.entries.rows(); ++r)
        for (int c = 0; c < k.entries.cols(); ++c)
            out << r << ',' << c << ',' << format_double(k.entries(r, c).real())
                << ',' << format_double(k.entries(r, c).imag()) << '\n';
    if (!out) throw ConfigError("write failed: " + path.string());
}

ScatteringMatrix import_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open matrix file: " + path.string());
    std::map<std::pair<int, int>, Complex> cells;
    int max_index = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("row", 0) == 0) continue;  // header
        std::istringstream ss(line);
        std::string tok;
        std::vector<std::string> parts;
        while (std::getline(ss, tok, ',')) parts.push_back(tok);
        if (parts.size() != 4)
            throw ConfigError("matrix file " + path.string() + " line " +
                              std::to_string(line_no) + ": expected row,col,re,im");
        int r, c;
        double re, im;
        try {
            r = std::stoi(parts[0]);
            c = std::stoi(parts[1]);
            re = std::stod(parts[2]);
            im = std::stod(parts[3]);
        } catch (const std::exception&) {
            throw ConfigError("matrix file " + path.string() + " line " +
                              std::to_string(line_no) + ": malformed number");
        }
        if (r < 0 || c < 0)
            throw ConfigError("matrix file " + path.string() + " line " +
                              std::to_string(line_no) + ": negative index");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ConfigError("matrix file " + path.string() + " line " +
                              std::to_string(line_no) + ": non-finite value");
        cells[{r, c}] = Complex(re, im);
        max_index = std::max(max_index, std::max(r, c));
    }
    if (max_index < 0) throw ConfigError("matrix file is empty: " + path.string());
    const int n = max_index + 1;
    if (static_cast<int>(cells.size()) != n * n)
        throw ConfigError("matrix file " + path.string() +
                          ": not a fully populated square matrix (" +
                          std::to_string(cells.size()) + " of " +
                          std::to_string(n * n) + " entries)");
    ScatteringMatrix k;
    k.entries.resize(n, n);
    for (const auto& [rc, v] : cells) k.entries(rc.first, rc.second) = v;
    k.diagonal_policy = DiagonalPolicy::measured;
    k.source = DataSource::external;
    return k;
}

void export_map_csv(const ImagingMap& map, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path.string());
    out << "x,y,value\n";
    for (std::size_t i = 0; i < map.values.size(); ++i)
        out << format_double(map.grid.points[i].x) << ','
            << format_double(map.grid.points[i].y) << ','
            << format_double(map.values[i]) << '\n';
    if (!out) throw ConfigError("write failed: " + path.string());
}

void export_map_pgm(const ImagingMap& map, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path.string());
    double lo = map.values.empty() ? 0.0 : map.values[0];
    double hi = lo;
    for (double v : map.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = (hi > lo) ? (hi - lo) : 1.0;
    out << "P5\n" << map.grid.n_x << ' ' << map.grid.n_y << "\n65535\n";
    for (double v : map.values) {
        const auto q = static_cast<std::uint16_t>(
            std::lround(65535.0 * (v - lo) / span));
        const char bytes[2] = {static_cast<char>(q >> 8),
                               static_cast<char>(q & 0xff)};
        out.write(bytes, 2);
    }
    if (!out) throw ConfigError("write failed: " + path.string());
}

}  // namespace smig
