#pragma once

#include <filesystem>
#include <string>

#include "smig/imaging.hpp"
#include "smig/smatrix.hpp"

namespace smig {

/// Writes "row,col,re,im" lines (17 significant digits), row-major.
void export_matrix_csv(const ScatteringMatrix& k, const std::filesystem::path& path);

/// Reads a matrix written by export_matrix_csv (or compatible). The matrix must
/// be square and fully populated; diagonal_policy = measured, source = external.
ScatteringMatrix import_matrix_csv(const std::filesystem::path& path);

/// Writes "x,y,value" rows (17 significant digits), row-major over the grid.
void export_map_csv(const ImagingMap& map, const std::filesystem::path& path);

/// Binary P5 PGM, 16-bit big-endian samples, min-max normalized per map.
void export_map_pgm(const ImagingMap& map, const std::filesystem::path& path);

/// Serializes one double with 17 significant digits (round-trips binary64).
std::string format_double(double v);

}  // namespace smig
