#ifndef QWVD_IO_HPP
#define QWVD_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "qwvd/grid.hpp"

namespace qwvd {

/// Text grid format shared by signals and spectra:
///   QGRID n1 n2 delta1 delta2 origin1 origin2
///   q0 q1 q2 q3            (n1*n2 lines, row-major)
/// Spectra carry the tag QGRID-FREQ instead. Doubles are written with %.17g
/// and round-trip exactly.

void write_qgrid(const std::string& path, const SampledSignal& f);
void write_qgrid_freq(const std::string& path, const Spectrum& s);
SampledSignal read_qgrid(const std::string& path);
Spectrum read_qgrid_freq(const std::string& path);

/// Generic reader; freq_tag tells which header was present.
struct QGridFile {
    bool freq_tag{false};
    GridGeometry geometry;
    std::vector<Quaternion> values;
};
QGridFile read_qgrid_any(const std::string& path);

/// RGB image mapped to a pure-quaternion signal: pixel (r, g, b) -> i*r + j*g
/// + k*b with channels in [0, 1]. Grid: unit spacing, origin 0, rows on the
/// first axis.
struct ColorImageSignal {
    int width{0};
    int height{0};
    SampledSignal signal;
};

/// Reads an 8-bit RGB portable pixmap (P6 binary or P3 ascii).
ColorImageSignal ingest_image(const std::string& path);

/// Writes the pure-quaternion signal back to a P6 pixmap (values clamped to
/// [0, 1] and quantized to 8 bits).
void export_image(const ColorImageSignal& img, const std::string& path);

enum class HeatmapMode { modulus, q0, q1, q2, q3 };
HeatmapMode heatmap_mode_from_string(const std::string& s);

/// 8-bit portable graymap (P5) with linear min-max scaling, plus a sidecar
/// text file `<path>.minmax` recording the scale for quantitative reload.
void export_heatmap(const GridGeometry& g, const std::vector<Quaternion>& values,
                    const std::string& path, HeatmapMode mode);

/// Full-precision CSV: k1,k2,coord1,coord2,q0,q1,q2,q3.
void export_grid_csv(const GridGeometry& g, const std::vector<Quaternion>& values,
                     const std::string& path);

/// Flat key-value record: a named block of `key = value` lines. Reports are
/// sequences of records separated by blank lines; field order is preserved,
/// so identical inputs serialize byte-identically.
struct Record {
    std::string name;
    std::vector<std::pair<std::string, std::string>> fields;
};
std::string format_records(const std::vector<Record>& records);
void write_records(const std::string& path, const std::vector<Record>& records);

std::string format_double(double v);  // %.17g

}  // namespace qwvd

#endif
