#ifndef QWVD_CONFIG_HPP
#define QWVD_CONFIG_HPP

#include <string>
#include <vector>

#include "qwvd/qft.hpp"
#include "qwvd/qolct.hpp"

namespace qwvd {

/// One job description, loadable from a flat `key = value` text file ('#'
/// starts a comment). Unknown keys are rejected; the per-axis matrices are
/// unimodularity-checked at parse time. parse(serialize(c)) == c.
struct JobConfig {
    std::string command;  // transform | wvd | verify | bench | generate

    std::string input;
    std::string input2;
    std::string output;
    std::string output_heatmap;
    std::string heatmap_mode{"modulus"};
    std::string output_csv;

    // generate
    std::string kind{"gaussian"};  // gaussian | shifted-gaussian | chirp | delta
    double sigma{1.0};
    double center1{0.0}, center2{0.0};
    double rate1{0.0}, rate2{0.0};
    double amplitude{1.0};

    // grid (defaults: [-6, 6)^2 with 64 samples per axis)
    int n1{64}, n2{64};
    double delta1{0.1875}, delta2{0.1875};
    double origin1{-6.0}, origin2{-6.0};

    // per-axis transform parameters
    OffsetParams p1{};
    OffsetParams p2{};

    // axes: "i", "j", "k" or "x,y,z" components of a pure unit direction
    std::string lambda{"i"};
    std::string mu{"j"};

    std::string path_mode{"auto"};  // auto | fast | direct
    int K{6};
    int seeds{10};
    std::string suite{"all"};
    std::vector<int> sizes;
    bool deterministic{false};
    bool use_oracle{false};
    bool half_step{false};
    int slice1{-1}, slice2{-1};
    double tol_scale{1.0};

    GridGeometry grid() const;
    AxisPair axes() const;

    bool operator==(const JobConfig&) const = default;
};

JobConfig parse_config_text(const std::string& text);
JobConfig load_config(const std::string& path);
std::string serialize_config(const JobConfig& cfg);

PureUnitAxis axis_from_string(const std::string& s);

}  // namespace qwvd

#endif
