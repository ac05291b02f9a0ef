#include "qwvd/runners.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "qwvd/generators.hpp"
#include "qwvd/io.hpp"
#include "qwvd/oracle.hpp"
#include "qwvd/parallel.hpp"
#include "qwvd/wvd.hpp"

namespace qwvd {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(),
                                                  suffix) == 0;
}

SampledSignal load_input_signal(const std::string& path) {
    if (path.empty())
        throw std::invalid_argument("no input file given");
    if (has_suffix(path, ".ppm") || has_suffix(path, ".pnm"))
        return ingest_image(path).signal;
    return read_qgrid(path);
}

// Per-axis output grid when a degenerate axis is present: the image of the
// sample axis under u = t/d + tau, so point lookups land on exact samples.
GridGeometry default_transform_grid(const GridGeometry& in, const OffsetParams& p1,
                                    const OffsetParams& p2) {
    if (!p1.degenerate() && !p2.degenerate())
        return qolct_dual_grid(in, p1, p2);
    const GridGeometry dual = qft_dual_grid(in);
    GridGeometry g = dual;
    auto degenerate_axis = [](const OffsetParams& p, double origin, double delta, double& o,
                              double& d) {
        if (!(p.d > 0.0))
            throw std::domain_error("degenerate branch requires d > 0");
        o = origin / p.d + p.tau;
        d = delta / p.d;
    };
    if (p1.degenerate())
        degenerate_axis(p1, in.origin1, in.delta1, g.origin1, g.delta1);
    else {
        const GridGeometry scaled = qolct_dual_grid(in, p1, OffsetParams::qft_case());
        g.origin1 = scaled.origin1;
        g.delta1 = scaled.delta1;
    }
    if (p2.degenerate())
        degenerate_axis(p2, in.origin2, in.delta2, g.origin2, g.delta2);
    else {
        const GridGeometry scaled = qolct_dual_grid(in, OffsetParams::qft_case(), p2);
        g.origin2 = scaled.origin2;
        g.delta2 = scaled.delta2;
    }
    return g;
}

void maybe_export(const JobConfig& cfg, const GridGeometry& g,
                  const std::vector<Quaternion>& values) {
    if (!cfg.output_heatmap.empty())
        export_heatmap(g, values, cfg.output_heatmap,
                       heatmap_mode_from_string(cfg.heatmap_mode));
    if (!cfg.output_csv.empty()) export_grid_csv(g, values, cfg.output_csv);
}

}  // namespace

SampledSignal generate_signal(const JobConfig& cfg) {
    const GridGeometry g = cfg.grid();
    if (cfg.kind == "gaussian")
        return make_gaussian(g, cfg.sigma, 0.0, 0.0, cfg.amplitude);
    if (cfg.kind == "shifted-gaussian")
        return make_gaussian(g, cfg.sigma, cfg.center1, cfg.center2, cfg.amplitude);
    if (cfg.kind == "chirp")
        return make_chirp(g, cfg.sigma, cfg.rate1, cfg.rate2);
    if (cfg.kind == "delta")
        return make_delta(g, cfg.center1, cfg.center2);
    throw std::invalid_argument("generate: unknown kind '" + cfg.kind + "'");
}

int run_generate(const JobConfig& cfg) {
    const SampledSignal f = generate_signal(cfg);
    if (cfg.output.empty())
        throw std::invalid_argument("generate: no output path");
    write_qgrid(cfg.output, f);
    maybe_export(cfg, f.geometry, f.values);
    return 0;
}

int run_transform(const JobConfig& cfg) {
    const SampledSignal f = load_input_signal(cfg.input);
    const AxisPair axes = cfg.axes();
    const GridGeometry freq = default_transform_grid(f.geometry, cfg.p1, cfg.p2);

    Spectrum out;
    const bool fast_ok = axes.is_ij() && !cfg.p1.degenerate() && !cfg.p2.degenerate();
    if (cfg.use_oracle) {
        out = oracle_qolct(f, cfg.p1, cfg.p2, axes, freq);
    } else if (cfg.path_mode == "fast" || (cfg.path_mode == "auto" && fast_ok)) {
        out = qolct_fast(f, cfg.p1, cfg.p2, freq);
    } else if (cfg.path_mode == "direct" || cfg.path_mode == "auto") {
        out = qolct_forward(f, cfg.p1, cfg.p2, axes, freq);
    } else {
        throw std::invalid_argument("transform: unknown path mode '" + cfg.path_mode + "'");
    }

    if (!cfg.output.empty()) write_qgrid_freq(cfg.output, out);
    maybe_export(cfg, out.geometry, out.values);
    return 0;
}

int run_wvd(const JobConfig& cfg) {
    if (cfg.deterministic) set_max_threads(1);
    const SampledSignal f = load_input_signal(cfg.input);
    const SampledSignal g = cfg.input2.empty() ? f : load_input_signal(cfg.input2);
    const AxisPair axes = cfg.axes();
    const bool fast_ok = axes.is_ij() && !cfg.p1.degenerate() && !cfg.p2.degenerate();
    const bool use_fast =
        cfg.path_mode == "fast" || (cfg.path_mode == "auto" && fast_ok);
    const GridGeometry freq =
        default_transform_grid(lag_geometry(f.geometry, 0, 0), cfg.p1, cfg.p2);

    if (cfg.slice1 >= 0 && cfg.slice2 >= 0) {
        const SampledSignal h = cfg.half_step
                                    ? correlation_product_half_step(f, g, cfg.slice1, cfg.slice2)
                                    : correlation_product(f, g, cfg.slice1, cfg.slice2);
        Spectrum s;
        if (cfg.p1.degenerate() || cfg.p2.degenerate() || !use_fast)
            s = qolct_forward(h, cfg.p1, cfg.p2, axes, freq);
        else
            s = qolct_fast(h, cfg.p1, cfg.p2, freq);
        if (!cfg.output.empty()) write_qgrid_freq(cfg.output, s);
        maybe_export(cfg, s.geometry, s.values);
        return 0;
    }

    if (cfg.output.empty())
        throw std::invalid_argument("wvd: no output directory");
    std::filesystem::create_directories(cfg.output);

    const GridGeometry slice_grid =
        cfg.half_step ? half_step_refined(f.geometry) : f.geometry;
    const int step = cfg.half_step ? 1 : 2;
    std::ofstream manifest(cfg.output + "/manifest.txt");
    if (!manifest)
        throw std::runtime_error("cannot write manifest in " + cfg.output);
    manifest << "wvd-manifest slices " << slice_grid.n1 << ' ' << slice_grid.n2 << '\n';

    // Slices are written from this single coordinator in index order.
    std::vector<std::string> names(slice_grid.size());
    WvdGrid W(slice_grid, freq);
    wvd_for_each_slice(f, g, cfg.p1, cfg.p2, axes, freq, cfg.half_step, use_fast,
                       [&](int c1, int c2, const std::vector<Quaternion>& slice) {
                           std::copy(slice.begin(), slice.end(), W.slice(c1 / step, c2 / step));
                       });
    for (int i1 = 0; i1 < slice_grid.n1; ++i1)
        for (int i2 = 0; i2 < slice_grid.n2; ++i2) {
            const std::string name =
                "slice_" + std::to_string(i1) + "_" + std::to_string(i2) + ".qgrid";
            Spectrum s(freq);
            const Quaternion* src = W.slice(i1, i2);
            s.values.assign(src, src + W.slice_stride());
            write_qgrid_freq(cfg.output + "/" + name, s);
            manifest << "slice " << i1 << ' ' << i2 << ' '
                     << format_double(slice_grid.coord1(i1)) << ' '
                     << format_double(slice_grid.coord2(i2)) << ' ' << name << '\n';
        }
    return 0;
}

int run_bench(const JobConfig& cfg) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file)
            throw std::runtime_error("cannot open for writing: " + cfg.output);
        out = &file;
    }
    *out << "size,direct_seconds,fast_seconds,max_abs_deviation\n";

    const OffsetParams p1{1.0, 1.0, 0.0, 1.0, 0.5, 0.25};
    const OffsetParams p2{1.0, 1.0, 0.0, 1.0, -0.25, 0.5};
    for (int n : cfg.sizes) {
        if (n < 2 || n > 32)
            throw std::invalid_argument("bench: sizes must lie in [2, 32] (direct-sum cost)");
        GridGeometry g;
        g.n1 = g.n2 = n;
        g.delta1 = g.delta2 = 4.0 / n;
        g.origin1 = g.origin2 = -2.0;
        const SampledSignal f = random_signal(9000 + n, g);
        const GridGeometry freq = qolct_dual_grid(g, p1, p2);

        const auto t0 = std::chrono::steady_clock::now();
        const Spectrum direct = oracle_qolct(f, p1, p2, AxisPair::ij(), freq, n);
        const auto t1 = std::chrono::steady_clock::now();
        const Spectrum fast = qolct_fast(f, p1, p2, freq);
        const auto t2 = std::chrono::steady_clock::now();

        double dev = 0.0;
        for (std::size_t i = 0; i < direct.values.size(); ++i)
            dev = std::max(dev, modulus(direct.values[i] - fast.values[i]));
        const double direct_s = std::chrono::duration<double>(t1 - t0).count();
        const double fast_s = std::chrono::duration<double>(t2 - t1).count();
        *out << n << ',' << format_double(direct_s) << ',' << format_double(fast_s) << ','
             << format_double(dev) << '\n';
    }
    return 0;
}

int run_job(const JobConfig& cfg) {
    if (cfg.command == "generate") return run_generate(cfg);
    if (cfg.command == "transform") return run_transform(cfg);
    if (cfg.command == "wvd") return run_wvd(cfg);
    if (cfg.command == "bench") return run_bench(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace qwvd
