#include "qwvd/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwvd {

namespace {

void write_grid_text(const std::string& path, const char* tag, const GridGeometry& g,
                     const std::vector<Quaternion>& values) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << tag << ' ' << g.n1 << ' ' << g.n2 << ' ' << format_double(g.delta1) << ' '
        << format_double(g.delta2) << ' ' << format_double(g.origin1) << ' '
        << format_double(g.origin2) << '\n';
    for (const auto& q : values)
        out << format_double(q.w) << ' ' << format_double(q.x) << ' ' << format_double(q.y)
            << ' ' << format_double(q.z) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_qgrid(const std::string& path, const SampledSignal& f) {
    write_grid_text(path, "QGRID", f.geometry, f.values);
}

void write_qgrid_freq(const std::string& path, const Spectrum& s) {
    write_grid_text(path, "QGRID-FREQ", s.geometry, s.values);
}

QGridFile read_qgrid_any(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open: " + path);
    std::string tag;
    in >> tag;
    QGridFile file;
    if (tag == "QGRID")
        file.freq_tag = false;
    else if (tag == "QGRID-FREQ")
        file.freq_tag = true;
    else
        throw std::runtime_error(path + ": not a QGRID file (tag '" + tag + "')");
    GridGeometry& g = file.geometry;
    if (!(in >> g.n1 >> g.n2 >> g.delta1 >> g.delta2 >> g.origin1 >> g.origin2))
        throw std::runtime_error(path + ": malformed QGRID header");
    g.validate();
    file.values.resize(g.size());
    for (auto& q : file.values)
        if (!(in >> q.w >> q.x >> q.y >> q.z))
            throw std::runtime_error(path + ": truncated QGRID data");
    return file;
}

SampledSignal read_qgrid(const std::string& path) {
    QGridFile file = read_qgrid_any(path);
    if (file.freq_tag)
        throw std::runtime_error(path + ": expected QGRID, found QGRID-FREQ");
    SampledSignal f(file.geometry);
    f.values = std::move(file.values);
    return f;
}

Spectrum read_qgrid_freq(const std::string& path) {
    QGridFile file = read_qgrid_any(path);
    if (!file.freq_tag)
        throw std::runtime_error(path + ": expected QGRID-FREQ, found QGRID");
    Spectrum s(file.geometry);
    s.values = std::move(file.values);
    return s;
}

namespace {

int read_pnm_token(std::istream& in) {
    // skips whitespace and '#' comments per the PNM spec
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value;
    if (!(in >> value))
        throw std::runtime_error("malformed PNM header");
    return value;
}

}  // namespace

ColorImageSignal ingest_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P6" && magic != "P3")
        throw std::runtime_error(path + ": not an RGB pixmap (need P6 or P3)");
    const int width = read_pnm_token(in);
    const int height = read_pnm_token(in);
    const int maxval = read_pnm_token(in);
    if (maxval != 255)
        throw std::runtime_error(path + ": only 8-bit pixmaps supported");

    ColorImageSignal img;
    img.width = width;
    img.height = height;
    GridGeometry g;
    g.n1 = height;
    g.n2 = width;
    g.delta1 = g.delta2 = 1.0;
    g.origin1 = g.origin2 = 0.0;
    img.signal = SampledSignal(g);

    const std::size_t pixels = static_cast<std::size_t>(width) * height;
    if (magic == "P6") {
        in.get();  // single whitespace after maxval
        std::vector<unsigned char> raw(pixels * 3);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size())
            throw std::runtime_error(path + ": truncated pixel data");
        for (std::size_t idx = 0; idx < pixels; ++idx)
            img.signal.values[idx] = Quaternion{0.0, raw[3 * idx] / 255.0,
                                                raw[3 * idx + 1] / 255.0,
                                                raw[3 * idx + 2] / 255.0};
    } else {
        for (std::size_t idx = 0; idx < pixels; ++idx) {
            int r, gg, b;
            if (!(in >> r >> gg >> b))
                throw std::runtime_error(path + ": truncated pixel data");
            img.signal.values[idx] = Quaternion{0.0, r / 255.0, gg / 255.0, b / 255.0};
        }
    }
    return img;
}

void export_image(const ColorImageSignal& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    auto quantize = [](double v) {
        const double c = std::clamp(v, 0.0, 1.0);
        return static_cast<unsigned char>(std::lround(c * 255.0));
    };
    for (const auto& q : img.signal.values) {
        const unsigned char rgb[3] = {quantize(q.x), quantize(q.y), quantize(q.z)};
        out.write(reinterpret_cast<const char*>(rgb), 3);
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

HeatmapMode heatmap_mode_from_string(const std::string& s) {
    if (s == "modulus") return HeatmapMode::modulus;
    if (s == "q0") return HeatmapMode::q0;
    if (s == "q1") return HeatmapMode::q1;
    if (s == "q2") return HeatmapMode::q2;
    if (s == "q3") return HeatmapMode::q3;
    throw std::invalid_argument("unknown heatmap mode: " + s);
}

namespace {

double heatmap_value(const Quaternion& q, HeatmapMode mode) {
    switch (mode) {
        case HeatmapMode::modulus: return modulus(q);
        case HeatmapMode::q0: return q.w;
        case HeatmapMode::q1: return q.x;
        case HeatmapMode::q2: return q.y;
        case HeatmapMode::q3: return q.z;
    }
    return 0.0;
}

}  // namespace

void export_heatmap(const GridGeometry& g, const std::vector<Quaternion>& values,
                    const std::string& path, HeatmapMode mode) {
    if (values.size() != g.size())
        throw std::invalid_argument("export_heatmap: size mismatch");
    std::vector<double> v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v[i] = heatmap_value(values[i], mode);
    const auto [mn_it, mx_it] = std::minmax_element(v.begin(), v.end());
    const double mn = *mn_it, mx = *mx_it;
    const double span = mx - mn;

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "P5\n" << g.n2 << ' ' << g.n1 << "\n255\n";
    for (double x : v) {
        const double scaled = span > 0.0 ? (x - mn) / span : 0.0;
        const unsigned char byte = static_cast<unsigned char>(std::lround(scaled * 255.0));
        out.write(reinterpret_cast<const char*>(&byte), 1);
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);

    std::ofstream side(path + ".minmax");
    side << "min = " << format_double(mn) << "\nmax = " << format_double(mx) << "\n";
}

void export_grid_csv(const GridGeometry& g, const std::vector<Quaternion>& values,
                     const std::string& path) {
    if (values.size() != g.size())
        throw std::invalid_argument("export_grid_csv: size mismatch");
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << "k1,k2,coord1,coord2,q0,q1,q2,q3\n";
    for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2) {
            const Quaternion& q = values[static_cast<std::size_t>(k1) * g.n2 + k2];
            out << k1 << ',' << k2 << ',' << format_double(g.coord1(k1)) << ','
                << format_double(g.coord2(k2)) << ',' << format_double(q.w) << ','
                << format_double(q.x) << ',' << format_double(q.y) << ','
                << format_double(q.z) << '\n';
        }
}

std::string format_records(const std::vector<Record>& records) {
    std::ostringstream out;
    for (const auto& rec : records) {
        out << "[" << rec.name << "]\n";
        for (const auto& [key, value] : rec.fields) out << key << " = " << value << '\n';
        out << '\n';
    }
    return out.str();
}

void write_records(const std::string& path, const std::vector<Record>& records) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << format_records(records);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace qwvd
