#include "qwvd/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qwvd/io.hpp"

namespace qwvd {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + v);
    }
}

int parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + v);
    }
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("config: bad boolean for '" + key + "': " + v);
}

std::vector<int> parse_int_list(const std::string& v, const std::string& key) {
    std::vector<int> out;
    if (trim(v).empty()) return out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_int(trim(item), key));
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// per-axis parameter block: six decimal floats `a b c d tau eta`
OffsetParams parse_offset_params(const std::string& v, const std::string& key) {
    std::stringstream ss(v);
    OffsetParams p;
    std::string rest;
    if (!(ss >> p.a >> p.b >> p.c >> p.d >> p.tau >> p.eta) || (ss >> rest))
        throw std::invalid_argument("config: '" + key +
                                    "' needs six floats `a b c d tau eta`, got: " + v);
    return p;
}

std::string format_offset_params(const OffsetParams& p) {
    return format_double(p.a) + " " + format_double(p.b) + " " + format_double(p.c) + " " +
           format_double(p.d) + " " + format_double(p.tau) + " " + format_double(p.eta);
}

struct Field {
    std::function<void(JobConfig&, const std::string&)> set;
    std::function<std::string(const JobConfig&)> get;
};

#define QWVD_STR_FIELD(name)                                                     \
    {#name, Field{[](JobConfig& c, const std::string& v) { c.name = v; },        \
                  [](const JobConfig& c) { return c.name; }}}
#define QWVD_DBL_FIELD(name)                                                     \
    {#name, Field{[](JobConfig& c, const std::string& v) {                       \
                      c.name = parse_double(v, #name);                           \
                  },                                                             \
                  [](const JobConfig& c) { return format_double(c.name); }}}
#define QWVD_INT_FIELD(name)                                                     \
    {#name,                                                                      \
     Field{[](JobConfig& c, const std::string& v) { c.name = parse_int(v, #name); }, \
           [](const JobConfig& c) { return std::to_string(c.name); }}}
#define QWVD_BOOL_FIELD(name)                                                    \
    {#name,                                                                      \
     Field{[](JobConfig& c, const std::string& v) { c.name = parse_bool(v, #name); }, \
           [](const JobConfig& c) { return c.name ? "true" : "false"; }}}
const std::map<std::string, Field>& field_table() {
    static const std::map<std::string, Field> table = {
        QWVD_STR_FIELD(command),
        QWVD_STR_FIELD(input),
        QWVD_STR_FIELD(input2),
        QWVD_STR_FIELD(output),
        QWVD_STR_FIELD(output_heatmap),
        QWVD_STR_FIELD(heatmap_mode),
        QWVD_STR_FIELD(output_csv),
        QWVD_STR_FIELD(kind),
        QWVD_DBL_FIELD(sigma),
        QWVD_DBL_FIELD(center1),
        QWVD_DBL_FIELD(center2),
        QWVD_DBL_FIELD(rate1),
        QWVD_DBL_FIELD(rate2),
        QWVD_DBL_FIELD(amplitude),
        QWVD_INT_FIELD(n1),
        QWVD_INT_FIELD(n2),
        QWVD_DBL_FIELD(delta1),
        QWVD_DBL_FIELD(delta2),
        QWVD_DBL_FIELD(origin1),
        QWVD_DBL_FIELD(origin2),
        {"params1", Field{[](JobConfig& c, const std::string& v) {
                              c.p1 = parse_offset_params(v, "params1");
                          },
                          [](const JobConfig& c) { return format_offset_params(c.p1); }}},
        {"params2", Field{[](JobConfig& c, const std::string& v) {
                              c.p2 = parse_offset_params(v, "params2");
                          },
                          [](const JobConfig& c) { return format_offset_params(c.p2); }}},
        QWVD_STR_FIELD(lambda),
        QWVD_STR_FIELD(mu),
        QWVD_STR_FIELD(path_mode),
        QWVD_INT_FIELD(K),
        QWVD_INT_FIELD(seeds),
        QWVD_STR_FIELD(suite),
        {"sizes", Field{[](JobConfig& c, const std::string& v) {
                            c.sizes = parse_int_list(v, "sizes");
                        },
                        [](const JobConfig& c) { return join_ints(c.sizes); }}},
        QWVD_BOOL_FIELD(deterministic),
        QWVD_BOOL_FIELD(use_oracle),
        QWVD_BOOL_FIELD(half_step),
        QWVD_INT_FIELD(slice1),
        QWVD_INT_FIELD(slice2),
        QWVD_DBL_FIELD(tol_scale),
    };
    return table;
}

#undef QWVD_STR_FIELD
#undef QWVD_DBL_FIELD
#undef QWVD_INT_FIELD
#undef QWVD_BOOL_FIELD

}  // namespace

GridGeometry JobConfig::grid() const {
    GridGeometry g;
    g.n1 = n1;
    g.n2 = n2;
    g.delta1 = delta1;
    g.delta2 = delta2;
    g.origin1 = origin1;
    g.origin2 = origin2;
    g.validate();
    return g;
}

PureUnitAxis axis_from_string(const std::string& s) {
    if (s == "i") return PureUnitAxis::i();
    if (s == "j") return PureUnitAxis::j();
    if (s == "k") return PureUnitAxis::k();
    std::stringstream ss(s);
    double x, y, z;
    char c1, c2;
    if (ss >> x >> c1 >> y >> c2 >> z && c1 == ',' && c2 == ',')
        return PureUnitAxis::from_vector(x, y, z);
    throw std::invalid_argument("bad axis '" + s + "' (use i, j, k or x,y,z)");
}

AxisPair JobConfig::axes() const { return {axis_from_string(lambda), axis_from_string(mu)}; }

JobConfig parse_config_text(const std::string& text) {
    JobConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& table = field_table();
        const auto it = table.find(key);
        if (it == table.end())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        it->second.set(cfg, value);
    }
    cfg.p1.validate();
    cfg.p2.validate();
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const JobConfig& cfg) {
    std::ostringstream out;
    for (const auto& [key, field] : field_table())
        out << key << " = " << field.get(cfg) << '\n';
    return out.str();
}

}  // namespace qwvd
