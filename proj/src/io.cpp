#include "rph/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "format.hpp"
#include "rph/error.hpp"

namespace rph {

using nlohmann::json;

namespace {

std::string_view trim_ws(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view field, std::size_t line, bool allow_inf) {
    field = trim_ws(field);
    if (allow_inf && field == "inf") return kInfinity;
    double v = 0.0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
        throw ParseError("bad number '" + std::string(field) + "'", line);
    return v;
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// Numeric rows of a CSV, skipping blank and '#' lines; line numbers kept for errors.
struct Rows {
    std::vector<std::vector<double>> values;
    std::vector<std::size_t> lines;
};

Rows read_rows(std::istream& in) {
    Rows rows;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto s = trim_ws(raw);
        if (s.empty() || s.front() == '#') continue;
        std::vector<double> row;
        for (auto f : split(s)) row.push_back(parse_number(f, lineno, false));
        if (!rows.values.empty() && row.size() != rows.values.front().size())
            throw ParseError("expected " + std::to_string(rows.values.front().size()) + " fields, got " +
                                 std::to_string(row.size()),
                             lineno);
        rows.values.push_back(std::move(row));
        rows.lines.push_back(lineno);
    }
    return rows;
}

json number(double x) { return std::isinf(x) ? json(format_double(x)) : json(x); }

double number_from(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInfinity;
        throw InputError("bad number string '" + j.get<std::string>() + "' in JSON");
    }
    if (!j.is_number()) throw InputError("expected a number in JSON");
    return j.get<double>();
}

json feature_json(const FeatureRecord& f) {
    if (!f.feature) return nullptr;
    return {{"birth", f.feature->birth}, {"death", f.feature->death}, {"length", f.feature->length}};
}

}  // namespace

PointCloud read_points_csv(std::istream& in) {
    auto rows = read_rows(in);
    if (rows.values.empty()) throw InputError("point CSV holds no points");
    return PointCloud(std::move(rows.values));
}

void write_points_csv(std::ostream& out, const PointCloud& cloud) {
    out << '#';
    for (std::size_t k = 0; k < cloud.dim(); ++k) out << (k ? ",x" : " x") << k;
    out << '\n';
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << format_double(p[k]);
        out << '\n';
    }
}

DistanceMatrix read_distance_csv(std::istream& in) {
    auto rows = read_rows(in);
    const std::size_t n = rows.values.size();
    if (n == 0) throw InputError("distance CSV is empty");
    if (rows.values.front().size() != n)
        throw ParseError("distance matrix must be square: " + std::to_string(n) + " rows of " +
                             std::to_string(rows.values.front().size()),
                         rows.lines.front());
    std::vector<double> e;
    e.reserve(n * n);
    for (const auto& r : rows.values) e.insert(e.end(), r.begin(), r.end());
    return DistanceMatrix(n, std::move(e));
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& dgm) {
    out << "dim,birth,death\n";
    for (const auto& b : dgm.bars) out << b.dim << ',' << format_double(b.birth) << ',' << format_double(b.death) << '\n';
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
    PersistenceDiagram dgm;
    std::string raw;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto s = trim_ws(raw);
        if (s.empty() || s.front() == '#') continue;
        if (!header) {
            if (s != "dim,birth,death") throw ParseError("expected header 'dim,birth,death'", lineno);
            header = true;
            continue;
        }
        auto f = split(s);
        if (f.size() != 3) throw ParseError("expected 3 fields", lineno);
        const double dim = parse_number(f[0], lineno, false);
        if (dim < 0 || dim != std::floor(dim)) throw ParseError("dim must be a non-negative integer", lineno);
        Bar b{static_cast<std::size_t>(dim), parse_number(f[1], lineno, false), parse_number(f[2], lineno, true)};
        if (b.birth < 0 || b.death < b.birth) throw ParseError("bar must satisfy 0 <= birth <= death", lineno);
        dgm.bars.push_back(b);
    }
    if (!header) throw InputError("diagram CSV lacks the 'dim,birth,death' header");
    return dgm;
}

json to_json(const PersistenceDiagram& dgm) {
    json bars = json::array();
    for (const auto& b : dgm.bars) bars.push_back({{"dim", b.dim}, {"birth", number(b.birth)}, {"death", number(b.death)}});
    return {{"bars", bars}};
}

PersistenceDiagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("bars") || !j["bars"].is_array()) throw InputError("diagram JSON needs a 'bars' array");
    PersistenceDiagram dgm;
    for (const auto& b : j["bars"]) {
        if (!b.is_object() || !b.contains("dim") || !b.contains("birth") || !b.contains("death") ||
            !b["dim"].is_number_unsigned())
            throw InputError("diagram JSON bar needs unsigned 'dim', 'birth', 'death'");
        dgm.bars.push_back(Bar{b["dim"].get<std::size_t>(), number_from(b["birth"]), number_from(b["death"])});
    }
    return dgm;
}

json to_json(const TrimResult& r) {
    return {{"kept", r.kept},
            {"lower_threshold", r.lower_threshold},
            {"upper_threshold", r.upper_threshold},
            {"avg_dists", r.avg_dists}};
}

json to_json(const BottleneckResult& r) {
    json j{{"value", number(r.value)}};
    if (r.matching) {
        json m = json::array();
        for (const auto& p : *r.matching) {
            m.push_back({{"a", p.a ? json(*p.a) : json("diagonal")},
                         {"b", p.b ? json(*p.b) : json("diagonal")},
                         {"cost", number(p.cost)}});
        }
        j["matching"] = m;
    } else {
        j["matching"] = nullptr;
    }
    return j;
}

json to_json(const SelectionOutcome& o) {
    return {{"diagram", to_json(o.diagram)},
            {"alpha1", o.alpha1},
            {"alpha2", o.alpha2},
            {"kept", o.kept},
            {"iterations_used", o.iterations_used},
            {"threshold_met", o.threshold_met}};
}

json to_json(const CaseStudyReport& r) {
    json untrimmed = json::array();
    for (const auto& f : r.untrimmed) untrimmed.push_back(feature_json(f));
    json rows = json::array();
    for (const auto& row : r.rows) {
        json trimmed = json::array(), ratios = json::array();
        for (const auto& f : row.trimmed) trimmed.push_back(feature_json(f));
        for (double x : row.ratios) ratios.push_back(number(x));
        rows.push_back({{"alpha1", row.spec.alpha1},
                        {"alpha2", row.spec.alpha2},
                        {"trimmed", trimmed},
                        {"ratios", ratios},
                        {"median_length", row.median_length},
                        {"median_ratio", number(row.median_ratio)}});
    }
    return {{"hom_dim", r.hom_dim},
            {"seeds", r.seeds},
            {"untrimmed", untrimmed},
            {"median_untrimmed_length", r.median_untrimmed_length},
            {"rows", rows}};
}

json to_json(const ConvergenceResult& r) {
    json pts = json::array();
    for (const auto& p : r.points)
        pts.push_back({{"m", p.m}, {"m_kept", p.m_kept}, {"mean_hausdorff", p.mean_hausdorff}, {"x", p.x}, {"y", p.y}});
    return {{"slope", r.slope}, {"points", pts}};
}

json to_json(const StabilityReport& r) {
    json trials = json::array();
    for (const auto& t : r.trials)
        trials.push_back({{"n", t.n}, {"dim", t.dim}, {"noise", t.noise}, {"w", t.w}, {"h", t.h}, {"ok", t.ok}});
    return {{"all_pass", r.all_pass}, {"trials", trials}};
}

void write_case_study_csv(std::ostream& out, const CaseStudyReport& r) {
    // per-seed median intervals would mix seeds, so the first seed's intervals
    // are shown next to the medians of the lengths
    auto interval = [](const FeatureRecord& f) {
        if (!f.feature) return std::string("none");
        return "(" + format_double(f.feature->birth) + " " + format_double(f.feature->death) + ")";
    };
    out << "n_seeds,untrimmed_interval_seed0,untrimmed_median_length,alpha1,alpha2,trimmed_interval_seed0,"
           "trimmed_median_length,median_ratio\n";
    for (const auto& row : r.rows) {
        out << r.seeds.size() << ',' << interval(r.untrimmed.front()) << ',' << format_double(r.median_untrimmed_length)
            << ',' << format_double(row.spec.alpha1) << ',' << format_double(row.spec.alpha2) << ','
            << interval(row.trimmed.front()) << ',' << format_double(row.median_length) << ','
            << format_double(row.median_ratio) << '\n';
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PointCloud load_points(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    return read_points_csv(in);
}

DistanceMatrix load_distances(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    return read_distance_csv(in);
}

PersistenceDiagram load_diagram(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    return read_diagram_csv(in);
}

}  // namespace rph
