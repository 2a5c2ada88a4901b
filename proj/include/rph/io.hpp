#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rph/bottleneck.hpp"
#include "rph/experiments.hpp"
#include "rph/metric.hpp"
#include "rph/persistence.hpp"
#include "rph/selection.hpp"
#include "rph/trimming.hpp"

namespace rph {

// Point CSV: one point per line, comma-separated coordinates. Lines starting
// with '#' and blank lines are ignored.
PointCloud read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const PointCloud& cloud);

// Distance-matrix CSV: n lines of n comma-separated entries.
DistanceMatrix read_distance_csv(std::istream& in);

// Diagram CSV: header "dim,birth,death", one bar per line, death may be "inf".
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& dgm);
PersistenceDiagram read_diagram_csv(std::istream& in);

// JSON mirrors. Infinite values are the string "inf".
nlohmann::json to_json(const PersistenceDiagram& dgm);
PersistenceDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrimResult& r);
nlohmann::json to_json(const BottleneckResult& r);
nlohmann::json to_json(const SelectionOutcome& o);
nlohmann::json to_json(const CaseStudyReport& r);
nlohmann::json to_json(const ConvergenceResult& r);
nlohmann::json to_json(const StabilityReport& r);

/// Table layout of a case-study report: one line per grid point with the
/// median untrimmed and trimmed intervals and lengths.
void write_case_study_csv(std::ostream& out, const CaseStudyReport& r);

// File helpers; missing or unreadable files raise InputError.
std::string read_file(const std::filesystem::path& path);
PointCloud load_points(const std::filesystem::path& path);
DistanceMatrix load_distances(const std::filesystem::path& path);
PersistenceDiagram load_diagram(const std::filesystem::path& path);

}  // namespace rph
