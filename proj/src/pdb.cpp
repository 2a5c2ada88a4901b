#include "rph/pdb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "rph/error.hpp"

namespace rph {

namespace {

// 1-based inclusive column range, clipped to the line.
std::string_view columns(std::string_view line, std::size_t first, std::size_t last) {
    if (line.size() < first) return {};
    return line.substr(first - 1, std::min(last, line.size()) - first + 1);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double coord(std::string_view line, std::size_t first, std::size_t last, std::size_t lineno) {
    const auto f = strip(columns(line, first, last));
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v))
        throw ParseError("bad coordinate in columns " + std::to_string(first) + "-" + std::to_string(last), lineno);
    return v;
}

template <class Int>
Int integer(std::string_view f, Int fallback) {
    f = strip(f);
    Int v = fallback;
    std::from_chars(f.data(), f.data() + f.size(), v);
    return v;
}

std::string element_of(std::string_view line, std::string_view name) {
    std::string e;
    for (char c : strip(columns(line, 77, 78))) e += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!e.empty()) return e;
    for (char c : name)
        if (std::isalpha(static_cast<unsigned char>(c))) return std::string(1, static_cast<char>(std::toupper(c)));
    return {};
}

}  // namespace

std::vector<AtomRecord> parse_pdb_atoms(std::string_view text) {
    std::vector<AtomRecord> atoms;
    std::size_t lineno = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.starts_with("ENDMDL")) break;
        if (!line.starts_with("ATOM  ") && line != "ATOM") continue;
        if (line.size() < 54) throw ParseError("ATOM record shorter than 54 columns", lineno);

        AtomRecord a;
        a.serial = integer<std::size_t>(columns(line, 7, 11), 0);
        a.name = std::string(strip(columns(line, 13, 16)));
        a.alt_loc = line[16];
        a.residue = std::string(strip(columns(line, 18, 20)));
        a.chain = line[21];
        a.residue_seq = integer<int>(columns(line, 23, 26), 0);
        a.coords = {coord(line, 31, 38, lineno), coord(line, 39, 46, lineno), coord(line, 47, 54, lineno)};
        a.element = element_of(line, a.name);
        if (a.element.empty()) throw ParseError("ATOM record without element or atom name", lineno);
        atoms.push_back(std::move(a));
    }
    return atoms;
}

PointCloud parse_pdb_heavy_atoms(std::string_view text, char chain) {
    std::vector<double> coords;
    for (const auto& a : parse_pdb_atoms(text)) {
        if (a.chain != chain) continue;
        if (a.element == "H" || a.element == "D") continue;
        if (a.alt_loc != ' ' && a.alt_loc != 'A' && a.alt_loc != '1') continue;
        coords.insert(coords.end(), a.coords.begin(), a.coords.end());
    }
    if (coords.empty())
        throw InputError(std::string("no heavy ATOM records in chain '") + chain + "'");
    return PointCloud(3, std::move(coords));
}

bool valid_pdb_id(std::string_view id) {
    if (id.size() != 4 || id[0] < '1' || id[0] > '9') return false;
    return std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

}  // namespace rph
