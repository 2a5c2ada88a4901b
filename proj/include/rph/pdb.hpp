#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rph/metric.hpp"

namespace rph {

struct AtomRecord {
    std::size_t serial = 0;
    std::string name;     ///< atom name, columns 13-16, trimmed
    std::string element;  ///< upper case, never empty
    char alt_loc = ' ';
    char chain = ' ';
    std::string residue;  ///< residue name, columns 18-20
    int residue_seq = 0;
    std::array<double, 3> coords{};
};

/// ATOM records of the first model, in file order. HETATM and every other
/// record type are skipped. Malformed ATOM lines raise ParseError.
std::vector<AtomRecord> parse_pdb_atoms(std::string_view text);

/// Heavy atoms (element not H or D) of one chain as a 3-D cloud in file
/// order. Only the first alternate location of each atom is kept. Throws
/// InputError when nothing is selected.
PointCloud parse_pdb_heavy_atoms(std::string_view text, char chain = 'A');

/// Four-character archive id: a digit 1-9 followed by three letters or digits.
bool valid_pdb_id(std::string_view id);

/// Downloads "<base>/<ID>.pdb" to `destination`. The base defaults to the
/// public archive and is overridden by RPH_PDB_BASE_URL. A bad id raises
/// InputError before any connection; transport or HTTP failure raises
/// NetworkError; a payload with no ATOM record raises DataError. Nothing is
/// left at `destination` on failure.
void fetch_structure(std::string_view id, const std::filesystem::path& destination);

}  // namespace rph
