#pragma once

#include "reflcat/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reflcat {

/// One exceptional-group generator table as stored on disk: generators over
/// the group's minimal cyclotomic field plus the expected invariants used to
/// cross-validate construction, the well-generated flag, and the stored
/// psi-exponent rows. Files are versioned, human-readable, and carry an
/// FNV-1a checksum over their payload lines.
struct GroupTable {
    std::string name;       // e.g. "G12"
    unsigned st = 0;        // Shephard-Todd number
    unsigned rank = 0;
    unsigned conductor = 1;
    unsigned long order = 0;
    std::vector<unsigned> degrees;
    bool well_generated = false;
    unsigned psi_order = 1;
    std::vector<std::vector<unsigned>> psi_rows;
    std::vector<CycMatrix> generators;

    std::string serialize() const;
};

GroupTable parse_group_table(const std::string& content, const std::string& origin);
GroupTable load_group_table(const std::string& path);

/// Data directory resolution: explicit override, then $REFLCAT_DATA, then the
/// build-tree default, then <exe>/../share/reflcat/data.
std::string resolve_data_dir(const std::optional<std::string>& override_dir);

/// Path of the generator table for Shephard-Todd group k inside a data dir.
std::string group_table_path(const std::string& data_dir, unsigned st);

/// Reads the psi-table record file for the imprimitive family and returns the
/// formula tag it declares (e.g. "gdeen-v1"). Checksum-validated.
std::string load_family_psi_tag(const std::string& data_dir);

} // namespace reflcat
