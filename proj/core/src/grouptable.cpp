#include "reflcat/grouptable.hpp"

#include "reflcat/errors.hpp"
#include "reflcat/numtheory.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace reflcat {

namespace {

constexpr std::string_view kTableHeader = "reflcat-group-table v1";
constexpr std::string_view kPsiHeader = "reflcat-psi-table v1";

std::string checksum_line(const std::string& payload) {
    std::ostringstream os;
    os << "checksum " << std::hex << fnv1a64(payload);
    return os.str();
}

// Splits content into payload (everything up to the checksum line) and
// verifies the checksum.
std::string verified_payload(const std::string& content, const std::string& origin) {
    const std::size_t pos = content.rfind("\nchecksum ");
    if (pos == std::string::npos)
        throw DataFileError(origin + ": missing checksum line");
    const std::string payload = content.substr(0, pos + 1);
    std::string check = content.substr(pos + 1);
    while (!check.empty() && (check.back() == '\n' || check.back() == '\r')) check.pop_back();
    if (check != checksum_line(payload))
        throw DataFileError(origin + ": checksum mismatch (corrupt data file)");
    return payload;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace

std::string GroupTable::serialize() const {
    std::ostringstream os;
    os << kTableHeader << "\n";
    os << "name " << name << "\n";
    os << "st " << st << "\n";
    os << "rank " << rank << "\n";
    os << "conductor " << conductor << "\n";
    os << "order " << order << "\n";
    os << "degrees";
    for (unsigned d : degrees) os << " " << d;
    os << "\n";
    os << "well_generated " << (well_generated ? 1 : 0) << "\n";
    os << "psi_order " << psi_order << "\n";
    for (const auto& row : psi_rows) {
        os << "psi_row";
        for (unsigned x : row) os << " " << x;
        os << "\n";
    }
    os << "generators " << generators.size() << "\n";
    const unsigned phi = euler_phi(conductor);
    for (const auto& g : generators) {
        os << "matrix\n";
        for (unsigned r = 0; r < rank; ++r) {
            for (unsigned c = 0; c < rank; ++c) {
                const auto& coeffs = g.at(r, c).coeffs();
                for (unsigned i = 0; i < phi; ++i) {
                    if (c || i) os << " ";
                    os << coeffs[i].get_str();
                }
            }
            os << "\n";
        }
    }
    std::string payload = os.str();
    return payload + checksum_line(payload) + "\n";
}

GroupTable parse_group_table(const std::string& content, const std::string& origin) {
    const std::string payload = verified_payload(content, origin);

    std::istringstream is(payload);
    std::string line;
    if (!std::getline(is, line) || line != kTableHeader)
        throw DataFileError(origin + ": bad header (expected \"" + std::string(kTableHeader) + "\")");

    GroupTable t;
    unsigned long declared_generators = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        const std::string& k = tok[0];
        try {
            if (k == "name") {
                t.name = tok.at(1);
            } else if (k == "st") {
                t.st = static_cast<unsigned>(std::stoul(tok.at(1)));
            } else if (k == "rank") {
                t.rank = static_cast<unsigned>(std::stoul(tok.at(1)));
            } else if (k == "conductor") {
                t.conductor = static_cast<unsigned>(std::stoul(tok.at(1)));
            } else if (k == "order") {
                t.order = std::stoul(tok.at(1));
            } else if (k == "degrees") {
                for (std::size_t i = 1; i < tok.size(); ++i)
                    t.degrees.push_back(static_cast<unsigned>(std::stoul(tok[i])));
            } else if (k == "well_generated") {
                t.well_generated = tok.at(1) == "1";
            } else if (k == "psi_order") {
                t.psi_order = static_cast<unsigned>(std::stoul(tok.at(1)));
            } else if (k == "psi_row") {
                std::vector<unsigned> row;
                for (std::size_t i = 1; i < tok.size(); ++i)
                    row.push_back(static_cast<unsigned>(std::stoul(tok[i])));
                t.psi_rows.push_back(std::move(row));
            } else if (k == "generators") {
                declared_generators = std::stoul(tok.at(1));
            } else if (k == "matrix") {
                if (t.rank == 0 || t.conductor == 0)
                    throw DataFileError(origin + ": matrix before rank/conductor");
                const unsigned phi = euler_phi(t.conductor);
                std::vector<CycloNum> entries;
                entries.reserve(static_cast<std::size_t>(t.rank) * t.rank);
                for (unsigned r = 0; r < t.rank; ++r) {
                    if (!std::getline(is, line))
                        throw DataFileError(origin + ": truncated matrix block");
                    auto vals = tokens(line);
                    if (vals.size() != static_cast<std::size_t>(t.rank) * phi)
                        throw DataFileError(origin + ": wrong entry count in matrix row");
                    for (unsigned c = 0; c < t.rank; ++c) {
                        std::vector<Rational> coeffs(phi);
                        for (unsigned i = 0; i < phi; ++i)
                            coeffs[i] = parse_rational(vals[c * phi + i]);
                        entries.push_back(CycloNum::from_coeffs(t.conductor, std::move(coeffs)));
                    }
                }
                t.generators.emplace_back(t.rank, t.conductor, std::move(entries));
            } else {
                throw DataFileError(origin + ": unknown record \"" + k + "\"");
            }
        } catch (const std::invalid_argument&) {
            throw DataFileError(origin + ": malformed value in record \"" + k + "\"");
        } catch (const std::out_of_range&) {
            throw DataFileError(origin + ": missing value in record \"" + k + "\"");
        }
    }

    if (t.generators.size() != declared_generators)
        throw DataFileError(origin + ": generator count mismatch");
    if (t.degrees.size() != t.rank)
        throw DataFileError(origin + ": degree count does not match rank");
    if (t.psi_rows.size() != t.psi_order)
        throw DataFileError(origin + ": psi row count does not match psi_order");
    Integer prod = 1;
    for (unsigned d : t.degrees) prod *= d;
    if (prod != static_cast<unsigned long>(t.order))
        throw DataFileError(origin + ": order does not equal the product of the degrees");
    return t;
}

GroupTable load_group_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataFileError("cannot open generator table " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_table(buf.str(), path);
}

std::string resolve_data_dir(const std::optional<std::string>& override_dir) {
    namespace fs = std::filesystem;
    if (override_dir) return *override_dir;
    if (const char* env = std::getenv("REFLCAT_DATA"); env && *env) return env;
#ifdef REFLCAT_SOURCE_DATA_DIR
    if (fs::exists(fs::path(REFLCAT_SOURCE_DATA_DIR))) return REFLCAT_SOURCE_DATA_DIR;
#endif
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        fs::path installed = exe.parent_path().parent_path() / "share" / "reflcat" / "data";
        if (fs::exists(installed)) return installed.string();
    }
    throw DataFileError("cannot locate the reflcat data directory (set REFLCAT_DATA)");
}

std::string group_table_path(const std::string& data_dir, unsigned st) {
    return data_dir + "/exceptional/g" + std::to_string(st) + ".table";
}

std::string load_family_psi_tag(const std::string& data_dir) {
    const std::string path = data_dir + "/psi/imprimitive.psi";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataFileError("cannot open psi table " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string payload = verified_payload(buf.str(), path);
    std::istringstream is(payload);
    std::string line;
    if (!std::getline(is, line) || line != kPsiHeader)
        throw DataFileError(path + ": bad header");
    while (std::getline(is, line)) {
        auto tok = tokens(line);
        if (tok.size() >= 2 && tok[0] == "formula") return tok[1];
    }
    throw DataFileError(path + ": no formula record");
}

} // namespace reflcat
