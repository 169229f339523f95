#pragma once

#include "reflcat/groupspec.hpp"
#include "reflcat/grouptable.hpp"
#include "reflcat/matrix.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace reflcat {

struct BuildOptions {
    std::size_t order_cap = 10000;
    bool allow_large = false;
    std::optional<std::string> data_dir;
};

struct Reflection {
    std::uint32_t element;    // index into the element list
    std::uint32_t hyperplane; // index into the hyperplane list
    CycloNum determinant;     // a root of unity != 1, order dividing e_H
};

struct Hyperplane {
    std::vector<CycloNum> normal;        // canonical covector (leading coeff 1)
    unsigned e_H = 0;                    // |W_H|
    std::vector<std::uint32_t> reflections; // member reflection element indices
    unsigned orbit = 0;                  // W-orbit id (0-based, by first occurrence)
};

/// Catalog facts about a supported spec that are known before enumeration:
/// conductor, expected order and degrees, the well-generated flag and the
/// stored psi data (for exceptional groups, straight from the data file).
struct CatalogInfo {
    unsigned rank = 0;
    unsigned conductor = 1;
    unsigned long order = 0;
    std::vector<unsigned> degrees; // sorted ascending
    bool well_generated = false;
    unsigned psi_order = 1;
    // literal rows for exceptional non-well-generated groups; empty means
    // "derive from degrees" (well-generated) or "use the family formula"
    std::vector<std::vector<unsigned>> psi_rows;
    std::vector<CycMatrix> generators;
};

/// A fully enumerated complex reflection group together with its hyperplane
/// geometry. Immutable after construction; safe to share between threads.
class ReflectionGroup {
public:
    const GroupSpec& spec() const { return spec_; }
    unsigned rank() const { return rank_; }
    unsigned conductor() const { return conductor_; }
    std::size_t order() const { return elements_.size(); }

    const std::vector<CycMatrix>& elements() const { return elements_; }
    const CycMatrix& element(std::size_t i) const { return elements_[i]; }
    const CycloNum& element_trace(std::size_t i) const { return traces_[i]; }
    const CycloNum& element_det(std::size_t i) const { return dets_[i]; }
    std::uint32_t inverse_index(std::size_t i) const { return inverse_[i]; }
    /// Index lookup by exact matrix equality; nullopt when absent.
    std::optional<std::uint32_t> element_index(const CycMatrix& m) const;

    const std::vector<Reflection>& reflections() const { return reflections_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    unsigned N() const { return static_cast<unsigned>(hyperplanes_.size()); }
    unsigned N_star() const { return static_cast<unsigned>(reflections_.size()); }
    unsigned h() const { return h_; }
    bool well_generated() const { return catalog_.well_generated; }

    const CatalogInfo& catalog() const { return catalog_; }
    /// Expected degrees from the catalog (formula or data file); invariant
    /// computations re-derive and cross-check these.
    const std::vector<unsigned>& expected_degrees() const { return catalog_.degrees; }

    /// Distinct characteristic polynomials det(I - qw) across the group and
    /// the slot of each element; Molien sums reduce over these classes.
    struct CharPolyClasses {
        std::vector<std::vector<CycloNum>> polys;
        std::vector<std::uint32_t> slot; // per element
    };
    const CharPolyClasses& char_poly_classes() const;

private:
    friend ReflectionGroup build(const GroupSpec&, const BuildOptions&);
    friend ReflectionGroup build_from_generators(const GroupSpec&, CatalogInfo,
                                                 const BuildOptions&);
    ReflectionGroup() = default;

    GroupSpec spec_;
    unsigned rank_ = 0;
    unsigned conductor_ = 1;
    unsigned h_ = 0;
    CatalogInfo catalog_;
    std::vector<CycMatrix> elements_;
    std::vector<CycloNum> traces_;
    std::vector<CycloNum> dets_;
    std::vector<std::uint32_t> inverse_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<Reflection> reflections_;
    std::vector<Hyperplane> hyperplanes_;

    mutable std::unique_ptr<CharPolyClasses> charpoly_classes_;
    mutable std::unique_ptr<std::once_flag> charpoly_once_ = std::make_unique<std::once_flag>();
};

/// Catalog lookup: conductor, expected order/degrees, generators, psi data.
/// Imprimitive/Sym/Cyc/Dih are generated in code; Shephard-Todd groups load
/// their generator tables from the data directory.
CatalogInfo catalog_info(const GroupSpec& spec, const BuildOptions& opts = {});

/// Generator matrices for a supported spec (catalog_info().generators).
std::vector<CycMatrix> generator_matrices(const GroupSpec& spec, const BuildOptions& opts = {});

/// Full breadth-first enumeration and geometry extraction. Validates every
/// structural invariant eagerly and throws InvariantViolationError on any
/// failure (which would indicate corrupt generator data).
ReflectionGroup build(const GroupSpec& spec, const BuildOptions& opts = {});

/// Low-level variant used by the table generator: enumerates from explicit
/// catalog data without requiring a data file on disk.
ReflectionGroup build_from_generators(const GroupSpec& spec, CatalogInfo info,
                                      const BuildOptions& opts = {});

/// Plain closure enumeration (identity first); throws OrderCapError when the
/// closure exceeds the cap.
std::vector<CycMatrix> enumerate_closure(const std::vector<CycMatrix>& generators,
                                         std::size_t cap);

} // namespace reflcat
