#pragma once

#include "reflcat/cyclo.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace reflcat {

/// Dense square matrix over a cyclotomic field. All entries share one
/// conductor (enforced at construction); immutable value semantics.
class CycMatrix {
public:
    CycMatrix(unsigned dim, unsigned conductor);
    CycMatrix(unsigned dim, unsigned conductor, std::vector<CycloNum> entries);

    static CycMatrix identity(unsigned dim, unsigned conductor);

    unsigned dim() const { return n_; }
    unsigned conductor() const { return conductor_; }
    const CycloNum& at(unsigned r, unsigned c) const { return a_[r * n_ + c]; }
    void set(unsigned r, unsigned c, CycloNum v);

    CycMatrix operator*(const CycMatrix& o) const;
    bool operator==(const CycMatrix& o) const;

    CycloNum trace() const;
    CycloNum det() const;
    CycMatrix inverse() const;

    /// Rank of (this - I), the reflection criterion workhorse.
    unsigned rank_minus_identity() const;

    /// Canonical normal covector of the fixed hyperplane: the single nonzero
    /// row of the reduced row echelon form of (this - I), scaled to leading
    /// coefficient 1. Only valid when rank_minus_identity() == 1.
    std::vector<CycloNum> hyperplane_normal() const;

    /// Row covector times matrix.
    static std::vector<CycloNum> row_times(const std::vector<CycloNum>& row, const CycMatrix& m);

    /// Exact serialization of all entries; equal matrices at equal
    /// conductors have equal keys.
    std::string key() const;

private:
    unsigned n_;
    unsigned conductor_;
    std::vector<CycloNum> a_; // row-major
};

/// Canonical key for a covector scaled to leading coefficient 1; identifies
/// the line it spans.
std::string normalized_row_key(std::vector<CycloNum> row);

} // namespace reflcat
