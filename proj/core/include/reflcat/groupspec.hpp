#pragma once

#include <string>
#include <string_view>

namespace reflcat {

enum class SpecKind { Imprimitive, ShephardTodd, Sym, Cyc, Dih };

/// Parsed group specification. Grammar (whitespace-insensitive):
///   G(d,e,n) | G<k> | Sym(n) | Cyc(d) | Dih(e)
struct GroupSpec {
    SpecKind kind = SpecKind::Sym;
    // Imprimitive G(de, e, n) is stored by its literal parameters (first
    // parameter is the product de, as written).
    unsigned de = 0, e = 0, n = 0;
    unsigned st = 0; // Shephard-Todd number

    static GroupSpec imprimitive(unsigned de, unsigned e, unsigned n);
    static GroupSpec shephard_todd(unsigned k);
    static GroupSpec sym(unsigned n);
    static GroupSpec cyc(unsigned d);
    static GroupSpec dih(unsigned e);

    /// Throws GroupSpecError on anything outside the grammar. Validation of
    /// irreducibility/support happens at build time.
    static GroupSpec parse(std::string_view text);

    std::string str() const;

    bool operator==(const GroupSpec&) const = default;
};

} // namespace reflcat
