#pragma once

#include "reflcat/characters.hpp"
#include "reflcat/groups.hpp"
#include "reflcat/qpoly.hpp"
#include "reflcat/qseries.hpp"

#include <vector>

namespace reflcat {

/// Degrees, coexponents and the invariant-ring Hilbert series of a group,
/// derived from the Molien series and validated against the classical
/// identities (prod d_i = |W|, sum d_i = N* + n).
struct InvariantProfile {
    std::vector<unsigned> degrees;     // sorted ascending
    std::vector<unsigned> coexponents; // exponents of V*, sorted ascending
    QSeries hilbert_PW;                // truncated at D = N* + 1

    std::vector<unsigned> codegrees() const {
        std::vector<unsigned> out;
        out.reserve(coexponents.size());
        for (unsigned e : coexponents) out.push_back(e - 1);
        return out;
    }
};

/// Truncation order used for all Hilbert-series work on this group.
inline unsigned series_truncation(const ReflectionGroup& g) { return g.N_star() + 1; }

/// Hilbert series of the invariant ring P^W: (1/|W|) sum_w 1/det(1 - qw),
/// reduced over characteristic-polynomial classes. Coefficients are checked
/// to be nonnegative integers.
QSeries hilbert_invariants(const ReflectionGroup& g);

/// Degrees peeled greedily from the Molien series (smallest first); checks
/// the InvariantProfile identities and, when the catalog carries expected
/// degrees, cross-validates against them.
InvariantProfile compute_invariant_profile(const ReflectionGroup& g);

/// Memoized profile keyed by the group's spec string.
const InvariantProfile& invariant_profile(const ReflectionGroup& g);

/// Fake degree f_U(q): graded multiplicity of U in the coinvariant algebra.
/// Coefficients must be nonnegative integers summing to dim(U), degree <= N*.
QPolynomial fake_degree(const ReflectionGroup& g, const CharacterFn& chi);

/// Exponents of U with multiplicity, read off the fake degree.
std::vector<unsigned> exponents(const ReflectionGroup& g, const CharacterFn& chi);

/// c_U = sum over reflections of (1 - chi(r)/dim); must be a rational
/// integer (else the character is not z-homogeneous). Cross-checked against
/// the local-data formula c_U = N + N* - (1/dim) sum_H e_H n_{H,0}.
long c_value(const ReflectionGroup& g, const CharacterFn& chi);

/// Multiplicities (n_{H,0}, ..., n_{H,e_H-1}) of det^-j in the restriction
/// of chi to the cyclic stabilizer W_H; nonnegative integers summing to dim.
std::vector<unsigned long> local_data(const ReflectionGroup& g, std::size_t hyperplane,
                                      const CharacterFn& chi);

} // namespace reflcat
