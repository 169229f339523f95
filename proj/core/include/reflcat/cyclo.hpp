#pragma once

#include "reflcat/errors.hpp"
#include "reflcat/numtheory.hpp"
#include "reflcat/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace reflcat {

/// Exact element of the cyclotomic field Q(zeta_l).
///
/// The element is stored in the power basis zeta^0, ..., zeta^(phi(l)-1)
/// after reduction modulo the l-th cyclotomic polynomial, so two values with
/// the same conductor are equal iff their coefficient vectors are equal.
/// Values are immutable after construction and safe to share across threads.
class CycloNum {
public:
    /// Zero in Q(zeta_1) = Q.
    CycloNum();

    /// r embedded in Q(zeta_l).
    static CycloNum rational(const Rational& r, unsigned conductor = 1);

    /// zeta_l^k in canonical reduced form; depends only on k mod l.
    static CycloNum root_of_unity(unsigned conductor, long k);

    /// Builds from an arbitrary coefficient vector in powers of zeta_l
    /// (any length), reducing modulo Phi_l.
    static CycloNum from_coeffs(unsigned conductor, std::vector<Rational> raw);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True iff all non-constant basis coefficients vanish.
    bool is_rational() const;
    /// is_rational and the constant coefficient is an integer.
    bool is_integer() const;
    /// Throws DomainError if the value is irrational.
    Rational to_rational() const;

    /// Embeds into Q(zeta_m); m must be a multiple of the conductor.
    CycloNum promoted(unsigned m) const;

    /// Field automorphism sigma_t : zeta -> zeta^t; requires gcd(t, l) = 1.
    CycloNum galois(long t) const;
    /// Complex conjugation, i.e. galois(-1).
    CycloNum conj() const;
    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    CycloNum inverse() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Compact exact serialization "l:c0,c1,..." used for hashing and data
    /// files; equal values at equal conductors have equal keys.
    std::string key() const;
    /// Human-readable form like "1/2 - 3*z12^2".
    std::string str() const;

private:
    CycloNum(unsigned conductor, std::vector<Rational> reduced)
        : conductor_(conductor), coeffs_(std::move(reduced)) {}

    unsigned conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor)
};

CycloNum pow(const CycloNum& a, long e);

/// Whether a^m = 1 for some m <= 2*conductor (exhausts the roots of unity
/// available in the field).
bool is_root_of_unity(const CycloNum& a);

} // namespace reflcat
