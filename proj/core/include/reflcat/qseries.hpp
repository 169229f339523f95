#pragma once

#include "reflcat/cyclo.hpp"
#include "reflcat/qpoly.hpp"

#include <cstddef>
#include <vector>

namespace reflcat {

/// Truncated power series in q with CycloNum coefficients. All arithmetic is
/// performed modulo q^(D+1) where D is the truncation order; binary ops carry
/// the minimum truncation order of their inputs.
class QSeries {
public:
    explicit QSeries(unsigned trunc_order);
    QSeries(unsigned trunc_order, std::vector<CycloNum> coeffs);

    static QSeries one(unsigned trunc_order);
    static QSeries from_poly(const QPolynomial& p, unsigned trunc_order);
    /// Series of 1/(1 - q^d).
    static QSeries geom_inverse(unsigned d, unsigned trunc_order);
    /// Multiplicative inverse of a polynomial with nonzero constant term,
    /// given as its coefficient vector (low to high).
    static QSeries inverse_of_poly(const std::vector<CycloNum>& poly, unsigned trunc_order);

    unsigned trunc_order() const { return trunc_; }
    const CycloNum& coeff(std::size_t k) const { return coeffs_[k]; }
    const std::vector<CycloNum>& coeffs() const { return coeffs_; }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    bool operator==(const QSeries& o) const;

    QSeries& add_scaled(const QSeries& o, const CycloNum& c);
    QSeries scaled(const CycloNum& c) const;
    /// Multiplies by the polynomial (1 - q^d) in place: s_k -= s_(k-d).
    QSeries& mul_one_minus_qd(unsigned d);

    bool is_one() const;
    /// All coefficients rational -> polynomial (degree <= trunc order);
    /// throws DomainError if any coefficient is irrational.
    QPolynomial to_polynomial() const;

private:
    unsigned trunc_;
    std::vector<CycloNum> coeffs_; // length trunc_ + 1
};

/// Coefficients of det(I - qM) for a square matrix given by row-major
/// entries; length n+1. (Declared here, defined with the matrix type.)
class CycMatrix;
std::vector<CycloNum> char_poly_one_minus_q(const CycMatrix& m);

/// Truncation of 1/det(I - qM).
QSeries series_of_char_poly_inverse(const CycMatrix& m, unsigned trunc_order);

} // namespace reflcat
