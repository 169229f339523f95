#pragma once

#include "reflcat/cyclo.hpp"
#include "reflcat/errors.hpp"
#include "reflcat/rational.hpp"

#include <string>
#include <vector>

namespace reflcat {

/// Polynomial in the formal variable q with exact rational coefficients,
/// stored dense by degree with trailing zeros trimmed. degree() of the zero
/// polynomial is the sentinel -1.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one();
    static QPolynomial monomial(const Rational& c, std::size_t deg);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPolynomial& o) const { return !(*this == o); }

    /// Exact quotient; throws NotPolynomialError carrying the remainder when
    /// the division leaves one.
    QPolynomial exact_div(const QPolynomial& d) const;

    Rational eval(const Rational& x) const;
    Rational value_at_one() const;

    /// True iff every coefficient is a nonnegative integer.
    bool has_nonneg_integer_coeffs() const;

    std::string pretty() const;

private:
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division (d nonzero).
struct QPolyDivMod {
    QPolynomial quotient;
    QPolynomial remainder;
};
QPolyDivMod divmod(const QPolynomial& a, const QPolynomial& d);

/// Exact division failed; remainder() is the certificate.
class NotPolynomialError : public Error {
public:
    NotPolynomialError(const std::string& what, QPolynomial remainder)
        : Error(what), remainder_(std::move(remainder)) {}
    const QPolynomial& remainder() const { return remainder_; }

private:
    QPolynomial remainder_;
};

/// The q-integer [i]_q = 1 + q + ... + q^(i-1); requires i >= 1.
QPolynomial q_int(long i);

/// prod [a]_q over nums divided by prod [b]_q over dens, by polynomial long
/// division with an exactness check. Throws NotPolynomialError when the
/// quotient is not a polynomial.
QPolynomial ratio_product(const std::vector<unsigned long>& nums,
                          const std::vector<unsigned long>& dens);

/// p(zeta_l^t), exact.
CycloNum eval_at_root(const QPolynomial& p, unsigned l, long t);

} // namespace reflcat
