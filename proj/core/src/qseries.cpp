#include "reflcat/qseries.hpp"

#include "reflcat/matrix.hpp"

#include <algorithm>

namespace reflcat {

QSeries::QSeries(unsigned trunc_order)
    : trunc_(trunc_order), coeffs_(trunc_order + 1, CycloNum()) {}

QSeries::QSeries(unsigned trunc_order, std::vector<CycloNum> coeffs)
    : trunc_(trunc_order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(trunc_ + 1, CycloNum());
}

QSeries QSeries::one(unsigned trunc_order) {
    QSeries s(trunc_order);
    s.coeffs_[0] = CycloNum::rational(1);
    return s;
}

QSeries QSeries::from_poly(const QPolynomial& p, unsigned trunc_order) {
    QSeries s(trunc_order);
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size() && k <= trunc_order; ++k)
        s.coeffs_[k] = CycloNum::rational(c[k]);
    return s;
}

QSeries QSeries::geom_inverse(unsigned d, unsigned trunc_order) {
    if (d == 0) throw DomainError("geom_inverse requires d >= 1");
    QSeries s(trunc_order);
    for (std::size_t k = 0; k <= trunc_order; k += d)
        s.coeffs_[k] = CycloNum::rational(1);
    return s;
}

QSeries QSeries::inverse_of_poly(const std::vector<CycloNum>& poly, unsigned trunc_order) {
    if (poly.empty() || poly[0].is_zero())
        throw DomainError("series inversion requires a nonzero constant term");
    QSeries s(trunc_order);
    const CycloNum c0inv = poly[0].inverse();
    s.coeffs_[0] = c0inv;
    const std::size_t deg = poly.size() - 1;
    for (std::size_t k = 1; k <= trunc_order; ++k) {
        CycloNum acc;
        for (std::size_t j = 1; j <= std::min<std::size_t>(k, deg); ++j) {
            if (poly[j].is_zero()) continue;
            acc += poly[j] * s.coeffs_[k - j];
        }
        s.coeffs_[k] = -(acc * c0inv);
    }
    return s;
}

QSeries QSeries::operator+(const QSeries& o) const {
    const unsigned t = std::min(trunc_, o.trunc_);
    QSeries s(t);
    for (std::size_t k = 0; k <= t; ++k) s.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return s;
}

QSeries QSeries::operator-(const QSeries& o) const {
    const unsigned t = std::min(trunc_, o.trunc_);
    QSeries s(t);
    for (std::size_t k = 0; k <= t; ++k) s.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return s;
}

QSeries QSeries::operator*(const QSeries& o) const {
    const unsigned t = std::min(trunc_, o.trunc_);
    QSeries s(t);
    for (std::size_t i = 0; i <= t; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= t; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return s;
}

bool QSeries::operator==(const QSeries& o) const {
    if (trunc_ != o.trunc_) return false;
    for (std::size_t k = 0; k <= trunc_; ++k)
        if (coeffs_[k] != o.coeffs_[k]) return false;
    return true;
}

QSeries& QSeries::add_scaled(const QSeries& o, const CycloNum& c) {
    const unsigned t = std::min(trunc_, o.trunc_);
    if (t != trunc_) {
        trunc_ = t;
        coeffs_.resize(t + 1);
    }
    if (c.is_zero()) return *this;
    for (std::size_t k = 0; k <= t; ++k) {
        if (o.coeffs_[k].is_zero()) continue;
        coeffs_[k] += o.coeffs_[k] * c;
    }
    return *this;
}

QSeries QSeries::scaled(const CycloNum& c) const {
    QSeries s(trunc_);
    for (std::size_t k = 0; k <= trunc_; ++k)
        if (!coeffs_[k].is_zero()) s.coeffs_[k] = coeffs_[k] * c;
    return s;
}

QSeries& QSeries::mul_one_minus_qd(unsigned d) {
    if (d == 0) throw DomainError("mul_one_minus_qd requires d >= 1");
    for (std::size_t k = coeffs_.size(); k-- > d;)
        coeffs_[k] -= coeffs_[k - d];
    return *this;
}

bool QSeries::is_one() const {
    if (coeffs_.empty() || !(coeffs_[0] == CycloNum::rational(1))) return false;
    for (std::size_t k = 1; k <= trunc_; ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

QPolynomial QSeries::to_polynomial() const {
    std::vector<Rational> c(trunc_ + 1);
    for (std::size_t k = 0; k <= trunc_; ++k) c[k] = coeffs_[k].to_rational();
    return QPolynomial(std::move(c));
}

std::vector<CycloNum> char_poly_one_minus_q(const CycMatrix& m) {
    const unsigned n = m.dim();
    std::vector<CycloNum> c(n + 1);
    c[0] = CycloNum::rational(1, m.conductor());
    if (n == 1) {
        c[1] = -m.at(0, 0);
        return c;
    }
    if (n == 2) {
        c[1] = -m.trace();
        c[2] = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        return c;
    }
    // det(I - qM) = sum_k (-1)^k e_k q^k with the e_k from Newton's
    // identities over the power traces p_j = tr(M^j).
    std::vector<CycloNum> p(n + 1); // power traces, p[0] unused
    CycMatrix mp = m;
    p[1] = m.trace();
    for (unsigned j = 2; j <= n; ++j) {
        mp = mp * m;
        p[j] = mp.trace();
    }
    std::vector<CycloNum> e(n + 1);
    e[0] = CycloNum::rational(1, m.conductor());
    for (unsigned k = 1; k <= n; ++k) {
        CycloNum acc;
        int sign = 1;
        for (unsigned j = 1; j <= k; ++j) {
            CycloNum term = e[k - j] * p[j];
            acc += (sign > 0) ? term : -term;
            sign = -sign;
        }
        e[k] = acc * CycloNum::rational(Rational(1, k), m.conductor());
    }
    for (unsigned k = 0; k <= n; ++k) c[k] = (k % 2 == 0) ? e[k] : -e[k];
    return c;
}

QSeries series_of_char_poly_inverse(const CycMatrix& m, unsigned trunc_order) {
    return QSeries::inverse_of_poly(char_poly_one_minus_q(m), trunc_order);
}

} // namespace reflcat
