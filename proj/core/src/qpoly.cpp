#include "reflcat/qpoly.hpp"

#include <sstream>

namespace reflcat {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

QPolynomial QPolynomial::one() { return QPolynomial({Rational(1)}); }

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t deg) {
    if (c == 0) return QPolynomial();
    std::vector<Rational> v(deg + 1, 0);
    v[deg] = c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return QPolynomial();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPolynomial(std::move(v));
}

QPolyDivMod divmod(const QPolynomial& a, const QPolynomial& d) {
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const auto& dc = d.coeffs();
    if (a.coeffs().size() < dc.size()) return {QPolynomial(), a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t dd = dc.size();
    std::vector<Rational> quot(rem.size() - dd + 1, 0);
    const Rational& lead = dc.back();
    for (std::size_t i = rem.size(); i-- > dd - 1;) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / lead;
        quot[i + 1 - dd] = f;
        for (std::size_t j = 0; j < dd; ++j) rem[i + 1 - dd + j] -= f * dc[j];
    }
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& d) const {
    QPolyDivMod dm = divmod(*this, d);
    if (!dm.remainder.is_zero())
        throw NotPolynomialError("polynomial division is not exact (remainder " +
                                     dm.remainder.pretty() + ")",
                                 dm.remainder);
    return dm.quotient;
}

Rational QPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Rational QPolynomial::value_at_one() const {
    Rational acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

bool QPolynomial::has_nonneg_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!is_integral(c) || c < 0) return false;
    return true;
}

std::string QPolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPolynomial q_int(long i) {
    if (i <= 0) throw DomainError("q_int requires a positive integer, got " + std::to_string(i));
    return QPolynomial(std::vector<Rational>(static_cast<std::size_t>(i), Rational(1)));
}

QPolynomial ratio_product(const std::vector<unsigned long>& nums,
                          const std::vector<unsigned long>& dens) {
    if (nums.empty() || dens.empty())
        throw DomainError("ratio_product requires nonempty factor lists");
    QPolynomial num = QPolynomial::one();
    for (unsigned long a : nums) num = num * q_int(static_cast<long>(a));
    QPolynomial den = QPolynomial::one();
    for (unsigned long b : dens) den = den * q_int(static_cast<long>(b));
    return num.exact_div(den);
}

CycloNum eval_at_root(const QPolynomial& p, unsigned l, long t) {
    if (l == 0) throw DomainError("eval_at_root requires a positive order");
    // Fold q^i -> zeta^(i*t mod l) into one coefficient vector, reduce once.
    std::vector<Rational> folded(l, 0);
    const long tm = ((t % static_cast<long>(l)) + static_cast<long>(l)) % static_cast<long>(l);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        folded[(i * static_cast<unsigned long>(tm)) % l] += c[i];
    }
    return CycloNum::from_coeffs(l, std::move(folded));
}

} // namespace reflcat
