#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reflcat/matrix.hpp"
#include "reflcat/qpoly.hpp"
#include "reflcat/qseries.hpp"

#include <random>
#include <vector>

using namespace reflcat;

namespace {

// Independent oracle: Horner evaluation of p at zeta_l^t with CycloNum
// arithmetic only (the implementation folds exponents instead).
CycloNum horner_at_root(const QPolynomial& p, unsigned l, long t) {
    const CycloNum x = CycloNum::root_of_unity(l, t);
    CycloNum acc = CycloNum::rational(0, l);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + CycloNum::rational(c[i], l);
    return acc;
}

// Independent oracle: long division of 1 by a rational polynomial, term by
// term, without QSeries.
std::vector<Rational> brute_series_inverse(const std::vector<Rational>& den, unsigned order) {
    std::vector<Rational> s(order + 1, 0);
    s[0] = Rational(1) / den[0];
    for (unsigned k = 1; k <= order; ++k) {
        Rational acc(0);
        for (unsigned j = 1; j < den.size() && j <= k; ++j) acc += den[j] * s[k - j];
        s[k] = -acc / den[0];
    }
    return s;
}

QPolynomial from_ints(std::initializer_list<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return QPolynomial(std::move(c));
}

} // namespace

TEST_CASE("q_int") {
    CHECK(q_int(1) == QPolynomial::one());
    CHECK(q_int(4) == from_ints({1, 1, 1, 1}));
    // [6] = [2] * (1 + q^2 + q^4), via the module's own multiplication
    CHECK(q_int(6) == q_int(2) * from_ints({1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(q_int(0), DomainError);
    CHECK_THROWS_AS(q_int(-2), DomainError);
}

TEST_CASE("ratio_product") {
    // [14][24]/([6][8]): the q=1 value must be (14*24)/(6*8) = 7 by plain
    // rational arithmetic, and the quotient must be a nonneg-integer poly.
    const QPolynomial g12 = ratio_product({14, 24}, {6, 8});
    Rational oracle(14 * 24, 6 * 8);
    oracle.canonicalize();
    CHECK(g12.value_at_one() == oracle);
    CHECK(g12.value_at_one() == 7);
    CHECK(g12.has_nonneg_integer_coeffs());
    CHECK(g12.degree() == (13 + 23) - (5 + 7));

    // [8][12]/([4][4]) = (1+q^4)(1+q^4+q^8), hand-checkable
    const QPolynomial g422 = ratio_product({8, 12}, {4, 4});
    CHECK(g422 == from_ints({1, 0, 0, 0, 1}) * from_ints({1, 0, 0, 0, 1, 0, 0, 0, 1}));

    CHECK(ratio_product({5}, {5}) == QPolynomial::one());

    CHECK_THROWS_AS(ratio_product({3}, {7}), NotPolynomialError);
    CHECK_THROWS_AS(ratio_product({}, {2}), DomainError);
    try {
        ratio_product({4}, {3});
    } catch (const NotPolynomialError& e) {
        CHECK_FALSE(e.remainder().is_zero()); // the remainder is the certificate
    }
}

TEST_CASE("ratio_product round trip (randomized)") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> d(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        // a product that always divides: [a*b]/[a] for random a,b
        unsigned long a = d(rng), b = d(rng), c = d(rng);
        const QPolynomial q = ratio_product({a * b, c}, {a, c});
        CHECK(q * q_int(static_cast<long>(a)) * q_int(static_cast<long>(c)) ==
              q_int(static_cast<long>(a * b)) * q_int(static_cast<long>(c)));
    }
}

TEST_CASE("q_int divisibility [ab]/[a]") {
    for (long a = 1; a <= 12; ++a)
        for (long b = 1; b <= 12; ++b)
            CHECK_NOTHROW(q_int(a * b).exact_div(q_int(a)));
}

TEST_CASE("eval_at_root") {
    // q-Catalan of S3 at zeta_3: 1 + zeta^2 + 1 + zeta + 1 = 2
    const QPolynomial cat3 = from_ints({1, 0, 1, 1, 1, 0, 1});
    CHECK(eval_at_root(cat3, 3, 1) == CycloNum::rational(2, 3));

    // t = 0: sum of coefficients
    CHECK(eval_at_root(cat3, 5, 0) == CycloNum::rational(cat3.value_at_one(), 5));

    // [l]_q vanishes at a primitive l-th root
    CHECK(eval_at_root(q_int(6), 6, 1).is_zero());

    // agreement with the independent Horner path on random polynomials
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Rational> c(1 + iter % 9);
        for (auto& x : c) x = coeff(rng);
        const QPolynomial p(std::move(c));
        for (unsigned l : {1u, 3u, 4u, 8u, 12u}) {
            const long t = iter % (2 * static_cast<long>(l));
            CHECK(eval_at_root(p, l, t) == horner_at_root(p, l, t));
        }
    }
}

TEST_CASE("geom_inverse") {
    const QSeries s = QSeries::geom_inverse(3, 10);
    CHECK(s.coeff(0) == CycloNum::rational(1));
    CHECK(s.coeff(3) == CycloNum::rational(1));
    CHECK(s.coeff(4).is_zero());
    // (1 - q^d) * geom_inverse(d) = 1 mod q^(D+1)
    for (unsigned d = 1; d <= 6; ++d) {
        QSeries g = QSeries::geom_inverse(d, 12);
        g.mul_one_minus_qd(d);
        CHECK(g.is_one());
    }
}

TEST_CASE("series truncation carries the minimum order") {
    const QSeries a = QSeries::geom_inverse(1, 8);
    const QSeries b = QSeries::geom_inverse(2, 5);
    CHECK((a * b).trunc_order() == 5);
    CHECK((a + b).trunc_order() == 5);
}

TEST_CASE("series_of_char_poly_inverse") {
    // 1x1 identity: 1/(1-q)
    CycMatrix id1 = CycMatrix::identity(1, 1);
    CHECK(series_of_char_poly_inverse(id1, 3) == QSeries::geom_inverse(1, 3));

    // diag(-1): alternating signs
    CycMatrix m1(1, 1);
    m1.set(0, 0, CycloNum::rational(-1));
    const QSeries alt = series_of_char_poly_inverse(m1, 4);
    for (unsigned k = 0; k <= 4; ++k)
        CHECK(alt.coeff(k) == CycloNum::rational(k % 2 == 0 ? 1 : -1));

    // diag(zeta_3, zeta_3^2): det(I - qM) = 1 + q + q^2. The expected
    // truncation is computed by the independent long-division oracle.
    CycMatrix rot(2, 3);
    rot.set(0, 0, CycloNum::root_of_unity(3, 1));
    rot.set(1, 1, CycloNum::root_of_unity(3, 2));
    const auto expected = brute_series_inverse({1, 1, 1}, 3);
    CHECK(expected == std::vector<Rational>{1, -1, 0, 1});
    const QSeries s = series_of_char_poly_inverse(rot, 3);
    for (unsigned k = 0; k <= 3; ++k)
        CHECK(s.coeff(k) == CycloNum::rational(expected[k], 3));
}

TEST_CASE("char poly via Newton matches 2x2 closed form") {
    // 3x3 permutation-like matrix over Q(zeta_4)
    CycMatrix p(3, 4);
    p.set(0, 1, CycloNum::rational(1, 4));
    p.set(1, 2, CycloNum::root_of_unity(4, 1));
    p.set(2, 0, CycloNum::rational(1, 4));
    const auto cp = char_poly_one_minus_q(p);
    // det(I - qP) = 1 - det(P) q^3 for a 3-cycle with twist; det = -zeta_4...
    // verify against direct determinant of I - qP at q specialized to 1 and -1
    // through polynomial identity: cp has degree 3 and cp[1] = -trace = 0.
    CHECK(cp.size() == 4);
    CHECK(cp[1].is_zero());
    CHECK(cp[2].is_zero());
    CHECK(cp[3] == -p.det());
}

TEST_CASE("matrix basics") {
    CycMatrix a(2, 4);
    a.set(0, 1, CycloNum::root_of_unity(4, 1));
    a.set(1, 0, CycloNum::root_of_unity(4, 3));
    CHECK(a.det() == CycloNum::rational(-1, 4) * CycloNum::root_of_unity(4, 0));
    CHECK((a * a.inverse()) == CycMatrix::identity(2, 4));
    CHECK(a.trace().is_zero());
    // a has eigenvalues +-1 (a^2 = I), so rank(a - I) = 1: a reflection
    CHECK((a * a) == CycMatrix::identity(2, 4));
    CHECK(a.rank_minus_identity() == 1);
    CHECK_FALSE(CycMatrix::identity(2, 4).rank_minus_identity());
}
