#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reflcat/cyclo.hpp"
#include "reflcat/numtheory.hpp"

#include <random>
#include <vector>

using namespace reflcat;

namespace {

// Random element with small coefficients at a given conductor.
CycloNum random_cyclo(std::mt19937_64& rng, unsigned l) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c(euler_phi(l));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycloNum::from_coeffs(l, std::move(c));
}

const std::vector<unsigned> kConductors = {1, 3, 4, 5, 8, 12, 20};

} // namespace

TEST_CASE("cyclotomic polynomials") {
    // Phi_6 = x^2 - x + 1
    const auto& p6 = cyclotomic_polynomial(6);
    CHECK(p6 == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(12).size() == 5);
}

TEST_CASE("make_rational basics") {
    CHECK(CycloNum::rational(0, 12).is_zero());
    CHECK(CycloNum::rational(0, 12).is_rational());
    CHECK(CycloNum::rational(1, 8) == CycloNum::rational(1, 8));
    CHECK((CycloNum::rational(1, 8) * CycloNum::root_of_unity(8, 3)) ==
          CycloNum::root_of_unity(8, 3));

    const CycloNum r = CycloNum::rational(Rational(-3, 2), 5);
    CHECK(r.coeffs() == std::vector<Rational>{Rational(-3, 2), 0, 0, 0});
    CHECK(r.is_rational());
    CHECK_FALSE(r.is_integer());
}

TEST_CASE("root_of_unity reduction") {
    CHECK(CycloNum::root_of_unity(4, 2) == CycloNum::rational(-1, 4));
    // 1 + zeta_3 + zeta_3^2 = 0
    CHECK((CycloNum::root_of_unity(3, 1) + CycloNum::root_of_unity(3, 2)) ==
          CycloNum::rational(-1, 3));
    // k only matters mod l
    CHECK(CycloNum::root_of_unity(12, 25) == CycloNum::root_of_unity(12, 1));
    CHECK(CycloNum::root_of_unity(12, -1) == CycloNum::root_of_unity(12, 11));

    // zeta_6 reduced mod Phi_6 = x^2 - x + 1 stays a basis element; check
    // zeta_6^3 = -1 through the module's own multiplication.
    const CycloNum z6 = CycloNum::root_of_unity(6, 1);
    CHECK(z6.coeffs() == std::vector<Rational>{0, 1});
    CHECK(pow(z6, 3) == CycloNum::rational(-1, 6));
}

TEST_CASE("inverse examples") {
    // (1 + zeta_3)(-zeta_3) = -zeta_3 - zeta_3^2 = 1
    const CycloNum a = CycloNum::rational(1, 3) + CycloNum::root_of_unity(3, 1);
    CHECK(a.inverse() == -CycloNum::root_of_unity(3, 1));
    CHECK(a.inverse() * a == CycloNum::rational(1, 3));

    CHECK((CycloNum::root_of_unity(8, 1) * CycloNum::root_of_unity(8, 3)) ==
          CycloNum::rational(-1, 8));
    CHECK(CycloNum::rational(2, 1).inverse() == CycloNum::rational(Rational(1, 2), 1));
    CHECK_THROWS_AS(CycloNum::rational(0, 5).inverse(), DivisionByZeroError);
}

TEST_CASE("galois and conj") {
    const CycloNum z8 = CycloNum::root_of_unity(8, 1);
    CHECK(z8.galois(3) == CycloNum::root_of_unity(8, 3));
    CHECK(CycloNum::rational(Rational(5, 7), 8).galois(3) ==
          CycloNum::rational(Rational(5, 7), 8));
    CHECK_THROWS_AS(z8.galois(2), InvalidAutomorphismError);
    CHECK_THROWS_AS(z8.galois(4), InvalidAutomorphismError);

    CHECK(CycloNum::root_of_unity(5, 1).conj() == CycloNum::root_of_unity(5, 4));
    CHECK(CycloNum::rational(3, 5).conj() == CycloNum::rational(3, 5));
    // conj(1 + zeta_3) = 1 + zeta_3^2 = -zeta_3
    const CycloNum b = CycloNum::rational(1, 3) + CycloNum::root_of_unity(3, 1);
    CHECK(b.conj() == -CycloNum::root_of_unity(3, 1));
    CHECK(b.conj().conj() == b);
}

TEST_CASE("rationality predicates") {
    CHECK(pow(CycloNum::root_of_unity(4, 1), 2).is_rational());
    CHECK(pow(CycloNum::root_of_unity(4, 1), 2).to_rational() == -1);
    CHECK_FALSE(CycloNum::root_of_unity(3, 1).is_rational());
    CHECK_THROWS_AS(CycloNum::root_of_unity(3, 1).to_rational(), DomainError);

    CycloNum s = CycloNum::rational(0, 5);
    for (long k = 1; k <= 4; ++k) s += CycloNum::root_of_unity(5, k);
    CHECK(s.is_integer());
    CHECK(s.to_rational() == -1);
}

TEST_CASE("conductor promotion and mixed ops") {
    const CycloNum z3 = CycloNum::root_of_unity(3, 1);
    const CycloNum z6sq = pow(CycloNum::root_of_unity(6, 1), 2);
    CHECK(z3 == z6sq);
    CHECK(z3 + CycloNum::root_of_unity(4, 1) ==
          CycloNum::root_of_unity(12, 4) + CycloNum::root_of_unity(12, 3));
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937_64 rng(20260810);
    for (unsigned l : kConductors) {
        for (int iter = 0; iter < 150; ++iter) {
            const CycloNum a = random_cyclo(rng, l);
            const CycloNum b = random_cyclo(rng, l);
            const CycloNum c = random_cyclo(rng, l);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a.inverse() * a == CycloNum::rational(1, l));
            }
        }
    }
}

TEST_CASE("galois is a ring homomorphism") {
    std::mt19937_64 rng(77);
    for (unsigned l : kConductors) {
        std::vector<long> ts;
        for (long t = 1; t < static_cast<long>(l); ++t)
            if (gcd_u(static_cast<unsigned>(t), l) == 1) ts.push_back(t);
        if (ts.empty()) ts.push_back(1);
        for (int iter = 0; iter < 60; ++iter) {
            const CycloNum a = random_cyclo(rng, l);
            const CycloNum b = random_cyclo(rng, l);
            for (long t : ts) {
                CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
                CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
            }
            // composition: sigma_t . sigma_s = sigma_(t*s mod l)
            if (ts.size() >= 2) {
                const long s = ts[iter % ts.size()];
                const long t = ts[(iter + 1) % ts.size()];
                CHECK(a.galois(s).galois(t) ==
                      a.galois((s * t) % static_cast<long>(l)));
            }
        }
    }
    // sigma_1 is the identity
    CHECK(CycloNum::root_of_unity(12, 5).galois(1) == CycloNum::root_of_unity(12, 5));
}

TEST_CASE("canonical form idempotence") {
    std::mt19937_64 rng(123);
    for (unsigned l : kConductors) {
        for (int iter = 0; iter < 40; ++iter) {
            const CycloNum a = random_cyclo(rng, l);
            CHECK(CycloNum::from_coeffs(l, a.coeffs()) == a);
            CHECK(CycloNum::from_coeffs(l, a.coeffs()).coeffs() == a.coeffs());
        }
    }
}

TEST_CASE("roots of unity sum to zero") {
    for (unsigned l : kConductors) {
        if (l == 1) continue;
        CycloNum s = CycloNum::rational(0, l);
        for (long k = 0; k < static_cast<long>(l); ++k)
            s += CycloNum::root_of_unity(l, k);
        CHECK(s.is_zero());
        CHECK(pow(CycloNum::root_of_unity(l, 1), static_cast<long>(l)) ==
              CycloNum::rational(1, l));
    }
}

TEST_CASE("root of unity detection") {
    CHECK(is_root_of_unity(CycloNum::root_of_unity(12, 7)));
    CHECK(is_root_of_unity(CycloNum::rational(-1, 8)));
    CHECK_FALSE(is_root_of_unity(CycloNum::rational(2, 8)));
    CHECK_FALSE(is_root_of_unity(CycloNum::rational(0, 8)));
    // 1 + zeta_3 = -zeta_3^2 IS one (order 6); 1 + zeta_5 is not.
    CHECK(is_root_of_unity(CycloNum::rational(1, 3) + CycloNum::root_of_unity(3, 1)));
    CHECK_FALSE(is_root_of_unity(CycloNum::rational(1, 5) + CycloNum::root_of_unity(5, 1)));
}
