#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reflcat/groups.hpp"
#include "reflcat/grouptable.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace reflcat;

namespace {

BuildOptions test_opts() {
    BuildOptions o;
    o.data_dir = REFLCAT_TEST_DATA_DIR;
    return o;
}

ReflectionGroup make(const std::string& spec) {
    return build(GroupSpec::parse(spec), test_opts());
}

} // namespace

TEST_CASE("spec grammar") {
    CHECK(GroupSpec::parse("G(4,2,2)") == GroupSpec::imprimitive(4, 2, 2));
    CHECK(GroupSpec::parse(" G( 4 , 2 ,2) ") == GroupSpec::imprimitive(4, 2, 2));
    CHECK(GroupSpec::parse("G12") == GroupSpec::shephard_todd(12));
    CHECK(GroupSpec::parse("Sym(3)") == GroupSpec::sym(3));
    CHECK(GroupSpec::parse("Cyc(5)") == GroupSpec::cyc(5));
    CHECK(GroupSpec::parse("Dih(6)") == GroupSpec::dih(6));
    CHECK(GroupSpec::parse("G(4,2,2)").str() == "G(4,2,2)");
    CHECK_THROWS_AS(GroupSpec::parse("H3"), GroupSpecError);
    CHECK_THROWS_AS(GroupSpec::parse("G(4,2)"), GroupSpecError);
    CHECK_THROWS_AS(GroupSpec::parse("Sym(3)x"), GroupSpecError);
    CHECK_THROWS_AS(GroupSpec::parse(""), GroupSpecError);
}

TEST_CASE("rejected degenerate specs") {
    CHECK_THROWS_AS(make("G(1,1,3)"), GroupSpecError);
    CHECK_THROWS_AS(make("G(2,2,2)"), GroupSpecError);
    CHECK_THROWS_AS(make("G(3,3,1)"), GroupSpecError);
    CHECK_THROWS_AS(make("G(6,3,1)"), GroupSpecError);
    CHECK_THROWS_AS(make("Cyc(1)"), GroupSpecError);
    CHECK_THROWS_AS(make("Sym(1)"), GroupSpecError);
    CHECK_THROWS_AS(make("Dih(2)"), GroupSpecError);
    CHECK_THROWS_AS(make("G(5,2,2)"), GroupSpecError); // e must divide de
    CHECK_THROWS_AS(make("G33"), GroupSpecError);      // outside the catalog
}

TEST_CASE("Sym(3)") {
    const ReflectionGroup g = make("Sym(3)");
    CHECK(g.order() == 6);
    CHECK(g.rank() == 2);
    CHECK(g.N() == 3);
    CHECK(g.N_star() == 3);
    CHECK(g.h() == 3);
    CHECK(g.well_generated());
    for (const auto& hp : g.hyperplanes()) CHECK(hp.e_H == 2);
    // single orbit of hyperplanes
    std::set<unsigned> orbits;
    for (const auto& hp : g.hyperplanes()) orbits.insert(hp.orbit);
    CHECK(orbits.size() == 1);
}

TEST_CASE("G(2,1,2) hyperoctahedral") {
    const ReflectionGroup g = make("G(2,1,2)");
    CHECK(g.order() == 8);
    CHECK(g.N() == 4);
    CHECK(g.N_star() == 4);
    CHECK(g.h() == 4);
    CHECK(g.expected_degrees() == std::vector<unsigned>{2, 4});
}

TEST_CASE("G(4,2,2)") {
    const ReflectionGroup g = make("G(4,2,2)");
    CHECK(g.order() == 16);
    CHECK(g.h() == 6);
    CHECK_FALSE(g.well_generated());
    CHECK(g.expected_degrees() == std::vector<unsigned>{4, 4});
    // e_H structure: swap-type hyperplanes with e_H = 2 and the two
    // coordinate hyperplanes with |W_H| = 2; the sums must satisfy
    // sum e_H = n*h = 12.
    unsigned long sum = 0;
    for (const auto& hp : g.hyperplanes()) {
        sum += hp.e_H;
        CHECK(hp.e_H == 2);
    }
    CHECK(sum == 12);
    CHECK(g.N() == 6);
    CHECK(g.N_star() == 6);
}

TEST_CASE("Cyc(3) and Cyc(4)") {
    const ReflectionGroup c3 = make("Cyc(3)");
    CHECK(c3.order() == 3);
    CHECK(c3.N() == 1);
    CHECK(c3.N_star() == 2);
    CHECK(c3.h() == 3);

    const ReflectionGroup c4 = make("Cyc(4)");
    CHECK(c4.N_star() == 3);
    CHECK(c4.N() == 1);
    CHECK(c4.hyperplanes()[0].e_H == 4);
}

TEST_CASE("Dih(e) families") {
    for (unsigned e = 3; e <= 6; ++e) {
        const ReflectionGroup g = make("Dih(" + std::to_string(e) + ")");
        CHECK(g.order() == 2 * e);
        CHECK(g.N_star() == e);
        CHECK(g.h() == e);
        CHECK(g.well_generated());
        CHECK(g.expected_degrees() == std::vector<unsigned>{2, e});
    }
}

TEST_CASE("generator matrices surface") {
    CHECK(generator_matrices(GroupSpec::parse("Cyc(5)"), test_opts()).size() == 1);
    CHECK(generator_matrices(GroupSpec::parse("Dih(5)"), test_opts()).size() == 2);
    CHECK(generator_matrices(GroupSpec::parse("Sym(4)"), test_opts()).size() == 3);
    CHECK(generator_matrices(GroupSpec::parse("G(4,2,3)"), test_opts()).size() == 4);
}

TEST_CASE("closure property on random pairs") {
    std::mt19937_64 rng(11);
    for (const char* name : {"Sym(4)", "G(3,1,2)", "Dih(5)", "G(4,4,3)"}) {
        const ReflectionGroup g = make(name);
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        for (int iter = 0; iter < 50; ++iter) {
            const std::size_t a = pick(rng), b = pick(rng);
            const auto idx = g.element_index(g.element(a) * g.element(b));
            REQUIRE(idx.has_value());
            // inverse bookkeeping: inv(a)*a = identity (element 0)
            CHECK(g.element(g.inverse_index(a)) * g.element(a) ==
                  CycMatrix::identity(g.rank(), g.conductor()));
        }
    }
}

TEST_CASE("reflection determinant sanity") {
    for (const char* name : {"Sym(3)", "G(4,2,2)", "Cyc(6)", "Dih(4)"}) {
        const ReflectionGroup g = make(name);
        CycloNum prod = CycloNum::rational(1, g.conductor());
        for (const auto& r : g.reflections()) prod *= r.determinant;
        CHECK(is_root_of_unity(prod));
    }
}

TEST_CASE("order cap") {
    BuildOptions opts = test_opts();
    opts.order_cap = 100;
    CHECK_THROWS_AS(build(GroupSpec::parse("Sym(5)"), opts), OrderCapError);
    opts.allow_large = true;
    CHECK_NOTHROW(build(GroupSpec::parse("Sym(5)"), opts));
}

TEST_CASE("larger imprimitive groups") {
    const ReflectionGroup g622 = make("G(6,2,2)");
    CHECK(g622.order() == 36);
    CHECK(g622.h() == 9);
    CHECK_FALSE(g622.well_generated());

    const ReflectionGroup g632 = make("G(6,3,2)");
    CHECK(g632.order() == 24);
    CHECK(g632.h() == 8);
    CHECK(g632.expected_degrees() == std::vector<unsigned>{4, 6});
}

TEST_CASE("exceptional G12 from data table") {
    const ReflectionGroup g = make("G12");
    CHECK(g.order() == 48);
    CHECK(g.rank() == 2);
    CHECK(g.conductor() == 8);
    CHECK(g.N() == 12);
    CHECK(g.N_star() == 12);
    CHECK(g.h() == 12);
    CHECK_FALSE(g.well_generated());
    CHECK(g.expected_degrees() == std::vector<unsigned>{6, 8});
    for (const auto& hp : g.hyperplanes()) CHECK(hp.e_H == 2);
}

TEST_CASE("corrupt data file is rejected") {
    const std::string path = group_table_path(REFLCAT_TEST_DATA_DIR, 12);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    CHECK_NOTHROW(parse_group_table(content, "g12"));
    // flip one digit inside the payload
    const auto pos = content.find("order 48");
    REQUIRE(pos != std::string::npos);
    content[pos + 6] = '9';
    CHECK_THROWS_AS(parse_group_table(content, "g12"), DataFileError);
}

TEST_CASE("char poly classes partition the group") {
    const ReflectionGroup g = make("Sym(4)");
    const auto& classes = g.char_poly_classes();
    CHECK(classes.slot.size() == g.order());
    // S4 has 5 conjugacy classes and 5 distinct characteristic polynomials
    CHECK(classes.polys.size() == 5);
}
