#include "support.hpp"

#include "invgeo/families.hpp"
#include "invgeo/lie_algebra.hpp"

#include <doctest.h>

using namespace invgeo;
using testing::Gen;
using testing::NumericAlgebra;

TEST_CASE("builder fills the reverse bracket") {
    LieAlgebraBuilder b({"X", "Y", "Z"}, make_parameter_table({"t"}));
    b.set("X", "Y", {{"Z", b.param("t")}});
    const auto g = b.build();
    CHECK(format_vector(g.bracket_of(0, 1), g.basis()) == "t*Z");
    CHECK(format_vector(g.bracket_of(1, 0), g.basis()) == "-t*Z");
    CHECK(g.bracket_of(0, 0).is_zero());
}

TEST_CASE("builder rejects bad input") {
    LieAlgebraBuilder b({"X", "Y"}, nullptr);
    CHECK_THROWS_AS(b.set("X", "X", {{"Y", Polynomial(1)}}), Error);
    b.set("X", "Y", {{"Y", Polynomial(1)}});
    CHECK_THROWS_AS(b.set("Y", "X", {{"Y", Polynomial(-1)}}), Error);
    CHECK_THROWS_AS(b.set("X", "Q", {{"Y", Polynomial(1)}}), Error);
    CHECK_THROWS_AS(LieAlgebraBuilder({"X", "X"}, nullptr).build(), Error);
    CHECK_THROWS_AS(LieAlgebraBuilder({"t"}, make_parameter_table({"t"})).build(), Error);
}

TEST_CASE("structure tensors must be antisymmetric") {
    Tensor3<Polynomial> c(2, Polynomial(0));
    c(0, 1, 0) = Polynomial(1);
    CHECK_THROWS_AS(LieAlgebraSpec({"X", "Y"}, nullptr, c), Error);
    c(1, 0, 0) = Polynomial(-1);
    CHECK_NOTHROW(LieAlgebraSpec({"X", "Y"}, nullptr, c));
}

TEST_CASE("Jacobi residual matches the numeric double bracket") {
    Gen gen(21);
    const auto params = make_parameter_table({"p", "q"});
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = testing::random_algebra(gen, static_cast<std::size_t>(gen.integer(3, 5)), params, 0.3);
        const auto residual = jacobi_residual(g);
        const auto at = gen.assignment(*params);
        const NumericAlgebra num(g, at);
        std::size_t r = 0;
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i + 1; j < g.dim(); ++j)
                for (std::size_t k = j + 1; k < g.dim(); ++k) {
                    const auto expected = num.jacobi(i, j, k);
                    if (r < residual.size() && residual[r].triple == std::array<std::size_t, 3>{i, j, k}) {
                        CHECK(testing::eval(residual[r].value, at) == expected);
                        ++r;
                    } else {
                        CHECK(expected == testing::Vec(g.dim(), Rational(0)));
                    }
                }
        CHECK(r == residual.size());
    }
}

TEST_CASE("Jacobi status of the built-in families") {
    CHECK(jacobi_residual(build(FamilyId::g7)).empty());
    CHECK(jacobi_residual(build(FamilyId::g3)).empty());
    CHECK(jacobi_residual(build(FamilyId::abelian4)).empty());
    CHECK_FALSE(jacobi_residual(build(FamilyId::general_s3)).empty());
}

TEST_CASE("rotating a Lie algebra preserves the Jacobi identity") {
    Gen gen(22);
    for (auto id : {FamilyId::g7, FamilyId::g3}) {
        const auto g = build(id);
        for (int trial = 0; trial < 5; ++trial) {
            const auto rotated = NumericAlgebra(g, gen.assignment(*g.params())).rotated(testing::random_orthogonal(gen, 4));
            CHECK(jacobi_residual(rotated.to_spec({"A", "B", "C", "D"})).empty());
        }
    }
}

TEST_CASE("involutivity") {
    const auto g = build(FamilyId::general_s3);
    CHECK(is_involutive(g, {2, 3}).empty());
    CHECK(is_involutive(g, {0, 1}).to_string() == "{theta1, theta2}");
    CHECK(is_involutive(build(FamilyId::abelian4), {0, 1}).empty());
}

TEST_CASE("substitution of parameters") {
    const auto g = build(FamilyId::g3).substitute(Assignment{{"alpha", 1}, {"beta", 0}, {"theta2", Rational(1, 2)}});
    CHECK(format_vector(g.bracket_of(3, 2), g.basis()) == "-2*W");
    CHECK(format_vector(g.bracket_of(0, 1), g.basis()) == "-1/2*W");
}
