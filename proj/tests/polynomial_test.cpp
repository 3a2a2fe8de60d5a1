#include "support.hpp"

#include "invgeo/constraint_set.hpp"
#include "invgeo/polynomial.hpp"

#include <doctest.h>

#include <set>

using namespace invgeo;
using testing::Gen;

namespace {

ParameterTablePtr abc() {
    static const auto table = make_parameter_table({"a", "b", "c"});
    return table;
}

Polynomial var(const char* name) {
    return Polynomial::variable(abc(), name);
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("parameter tables reject bad names") {
    CHECK_THROWS_AS(make_parameter_table({"a", "a"}), Error);
    CHECK_THROWS_AS(make_parameter_table({"1a"}), Error);
    CHECK(abc()->index_of("c") == 2U);
    CHECK_FALSE(abc()->index_of("d"));
}

TEST_CASE("rendering follows graded lex order in declaration order") {
    const auto t = make_parameter_table({"theta1", "theta2", "z2"});
    const auto th1 = Polynomial::variable(t, "theta1");
    const auto th2 = Polynomial::variable(t, "theta2");
    const auto z2 = Polynomial::variable(t, "z2");
    const Polynomial p = Polynomial(Rational(-6)) * z2 * z2 + Polynomial(Rational(-1, 2)) * (th1 * th1 + th2 * th2);
    CHECK(p.to_string() == "-1/2*theta1^2 - 1/2*theta2^2 - 6*z2^2");
    CHECK((var("c") + var("a") * var("b") + Polynomial(3)).to_string() == "a*b + c + 3");
    CHECK((var("a") - var("a")).to_string() == "0");
    CHECK((-var("b") + var("a")).to_string() == "a - b");
    CHECK((var("a").pow(3) * Polynomial(Rational(2, 3))).to_string() == "2/3*a^3");
}

TEST_CASE("ring axioms on random polynomials") {
    Gen gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.polynomial(abc()), q = gen.polynomial(abc()), r = gen.polynomial(abc());
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(p * Polynomial(1) == p);
        CHECK((p * Polynomial(0)).is_zero());
        CHECK(p.pow(2) == p * p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Gen gen(202);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.polynomial(abc()), q = gen.polynomial(abc());
        const auto at = gen.assignment(*abc());
        CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
        CHECK((-p).eval(at) == -p.eval(at));
    }
}

TEST_CASE("rendering is injective on canonical forms") {
    Gen gen(303);
    std::vector<Polynomial> seen;
    for (int trial = 0; trial < 300; ++trial) seen.push_back(gen.polynomial(abc(), 3, 2));
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j)
            CHECK((seen[i] == seen[j]) == (seen[i].to_string() == seen[j].to_string()));
}

TEST_CASE("substitution agrees with evaluation") {
    Gen gen(404);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = gen.polynomial(abc());
        const auto image = gen.polynomial(abc(), 2, 1);
        const auto at = gen.assignment(*abc());
        auto shifted = at;
        shifted["a"] = image.eval(at);
        CHECK(p.substitute({{"a", image}}).eval(at) == p.eval(shifted));
    }
}

TEST_CASE("missing parameter in evaluation") {
    CHECK_THROWS_WITH_AS(var("b").eval({{"a", 1}}), "missing parameter 'b' in assignment", Error);
}

TEST_CASE("mixing tables is an error") {
    const auto other = make_parameter_table({"x"});
    CHECK_THROWS_AS(var("a") + Polynomial::variable(other, "x"), Error);
    CHECK_NOTHROW(var("a") + Polynomial(2));
}

TEST_CASE("constraint normalization") {
    const Polynomial p = Polynomial(Rational(-1, 2)) * var("a") + Polynomial(Rational(3, 4)) * var("b");
    CHECK(normalize_constraint(p).to_string() == "2*a - 3*b");
    CHECK(normalize_constraint(-p) == normalize_constraint(p));
    CHECK(normalize_constraint(Polynomial(Rational(-5, 3))).to_string() == "1");
    CHECK(normalize_constraint(Polynomial(0)).is_zero());

    Gen gen(505);
    for (int trial = 0; trial < 100; ++trial) {
        const auto q = gen.polynomial(abc());
        if (q.is_zero()) continue;
        const auto n = normalize_constraint(q);
        CHECK(n.leading_coefficient() > 0);
        CHECK(normalize_constraint(q * Polynomial(gen.nonzero_rational())) == n);
        Integer g = 0;
        for (const auto& [m, c] : n.terms()) {
            CHECK(boost::multiprecision::denominator(c) == 1);
            g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
        }
        CHECK(g == 1);
    }
}

TEST_CASE("constraint sets are canonical") {
    ConstraintSet x{var("b"), Polynomial(2) * var("a"), -var("b"), Polynomial(0)};
    ConstraintSet y{var("a"), Polynomial(-3) * var("b")};
    CHECK(x == y);
    CHECK(x.size() == 2);
    CHECK(x.to_string() == "{a, b}");
    CHECK(ConstraintSet{}.to_string() == "{}");
    CHECK(x.contains(Polynomial(Rational(1, 7)) * var("a")));
    CHECK(x.substitute({{"a", Polynomial(abc(), 0)}}).to_string() == "{b}");
}

TEST_CASE("linear reduction identifies equal loci") {
    ConstraintSet x{var("a") + var("b"), var("a") - var("b")};
    ConstraintSet y{var("a"), var("b")};
    CHECK(linear_reduce(x) == linear_reduce(y));
    CHECK(linear_reduce(x) == y);
    ConstraintSet z{var("a") + var("c")};
    CHECK_FALSE(linear_reduce(z) == linear_reduce(y));
    CHECK_THROWS_AS(linear_reduce(ConstraintSet{var("a") * var("b")}), Error);

    Gen gen(606);
    for (int trial = 0; trial < 50; ++trial) {
        ConstraintSet s;
        for (int k = gen.integer(1, 3); k > 0; --k) s.insert(gen.polynomial(abc(), 3, 1));
        bool linear = true;
        for (const auto& p : s) linear = linear && p.degree() <= 1;
        if (!linear) continue;
        // Adding a combination of members does not change the span.
        ConstraintSet t = s;
        Polynomial combo(abc(), 0);
        for (const auto& p : s) combo += p * Polynomial(gen.rational());
        t.insert(combo);
        CHECK(linear_reduce(t) == linear_reduce(s));
    }
}
