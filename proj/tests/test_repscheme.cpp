#include <doctest.h>

#include "helpers.hpp"
#include "rep/repscheme.hpp"

using namespace rep;
using namespace rep::testutil;

TEST_CASE("free algebra emits no ideal generators") {
    CHECK(emit_ideal_generators(free_algebra(2), 3).empty());
}

TEST_CASE("commutator ideal at n=2: the (1,1) entry") {
    const auto gens = emit_ideal_generators(commuting_pair(), 2);
    REQUIRE(gens.size() == 4);
    CHECK(gens[0].relation == 0);
    CHECK(gens[0].row == 1);
    CHECK(gens[0].col == 1);
    // (1,1) entry of xy - yx at generic matrices: xi_x12 xi_y21 - xi_y12 xi_x21
    CommPolynomial expected;
    expected += CommPolynomial::variable({0, 1, 2}) * CommPolynomial::variable({1, 2, 1});
    expected -= CommPolynomial::variable({1, 1, 2}) * CommPolynomial::variable({0, 2, 1});
    CHECK(gens[0].poly == expected);
}

TEST_CASE("x^2 at n=1") {
    const auto gens = emit_ideal_generators(dual_numbers(), 1);
    REQUIRE(gens.size() == 1);
    const CommPolynomial expected =
        CommPolynomial::variable({0, 1, 1}) * CommPolynomial::variable({0, 1, 1});
    CHECK(gens[0].poly == expected);
}

TEST_CASE("evaluate commutator") {
    RepPoint p;
    p.n = 2;
    p.matrices = {mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})};
    const NCPolynomial f =
        NCPolynomial::generator(0) * NCPolynomial::generator(1) -
        NCPolynomial::generator(1) * NCPolynomial::generator(0);
    CHECK(evaluate(f, p) == mat({{1, 0}, {0, -1}}));
    CHECK(evaluate(NCPolynomial::generator(0), p) == p.matrices[0]);
}

TEST_CASE("check_point verdicts") {
    RepPoint diag;
    diag.n = 2;
    diag.matrices = {mat({{1, 0}, {0, 2}}), mat({{3, 0}, {0, 4}})};
    CHECK(check_point(commuting_pair(), diag).valid);

    RepPoint bad;
    bad.n = 2;
    bad.matrices = {mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})};
    const auto verdict = check_point(commuting_pair(), bad);
    REQUIRE_FALSE(verdict.valid);
    REQUIRE(verdict.violations.size() == 1);
    CHECK(verdict.violations[0].relation == 0);
    CHECK(verdict.violations[0].row == 1);
    CHECK(verdict.violations[0].col == 1);
    CHECK(verdict.violations[0].value == 1);

    // free algebra: everything valid
    std::mt19937_64 rng(5);
    CHECK(check_point(free_algebra(2), random_point(rng, 2, 3)).valid);

    RepPoint scalar_zero;
    scalar_zero.n = 1;
    scalar_zero.matrices = {RationalMatrix(1, 1)};
    CHECK(check_point(dual_numbers(), scalar_zero).valid);
}

TEST_CASE("conjugation basics") {
    std::mt19937_64 rng(77);
    const RepPoint p = random_point(rng, 2, 3);
    const GroupElement id(RationalMatrix::identity(3));
    CHECK(conjugate(p, id).matrices == p.matrices);

    const GroupElement g(random_invertible(rng, 3));
    const RepPoint q = conjugate(conjugate(p, g), g.inverted());
    CHECK(q.matrices == p.matrices);

    RepPoint d;
    d.n = 2;
    d.matrices = {mat({{1, 0}, {0, 2}})};
    const GroupElement swap(mat({{0, 1}, {1, 0}}));
    CHECK(conjugate(d, swap).matrices[0] == mat({{2, 0}, {0, 1}}));
}

TEST_CASE("singular group element rejected") {
    CHECK_THROWS_AS(GroupElement(mat({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("conjugation preserves check_point verdicts") {
    std::mt19937_64 rng(88);
    const Presentation pres = commuting_pair();
    for (int trial = 0; trial < 20; ++trial) {
        const RepPoint p = random_point(rng, 2, 2);
        const GroupElement g(random_invertible(rng, 2));
        CHECK(check_point(pres, p).valid == check_point(pres, conjugate(p, g)).valid);
    }
}

TEST_CASE("ideal generators vanish exactly at valid points") {
    std::mt19937_64 rng(314);
    const Presentation pres = commuting_pair();
    for (int trial = 0; trial < 10; ++trial) {
        // (X, q(X)) commutes: a valid point
        const RationalMatrix x = random_matrix(rng, 2);
        const RationalMatrix y = x * x + x * Rat(3) + RationalMatrix::identity(2) * Rat(-1);
        RepPoint p;
        p.n = 2;
        p.matrices = {x, y};
        REQUIRE(check_point(pres, p).valid);
        const auto coords = p.coordinates();
        for (const auto& g : emit_ideal_generators(pres, 2))
            CHECK(g.poly.evaluate(coords, 2) == 0);
    }
}

TEST_CASE("ideal emission commutes with evaluation") {
    std::mt19937_64 rng(2718);
    const Presentation pres = commuting_pair();
    const auto gens = emit_ideal_generators(pres, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const RepPoint p = random_point(rng, 2, 2);  // need not be valid
        const auto coords = p.coordinates();
        const RationalMatrix value = evaluate(pres.relations[0], p);
        for (const auto& g : gens)
            CHECK(g.poly.evaluate(coords, 2) == value(g.row - 1, g.col - 1));
    }
}

TEST_CASE("coordinate tuple annihilating all generators assembles to a valid point") {
    // diag pair coordinates kill every commutator generator; perturbing one
    // coordinate breaks at least one generator
    const Presentation pres = commuting_pair();
    const auto gens = emit_ideal_generators(pres, 2);
    RepPoint p;
    p.n = 2;
    p.matrices = {mat({{1, 0}, {0, 2}}), mat({{5, 0}, {0, 7}})};
    auto coords = p.coordinates();
    for (const auto& g : gens) CHECK(g.poly.evaluate(coords, 2) == 0);
    coords[1] = 1;  // X(1,2) = 1 while Y stays generic diagonal
    bool some_nonzero = false;
    for (const auto& g : gens) some_nonzero |= g.poly.evaluate(coords, 2) != 0;
    CHECK(some_nonzero);
}

TEST_CASE("module_isomorphic: equal points") {
    std::mt19937_64 rng(1);
    const RepPoint p = random_point(rng, 2, 2);
    const auto verdict = module_isomorphic(free_algebra(2), p, p);
    REQUIRE(verdict.kind == IsoKind::Isomorphic);
    // any witness must intertwine; the first basis try is the identity-like one
    const RationalMatrix& t = *verdict.witness;
    for (const auto& x : p.matrices) CHECK(t * x == x * t);
}

TEST_CASE("module_isomorphic: distinct scalars are not isomorphic") {
    Presentation pres = free_algebra(1);
    RepPoint p, q;
    p.n = q.n = 1;
    p.matrices = {mat({{1}})};
    q.matrices = {mat({{2}})};
    CHECK(module_isomorphic(pres, p, q).kind == IsoKind::NotIsomorphic);
}

TEST_CASE("module_isomorphic: conjugate points are isomorphic") {
    std::mt19937_64 rng(13);
    const Presentation pres = free_algebra(2);
    for (int trial = 0; trial < 5; ++trial) {
        const RepPoint p = random_point(rng, 2, 2);
        const GroupElement g(random_invertible(rng, 2));
        const RepPoint q = conjugate(p, g);
        const auto verdict = module_isomorphic(pres, p, q);
        REQUIRE(verdict.kind == IsoKind::Isomorphic);
        const RationalMatrix& t = *verdict.witness;
        for (size_t l = 0; l < p.matrices.size(); ++l)
            CHECK(t * p.matrices[l] == q.matrices[l] * t);
    }
}
