#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stablecoh/catalog.hpp"
#include "stablecoh/errors.hpp"
#include "stablecoh/invariants.hpp"
#include "stablecoh/poly_model.hpp"

using namespace stablecoh;

namespace {

Poly2 parse_poly(unsigned nvars, std::initializer_list<Monomial> monos) {
    Poly2 f(nvars);
    for (const auto& m : monos) f.toggle(m);
    return f;
}

/* coefficients of 1/((1-t^2)(1-t^3)) */
std::size_t dickson2_series(std::size_t d) {
    std::size_t count = 0;
    for (std::size_t b = 0; 3 * b <= d; ++b)
        if ((d - 3 * b) % 2 == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
    Poly2 x = Poly2::variable(2, 0), y = Poly2::variable(2, 1);
    Poly2 f = x * x * y + x * y * y;
    CHECK(f.to_string() == "x1^2*x2 + x1*x2^2");
    CHECK(f.degree() == 3);
    CHECK((f + f).is_zero());
    CHECK((x + y) * (x + y) == x * x + y * y);  // characteristic 2
    CHECK(Poly2::one(2).to_string() == "1");
}

TEST_CASE("action_matrix: stated examples") {
    CHECK(action_matrix(Mat2::identity(2), 3) == FpMatrix::identity(4, 2));

    Mat2 swap(2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    CHECK(action_matrix(swap, 1) == FpMatrix::from_rows({{0, 1}, {1, 0}}, 2));

    /* x |-> x, y |-> x + y on degree 2; basis x^2, xy, y^2 */
    Mat2 t(2);
    t.set(0, 0, 1);
    t.set(0, 1, 1);
    t.set(1, 1, 1);
    FpMatrix m = action_matrix(t, 2);
    /* y^2 |-> x^2 + y^2 */
    CHECK(m.apply({0, 0, 1}) == std::vector<std::uint8_t>{1, 0, 1});
    /* xy |-> x^2 + xy */
    CHECK(m.apply({0, 1, 0}) == std::vector<std::uint8_t>{1, 1, 0});
}

TEST_CASE("invariant_basis: stated examples") {
    MatrixGroup2 gl2 = MatrixGroup2::general_linear(2);
    CHECK(gl2.order() == 6);
    CHECK(invariant_basis(gl2, 1).dim() == 0);

    Subspace inv2 = invariant_basis(gl2, 2);
    REQUIRE(inv2.dim() == 1);
    Poly2 c21 = parse_poly(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
    CHECK(inv2.contains(poly_coords(c21, 2)));

    Mat2 swap(2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    MatrixGroup2 sym = MatrixGroup2::from_generators(2, {swap});
    Subspace fix1 = invariant_basis(sym, 1);
    REQUIRE(fix1.dim() == 1);
    CHECK(fix1.contains(std::vector<std::uint8_t>{1, 1}));
}

TEST_CASE("matrix group orders") {
    CHECK(MatrixGroup2::general_linear(1).order() == 1);
    CHECK(MatrixGroup2::general_linear(2).order() == 6);
    CHECK(MatrixGroup2::general_linear(3).order() == 168);
    CHECK(MatrixGroup2::general_linear(4).order() == 20160);
}

TEST_CASE("dickson_generators: stated examples") {
    auto d1 = dickson_generators(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].degree == 1);
    CHECK(d1[0].poly == Poly2::variable(1, 0));

    auto d2 = dickson_generators(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].degree == 2);
    CHECK(d2[1].degree == 3);
    CHECK(d2[0].poly == parse_poly(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
    CHECK(d2[1].poly == parse_poly(2, {Monomial{2, 1}, Monomial{1, 2}}));

    auto d3 = dickson_generators(3);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].degree == 4);
    CHECK(d3[1].degree == 6);
    CHECK(d3[2].degree == 7);

    auto d4 = dickson_generators(4);
    REQUIRE(d4.size() == 4);
    CHECK(d4[0].degree == 8);
    CHECK(d4[1].degree == 12);
    CHECK(d4[2].degree == 14);
    CHECK(d4[3].degree == 15);
}

TEST_CASE("Hilbert series of the rank-2 invariants, and algebraic independence") {
    MatrixGroup2 gl2 = MatrixGroup2::general_linear(2);
    auto gens = dickson_generators(2);
    const Poly2 &c2 = gens[0].poly, &c3 = gens[1].poly;
    for (std::size_t d = 0; d <= 8; ++d) {
        CHECK(invariant_basis(gl2, d).dim() == dickson2_series(d));

        /* the monomials in the two generators of total degree d are an
         * independent spanning set of the degree-d invariants */
        std::vector<std::vector<std::uint8_t>> rows;
        for (std::size_t b = 0; 3 * b <= d; ++b) {
            if ((d - 3 * b) % 2) continue;
            Poly2 prod = Poly2::one(2);
            for (std::size_t i = 0; i < (d - 3 * b) / 2; ++i) prod = prod * c2;
            for (std::size_t i = 0; i < b; ++i) prod = prod * c3;
            rows.push_back(poly_coords(prod, d));
        }
        FpMatrix mat(rows.size(), monomial_basis(2, d).size(), 2);
        for (std::size_t r = 0; r < rows.size(); ++r) mat.set_row(r, rows[r]);
        CHECK(rank(mat) == rows.size());
        CHECK(rows.size() == dickson2_series(d));
    }
}

TEST_CASE("polynomial model: rank one and rank two") {
    /* rank 1: every degree is one-dimensional and the model maps x^d to the
     * dual generator */
    PermGroup z2 = catalog_group("z2");
    Resolution r1 = minimal_resolution(z2, 2, 6);
    PolynomialModel m1(z2, r1, 6);
    for (std::size_t d = 0; d <= 6; ++d) {
        CHECK(m1.monomials_to_cohomology(d) == FpMatrix::identity(1, 2));
    }

    PermGroup kl = catalog_group("klein4");
    Resolution r2 = minimal_resolution(kl, 2, 6);
    PolynomialModel m2(kl, r2, 6);
    for (std::size_t d = 0; d <= 6; ++d) {
        CHECK(m2.monomials_to_cohomology(d).rows() == d + 1);
        CHECK(rank(m2.monomials_to_cohomology(d)) == d + 1);
    }

    /* cup products transported through the model are polynomial products */
    Poly2 x = Poly2::variable(2, 0), y = Poly2::variable(2, 1);
    for (const Poly2& f : {x, y, x + y})
        for (const Poly2& g : {x * x, x * y + y * y}) {
            CohomClass cf = m2.to_cohomology(f, 1), cg = m2.to_cohomology(g, 2);
            CHECK(m2.to_polynomial(cup(r2, cf, cg)) == f * g);
        }
}

TEST_CASE("transport naturality: induced maps match substitution actions") {
    PermGroup kl = catalog_group("klein4");
    Resolution r = minimal_resolution(kl, 2, 4);
    PolynomialModel model(kl, r, 4);
    MatrixGroup2 gl2 = MatrixGroup2::general_linear(2);
    for (const auto& g : gl2.elements()) {
        GroupHom h = matrix_to_automorphism(kl, g);
        RestrictionLift lift(h, r, r, 4);
        for (std::size_t d = 0; d <= 4; ++d) {
            FpMatrix transported = model.cohomology_to_monomials(d) *
                                   lift.cohomology_matrix(d) * model.monomials_to_cohomology(d);
            CHECK(transported == action_matrix(g, d));
        }
    }
}

TEST_CASE("compare_invariants_vs_limit: stated examples") {
    /* trivial group on one variable: everything is invariant */
    auto r1 = compare_invariants_vs_limit(1, MatrixGroup2::trivial(1), 6);
    CHECK(r1.match);
    for (std::size_t d = 0; d <= 6; ++d) CHECK(r1.invariant_dims[d] == 1);

    auto r2 = compare_invariants_vs_limit(2, MatrixGroup2::general_linear(2), 6);
    CHECK(r2.match);
    CHECK(r2.limit_dims == std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 2});
    CHECK(r2.invariant_dims == std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 2});

    Mat2 swap(2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    auto r3 = compare_invariants_vs_limit(2, MatrixGroup2::from_generators(2, {swap}), 6);
    CHECK(r3.match);
    CHECK(r3.invariant_dims == std::vector<std::size_t>{1, 1, 2, 2, 3, 3, 4});

    auto r4 = compare_invariants_vs_limit(3, MatrixGroup2::general_linear(3), 6);
    CHECK(r4.match);
    CHECK(r4.invariant_dims == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 1});
}

TEST_CASE("invariants module rejects bad input") {
    CHECK_THROWS_AS(dickson_generators(5), UsageError);
    CHECK_THROWS_AS(MatrixGroup2::from_generators(2, {Mat2(2)}), UsageError);  // singular
    CHECK_THROWS_AS(compare_invariants_vs_limit(4, MatrixGroup2::general_linear(4), 4), UsageError);
    CHECK_THROWS_AS(PolynomialModel(catalog_group("z4"), minimal_resolution(catalog_group("z4"), 2, 4), 4),
                    UsageError);
}
