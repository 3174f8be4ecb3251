#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stablecoh/errors.hpp"
#include "stablecoh/fp_matrix.hpp"

using namespace stablecoh;

namespace {

FpMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, unsigned p) {
    FpMatrix m(rows, cols, p);
    std::uniform_int_distribution<unsigned> dist(0, p - 1);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
    return m;
}

/* the 4x4 matrix over F_2 with rows the cyclic shifts of (1,1,0,0);
 * the rows sum to zero and the first three are independent, so rank 3 */
FpMatrix cyclic_shift_matrix() {
    return FpMatrix::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}, 2);
}

}  // namespace

TEST_CASE("rank: stated examples") {
    CHECK(rank(FpMatrix::identity(3, 2)) == 3);
    CHECK(rank(FpMatrix::from_rows({{1, 1}, {1, 1}}, 2)) == 1);
    CHECK(rank(cyclic_shift_matrix()) == 3);
}

TEST_CASE("kernel_basis: stated examples") {
    CHECK(kernel_basis(FpMatrix(2, 3, 3)) == Subspace::full(3, 3));
    CHECK(kernel_basis(FpMatrix::from_rows({{1, 1}}, 2)) ==
          Subspace::row_space(FpMatrix::from_rows({{1, 1}}, 2)));

    Subspace k = kernel_basis(cyclic_shift_matrix());
    REQUIRE(k.dim() == 1);
    std::vector<std::uint8_t> v = k.basis().row(0);
    CHECK(v == std::vector<std::uint8_t>{1, 1, 1, 1});
    /* direct check A v = 0 */
    for (auto y : cyclic_shift_matrix().apply(v)) CHECK(y == 0);
}

TEST_CASE("solve: stated examples") {
    FpMatrix b = FpMatrix::from_rows({{1, 0}, {1, 1}, {0, 1}}, 2);
    auto x = solve(FpMatrix::identity(3, 2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto y = solve(FpMatrix::from_rows({{1, 1}}, 2), FpMatrix::from_rows({{1}}, 2));
    REQUIRE(y.has_value());
    CHECK(FpMatrix::from_rows({{1, 1}}, 2) * *y == FpMatrix::from_rows({{1}}, 2));

    CHECK(!solve(FpMatrix(1, 2, 2), FpMatrix::from_rows({{1}}, 2)).has_value());

    /* shape mismatch is a usage error, not "no solution" */
    CHECK_THROWS_AS((void)solve(FpMatrix(2, 2, 2), FpMatrix(3, 1, 2)), UsageError);
    CHECK_THROWS_AS((void)solve(FpMatrix(2, 2, 2), FpMatrix(2, 1, 3)), UsageError);
}

TEST_CASE("intersect: stated examples") {
    Subspace full4 = Subspace::full(4, 2);
    CHECK(intersect({full4, full4}) == full4);

    Subspace e12 = Subspace::row_space(FpMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}, 2));
    Subspace e23 = Subspace::row_space(FpMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}}, 2));
    Subspace e2 = Subspace::row_space(FpMatrix::from_rows({{0, 1, 0, 0}}, 2));
    CHECK(intersect({e12, e23}) == e2);

    Subspace k1 = kernel_basis(FpMatrix::from_rows({{1, 1, 0}}, 2));
    Subspace k2 = kernel_basis(FpMatrix::from_rows({{0, 1, 1}}, 2));
    Subspace meet = intersect({k1, k2});
    REQUIRE(meet.dim() == 1);
    std::vector<std::uint8_t> v = meet.basis().row(0);
    CHECK(v == std::vector<std::uint8_t>{1, 1, 1});
    /* both kernel conditions hold */
    CHECK((v[0] + v[1]) % 2 == 0);
    CHECK((v[1] + v[2]) % 2 == 0);

    CHECK_THROWS_AS(intersect({}), UsageError);
    CHECK_THROWS_AS(intersect({Subspace::full(2, 2), Subspace::full(3, 2)}), UsageError);
}

TEST_CASE("rank-nullity and solve consistency over random matrices") {
    std::mt19937 rng(20240901);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            FpMatrix a = random_matrix(rng, rows, cols, p);
            CHECK(rank(a) + kernel_basis(a).dim() == cols);

            /* consistent by construction: B = A X0 */
            FpMatrix x0 = random_matrix(rng, cols, 2, p);
            FpMatrix b = a * x0;
            auto x = solve(a, b);
            REQUIRE(x.has_value());
            CHECK(a * *x == b);

            /* kernel vectors really lie in the kernel */
            Subspace k = kernel_basis(a);
            for (std::size_t r = 0; r < k.dim(); ++r)
                for (auto y : a.apply(k.basis().row(r))) CHECK(y == 0);
        }
    }
}

TEST_CASE("echelon form is canonical on row-equivalent matrices") {
    std::mt19937 rng(7);
    for (unsigned p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 6;
            FpMatrix a = random_matrix(rng, rows, cols, p);
            /* random invertible row mixing */
            FpMatrix g = random_matrix(rng, rows, rows, p);
            while (rank(g) < rows) g = random_matrix(rng, rows, rows, p);
            CHECK(reduced_echelon(a).mat == reduced_echelon(g * a).mat);
        }
    }
}

TEST_CASE("intersect is idempotent, commutative, and embeds in every input") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t dim = 3 + rng() % 4;
        Subspace u = Subspace::row_space(random_matrix(rng, 1 + rng() % 3, dim, 2));
        Subspace v = Subspace::row_space(random_matrix(rng, 1 + rng() % 3, dim, 2));
        Subspace uv = intersect({u, v});
        CHECK(intersect({u, v, v}) == uv);
        CHECK(intersect({v, u}) == uv);
        CHECK(u.contains(uv));
        CHECK(v.contains(uv));
        CHECK(intersect({u, u}) == u);
    }
}

TEST_CASE("unsupported modulus rejected") {
    CHECK_THROWS_AS(FpMatrix(2, 2, 4), UsageError);
    CHECK_THROWS_AS(FpMatrix(2, 2, 11), UsageError);
}
