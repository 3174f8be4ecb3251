#ifndef STABLECOH_TESTS_BAR_COCHAIN_ORACLE_HPP
#define STABLECOH_TESTS_BAR_COCHAIN_ORACLE_HPP

/* Tiny normalized-bar-cochain machinery for cross-checking cup products and
 * induced maps on groups of order <= 4.  Written directly against the
 * definition; shares nothing with the resolution engine. */

#include <vector>

#include "stablecoh/fp_matrix.hpp"
#include "stablecoh/perm_group.hpp"

namespace stablecoh::test_oracles {

/* index of a k-tuple of nonidentity elements (group indices 1..m-1) */
inline std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t m1) {
    std::size_t idx = 0;
    for (auto d : t) idx = idx * m1 + (d - 1);
    return idx;
}

/* delta^1 : C^1 -> C^2, (delta c)(g,h) = c(h) - c(gh) + c(g), gh = e dropped */
inline FpMatrix bar_delta1(const PermGroup& g, unsigned p) {
    const std::size_t m = g.order(), m1 = m - 1;
    FpMatrix d(m1 * m1, m1, p);
    for (std::size_t a = 1; a < m; ++a)
        for (std::size_t b = 1; b < m; ++b) {
            std::size_t row = tuple_index({a, b}, m1);
            d.add_at(row, b - 1, 1);
            std::size_t ab = g.mul_index(a, b);
            if (ab != 0) d.add_at(row, ab - 1, p - 1);
            d.add_at(row, a - 1, 1);
        }
    return d;
}

/* delta^2 : C^2 -> C^3 */
inline FpMatrix bar_delta2(const PermGroup& g, unsigned p) {
    const std::size_t m = g.order(), m1 = m - 1;
    FpMatrix d(m1 * m1 * m1, m1 * m1, p);
    for (std::size_t a = 1; a < m; ++a)
        for (std::size_t b = 1; b < m; ++b)
            for (std::size_t c = 1; c < m; ++c) {
                std::size_t row = tuple_index({a, b, c}, m1);
                d.add_at(row, tuple_index({b, c}, m1), 1);
                std::size_t ab = g.mul_index(a, b);
                if (ab != 0) d.add_at(row, tuple_index({ab, c}, m1), p - 1);
                std::size_t bc = g.mul_index(b, c);
                if (bc != 0) d.add_at(row, tuple_index({a, bc}, m1), 1);
                d.add_at(row, tuple_index({a, b}, m1), p - 1);
            }
    return d;
}

/* (f cup h)(g1,g2) = f(g1) h(g2) as a 2-cochain row vector */
inline std::vector<std::uint8_t> bar_cup11(const PermGroup& g, unsigned p,
                                           const std::vector<std::uint8_t>& f,
                                           const std::vector<std::uint8_t>& h) {
    const std::size_t m1 = g.order() - 1;
    std::vector<std::uint8_t> out(m1 * m1);
    for (std::size_t a = 0; a < m1; ++a)
        for (std::size_t b = 0; b < m1; ++b)
            out[a * m1 + b] = static_cast<std::uint8_t>((f[a] * h[b]) % p);
    return out;
}

/* dimension of the span of given 2-cocycle classes modulo coboundaries */
inline std::size_t h2_span_dim(const PermGroup& g, unsigned p,
                               const std::vector<std::vector<std::uint8_t>>& cochains) {
    /* rows spanning B^2: the images of the basis 1-cochains under delta^1 */
    FpMatrix b2 = bar_delta1(g, p).transpose();
    std::size_t base = rank(b2);
    FpMatrix all = b2;
    for (const auto& row : cochains) {
        FpMatrix one(1, row.size(), p);
        one.set_row(0, row);
        all = all.vstack(one);
    }
    return rank(all) - base;
}

}  // namespace stablecoh::test_oracles

#endif
