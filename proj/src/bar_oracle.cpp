#include "stablecoh/bar_oracle.hpp"

#include <cstdint>
#include <vector>

#include "stablecoh/errors.hpp"
#include "stablecoh/fp_matrix.hpp"

namespace stablecoh {

namespace {

/* The normalized bar differential C^k -> C^{k+1}, on the basis of k-tuples
 * of nonidentity elements (mixed-radix index, first coordinate most
 * significant).  Faces whose merged entry is the identity are dropped. */
FpMatrix bar_differential(const PermGroup& g, unsigned p, std::size_t k) {
    const std::size_t m = g.order();
    const std::size_t ni = m - 1;  // nonidentity elements, group indices 1..m-1
    std::size_t rows = 1, cols = 1;
    for (std::size_t i = 0; i < k + 1; ++i) rows *= ni;
    for (std::size_t i = 0; i < k; ++i) cols *= ni;

    std::vector<std::vector<std::uint8_t>> mul(m, std::vector<std::uint8_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) mul[i][j] = static_cast<std::uint8_t>(g.mul_index(i, j));

    FpMatrix d(rows, cols, p);
    std::vector<std::size_t> digits(k + 1);
    for (std::size_t row = 0; row < rows; ++row) {
        std::size_t t = row;
        for (std::size_t i = k + 1; i-- > 0;) {
            digits[i] = t % ni;
            t /= ni;
        }
        auto col_of = [&](std::size_t skip, bool merge) {
            /* face tuple: drop position `skip`, or merge positions skip,skip+1 */
            std::size_t idx = 0;
            for (std::size_t i = 0; i <= k; ++i) {
                if (!merge && i == skip) continue;
                std::size_t dig = digits[i];
                if (merge) {
                    if (i == skip + 1) continue;
                    if (i == skip) {
                        std::size_t prod = mul[digits[i] + 1][digits[i + 1] + 1];
                        if (prod == 0) return static_cast<std::size_t>(cols);  // normalized: drop
                        dig = prod - 1;
                    }
                }
                idx = idx * ni + dig;
            }
            return idx;
        };
        /* front face, +1 */
        d.add_at(row, col_of(0, false), 1);
        /* inner faces, (-1)^i for the merge at positions (i-1, i), i = 1..k */
        for (std::size_t i = 1; i <= k; ++i) {
            std::size_t c = col_of(i - 1, true);
            if (c < cols) d.add_at(row, c, (i % 2) ? p - 1 : 1);
        }
        /* back face, (-1)^{k+1} */
        d.add_at(row, col_of(k, false), ((k + 1) % 2) ? p - 1 : 1);
    }
    return d;
}

}  // namespace

std::size_t bar_betti_oracle(const PermGroup& g, unsigned p, std::size_t n) {
    if (g.order() > 8) throw UsageError("bar_betti_oracle: order cap 8 exceeded");
    if (n > 4) throw UsageError("bar_betti_oracle: degree cap 4 exceeded");
    if (!is_supported_prime(p)) throw UsageError("bar_betti_oracle: unsupported prime");
    if (n == 0) return 1;

    std::size_t dim_cn = 1;
    for (std::size_t i = 0; i < n; ++i) dim_cn *= g.order() - 1;

    std::size_t rank_out = rank(bar_differential(g, p, n));
    std::size_t rank_in = rank(bar_differential(g, p, n - 1));
    return dim_cn - rank_out - rank_in;
}

}  // namespace stablecoh
