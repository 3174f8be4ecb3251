#ifndef STABLECOH_TESTS_ORACLES_HPP
#define STABLECOH_TESTS_ORACLES_HPP

/* Brute-force oracles used only by tests.  Everything here is written
 * against the raw element lists, independent of the library's enumeration
 * machinery. */

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "stablecoh/perm.hpp"
#include "stablecoh/perm_group.hpp"

namespace stablecoh::test_oracles {

/* subgroup count by exhausting all element subsets; |g| <= 16ish */
inline std::size_t subgroup_count_bruteforce(const PermGroup& g) {
    const std::size_t n = g.order();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (!(mask & 1)) continue;  // must contain the identity (index 0)
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) in.push_back(i);
        bool closed = true;
        for (auto i : in) {
            for (auto j : in) {
                std::size_t k = g.mul_index(i, j);
                if (!(mask & (std::size_t(1) << k))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) ++count;
    }
    return count;
}

/* count injective homomorphisms q -> p by depth-first assignment over q's
 * element list with immediate multiplicative consistency checks */
inline std::size_t injection_count_bruteforce(const PermGroup& q, const PermGroup& p) {
    const std::size_t nq = q.order(), np = p.order();
    std::vector<std::size_t> image(nq, np);  // np = unassigned
    std::vector<bool> used(np, false);
    image[0] = 0;  // identity to identity
    used[0] = true;

    std::size_t count = 0;
    auto consistent = [&](std::size_t i) {
        for (std::size_t j = 0; j < nq; ++j) {
            if (image[j] == np) continue;
            std::size_t ij = q.mul_index(i, j), ji = q.mul_index(j, i);
            if (image[ij] != np && image[ij] != p.mul_index(image[i], image[j])) return false;
            if (image[ji] != np && image[ji] != p.mul_index(image[j], image[i])) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < nq && image[i] != np) ++i;
        if (i == nq) {
            ++count;
            return;
        }
        for (std::size_t c = 0; c < np; ++c) {
            if (used[c]) continue;
            image[i] = c;
            used[c] = true;
            if (consistent(i)) rec(i + 1);
            image[i] = np;
            used[c] = false;
        }
    };
    rec(1);
    return count;
}

/* all conjugators in the full symmetric group on |p| points satisfying the
 * conjugation identity for phi; feasible for |p| <= 4 (24 candidates) */
inline std::vector<Perm> all_conjugators_bruteforce(const PermGroup& p, const GroupHom& phi) {
    const std::size_t n = p.order();
    std::vector<std::uint8_t> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = static_cast<std::uint8_t>(i);

    auto cayley = [&](const Perm& x) {
        std::size_t xi = p.index_of(x);
        std::vector<std::uint8_t> im(n);
        for (std::size_t g = 0; g < n; ++g) im[g] = static_cast<std::uint8_t>(p.mul_index(xi, g));
        return Perm(im);
    };

    std::vector<Perm> found;
    std::sort(points.begin(), points.end());
    do {
        Perm g((std::vector<std::uint8_t>(points.begin(), points.end())));
        Perm ginv = g.inverse();
        bool ok = true;
        for (std::size_t i = 0; i < phi.domain().order(); ++i) {
            Perm lhs = g * cayley(phi.domain().element(i)) * ginv;
            if (!(lhs == cayley(phi.map_element(i)))) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(g);
    } while (std::next_permutation(points.begin(), points.end()));
    return found;
}

}  // namespace stablecoh::test_oracles

#endif
