#ifndef STABLECOH_BAR_ORACLE_HPP
#define STABLECOH_BAR_ORACLE_HPP

#include <cstddef>

#include "stablecoh/perm_group.hpp"

namespace stablecoh {

/* dim H^n(G; F_p) from the normalized bar complex (cochain spaces of
 * dimension (|G|-1)^n).  Independent of the resolution machinery; serves as
 * its verification oracle.  |G| <= 8, n <= 4. */
std::size_t bar_betti_oracle(const PermGroup& g, unsigned p, std::size_t n);

}  // namespace stablecoh

#endif
