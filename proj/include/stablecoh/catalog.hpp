#ifndef STABLECOH_CATALOG_HPP
#define STABLECOH_CATALOG_HPP

#include <string>
#include <vector>

#include "stablecoh/perm_group.hpp"

namespace stablecoh {

/* Built-in groups, all as regular permutation representations:
 * cyclic p-groups to order 16, elementary abelian 2-groups to rank 4 and
 * 3-groups to rank 2, the dihedral and quaternion groups of order 8, and
 * Z/4 x Z/2. */
struct CatalogEntry {
    std::string name;
    unsigned natural_prime;
    PermGroup group;
};

const std::vector<CatalogEntry>& group_catalog();

PermGroup catalog_group(const std::string& name);
unsigned catalog_prime(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace stablecoh

#endif
