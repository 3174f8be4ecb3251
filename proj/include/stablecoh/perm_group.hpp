#ifndef STABLECOH_PERM_GROUP_HPP
#define STABLECOH_PERM_GROUP_HPP

#include <cstddef>
#include <vector>

#include "stablecoh/perm.hpp"

namespace stablecoh {

constexpr std::size_t kDefaultOrderCap = 20160;

/* A finite group carried as an explicit permutation group: the complete,
 * duplicate-free element list (sorted by image vector, so the identity is
 * element 0 and the list is canonical for the element set), the generators
 * used to build it, and a generator factorization for every element. */
class PermGroup {
public:
    PermGroup() = default;

    /* Breadth-first closure of the generators; fails above `order_cap`. */
    static PermGroup close_generators(std::size_t degree, std::vector<Perm> gens,
                                      std::size_t order_cap = kDefaultOrderCap);

    /* Rebuild a group from a closed element set, choosing a small generating
     * sequence greedily (first elements, in sorted order, that enlarge the
     * closure).  Used for subgroup objects. */
    static PermGroup from_element_set(std::size_t degree, std::vector<Perm> elements);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const Perm& element(std::size_t i) const { return elements_[i]; }

    /* identity is always index 0 */
    std::size_t identity_index() const { return 0; }

    bool contains(const Perm& x) const;
    std::size_t index_of(const Perm& x) const;  // throws if absent

    std::size_t mul_index(std::size_t i, std::size_t j) const;
    std::size_t inv_index(std::size_t i) const;

    /* words[i]: generator indices whose left-to-right product is element i */
    const std::vector<std::vector<std::uint8_t>>& words() const { return words_; }

    bool is_prime_power_order(unsigned p) const;
    bool is_subset_of(const PermGroup& g) const;

    bool operator==(const PermGroup& other) const {
        return degree_ == other.degree_ && elements_ == other.elements_;
    }

private:
    std::size_t degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;                      // sorted
    std::vector<std::vector<std::uint8_t>> words_;    // aligned with elements_
};

/* A homomorphism between permutation groups, given by generator images and
 * validated on construction (the induced full element map must be
 * multiplicative). */
class GroupHom {
public:
    GroupHom(PermGroup domain, PermGroup codomain, std::vector<Perm> gen_images);

    static GroupHom inclusion(const PermGroup& sub, const PermGroup& big);
    static GroupHom identity(const PermGroup& g);

    const PermGroup& domain() const { return domain_; }
    const PermGroup& codomain() const { return codomain_; }
    const std::vector<Perm>& gen_images() const { return gen_images_; }

    std::size_t map_index(std::size_t domain_index) const { return element_map_[domain_index]; }
    const Perm& map_element(std::size_t domain_index) const { return codomain_.element(element_map_[domain_index]); }
    Perm map(const Perm& x) const { return codomain_.element(element_map_[domain_.index_of(x)]); }

    bool is_injective() const { return injective_; }

    /* same underlying element images, larger codomain */
    GroupHom with_codomain(const PermGroup& new_codomain) const;

    bool operator==(const GroupHom& other) const {
        return domain_ == other.domain_ && codomain_ == other.codomain_ && element_map_ == other.element_map_;
    }

private:
    PermGroup domain_, codomain_;
    std::vector<Perm> gen_images_;
    std::vector<std::size_t> element_map_;
    bool injective_ = false;
};

/* g after f (usual composition; f's codomain must equal g's domain) */
GroupHom compose(const GroupHom& g, const GroupHom& f);

/* All subgroups of g, each exactly once as an element set.  |g| <= 64. */
std::vector<PermGroup> subgroups(const PermGroup& g);

/* All injective homomorphisms q -> p, duplicate-free.  |q| <= |p| <= 64. */
std::vector<GroupHom> injections(const PermGroup& q, const PermGroup& p);

}  // namespace stablecoh

#endif
