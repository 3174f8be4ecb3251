#ifndef STABLECOH_GROUP_ALGEBRA_HPP
#define STABLECOH_GROUP_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "stablecoh/fp_matrix.hpp"
#include "stablecoh/perm_group.hpp"

namespace stablecoh {

/* F_p[G] with the fixed (sorted) element enumeration of G.  Elements of the
 * algebra are coefficient vectors of length |G|. */
class GroupAlgebra {
public:
    using Elt = std::vector<std::uint8_t>;

    GroupAlgebra(PermGroup group, unsigned prime);

    const PermGroup& group() const { return group_; }
    unsigned prime() const { return p_; }
    std::size_t dim() const { return group_.order(); }

    std::size_t mul_index(std::size_t i, std::size_t j) const { return mul_[i * dim() + j]; }
    std::size_t inv_index(std::size_t i) const { return inv_[i]; }

    Elt zero() const { return Elt(dim(), 0); }
    Elt one() const;
    Elt basis(std::size_t g) const;

    Elt mul(const Elt& a, const Elt& b) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;

    unsigned augmentation(const Elt& a) const;

    /* true iff |G| is a power of p, i.e. the algebra is local with maximal
     * ideal the augmentation ideal */
    bool is_local() const { return group_.is_prime_power_order(p_); }

    /* least k with J^k = 0 (only for local algebras; k <= |G|) */
    std::size_t augmentation_ideal_nilpotency() const;

    /* Free modules are right modules: the group acts by right translation,
     * matrix entries multiply from the left.  This is blockwise right
     * translation by g on a vector laid out as `blocks` consecutive
     * coefficient vectors. */
    std::vector<std::uint8_t> act_right(std::size_t g, const std::vector<std::uint8_t>& v,
                                        std::size_t blocks) const;

private:
    PermGroup group_;
    unsigned p_;
    std::vector<std::uint16_t> mul_, inv_;
};

/* A map of free F_p[G]-modules, as a (target rank) x (source rank) array of
 * algebra elements acting by left multiplication.  Expansion to an F_p
 * matrix commutes with composition. */
class AlgebraMap {
public:
    AlgebraMap(std::shared_ptr<const GroupAlgebra> algebra, std::size_t target_rank,
               std::size_t source_rank);

    std::size_t source_rank() const { return src_; }
    std::size_t target_rank() const { return tgt_; }
    const GroupAlgebra& algebra() const { return *algebra_; }

    const GroupAlgebra::Elt& entry(std::size_t t, std::size_t s) const { return entries_[t * src_ + s]; }
    void set_entry(std::size_t t, std::size_t s, GroupAlgebra::Elt e);

    /* (target_rank * |G|) x (source_rank * |G|) matrix over F_p; the column
     * for source basis (s, g) is the image of e_s * g */
    FpMatrix expand() const;

    /* expansion restricted to the identity columns (s, e); this determines
     * the map and is what chain-map lifting solves for */
    FpMatrix identity_columns() const;

    AlgebraMap compose(const AlgebraMap& inner) const;  // this after inner

    /* all entries in the augmentation ideal */
    bool entries_in_augmentation_ideal() const;

private:
    std::shared_ptr<const GroupAlgebra> algebra_;
    std::size_t tgt_, src_;
    std::vector<GroupAlgebra::Elt> entries_;
};

}  // namespace stablecoh

#endif
