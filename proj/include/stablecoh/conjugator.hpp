#ifndef STABLECOH_CONJUGATOR_HPP
#define STABLECOH_CONJUGATOR_HPP

#include "stablecoh/perm_group.hpp"

namespace stablecoh {

/* The regular (left-translation) embedding of p into Sym(|p|), on the fixed
 * sorted element list.  The codomain group is the image subgroup. */
GroupHom cayley_embedding(const PermGroup& p);

/* left translation by a single element of p, as a permutation of the
 * element indices of p */
Perm cayley_image(const PermGroup& p, const Perm& x);

/* Witness for conjugating a subgroup injection into an inner map of the
 * ambient symmetric group: for every q in the domain of phi,
 *   conjugator * cayley(q) * conjugator^-1 == cayley(phi(q)).
 * phi maps a subgroup q of `ambient` into `ambient`; the conjugator lives in
 * Sym(|ambient|). */
struct ConjugatorWitness {
    GroupHom phi;        // q -> ambient
    GroupHom embedding;  // ambient -> image in Sym(|ambient|)
    Perm conjugator;

    bool verify() const;
};

/* Constructive form of the free-orbit matching argument: decompose the
 * element set of the ambient group into orbits under the two translation
 * actions of phi's domain (via the inclusion, and via phi), match orbits by
 * least representative, and read the conjugator off orbitwise. */
ConjugatorWitness find_conjugator(const GroupHom& phi);

}  // namespace stablecoh

#endif
