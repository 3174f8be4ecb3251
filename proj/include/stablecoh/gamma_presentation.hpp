#ifndef STABLECOH_GAMMA_PRESENTATION_HPP
#define STABLECOH_GAMMA_PRESENTATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stablecoh/category.hpp"
#include "stablecoh/conjugator.hpp"

namespace stablecoh {

/* A letter is a generator index plus an inversion flag. */
using Letter = std::pair<std::uint16_t, bool>;
using Word = std::vector<Letter>;

/* Presentation of the one-vertex group of a subgroup category (or the
 * one-vertex-per-object group of a connected abstract one): vertex-group
 * generators plus one stable letter per non-tree edge, with the vertex
 * groups' generator-table relations and one conjugation relation per
 * (edge, edge-group generator) pair.
 *
 * Text format: "gen <name>" lines then "rel <word>" lines; a word is
 * space-separated generator names, inverses marked by a trailing
 * apostrophe.  The format round-trips. */
struct GammaPresentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relations;

    std::string to_text() const;
    static GammaPresentation parse(const std::string& text);

    bool operator==(const GammaPresentation& other) const {
        return generator_names == other.generator_names && relations == other.relations;
    }
};

GammaPresentation gamma_presentation(const CategorySpec& c);

/* The finite quotient from the tree action: vertex generators map to their
 * Cayley images in Sym(|P|), each stable letter to a conjugator realizing
 * its morphism, every relation checked, image order computed by closure. */
struct FiniteQuotientReport {
    GammaPresentation presentation;
    std::vector<Perm> generator_images;        // aligned with generator_names
    std::vector<ConjugatorWitness> witnesses;  // one per morphism
    std::size_t image_order = 0;
    std::uint64_t order_bound = 0;  // |P|!
    bool relations_hold = false;
    bool restriction_injective = false;
    bool order_divides_bound = false;

    bool all_checks_pass() const {
        return relations_hold && restriction_injective && order_divides_bound;
    }
};

FiniteQuotientReport finite_quotient(const CategorySpec& c, std::size_t closure_cap = 500000);

}  // namespace stablecoh

#endif
