#ifndef STABLECOH_CATEGORY_HPP
#define STABLECOH_CATEGORY_HPP

#include <string>
#include <vector>

#include "stablecoh/perm_group.hpp"

namespace stablecoh {

enum class CategoryMode { subgroup, abstract_groups };

struct CategoryObject {
    std::string name;
    PermGroup group;
};

struct CategoryMorphism {
    std::string from, to;
    GroupHom hom;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> issues;
    std::size_t components = 1;       // abstract mode
    bool completion_available = false;  // abstract mode, components > 1
};

/* A finite category of groups and injective homomorphisms, the input to
 * both the stable-element limit and the one-vertex group construction.
 *
 * subgroup mode: one ambient group (the object named "P"); every object is
 * a subgroup of P and its inclusion into P must be listed as a morphism.
 * abstract mode: finitely many abstract groups, any injective morphisms.
 * The morphism list is taken literally; identity morphisms contribute
 * vacuous limit conditions but real edges. */
class CategorySpec {
public:
    CategorySpec(unsigned prime, CategoryMode mode, std::vector<CategoryObject> objects,
                 std::vector<CategoryMorphism> morphisms);

    unsigned prime() const { return prime_; }
    CategoryMode mode() const { return mode_; }
    const std::vector<CategoryObject>& objects() const { return objects_; }
    const std::vector<CategoryMorphism>& morphisms() const { return morphisms_; }

    std::size_t object_index(const std::string& name) const;
    const CategoryObject& object(const std::string& name) const;
    std::size_t ambient_index() const;  // subgroup mode: the object named "P"
    const PermGroup& ambient() const { return objects_[ambient_index()].group; }

    ValidationReport validate() const;
    std::size_t connected_components() const;

    /* abstract mode: adjoin a trivial group as an initial object (one new
     * object, one morphism from it to every other object) */
    CategorySpec with_initial_object() const;

    /* only the morphisms whose target is the ambient object */
    CategorySpec restricted_to_ambient_targets() const;

    std::string to_json() const;
    static CategorySpec from_json(const std::string& text);
    static CategorySpec load(const std::string& path);

    /* presets */
    static CategorySpec identity_preset(const PermGroup& p, unsigned prime);
    static CategorySpec aut_preset(const PermGroup& p, unsigned prime);
    static CategorySpec cu_preset(const PermGroup& p, unsigned prime);

private:
    unsigned prime_;
    CategoryMode mode_;
    std::vector<CategoryObject> objects_;
    std::vector<CategoryMorphism> morphisms_;
};

}  // namespace stablecoh

#endif
