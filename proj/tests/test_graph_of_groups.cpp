#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stablecoh/catalog.hpp"
#include "stablecoh/errors.hpp"
#include "stablecoh/gamma_presentation.hpp"

using namespace stablecoh;

namespace {

Perm evaluate(const Word& w, const std::vector<Perm>& images, std::size_t degree) {
    Perm acc = Perm::identity(degree);
    for (const auto& [idx, inv] : w) acc = acc * (inv ? images[idx].inverse() : images[idx]);
    return acc;
}

std::size_t vertex_generator_count(const CategorySpec& c) {
    if (c.mode() == CategoryMode::subgroup) return c.ambient().generators().size();
    std::size_t s = 0;
    for (const auto& o : c.objects()) s += o.group.generators().size();
    return s;
}

/* relation count = vertex table relations + one per (morphism, edge-group
 * generator) pair */
std::size_t expected_relations(const CategorySpec& c) {
    std::size_t s = 0;
    if (c.mode() == CategoryMode::subgroup) {
        std::size_t k = c.ambient().generators().size();
        s = k * k;
    } else {
        for (const auto& o : c.objects()) {
            std::size_t k = o.group.generators().size();
            s += k * k;
        }
    }
    for (const auto& m : c.morphisms()) s += m.hom.domain().generators().size();
    return s;
}

}  // namespace

TEST_CASE("gamma presentation: identity category on Z/2") {
    CategorySpec c = CategorySpec::identity_preset(catalog_group("z2"), 2);
    GammaPresentation pres = gamma_presentation(c);
    REQUIRE(pres.generator_names.size() == 2);  // a and the stable letter
    CHECK(pres.generator_names[0] == "a");
    CHECK(pres.generator_names[1] == "t1");
    REQUIRE(pres.relations.size() == 2);
    /* a a and t1 a t1' a' */
    CHECK(pres.relations[0] == Word{{0, false}, {0, false}});
    CHECK(pres.relations[1] == Word{{1, false}, {0, false}, {1, true}, {0, true}});
}

TEST_CASE("gamma presentation: generator and relation counts") {
    /* the GL_2 category on the Klein group: 2 + 6 generators, 4 + 12 relations */
    CategorySpec gl = CategorySpec::aut_preset(catalog_group("klein4"), 2);
    GammaPresentation pres = gamma_presentation(gl);
    CHECK(pres.generator_names.size() == 2 + 6);
    CHECK(pres.relations.size() == 4 + 6 * 2);
    CHECK(pres.relations.size() == expected_relations(gl));

    for (const auto& name : {"z4", "q8", "d8"}) {
        CategorySpec cu = CategorySpec::cu_preset(catalog_group(name), 2);
        GammaPresentation p2 = gamma_presentation(cu);
        CHECK(p2.generator_names.size() ==
              vertex_generator_count(cu) + cu.morphisms().size());
        CHECK(p2.relations.size() == expected_relations(cu));
    }
}

TEST_CASE("gamma presentation: text format round trip") {
    for (const auto& name : {"z2", "z4", "klein4"}) {
        CategorySpec cu = CategorySpec::cu_preset(catalog_group(name), 2);
        GammaPresentation pres = gamma_presentation(cu);
        GammaPresentation back = GammaPresentation::parse(pres.to_text());
        CHECK(back == pres);
    }
    CHECK_THROWS_AS(GammaPresentation::parse("rel a b"), UsageError);
    CHECK_THROWS_AS(GammaPresentation::parse("bogus line"), UsageError);
}

TEST_CASE("finite quotient: identity category") {
    for (const auto& name : {"z2", "z4", "klein4", "q8"}) {
        PermGroup p = catalog_group(name);
        CategorySpec c = CategorySpec::identity_preset(p, 2);
        FiniteQuotientReport rep = finite_quotient(c);
        CHECK(rep.relations_hold);
        CHECK(rep.restriction_injective);
        CHECK(rep.order_divides_bound);
        /* the identity morphism needs no motion: the image is the regular
         * copy of P itself */
        CHECK(rep.image_order == p.order());
        CHECK(rep.order_bound % p.order() == 0);
    }
}

TEST_CASE("finite quotient: GL_2 category on the Klein group") {
    CategorySpec gl = CategorySpec::aut_preset(catalog_group("klein4"), 2);
    FiniteQuotientReport rep = finite_quotient(gl);
    CHECK(rep.presentation.relations.size() == 16);
    CHECK(rep.relations_hold);
    CHECK(rep.restriction_injective);
    CHECK(rep.order_bound == 24);
    CHECK(rep.order_divides_bound);
    CHECK(rep.image_order % 4 == 0);

    /* every conjugator is one of the exhaustive Sym(4) witnesses */
    PermGroup p = catalog_group("klein4");
    for (std::size_t i = 0; i < gl.morphisms().size(); ++i) {
        auto valid = test_oracles::all_conjugators_bruteforce(p, gl.morphisms()[i].hom);
        CHECK(std::count(valid.begin(), valid.end(), rep.witnesses[i].conjugator) == 1);
    }
}

TEST_CASE("finite quotient: C_u categories, conjugation realized") {
    for (const auto& name : {"z4", "klein4", "q8", "d8"}) {
        PermGroup p = catalog_group(name);
        CategorySpec cu = CategorySpec::cu_preset(p, 2);
        FiniteQuotientReport rep = finite_quotient(cu, 100000);
        CHECK(rep.relations_hold);
        CHECK(rep.restriction_injective);
        CHECK(rep.order_divides_bound);
        CHECK(rep.image_order % p.order() == 0);

        /* the image of t_i conjugates the image of q to the image of phi_i(q) */
        for (std::size_t i = 0; i < cu.morphisms().size(); ++i) {
            const auto& m = cu.morphisms()[i];
            const Perm& t = rep.witnesses[i].conjugator;
            Perm tinv = t.inverse();
            const PermGroup& q = m.hom.domain();
            for (std::size_t e = 0; e < q.order(); ++e) {
                Perm lhs = t * cayley_image(p, q.element(e)) * tinv;
                Perm rhs = cayley_image(p, m.hom.map_element(e));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("finite quotient: every presentation relation, evaluated directly") {
    for (const auto& name : {"z4", "klein4", "q8"}) {
        CategorySpec cu = CategorySpec::cu_preset(catalog_group(name), 2);
        FiniteQuotientReport rep = finite_quotient(cu, 100000);
        for (const auto& rel : rep.presentation.relations)
            CHECK(evaluate(rel, rep.generator_images, catalog_group(name).order()).is_identity());
    }
}

TEST_CASE("abstract-mode presentation: spanning tree and stable letters") {
    /* two abstract copies of Z/2 joined by one isomorphism: a tree edge, so
     * no stable letters; adding the inverse morphism creates one */
    PermGroup z2 = catalog_group("z2");
    CategoryObject a{"A", z2}, b{"B", z2};
    GroupHom iso(z2, z2, {z2.generators()[0]});
    CategorySpec tree(2, CategoryMode::abstract_groups, {a, b},
                      {CategoryMorphism{"A", "B", iso}});
    GammaPresentation p1 = gamma_presentation(tree);
    CHECK(p1.generator_names == std::vector<std::string>{"A.a", "B.a"});
    CHECK(p1.relations.size() == 1 + 1 + 1);  // two vertex tables + one edge identification

    CategorySpec loop(2, CategoryMode::abstract_groups, {a, b},
                      {CategoryMorphism{"A", "B", iso}, CategoryMorphism{"B", "A", iso}});
    GammaPresentation p2 = gamma_presentation(loop);
    CHECK(p2.generator_names.size() == 3);  // one stable letter for the non-tree edge
    CHECK(p2.generator_names[2] == "t1");
    CHECK(p2.relations.size() == 1 + 1 + 2);

    /* disconnected input is rejected */
    CategorySpec disc(2, CategoryMode::abstract_groups, {a, b}, {});
    CHECK_THROWS_AS(gamma_presentation(disc), UsageError);
    /* quotient construction is subgroup-mode only */
    CHECK_THROWS_AS(finite_quotient(loop), UsageError);
}
