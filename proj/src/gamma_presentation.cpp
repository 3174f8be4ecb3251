#include "stablecoh/gamma_presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stablecoh/errors.hpp"
#include "stablecoh/parallel.hpp"

namespace stablecoh {

namespace {

std::string vertex_gen_name(std::size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('a' + k));
    return "g" + std::to_string(k + 1);
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, !it->second);
    return out;
}

/* the canonical generator word of element i, as letters offset into the
 * global generator numbering */
Word element_word(const PermGroup& g, std::size_t i, std::uint16_t offset) {
    Word out;
    for (auto k : g.words()[i]) out.emplace_back(static_cast<std::uint16_t>(offset + k), false);
    return out;
}

/* generator-table relations of one vertex group: x y w(xy)^-1 over ordered
 * generator pairs */
void append_table_relations(const PermGroup& g, std::uint16_t offset, std::vector<Word>& out) {
    for (std::size_t i = 0; i < g.generators().size(); ++i)
        for (std::size_t j = 0; j < g.generators().size(); ++j) {
            std::size_t prod = g.index_of(g.generators()[i] * g.generators()[j]);
            Word rel;
            rel.emplace_back(static_cast<std::uint16_t>(offset + i), false);
            rel.emplace_back(static_cast<std::uint16_t>(offset + j), false);
            Word inv = inverse_word(element_word(g, prod, offset));
            rel.insert(rel.end(), inv.begin(), inv.end());
            out.push_back(std::move(rel));
        }
}

/* BFS spanning tree over the object graph; returns the set of tree-edge
 * morphism indices.  Loops are never tree edges. */
std::set<std::size_t> spanning_tree(const CategorySpec& c) {
    std::set<std::size_t> tree;
    std::vector<bool> seen(c.objects().size(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t mi = 0; mi < c.morphisms().size(); ++mi) {
            std::size_t s = c.object_index(c.morphisms()[mi].from);
            std::size_t t = c.object_index(c.morphisms()[mi].to);
            std::size_t here = queue[qi];
            std::size_t other;
            if (s == here && !seen[t]) other = t;
            else if (t == here && !seen[s]) other = s;
            else continue;
            seen[other] = true;
            tree.insert(mi);
            queue.push_back(other);
        }
    }
    return tree;
}

}  // namespace

GammaPresentation gamma_presentation(const CategorySpec& c) {
    auto validation = c.validate();
    if (!validation.valid)
        throw UsageError("gamma_presentation: invalid category: " +
                         (validation.issues.empty() ? "" : validation.issues.front()));

    GammaPresentation pres;

    if (c.mode() == CategoryMode::subgroup) {
        const PermGroup& p = c.ambient();
        for (std::size_t k = 0; k < p.generators().size(); ++k)
            pres.generator_names.push_back(vertex_gen_name(k));
        for (std::size_t i = 0; i < c.morphisms().size(); ++i)
            pres.generator_names.push_back("t" + std::to_string(i + 1));

        append_table_relations(p, 0, pres.relations);

        for (std::size_t mi = 0; mi < c.morphisms().size(); ++mi) {
            const auto& m = c.morphisms()[mi];
            const PermGroup& q = m.hom.domain();
            std::uint16_t t_idx = static_cast<std::uint16_t>(p.generators().size() + mi);
            for (std::size_t k = 0; k < q.generators().size(); ++k) {
                const Perm& qgen = q.generators()[k];
                const Perm image = m.hom.map(qgen);  // lands in the target, an element of P
                Word rel;
                rel.emplace_back(t_idx, false);
                Word wq = element_word(p, p.index_of(qgen), 0);
                rel.insert(rel.end(), wq.begin(), wq.end());
                rel.emplace_back(t_idx, true);
                Word winv = inverse_word(element_word(p, p.index_of(image), 0));
                rel.insert(rel.end(), winv.begin(), winv.end());
                pres.relations.push_back(std::move(rel));
            }
        }
        return pres;
    }

    /* abstract mode: one vertex per object; tree edges identify, non-tree
     * edges get stable letters */
    if (c.connected_components() != 1)
        throw UsageError("gamma_presentation: the category is disconnected");

    std::vector<std::uint16_t> offset(c.objects().size());
    std::uint16_t next = 0;
    for (std::size_t j = 0; j < c.objects().size(); ++j) {
        offset[j] = next;
        const auto& o = c.objects()[j];
        for (std::size_t k = 0; k < o.group.generators().size(); ++k)
            pres.generator_names.push_back(o.name + "." + vertex_gen_name(k));
        next = static_cast<std::uint16_t>(next + o.group.generators().size());
    }
    std::set<std::size_t> tree = spanning_tree(c);
    std::map<std::size_t, std::uint16_t> t_of;
    std::size_t t_count = 0;
    for (std::size_t mi = 0; mi < c.morphisms().size(); ++mi) {
        if (tree.count(mi)) continue;
        t_of[mi] = static_cast<std::uint16_t>(next + t_count);
        pres.generator_names.push_back("t" + std::to_string(++t_count));
    }

    for (std::size_t j = 0; j < c.objects().size(); ++j)
        append_table_relations(c.objects()[j].group, offset[j], pres.relations);

    for (std::size_t mi = 0; mi < c.morphisms().size(); ++mi) {
        const auto& m = c.morphisms()[mi];
        std::size_t s = c.object_index(m.from), t = c.object_index(m.to);
        const PermGroup& src = m.hom.domain();
        const PermGroup& dst = m.hom.codomain();
        for (std::size_t k = 0; k < src.generators().size(); ++k) {
            Word ws = element_word(src, src.index_of(src.generators()[k]), offset[s]);
            Word wt_inv =
                inverse_word(element_word(dst, dst.index_of(m.hom.map(src.generators()[k])), offset[t]));
            Word rel;
            if (tree.count(mi)) {
                rel = ws;
                rel.insert(rel.end(), wt_inv.begin(), wt_inv.end());
            } else {
                rel.emplace_back(t_of[mi], false);
                rel.insert(rel.end(), ws.begin(), ws.end());
                rel.emplace_back(t_of[mi], true);
                rel.insert(rel.end(), wt_inv.begin(), wt_inv.end());
            }
            pres.relations.push_back(std::move(rel));
        }
    }
    return pres;
}

std::string GammaPresentation::to_text() const {
    std::ostringstream os;
    for (const auto& name : generator_names) os << "gen " << name << "\n";
    for (const auto& rel : relations) {
        os << "rel";
        for (const auto& [idx, inv] : rel) os << " " << generator_names[idx] << (inv ? "'" : "");
        os << "\n";
    }
    return os.str();
}

GammaPresentation GammaPresentation::parse(const std::string& text) {
    GammaPresentation pres;
    std::map<std::string, std::uint16_t> index;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "gen") {
            std::string name;
            if (!(ls >> name)) throw UsageError("presentation parse: bare 'gen' line");
            index[name] = static_cast<std::uint16_t>(pres.generator_names.size());
            pres.generator_names.push_back(name);
        } else if (kind == "rel") {
            Word rel;
            std::string tok;
            while (ls >> tok) {
                bool inv = !tok.empty() && tok.back() == '\'';
                if (inv) tok.pop_back();
                auto it = index.find(tok);
                if (it == index.end())
                    throw UsageError("presentation parse: unknown generator \"" + tok + "\"");
                rel.emplace_back(it->second, inv);
            }
            pres.relations.push_back(std::move(rel));
        } else {
            throw UsageError("presentation parse: unknown line kind \"" + kind + "\"");
        }
    }
    return pres;
}

FiniteQuotientReport finite_quotient(const CategorySpec& c, std::size_t closure_cap) {
    if (c.mode() != CategoryMode::subgroup)
        throw UsageError("finite_quotient: subgroup mode only (the conjugator construction needs "
                         "a common ambient group)");
    FiniteQuotientReport rep;
    rep.presentation = gamma_presentation(c);

    const PermGroup& p = c.ambient();
    if (p.order() > 16) throw UsageError("finite_quotient: ambient order cap 16 exceeded");

    /* vertex generators: Cayley images */
    for (const auto& gen : p.generators()) rep.generator_images.push_back(cayley_image(p, gen));

    /* stable letters: one conjugator per morphism, for the composite into P */
    rep.witnesses.reserve(c.morphisms().size());
    for (const auto& m : c.morphisms()) {
        GroupHom into_p = m.to == "P" ? m.hom : m.hom.with_codomain(p);
        rep.witnesses.push_back(find_conjugator(into_p));
        rep.generator_images.push_back(rep.witnesses.back().conjugator);
    }

    /* every relation must map to the identity permutation */
    std::vector<char> ok(rep.presentation.relations.size(), 0);
    parallel_for(rep.presentation.relations.size(), [&](std::size_t i) {
        Perm acc = Perm::identity(p.order());
        for (const auto& [idx, inv] : rep.presentation.relations[i]) {
            const Perm& g = rep.generator_images[idx];
            acc = acc * (inv ? g.inverse() : g);
        }
        ok[i] = acc.is_identity() ? 1 : 0;
    });
    rep.relations_hold = std::all_of(ok.begin(), ok.end(), [](char v) { return v == 1; });
    if (!rep.relations_hold)
        throw InternalCheckError("finite_quotient: a presentation relation does not map to the "
                                 "identity (conjugator construction is broken)");

    /* the restriction to P is the Cayley embedding, which is injective */
    std::set<Perm> cayley_perms;
    for (std::size_t i = 0; i < p.order(); ++i) cayley_perms.insert(cayley_image(p, p.element(i)));
    rep.restriction_injective = cayley_perms.size() == p.order();

    /* image order by closure in Sym(|P|) */
    std::set<Perm> closure{Perm::identity(p.order())};
    std::vector<Perm> queue{Perm::identity(p.order())};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& g : rep.generator_images) {
            Perm nxt = g * queue[qi];
            if (closure.insert(nxt).second) {
                if (closure.size() > closure_cap)
                    throw UsageError("finite_quotient: image closure cap exceeded");
                queue.push_back(std::move(nxt));
            }
        }
    rep.image_order = closure.size();

    rep.order_bound = 1;
    for (std::size_t i = 2; i <= p.order(); ++i) rep.order_bound *= i;
    rep.order_divides_bound = rep.order_bound % rep.image_order == 0;
    return rep;
}

}  // namespace stablecoh
