#include "stablecoh/stable_limits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stablecoh/errors.hpp"
#include "stablecoh/parallel.hpp"

namespace stablecoh {

std::vector<std::size_t> StableReport::limit_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(limit_bases.size());
    for (const auto& s : limit_bases) dims.push_back(s.dim());
    return dims;
}

StableContext::StableContext(CategorySpec spec, std::size_t max_degree)
    : spec_(std::move(spec)), max_degree_(max_degree) {
    auto report = spec_.validate();
    if (!report.valid) {
        std::ostringstream os;
        os << "invalid category:";
        for (const auto& issue : report.issues) os << "\n  " << issue;
        throw UsageError(os.str());
    }
    resolutions_.resize(spec_.objects().size());
    parallel_for(spec_.objects().size(), [&](std::size_t i) {
        resolutions_[i] = minimal_resolution(spec_.objects()[i].group, spec_.prime(), max_degree_);
    });
    build_lifts();
}

const Resolution& StableContext::resolution(const std::string& name) const {
    return resolutions_[spec_.object_index(name)];
}

const Resolution& StableContext::ambient_resolution() const {
    return resolutions_[spec_.ambient_index()];
}

void StableContext::build_lifts() {
    const auto& morphisms = spec_.morphisms();
    morphism_stars_.resize(morphisms.size());

    if (spec_.mode() == CategoryMode::subgroup) {
        const std::size_t pi = spec_.ambient_index();
        const Resolution& rp = resolutions_[pi];

        /* distinct lift jobs: inclusions of all objects, plus the composite
         * of each morphism with its target's inclusion into P */
        using Key = std::pair<std::size_t, std::vector<std::size_t>>;
        std::map<Key, std::size_t> job_of;
        std::vector<GroupHom> job_hom;
        std::vector<std::size_t> job_source;
        auto job_for = [&](std::size_t src_idx, const GroupHom& into_p) {
            std::vector<std::size_t> sig(into_p.domain().order());
            for (std::size_t i = 0; i < sig.size(); ++i) sig[i] = into_p.map_index(i);
            auto [it, fresh] = job_of.try_emplace(Key{src_idx, std::move(sig)}, job_hom.size());
            if (fresh) {
                job_hom.push_back(into_p);
                job_source.push_back(src_idx);
            }
            return it->second;
        };

        std::vector<std::size_t> incl_job(spec_.objects().size());
        for (std::size_t i = 0; i < spec_.objects().size(); ++i)
            incl_job[i] =
                job_for(i, GroupHom::inclusion(spec_.objects()[i].group, spec_.objects()[pi].group));
        std::vector<std::size_t> morph_job(morphisms.size());
        for (std::size_t i = 0; i < morphisms.size(); ++i) {
            const auto& m = morphisms[i];
            std::size_t src = spec_.object_index(m.from);
            GroupHom into_p = spec_.object_index(m.to) == pi
                                  ? m.hom
                                  : m.hom.with_codomain(spec_.objects()[pi].group);
            morph_job[i] = job_for(src, into_p);
        }

        std::vector<std::vector<FpMatrix>> job_mats(job_hom.size());
        parallel_for(job_hom.size(), [&](std::size_t j) {
            RestrictionLift lift(job_hom[j], rp, resolutions_[job_source[j]], max_degree_);
            std::vector<FpMatrix> mats;
            mats.reserve(max_degree_ + 1);
            for (std::size_t n = 0; n <= max_degree_; ++n) mats.push_back(lift.cohomology_matrix(n));
            job_mats[j] = std::move(mats);
        });

        inclusion_stars_.resize(spec_.objects().size());
        for (std::size_t i = 0; i < spec_.objects().size(); ++i)
            inclusion_stars_[i] = job_mats[incl_job[i]];
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            morphism_stars_[i] = job_mats[morph_job[i]];
    } else {
        parallel_for(morphisms.size(), [&](std::size_t i) {
            const auto& m = morphisms[i];
            RestrictionLift lift(m.hom, resolutions_[spec_.object_index(m.to)],
                                 resolutions_[spec_.object_index(m.from)], max_degree_);
            std::vector<FpMatrix> mats;
            mats.reserve(max_degree_ + 1);
            for (std::size_t n = 0; n <= max_degree_; ++n) mats.push_back(lift.cohomology_matrix(n));
            morphism_stars_[i] = std::move(mats);
        });
    }
}

std::size_t StableContext::sum_object_dim(std::size_t degree) const {
    std::size_t s = 0;
    for (const auto& r : resolutions_) s += r.rank(degree);
    return s;
}

const FpMatrix& StableContext::condition_map(std::size_t degree) {
    if (degree > max_degree_) throw UsageError("condition_map: degree out of range");
    auto it = condition_cache_.find(degree);
    if (it != condition_cache_.end()) return it->second;

    const auto& morphisms = spec_.morphisms();
    const unsigned p = spec_.prime();
    FpMatrix mat;

    if (spec_.mode() == CategoryMode::subgroup) {
        const std::size_t pi = spec_.ambient_index();
        const std::size_t cols = resolutions_[pi].rank(degree);
        std::size_t rows = 0;
        for (const auto& m : morphisms) rows += resolutions_[spec_.object_index(m.from)].rank(degree);
        mat = FpMatrix(rows, cols, p);
        std::size_t row0 = 0;
        for (std::size_t i = 0; i < morphisms.size(); ++i) {
            std::size_t src = spec_.object_index(morphisms[i].from);
            const FpMatrix& incl = inclusion_stars_[src][degree];
            const FpMatrix& star = morphism_stars_[i][degree];
            for (std::size_t r = 0; r < incl.rows(); ++r)
                for (std::size_t c = 0; c < cols; ++c) {
                    unsigned v = (incl.at(r, c) + p - star.at(r, c)) % p;
                    if (v) mat.set(row0 + r, c, v);
                }
            row0 += incl.rows();
        }
    } else {
        std::vector<std::size_t> col_off(spec_.objects().size() + 1, 0);
        for (std::size_t j = 0; j < spec_.objects().size(); ++j)
            col_off[j + 1] = col_off[j] + resolutions_[j].rank(degree);
        std::size_t rows = 0;
        for (const auto& m : morphisms) rows += resolutions_[spec_.object_index(m.from)].rank(degree);
        mat = FpMatrix(rows, col_off.back(), p);
        std::size_t row0 = 0;
        for (std::size_t i = 0; i < morphisms.size(); ++i) {
            std::size_t src = spec_.object_index(morphisms[i].from);
            std::size_t dst = spec_.object_index(morphisms[i].to);
            const FpMatrix& star = morphism_stars_[i][degree];  // b(src) x b(dst)
            for (std::size_t r = 0; r < star.rows(); ++r) {
                for (std::size_t c = 0; c < star.cols(); ++c)
                    if (star.at(r, c)) mat.add_at(row0 + r, col_off[dst] + c, star.at(r, c));
                mat.add_at(row0 + r, col_off[src] + r, p - 1);
            }
            row0 += star.rows();
        }
    }
    return condition_cache_.emplace(degree, std::move(mat)).first->second;
}

Subspace StableContext::limit_basis(std::size_t degree) {
    auto it = limit_cache_.find(degree);
    if (it != limit_cache_.end()) return it->second;
    Subspace s = kernel_basis(condition_map(degree));
    limit_cache_.emplace(degree, s);
    return s;
}

StableReport StableContext::stable_report() {
    StableReport rep;
    rep.max_degree = max_degree_;
    rep.mode = spec_.mode();
    rep.edge_count = spec_.morphisms().size();
    for (std::size_t n = 0; n <= max_degree_; ++n) {
        const FpMatrix& d1 = condition_map(n);
        std::size_t r = rank(d1);
        rep.limit_bases.push_back(limit_basis(n));
        rep.ambient_dims.push_back(d1.cols());
        rep.condition_ranks.push_back(r);
        rep.coker_dims.push_back(d1.rows() - r);
    }
    return rep;
}

GammaReport StableContext::gamma_report() {
    if (spec_.mode() == CategoryMode::abstract_groups && spec_.connected_components() != 1)
        throw UsageError("gamma_report: the category is disconnected, so no single one-vertex group "
                         "exists (the degree-0 limit has dimension = component count)");
    StableReport st = stable_report();
    GammaReport rep;
    rep.max_degree = max_degree_;
    rep.edge_count = st.edge_count;
    rep.coker_dims = st.coker_dims;
    rep.limit_dims = st.limit_dims();
    for (std::size_t n = 0; n <= max_degree_; ++n) {
        std::size_t coker_prev = n == 0 ? 0 : st.coker_dims[n - 1];
        rep.gamma_dims.push_back(rep.limit_dims[n] + coker_prev);
    }
    return rep;
}

ClosureReport StableContext::ring_closure_check() {
    if (spec_.mode() != CategoryMode::subgroup)
        throw UsageError("ring_closure_check: subgroup mode only");
    const Resolution& rp = ambient_resolution();
    ClosureReport rep;
    for (std::size_t a = 0; a <= max_degree_; ++a) {
        Subspace ia = limit_basis(a);
        if (ia.dim() == 0) continue;
        for (std::size_t b = a; a + b <= max_degree_; ++b) {
            Subspace ib = limit_basis(b);
            Subspace iab = limit_basis(a + b);
            for (std::size_t i = 0; i < ia.dim(); ++i)
                for (std::size_t j = 0; j < ib.dim(); ++j) {
                    CohomClass x{a, ia.basis().row(i)};
                    CohomClass y{b, ib.basis().row(j)};
                    CohomClass z = cup(rp, x, y);
                    ++rep.pairs_checked;
                    if (!iab.contains(z.coeffs)) {
                        rep.closed = false;
                        std::ostringstream os;
                        os << "I^" << a << " basis " << i << " * I^" << b << " basis " << j
                           << " is not in I^" << (a + b);
                        rep.violations.push_back(os.str());
                    }
                }
        }
    }
    return rep;
}

FinitenessReport StableContext::module_finiteness(std::size_t window) {
    FinitenessReport rep;
    rep.max_degree = max_degree_;
    rep.window = window;

    const bool subgroup = spec_.mode() == CategoryMode::subgroup;
    auto dim_at = [&](std::size_t n) {
        return subgroup ? ambient_resolution().rank(n) : sum_object_dim(n);
    };
    auto cup_at = [&](std::size_t da, const std::vector<std::uint8_t>& a, std::size_t db,
                      const std::vector<std::uint8_t>& b) {
        if (subgroup) return cup(ambient_resolution(), CohomClass{da, a}, CohomClass{db, b}).coeffs;
        return tuple_cup(da, a, db, b);
    };

    std::vector<std::pair<std::size_t, std::vector<std::uint8_t>>> gens;
    for (std::size_t n = 0; n <= max_degree_; ++n) {
        const std::size_t hn = dim_at(n);
        FpMatrix span(0, hn, spec_.prime());
        for (const auto& [dg, gvec] : gens) {
            if (dg >= n) continue;
            Subspace id = limit_basis(n - dg);
            if (id.dim() == 0) continue;
            FpMatrix rows(id.dim(), hn, spec_.prime());
            for (std::size_t i = 0; i < id.dim(); ++i)
                rows.set_row(i, cup_at(n - dg, id.basis().row(i), dg, gvec));
            span = span.vstack(rows);
        }
        Echelon ech = reduced_echelon(span);
        std::vector<bool> pivot(hn, false);
        for (auto c : ech.pivots) pivot[c] = true;
        for (std::size_t c = 0; c < hn; ++c) {
            if (pivot[c]) continue;
            std::vector<std::uint8_t> e(hn, 0);
            e[c] = 1;
            gens.emplace_back(n, std::move(e));
            rep.generator_degrees.push_back(n);
        }
    }

    rep.stable_in_window = true;
    for (auto d : rep.generator_degrees)
        if (d + window > max_degree_) rep.stable_in_window = false;
    return rep;
}

std::vector<std::uint8_t> StableContext::tuple_cup(std::size_t deg_a,
                                                   const std::vector<std::uint8_t>& a,
                                                   std::size_t deg_b,
                                                   const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> out;
    out.reserve(sum_object_dim(deg_a + deg_b));
    std::size_t oa = 0, ob = 0;
    for (const auto& r : resolutions_) {
        std::vector<std::uint8_t> xa(a.begin() + oa, a.begin() + oa + r.rank(deg_a));
        std::vector<std::uint8_t> xb(b.begin() + ob, b.begin() + ob + r.rank(deg_b));
        CohomClass z = cup(r, CohomClass{deg_a, std::move(xa)}, CohomClass{deg_b, std::move(xb)});
        out.insert(out.end(), z.coeffs.begin(), z.coeffs.end());
        oa += r.rank(deg_a);
        ob += r.rank(deg_b);
    }
    return out;
}

}  // namespace stablecoh
