#include "stablecoh/invariants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "stablecoh/errors.hpp"

namespace stablecoh {

Poly2 Poly2::one(unsigned nvars) {
    Poly2 f(nvars);
    f.toggle(Monomial{});
    return f;
}

Poly2 Poly2::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw UsageError("Poly2::variable: index out of range");
    Poly2 f(nvars);
    Monomial m{};
    m[i] = 1;
    f.toggle(m);
    return f;
}

std::size_t Poly2::degree() const {
    std::size_t d = 0;
    for (const auto& m : terms_) {
        std::size_t t = 0;
        for (auto e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

void Poly2::toggle(const Monomial& m) {
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.insert(m);
    else
        terms_.erase(it);
}

Poly2 Poly2::operator+(const Poly2& other) const {
    Poly2 out(nvars_);
    out.terms_ = terms_;
    for (const auto& m : other.terms_) out.toggle(m);
    return out;
}

Poly2 Poly2::operator*(const Poly2& other) const {
    Poly2 out(nvars_);
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) {
            Monomial m{};
            for (unsigned i = 0; i < kMaxPolyVars; ++i) m[i] = static_cast<std::uint8_t>(a[i] + b[i]);
            out.toggle(m);
        }
    return out;
}

namespace {

/* descending lexicographic exponent order, matching monomial_basis */
bool mono_before(const Monomial& a, const Monomial& b) { return b < a; }

std::string mono_to_string(const Monomial& m, unsigned nvars) {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < nvars; ++i) {
        if (!m[i]) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (m[i] > 1) os << "^" << unsigned(m[i]);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<Monomial> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), mono_before);
    std::ostringstream os;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << " + ";
        os << mono_to_string(sorted[i], nvars_);
    }
    return os.str();
}

std::vector<Monomial> monomial_basis(unsigned nvars, std::size_t degree) {
    std::vector<Monomial> out;
    Monomial m{};
    /* enumerate exponent tuples of total degree `degree`, descending lex */
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned var, std::size_t left) {
        if (var + 1 == nvars) {
            m[var] = static_cast<std::uint8_t>(left);
            out.push_back(m);
            m[var] = 0;
            return;
        }
        for (std::size_t e = left + 1; e-- > 0;) {
            m[var] = static_cast<std::uint8_t>(e);
            rec(var + 1, left - e);
        }
        m[var] = 0;
    };
    rec(0, degree);
    return out;
}

std::vector<std::uint8_t> poly_coords(const Poly2& f, std::size_t degree) {
    auto basis = monomial_basis(f.nvars(), degree);
    std::vector<std::uint8_t> out(basis.size(), 0);
    for (const auto& m : f.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end())
            throw UsageError("poly_coords: polynomial is not homogeneous of the given degree");
        out[static_cast<std::size_t>(it - basis.begin())] = 1;
    }
    return out;
}

Poly2 poly_from_coords(unsigned nvars, std::size_t degree, const std::vector<std::uint8_t>& coords) {
    auto basis = monomial_basis(nvars, degree);
    if (coords.size() != basis.size()) throw UsageError("poly_from_coords: length mismatch");
    Poly2 f(nvars);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i]) f.toggle(basis[i]);
    return f;
}

Mat2::Mat2(unsigned n) : n_(n), a_{} {
    if (n == 0 || n > kMaxPolyVars) throw UsageError("Mat2: size out of range");
}

Mat2 Mat2::identity(unsigned n) {
    Mat2 m(n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat2 Mat2::operator*(const Mat2& other) const {
    Mat2 out(n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) {
            unsigned acc = 0;
            for (unsigned k = 0; k < n_; ++k) acc ^= at(i, k) & other.at(k, j);
            out.set(i, j, acc);
        }
    return out;
}

Mat2 Mat2::transpose() const {
    Mat2 out(n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool Mat2::invertible() const {
    FpMatrix m(n_, n_, 2);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) m.set(i, j, at(i, j));
    return rank(m) == n_;
}

MatrixGroup2 MatrixGroup2::from_generators(unsigned n, std::vector<Mat2> gens) {
    if (n == 0 || n > kMaxPolyVars) throw UsageError("MatrixGroup2: variable count out of range");
    for (const auto& g : gens)
        if (g.n() != n || !g.invertible()) throw UsageError("MatrixGroup2: generator not invertible");
    MatrixGroup2 out;
    out.n_ = n;
    out.generators_ = gens;
    std::set<Mat2> closure{Mat2::identity(n)};
    std::vector<Mat2> queue{Mat2::identity(n)};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& g : gens) {
            Mat2 nxt = g * queue[qi];
            if (closure.insert(nxt).second) queue.push_back(nxt);
        }
    out.elements_.assign(closure.begin(), closure.end());
    return out;
}

MatrixGroup2 MatrixGroup2::trivial(unsigned n) { return from_generators(n, {}); }

MatrixGroup2 MatrixGroup2::general_linear(unsigned n) {
    if (n == 1) return trivial(1);
    /* standard generators: cyclic coordinate permutation and one transvection */
    Mat2 cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc.set((i + 1) % n, i, 1);
    Mat2 trans = Mat2::identity(n);
    trans.set(0, 1, 1);
    return from_generators(n, {cyc, trans});
}

FpMatrix action_matrix(const Mat2& g, std::size_t degree) {
    const unsigned n = g.n();
    auto basis = monomial_basis(n, degree);
    std::vector<Poly2> var_images(n, Poly2::zero(n));
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i)
            if (g.at(i, j)) var_images[j] = var_images[j] + Poly2::variable(n, i);

    FpMatrix out(basis.size(), basis.size(), 2);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        Poly2 img = Poly2::one(n);
        for (unsigned v = 0; v < n; ++v)
            for (unsigned e = 0; e < basis[col][v]; ++e) img = img * var_images[v];
        auto coords = poly_coords(img, degree);
        for (std::size_t row = 0; row < coords.size(); ++row)
            if (coords[row]) out.set(row, col, 1);
    }
    return out;
}

Subspace invariant_basis(const MatrixGroup2& h, std::size_t degree) {
    const auto& gens = h.generators().empty() ? h.elements() : h.generators();
    std::size_t dim = monomial_basis(h.n(), degree).size();
    std::vector<Subspace> fixed;
    for (const auto& g : gens)
        fixed.push_back(kernel_basis(action_matrix(g, degree) - FpMatrix::identity(dim, 2)));
    if (fixed.empty()) fixed.push_back(Subspace::full(dim, 2));
    return intersect(fixed);
}

std::vector<DicksonGenerator> dickson_generators(unsigned n) {
    if (n == 0 || n > kMaxPolyVars) throw UsageError("dickson_generators: n out of range");
    /* f(X) = prod over all 2^n linear forms v of (X + v); the coefficient of
     * X^{2^i} is c_{n,i} of degree 2^n - 2^i */
    std::vector<Poly2> coeff{Poly2::one(n)};  // coefficients of f in X, low to high
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Poly2 form = Poly2::zero(n);
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) form = form + Poly2::variable(n, i);
        std::vector<Poly2> next(coeff.size() + 1, Poly2::zero(n));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] = next[k + 1] + coeff[k];       // X * coeff[k]
            next[k] = next[k] + coeff[k] * form;        // v * coeff[k]
        }
        coeff = std::move(next);
    }

    std::vector<DicksonGenerator> out;
    MatrixGroup2 gl = MatrixGroup2::general_linear(n);
    for (unsigned k = 0; k < coeff.size(); ++k) {
        bool is_power_of_two = k && !(k & (k - 1));
        bool top = k == (1u << n);
        if (top) {
            if (!(coeff[k] == Poly2::one(n)))
                throw InternalCheckError("dickson_generators: leading coefficient is not 1");
            continue;
        }
        if (!is_power_of_two && k != 0) {
            if (!coeff[k].is_zero())
                throw InternalCheckError("dickson_generators: unexpected nonzero coefficient");
            continue;
        }
        if (k == 0 && n > 0 && !coeff[0].is_zero())
            throw InternalCheckError("dickson_generators: constant coefficient should vanish");
        if (k == 0) continue;

        std::size_t deg = (1u << n) - k;
        const Poly2& c = coeff[k];
        if (c.degree() != deg)
            throw InternalCheckError("dickson_generators: degree mismatch");
        if (!invariant_basis(gl, deg).contains(poly_coords(c, deg)))
            throw InternalCheckError("dickson_generators: coefficient is not GL-invariant");
        out.push_back(DicksonGenerator{c, deg});
    }
    /* degrees ascend with i descending; report ascending degree */
    std::sort(out.begin(), out.end(),
              [](const DicksonGenerator& a, const DicksonGenerator& b) { return a.degree < b.degree; });
    return out;
}

}  // namespace stablecoh
