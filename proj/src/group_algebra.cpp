#include "stablecoh/group_algebra.hpp"

#include "stablecoh/errors.hpp"

namespace stablecoh {

GroupAlgebra::GroupAlgebra(PermGroup group, unsigned prime) : group_(std::move(group)), p_(prime) {
    if (!is_supported_prime(p_)) throw UsageError("GroupAlgebra: unsupported prime");
    const std::size_t n = group_.order();
    if (n > 64) throw UsageError("GroupAlgebra: order cap 64 exceeded");
    mul_.resize(n * n);
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            mul_[i * n + j] = static_cast<std::uint16_t>(group_.mul_index(i, j));
        inv_[i] = static_cast<std::uint16_t>(group_.inv_index(i));
    }
}

GroupAlgebra::Elt GroupAlgebra::one() const {
    Elt e = zero();
    e[group_.identity_index()] = 1;
    return e;
}

GroupAlgebra::Elt GroupAlgebra::basis(std::size_t g) const {
    Elt e = zero();
    e[g] = 1;
    return e;
}

GroupAlgebra::Elt GroupAlgebra::mul(const Elt& a, const Elt& b) const {
    Elt out = zero();
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!b[j]) continue;
            std::size_t k = mul_[i * n + j];
            out[k] = static_cast<std::uint8_t>((out[k] + a[i] * b[j]) % p_);
        }
    }
    return out;
}

GroupAlgebra::Elt GroupAlgebra::add(const Elt& a, const Elt& b) const {
    Elt out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p_);
    return out;
}

GroupAlgebra::Elt GroupAlgebra::sub(const Elt& a, const Elt& b) const {
    Elt out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + p_ - b[i]) % p_);
    return out;
}

unsigned GroupAlgebra::augmentation(const Elt& a) const {
    unsigned s = 0;
    for (auto v : a) s += v;
    return s % p_;
}

std::size_t GroupAlgebra::augmentation_ideal_nilpotency() const {
    if (!is_local()) throw UsageError("augmentation_ideal_nilpotency: not a p-group algebra");
    const std::size_t n = dim();
    /* J is spanned by g - e over nonidentity g; iterate J^k as a subspace */
    FpMatrix basis_j(n - 1, n, p_);
    for (std::size_t g = 1; g < n; ++g) {
        basis_j.set(g - 1, g, 1);
        basis_j.set(g - 1, group_.identity_index(), p_ - 1);
    }
    Subspace power = Subspace::row_space(basis_j);
    std::size_t k = 1;
    while (power.dim() > 0) {
        /* J^{k+1} = span{(g - e) * v : g nonidentity, v in J^k} */
        FpMatrix next(0, n, p_);
        for (std::size_t g = 1; g < n; ++g) {
            FpMatrix rows(power.dim(), n, p_);
            for (std::size_t r = 0; r < power.dim(); ++r) {
                Elt v = power.basis().row(r);
                Elt prod = sub(mul(basis(g), v), v);
                rows.set_row(r, prod);
            }
            next = next.vstack(rows);
        }
        power = Subspace::row_space(next);
        ++k;
        if (k > n + 1) throw InternalCheckError("augmentation ideal failed to vanish");
    }
    return k;
}

std::vector<std::uint8_t> GroupAlgebra::act_right(std::size_t g, const std::vector<std::uint8_t>& v,
                                                  std::size_t blocks) const {
    const std::size_t n = dim();
    std::vector<std::uint8_t> out(v.size(), 0);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t h = 0; h < n; ++h)
            out[b * n + mul_[h * n + g]] = v[b * n + h];
    return out;
}

AlgebraMap::AlgebraMap(std::shared_ptr<const GroupAlgebra> algebra, std::size_t target_rank,
                       std::size_t source_rank)
    : algebra_(std::move(algebra)), tgt_(target_rank), src_(source_rank),
      entries_(tgt_ * src_, algebra_->zero()) {}

void AlgebraMap::set_entry(std::size_t t, std::size_t s, GroupAlgebra::Elt e) {
    entries_[t * src_ + s] = std::move(e);
}

FpMatrix AlgebraMap::expand() const {
    const std::size_t n = algebra_->dim();
    FpMatrix out(tgt_ * n, src_ * n, algebra_->prime());
    for (std::size_t t = 0; t < tgt_; ++t)
        for (std::size_t s = 0; s < src_; ++s) {
            const auto& m = entry(t, s);
            /* column (s,g), row (t,h): coefficient of h in m*g, i.e. m[h g^-1] */
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t h = 0; h < n; ++h) {
                    std::uint8_t c = m[algebra_->mul_index(h, algebra_->inv_index(g))];
                    if (c) out.set(t * n + h, s * n + g, c);
                }
        }
    return out;
}

FpMatrix AlgebraMap::identity_columns() const {
    const std::size_t n = algebra_->dim();
    FpMatrix out(tgt_ * n, src_, algebra_->prime());
    for (std::size_t t = 0; t < tgt_; ++t)
        for (std::size_t s = 0; s < src_; ++s) {
            const auto& m = entry(t, s);
            for (std::size_t h = 0; h < n; ++h)
                if (m[h]) out.set(t * n + h, s, m[h]);
        }
    return out;
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
    if (inner.tgt_ != src_) throw UsageError("AlgebraMap::compose: rank mismatch");
    AlgebraMap out(algebra_, tgt_, inner.src_);
    for (std::size_t t = 0; t < tgt_; ++t)
        for (std::size_t s = 0; s < inner.src_; ++s) {
            auto acc = algebra_->zero();
            for (std::size_t m = 0; m < src_; ++m)
                acc = algebra_->add(acc, algebra_->mul(entry(t, m), inner.entry(m, s)));
            out.set_entry(t, s, std::move(acc));
        }
    return out;
}

bool AlgebraMap::entries_in_augmentation_ideal() const {
    for (const auto& e : entries_)
        if (algebra_->augmentation(e) != 0) return false;
    return true;
}

}  // namespace stablecoh
