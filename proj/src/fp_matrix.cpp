#include "stablecoh/fp_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "stablecoh/errors.hpp"

namespace stablecoh {

bool is_supported_prime(unsigned p) {
    return p == 2 || p == 3 || p == 5 || p == 7;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, unsigned p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (!is_supported_prime(p))
        throw UsageError("unsupported modulus " + std::to_string(p) + " (need a prime in {2,3,5,7})");
}

FpMatrix FpMatrix::identity(std::size_t n, unsigned p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<unsigned>>& rows, unsigned p) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(rows.size(), nc, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw UsageError("from_rows: ragged row lengths");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void FpMatrix::add_at(std::size_t r, std::size_t c, unsigned v) {
    data_[r * cols_ + c] = static_cast<std::uint8_t>((data_[r * cols_ + c] + v) % p_);
}

std::vector<std::uint8_t> FpMatrix::row(std::size_t r) const {
    return std::vector<std::uint8_t>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void FpMatrix::set_row(std::size_t r, const std::vector<std::uint8_t>& v) {
    if (v.size() != cols_) throw UsageError("set_row: length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
}

void FpMatrix::check_compatible(const FpMatrix& other, const char* what) const {
    if (p_ != other.p_) throw UsageError(std::string(what) + ": modulus mismatch");
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
    check_compatible(other, "matrix product");
    if (cols_ != other.rows_) throw UsageError("matrix product: inner dimension mismatch");
    FpMatrix out(rows_, other.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            unsigned a = at(i, k);
            if (!a) continue;
            const std::uint8_t* brow = other.data_.data() + k * other.cols_;
            std::uint8_t* orow = out.data_.data() + i * other.cols_;
            for (std::size_t j = 0; j < other.cols_; ++j)
                orow[j] = static_cast<std::uint8_t>((orow[j] + a * brow[j]) % p_);
        }
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
    check_compatible(other, "matrix sum");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("matrix sum: shape mismatch");
    FpMatrix out(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<std::uint8_t>((data_[i] + other.data_[i]) % p_);
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
    check_compatible(other, "matrix difference");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("matrix difference: shape mismatch");
    FpMatrix out(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - other.data_[i]) % p_);
    return out;
}

bool FpMatrix::operator==(const FpMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && p_ == other.p_ && data_ == other.data_;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.set(c, r, at(r, c));
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

std::vector<std::uint8_t> FpMatrix::apply(const std::vector<std::uint8_t>& x) const {
    if (x.size() != cols_) throw UsageError("apply: vector length mismatch");
    std::vector<std::uint8_t> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        unsigned acc = 0;
        const std::uint8_t* row = data_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
        y[r] = static_cast<std::uint8_t>(acc % p_);
    }
    return y;
}

FpMatrix FpMatrix::vstack(const FpMatrix& b) const {
    check_compatible(b, "vstack");
    if (cols_ != b.cols_ && rows_ != 0 && b.rows_ != 0)
        throw UsageError("vstack: column count mismatch");
    std::size_t nc = rows_ ? cols_ : b.cols_;
    if (rows_ && b.rows_ && cols_ != b.cols_) throw UsageError("vstack: column count mismatch");
    FpMatrix out(rows_ + b.rows_, nc, p_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + data_.size());
    return out;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << unsigned(at(r, c)) << (c + 1 < cols_ ? " " : "");
        os << "\n";
    }
    return os.str();
}

namespace {

unsigned inverse_mod(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw InternalCheckError("inverse_mod: not invertible");
}

/* Gauss-Jordan over F_2 on bit-packed rows.  Row operations cover all
 * columns; pivots are only searched in [0, pivot_limit). */
std::vector<std::size_t> eliminate_f2(FpMatrix& m, std::size_t pivot_limit) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::uint64_t> bits(nr * words, 0);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (m.at(r, c)) bits[r * words + c / 64] |= (std::uint64_t(1) << (c % 64));

    std::vector<std::size_t> pivots;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < pivot_limit && rr < nr; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        std::size_t pr = rr;
        while (pr < nr && !(bits[pr * words + w] & mask)) ++pr;
        if (pr == nr) continue;
        if (pr != rr)
            std::swap_ranges(bits.begin() + pr * words, bits.begin() + (pr + 1) * words,
                             bits.begin() + rr * words);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rr) continue;
            if (bits[i * words + w] & mask) {
                std::uint64_t* dst = bits.data() + i * words;
                const std::uint64_t* src = bits.data() + rr * words;
                for (std::size_t k = 0; k < words; ++k) dst[k] ^= src[k];
            }
        }
        pivots.push_back(c);
        ++rr;
    }

    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m.set(r, c, (bits[r * words + c / 64] >> (c % 64)) & 1u);
    return pivots;
}

std::vector<std::size_t> eliminate_modp(FpMatrix& m, std::size_t pivot_limit) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const unsigned p = m.modulus();
    std::vector<std::size_t> pivots;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < pivot_limit && rr < nr; ++c) {
        std::size_t pr = rr;
        while (pr < nr && m.at(pr, c) == 0) ++pr;
        if (pr == nr) continue;
        if (pr != rr) {
            for (std::size_t k = 0; k < nc; ++k) {
                auto t = m.at(pr, k);
                m.set(pr, k, m.at(rr, k));
                m.set(rr, k, t);
            }
        }
        unsigned inv = inverse_mod(m.at(rr, c), p);
        if (inv != 1)
            for (std::size_t k = 0; k < nc; ++k) m.set(rr, k, m.at(rr, k) * inv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rr) continue;
            unsigned f = m.at(i, c);
            if (!f) continue;
            for (std::size_t k = 0; k < nc; ++k)
                m.set(i, k, m.at(i, k) + (p - f) * m.at(rr, k));
        }
        pivots.push_back(c);
        ++rr;
    }
    return pivots;
}

std::vector<std::size_t> eliminate(FpMatrix& m, std::size_t pivot_limit) {
    return m.modulus() == 2 ? eliminate_f2(m, pivot_limit) : eliminate_modp(m, pivot_limit);
}

FpMatrix take_rows(const FpMatrix& m, std::size_t n) {
    FpMatrix out(n, m.cols(), m.modulus());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
    return out;
}

}  // namespace

Echelon reduced_echelon(const FpMatrix& a) {
    FpMatrix work = a;
    auto pivots = eliminate(work, a.cols());
    return Echelon{take_rows(work, pivots.size()), std::move(pivots)};
}

std::size_t rank(const FpMatrix& a) {
    FpMatrix work = a;
    return eliminate(work, a.cols()).size();
}

Subspace Subspace::zero(std::size_t ambient_dim, unsigned p) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = FpMatrix(0, ambient_dim, p);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim, unsigned p) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = FpMatrix::identity(ambient_dim, p);
    return s;
}

Subspace Subspace::row_space(const FpMatrix& a) {
    Subspace s;
    s.ambient_ = a.cols();
    s.basis_ = reduced_echelon(a).mat;
    return s;
}

bool Subspace::contains(const std::vector<std::uint8_t>& v) const {
    if (v.size() != ambient_) throw UsageError("Subspace::contains: length mismatch");
    /* reduce v against the echelon basis; zero remainder means membership */
    std::vector<unsigned> w(v.begin(), v.end());
    const unsigned p = modulus();
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_.at(r, lead) == 0) ++lead;
        if (lead == ambient_) continue;
        unsigned f = w[lead] % p;
        if (!f) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            w[c] = (w[c] + (p - f) * basis_.at(r, c)) % p;
    }
    return std::all_of(w.begin(), w.end(), [p](unsigned x) { return x % p == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw UsageError("Subspace::contains: ambient mismatch");
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace kernel_basis(const FpMatrix& a) {
    const std::size_t n = a.cols();
    const unsigned p = a.modulus();
    FpMatrix work = a;
    auto pivots = eliminate(work, n);

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    FpMatrix gens(n - pivots.size(), n, p);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        gens.set(k, f, 1);
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            unsigned v = work.at(j, f);
            if (v) gens.set(k, pivots[j], p - v);
        }
        ++k;
    }
    return Subspace::row_space(gens);
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
    if (a.modulus() != b.modulus()) throw UsageError("solve: modulus mismatch");
    if (a.rows() != b.rows()) throw UsageError("solve: row count mismatch between A and B");
    const unsigned p = a.modulus();
    FpMatrix aug(a.rows(), a.cols() + b.cols(), p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) aug.set(r, a.cols() + c, b.at(r, c));
    }
    auto pivots = eliminate(aug, a.cols());
    /* rows past the pivot block have zero A-part; nonzero B-part = inconsistent */
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (aug.at(r, a.cols() + c)) return std::nullopt;

    FpMatrix x(a.cols(), b.cols(), p);
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t c = 0; c < b.cols(); ++c)
            x.set(pivots[j], c, aug.at(j, a.cols() + c));
    return x;
}

Subspace intersect(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw UsageError("intersect: empty subspace list");
    const std::size_t n = spaces.front().ambient_dim();
    const unsigned p = spaces.front().modulus();
    for (const auto& s : spaces) {
        if (s.ambient_dim() != n) throw UsageError("intersect: mismatched ambient dimensions");
        if (s.modulus() != p) throw UsageError("intersect: modulus mismatch");
    }
    /* U = Ann(Ann U); the intersection is the annihilator of the sum of the
     * annihilators, and each Ann U_i is the kernel of U_i's basis matrix. */
    FpMatrix stacked(0, n, p);
    for (const auto& s : spaces)
        stacked = stacked.vstack(kernel_basis(s.basis()).basis());
    return kernel_basis(stacked);
}

}  // namespace stablecoh
