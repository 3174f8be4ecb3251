#ifndef STABLECOH_FP_MATRIX_HPP
#define STABLECOH_FP_MATRIX_HPP

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stablecoh {

bool is_supported_prime(unsigned p);

/* Dense matrix over the prime field F_p, p in {2,3,5,7}.
 * Entries are residues 0 <= e < p stored row-major.  All arithmetic is
 * exact; comparisons are equality mod p. */
class FpMatrix {
public:
    FpMatrix() : rows_(0), cols_(0), p_(2) {}
    FpMatrix(std::size_t rows, std::size_t cols, unsigned p);

    static FpMatrix identity(std::size_t n, unsigned p);
    static FpMatrix from_rows(const std::vector<std::vector<unsigned>>& rows, unsigned p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned modulus() const { return p_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, unsigned v) { data_[r * cols_ + c] = static_cast<std::uint8_t>(v % p_); }
    /* add v into entry (r,c) mod p */
    void add_at(std::size_t r, std::size_t c, unsigned v);

    std::vector<std::uint8_t> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<std::uint8_t>& v);

    FpMatrix operator*(const FpMatrix& other) const;
    FpMatrix operator+(const FpMatrix& other) const;
    FpMatrix operator-(const FpMatrix& other) const;
    bool operator==(const FpMatrix& other) const;

    FpMatrix transpose() const;
    bool is_zero() const;

    /* y = A x */
    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;

    /* stack rows of b below this (same cols, modulus) */
    FpMatrix vstack(const FpMatrix& b) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    unsigned p_;
    std::vector<std::uint8_t> data_;

    void check_compatible(const FpMatrix& other, const char* what) const;
};

/* Reduced row-echelon form with zero rows dropped and the pivot columns.
 * The form is canonical: row-equivalent inputs produce identical output. */
struct Echelon {
    FpMatrix mat;
    std::vector<std::size_t> pivots;
};

Echelon reduced_echelon(const FpMatrix& a);

std::size_t rank(const FpMatrix& a);

/* A subspace of F_p^n carried as a canonical reduced-echelon basis
 * (rows of `basis`, no zero rows). */
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient_dim, unsigned p);
    static Subspace full(std::size_t ambient_dim, unsigned p);
    /* span of the rows of a */
    static Subspace row_space(const FpMatrix& a);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    unsigned modulus() const { return basis_.modulus(); }
    const FpMatrix& basis() const { return basis_; }

    bool contains(const std::vector<std::uint8_t>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    std::size_t ambient_;
    FpMatrix basis_;
};

/* {x : A x = 0} as a canonical subspace; dim = cols - rank. */
Subspace kernel_basis(const FpMatrix& a);

/* Any X with A X = B, or nullopt when the system is inconsistent.
 * Shape mismatches are usage errors, reported distinctly. */
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

/* Intersection of subspaces of a common ambient space. */
Subspace intersect(const std::vector<Subspace>& spaces);

}  // namespace stablecoh

#endif
