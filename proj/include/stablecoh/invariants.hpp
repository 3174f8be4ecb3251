#ifndef STABLECOH_INVARIANTS_HPP
#define STABLECOH_INVARIANTS_HPP

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablecoh/fp_matrix.hpp"

namespace stablecoh {

constexpr unsigned kMaxPolyVars = 4;

/* exponent tuple; variables past the active count stay zero */
using Monomial = std::array<std::uint8_t, kMaxPolyVars>;

/* A polynomial over F_2 in up to four variables, stored as its monomial
 * support.  Prints in sorted monomial order, e.g. "x1^2*x2 + x1*x2^2". */
class Poly2 {
public:
    explicit Poly2(unsigned nvars = 1) : nvars_(nvars) {}

    static Poly2 zero(unsigned nvars) { return Poly2(nvars); }
    static Poly2 one(unsigned nvars);
    static Poly2 variable(unsigned nvars, unsigned i);

    unsigned nvars() const { return nvars_; }
    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const;  // max total degree; 0 for the zero polynomial

    void toggle(const Monomial& m);  // add one monomial mod 2

    Poly2 operator+(const Poly2& other) const;
    Poly2 operator*(const Poly2& other) const;
    bool operator==(const Poly2& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

    std::string to_string() const;

private:
    unsigned nvars_;
    std::set<Monomial> terms_;
};

/* degree-d monomials in nvars variables, in the fixed print order */
std::vector<Monomial> monomial_basis(unsigned nvars, std::size_t degree);

/* coefficient vector of a homogeneous polynomial in that basis */
std::vector<std::uint8_t> poly_coords(const Poly2& f, std::size_t degree);
Poly2 poly_from_coords(unsigned nvars, std::size_t degree, const std::vector<std::uint8_t>& coords);

/* invertible matrix over F_2, acting on variables by substitution
 * x_j |-> sum_i g(i,j) x_i */
class Mat2 {
public:
    explicit Mat2(unsigned n);
    static Mat2 identity(unsigned n);

    unsigned n() const { return n_; }
    std::uint8_t at(unsigned i, unsigned j) const { return a_[checked(i)][checked(j)]; }
    void set(unsigned i, unsigned j, unsigned v) {
        a_[checked(i)][checked(j)] = static_cast<std::uint8_t>(v & 1);
    }

    Mat2 operator*(const Mat2& other) const;
    Mat2 transpose() const;
    bool operator==(const Mat2& other) const { return n_ == other.n_ && a_ == other.a_; }
    bool operator<(const Mat2& other) const { return a_ < other.a_; }
    bool invertible() const;

private:
    static unsigned checked(unsigned i) {
        return i < kMaxPolyVars ? i : throw std::out_of_range("Mat2 index");
    }

    unsigned n_;
    std::array<std::array<std::uint8_t, kMaxPolyVars>, kMaxPolyVars> a_;
};

/* A subgroup of GL(n, F_2) carried with both a generating set (used for
 * fixed-space computations) and the full element list. */
class MatrixGroup2 {
public:
    static MatrixGroup2 from_generators(unsigned n, std::vector<Mat2> gens);
    static MatrixGroup2 trivial(unsigned n);
    static MatrixGroup2 general_linear(unsigned n);

    unsigned n() const { return n_; }
    const std::vector<Mat2>& elements() const { return elements_; }
    const std::vector<Mat2>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

private:
    unsigned n_ = 0;
    std::vector<Mat2> generators_, elements_;
};

/* matrix of the substitution action of g on the degree-d monomial basis */
FpMatrix action_matrix(const Mat2& g, std::size_t degree);

/* the fixed subspace of H acting on degree-d polynomials */
Subspace invariant_basis(const MatrixGroup2& h, std::size_t degree);

struct DicksonGenerator {
    Poly2 poly;
    std::size_t degree;  // 2^n - 2^i
};

/* Dickson invariants c_{n,i} from the orbit product over all linear forms;
 * each is checked to be GL_n-invariant.  n <= 4. */
std::vector<DicksonGenerator> dickson_generators(unsigned n);

}  // namespace stablecoh

#endif
