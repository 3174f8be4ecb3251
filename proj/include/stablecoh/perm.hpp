#ifndef STABLECOH_PERM_HPP
#define STABLECOH_PERM_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace stablecoh {

/* A permutation of {0..degree-1}.  Text I/O uses 1-indexed disjoint-cycle
 * notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
 * Composition is function composition: (a*b)(x) = a(b(x)). */
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images);

    static Perm identity(std::size_t degree);
    static Perm from_cycles(std::size_t degree, const std::string& text);

    std::size_t degree() const { return images_.size(); }
    std::size_t apply(std::size_t point) const { return images_[point]; }

    Perm operator*(const Perm& other) const;
    Perm inverse() const;
    bool is_identity() const;
    std::size_t order() const;

    std::string to_cycles() const;

    bool operator==(const Perm& other) const { return images_ == other.images_; }
    bool operator!=(const Perm& other) const { return images_ != other.images_; }
    bool operator<(const Perm& other) const { return images_ < other.images_; }

    const std::vector<std::uint8_t>& images() const { return images_; }

private:
    std::vector<std::uint8_t> images_;
};

}  // namespace stablecoh

#endif
