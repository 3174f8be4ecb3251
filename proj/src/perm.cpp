#include "stablecoh/perm.hpp"

#include <algorithm>
#include <sstream>

#include "stablecoh/errors.hpp"

namespace stablecoh {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v])
            throw UsageError("invalid permutation: images are not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(std::size_t degree) {
    std::vector<std::uint8_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint8_t>(i);
    return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::string& text) {
    std::vector<std::uint8_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint8_t>(i);

    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw UsageError("cycle notation: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<std::size_t> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw UsageError("cycle notation: expected point number in \"" + text + "\"");
            std::size_t pt = std::stoul(text.substr(start, pos - start));
            if (pt < 1 || pt > degree)
                throw UsageError("cycle notation: point " + std::to_string(pt) + " out of range 1.." + std::to_string(degree));
            cycle.push_back(pt - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
        }
        if (pos == text.size()) throw UsageError("cycle notation: missing ')' in \"" + text + "\"");
        ++pos;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            std::size_t from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (im[from] != from) throw UsageError("cycle notation: point repeated across cycles");
            im[from] = static_cast<std::uint8_t>(to);
        }
        skip_ws();
    }
    return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& other) const {
    if (degree() != other.degree()) throw UsageError("permutation product: degree mismatch");
    std::vector<std::uint8_t> im(degree());
    for (std::size_t x = 0; x < degree(); ++x) im[x] = images_[other.images_[x]];
    Perm out;
    out.images_ = std::move(im);
    return out;
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> im(degree());
    for (std::size_t x = 0; x < degree(); ++x) im[images_[x]] = static_cast<std::uint8_t>(x);
    Perm out;
    out.images_ = std::move(im);
    return out;
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < degree(); ++x)
        if (images_[x] != x) return false;
    return true;
}

std::size_t Perm::order() const {
    Perm acc = *this;
    std::size_t n = 1;
    while (!acc.is_identity()) {
        acc = acc * *this;
        ++n;
    }
    return n;
}

std::string Perm::to_cycles() const {
    std::ostringstream os;
    std::vector<bool> done(degree(), false);
    bool printed = false;
    for (std::size_t start = 0; start < degree(); ++start) {
        if (done[start] || images_[start] == start) continue;
        os << '(';
        std::size_t x = start;
        bool first = true;
        do {
            if (!first) os << ' ';
            os << (x + 1);
            done[x] = true;
            x = images_[x];
            first = false;
        } while (x != start);
        os << ')';
        printed = true;
    }
    if (!printed) return "()";
    return os.str();
}

}  // namespace stablecoh
