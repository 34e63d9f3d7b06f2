#ifndef RIDGECHORD_FACE_HPP
#define RIDGECHORD_FACE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridgechord {

/// Largest supported ground set. Faces are single-word bitsets; ground sets
/// beyond 64 vertices would need a multi-word representation, which this
/// library deliberately does not provide.
inline constexpr int kMaxGroundSize = 64;

/// A face: a set of vertex labels from {1..64}, stored as a bitset
/// (label v <-> bit v-1). The empty face is a valid value of dimension -1.
class Face {
public:
    constexpr Face() = default;

    static constexpr Face from_bits(std::uint64_t bits) {
        Face f;
        f.bits_ = bits;
        return f;
    }

    static Face of(std::initializer_list<int> labels) {
        Face f;
        for (int v : labels) f = f.with(v);
        return f;
    }

    static Face from_vertices(std::span<const int> labels) {
        Face f;
        for (int v : labels) f = f.with(v);
        return f;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }

    constexpr bool has_vertex(int v) const {
        return v >= 1 && v <= kMaxGroundSize && (bits_ >> (v - 1)) & 1u;
    }

    Face with(int v) const {
        if (v < 1 || v > kMaxGroundSize)
            throw std::invalid_argument("vertex label out of range 1..64: " + std::to_string(v));
        return from_bits(bits_ | (std::uint64_t{1} << (v - 1)));
    }

    constexpr Face without(int v) const {
        return from_bits(bits_ & ~(std::uint64_t{1} << (v - 1)));
    }

    constexpr bool subset_of(Face o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(Face o) const { return subset_of(o) && bits_ != o.bits_; }

    constexpr Face unite(Face o) const { return from_bits(bits_ | o.bits_); }
    constexpr Face intersect(Face o) const { return from_bits(bits_ & o.bits_); }
    constexpr Face minus(Face o) const { return from_bits(bits_ & ~o.bits_); }

    int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    int max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : vertices()) {
            if (!first) s += ' ';
            s += std::to_string(v);
            first = false;
        }
        s += '}';
        return s;
    }

    friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Face a, Face b) { return a.bits_ != b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on faces viewed as strictly increasing vertex tuples:
/// {1} < {1,2} < {1,3} < {2} < {2,3}. Used everywhere a deterministic face
/// order is required (canonical facet storage, search tie-breaks).
inline bool face_lex_less(Face a, Face b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int lx = std::countr_zero(x), ly = std::countr_zero(y);
        if (lx != ly) return lx < ly;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

struct FaceLexLess {
    bool operator()(Face a, Face b) const { return face_lex_less(a, b); }
};

/// The full vertex set {1..n} as a face.
inline Face full_face(int n) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground set size out of range 0..64");
    return n == 0 ? Face{} : Face::from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace ridgechord

#endif
