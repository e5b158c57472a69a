#ifndef STANLEY_VERTEX_SET_HPP
#define STANLEY_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace stanley {

/**
 * A subset of [n] = {1, ..., n}, n <= 64, packed into one machine word.
 * Vertex v occupies bit v - 1. The ground-set size lives with the owning
 * ideal or complex.
 *
 * On sets of equal size, comparing the words as integers is exactly the
 * reverse lexicographic order, so the defaulted ordering doubles as <_rlex.
 */
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<unsigned> vertices)
    {
        for (unsigned v : vertices)
            bits_ |= bit(v);
    }

    static VertexSet from_vertices(const std::vector<unsigned>& vertices)
    {
        VertexSet s;
        for (unsigned v : vertices)
            s.bits_ |= bit(v);
        return s;
    }

    /// [n]
    static constexpr VertexSet full(unsigned n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(unsigned v) const { return v >= 1 && v <= 64 && (bits_ & bit(v)); }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Largest vertex, 0 if empty.
    constexpr unsigned max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    constexpr VertexSet with(unsigned v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(unsigned v) const { return VertexSet(bits_ & ~bit(v)); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    /// [n] \ *this
    constexpr VertexSet complement(unsigned n) const { return full(n).minus(*this); }

    /// Ascending vertex list.
    std::vector<unsigned> vertices() const
    {
        std::vector<unsigned> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
        return out;
    }

    constexpr auto operator<=>(const VertexSet&) const = default;

private:
    static constexpr std::uint64_t bit(unsigned v) { return std::uint64_t{1} << (v - 1); }

    std::uint64_t bits_ = 0;
};

/// Size first, then reverse lexicographic. Used to keep generator and facet
/// lists in a canonical order.
struct GradedOrder {
    bool operator()(VertexSet a, VertexSet b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

}  // namespace stanley

template <>
struct std::hash<stanley::VertexSet> {
    std::size_t operator()(stanley::VertexSet s) const noexcept
    {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};

#endif
