#ifndef STANLEY_COMPLEXES_HPP
#define STANLEY_COMPLEXES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stanley/combinatorics.hpp"
#include "stanley/vertex_set.hpp"

namespace stanley {

/**
 * Squarefree monomial ideal in K[x_1, ..., x_n], held through its minimal
 * generating set G(I) as an antichain of vertex sets. The unit ideal is the
 * single generator {}.
 *
 * Instances only come out of normalize_ideal(), so the antichain invariant
 * always holds. Generators are kept in GradedOrder.
 */
class MonomialIdeal {
public:
    unsigned n() const { return n_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    std::size_t num_generators() const { return generators_.size(); }

    /// Smallest generator degree.
    unsigned min_degree() const { return generators_.front().size(); }
    bool is_pure() const { return generators_.front().size() == generators_.back().size(); }
    bool is_unit() const { return generators_.front().empty(); }

    /// Generators of the given degree; mu_d(I) is its size.
    std::vector<VertexSet> generators_of_degree(unsigned d) const;

    /// Whether the monomial x^s lies in the ideal.
    bool contains(VertexSet s) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    friend MonomialIdeal normalize_ideal(std::vector<VertexSet>, unsigned);
    MonomialIdeal(unsigned n, std::vector<VertexSet> gens) : n_(n), generators_(std::move(gens)) {}

    unsigned n_;
    std::vector<VertexSet> generators_;
};

/// Simplicial complex on [n] given by its facets (an antichain, GradedOrder).
class SimplicialComplex {
public:
    /// Keeps only the inclusion-maximal sets. Throws InvalidArgument for
    /// n outside 1..64, sets outside [n], or an empty list.
    static SimplicialComplex from_faces(unsigned n, std::vector<VertexSet> faces);

    unsigned n() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t num_facets() const { return facets_.size(); }

    bool is_pure() const { return facets_.front().size() == facets_.back().size(); }
    /// delta - 1 where delta is the largest facet size.
    int dimension() const { return static_cast<int>(facets_.back().size()) - 1; }

    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex(unsigned n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

    unsigned n_;
    std::vector<VertexSet> facets_;
};

/// (f_{-1}, f_0, ..., f_dim)
class FVector {
public:
    explicit FVector(std::vector<u64> entries) : entries_(std::move(entries)) {}

    /// f_i for i >= -1; 0 past the top dimension.
    u64 f(int i) const
    {
        auto idx = static_cast<std::size_t>(i + 1);
        return idx < entries_.size() ? entries_[idx] : 0;
    }
    int dimension() const { return static_cast<int>(entries_.size()) - 2; }
    const std::vector<u64>& entries() const { return entries_; }

    bool operator==(const FVector&) const = default;

private:
    std::vector<u64> entries_;
};

MonomialIdeal normalize_ideal(std::vector<VertexSet> raw_generators, unsigned n);

MonomialIdeal complement_ideal(const SimplicialComplex& complex);
SimplicialComplex complement_complex(const MonomialIdeal& ideal);

/// Exhaustive face enumeration. Throws ResourceLimit past 2^26 candidate faces.
FVector f_vector(const SimplicialComplex& complex);

/// S <_rlex T on equal-size sets; InvalidArgument on a size mismatch.
bool rev_lex_less(VertexSet s, VertexSet t);

/// The first l k-subsets of [n] in reverse lexicographic order (C_{n,k}^l).
std::vector<VertexSet> compressed_family(unsigned n, unsigned k, u64 l);

/// All (k-1)-subsets covered by a k-uniform family, sorted and deduplicated.
std::vector<VertexSet> family_shadow(const std::vector<VertexSet>& family);

/// Squarefree Veronese ideal I_{n,d}.
MonomialIdeal gen_veronese(unsigned n, unsigned d);

/// I_{n,d}^l: complement ideal of the complex spanned by C_{n,n-d}^l.
MonomialIdeal gen_compressed_ideal(unsigned n, unsigned d, u64 l);

/// Complex spanned by C_{n,delta}^{xi_delta + 1}.
SimplicialComplex gen_not_uc(unsigned n, unsigned delta);

/// gen_not_uc(n, delta) plus the facet {n, ..., n + delta - 1}, on [n + delta - 1].
SimplicialComplex gen_padded_counterexample(unsigned n, unsigned delta);

/// The n-cycle 1-2-...-n-1 with the chord {1,3}.
SimplicialComplex gen_cycle_with_chord(unsigned n);

}  // namespace stanley

#endif
