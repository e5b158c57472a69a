#ifndef STANLEY_COLLAPSE_HPP
#define STANLEY_COLLAPSE_HPP

/**
 * Uniform collapsibility of pure complexes.
 *
 * A pure complex is uniformly collapsible when every facet can drop one vertex
 * so that the resulting ridges are pairwise distinct. That is a complete
 * matching from facets into ridges in the facet/ridge incidence graph, decided
 * here with Hopcroft-Karp. Positive answers carry the matching as an SDR;
 * negative answers carry a facet set A with |Gamma(A)| < |A|.
 */

#include <cstddef>
#include <limits>
#include <variant>
#include <vector>

#include "stanley/complexes.hpp"
#include "stanley/interval.hpp"

namespace stanley {

struct FacetRidgeGraph {
    unsigned delta = 0;               // facet size
    std::vector<VertexSet> facets;    // reverse lexicographic
    std::vector<VertexSet> ridges;    // reverse lexicographic, = shadow of facets
    std::vector<std::vector<std::size_t>> adjacency;  // facet -> ascending ridge indices
};

/// Throws NotPure for a complex with facets of different sizes.
FacetRidgeGraph build_facet_ridge_graph(const SimplicialComplex& complex);

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct Matching {
    std::vector<std::size_t> facet_to_ridge;  // kUnmatched where free
    std::vector<std::size_t> ridge_to_facet;
    std::size_t size = 0;
};

/// Maximum matching; deterministic for a given graph.
Matching max_matching(const FacetRidgeGraph& graph);

struct SdrEntry {
    VertexSet facet;
    unsigned dropped;

    bool operator==(const SdrEntry&) const = default;
};

/// Facet -> dropped vertex, such that the faces facet \ {dropped} are distinct.
struct Sdr {
    std::vector<SdrEntry> entries;

    bool operator==(const Sdr&) const = default;
};

/// Facets A whose ridges number fewer than |A|.
struct Violator {
    std::vector<VertexSet> facets;

    bool operator==(const Violator&) const = default;
};

using CollapseCertificate = std::variant<Sdr, Violator>;

struct CollapseResult {
    bool collapsible;
    CollapseCertificate certificate;
};

CollapseResult is_uniformly_collapsible(const SimplicialComplex& complex);

/// Rechecks a certificate against the complex by enumeration only.
bool verify_certificate(const SimplicialComplex& complex, const CollapseCertificate& certificate);

/**
 * Turns an SDR for the complement complex of a pure degree-d ideal into an
 * interval partition of P_I^{d+1}: [m, m + v] for each generator m, plus
 * [C, C] for the remaining (d+1)-sets. Throws InvalidCertificate when the
 * SDR does not verify.
 */
IntervalPartition interval_partition_from_sdr(const MonomialIdeal& ideal, const Sdr& sdr);

/**
 * For I pure of degree k with a verified partition of P_I^{k+1}, the ideal
 * generated by the complements of the tops sitting over the generators.
 * Pure of degree n - k - 1 with the same number of generators.
 */
MonomialIdeal complement_transfer(const MonomialIdeal& ideal, const IntervalPartition& partition);

}  // namespace stanley

#endif
