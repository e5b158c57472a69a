#include "stanley/collapse.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "stanley/errors.hpp"
#include "stanley/sdepth.hpp"

namespace stanley {

namespace {

void require_pure(const SimplicialComplex& complex)
{
    if (!complex.is_pure())
        throw NotPure("complex is not pure");
}

class HopcroftKarp {
public:
    explicit HopcroftKarp(const FacetRidgeGraph& g)
        : g_(g), dist_(g.facets.size())
    {
        m_.facet_to_ridge.assign(g.facets.size(), kUnmatched);
        m_.ridge_to_facet.assign(g.ridges.size(), kUnmatched);
    }

    Matching run()
    {
        while (bfs()) {
            for (std::size_t f = 0; f < g_.facets.size(); ++f)
                if (m_.facet_to_ridge[f] == kUnmatched && dfs(f))
                    ++m_.size;
        }
        return std::move(m_);
    }

private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    bool bfs()
    {
        std::deque<std::size_t> queue;
        for (std::size_t f = 0; f < g_.facets.size(); ++f) {
            if (m_.facet_to_ridge[f] == kUnmatched) {
                dist_[f] = 0;
                queue.push_back(f);
            } else {
                dist_[f] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            std::size_t f = queue.front();
            queue.pop_front();
            for (std::size_t r : g_.adjacency[f]) {
                std::size_t next = m_.ridge_to_facet[r];
                if (next == kUnmatched) {
                    found = true;
                } else if (dist_[next] == kInf) {
                    dist_[next] = dist_[f] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t f)
    {
        for (std::size_t r : g_.adjacency[f]) {
            std::size_t next = m_.ridge_to_facet[r];
            if (next == kUnmatched || (dist_[next] == dist_[f] + 1 && dfs(next))) {
                m_.facet_to_ridge[f] = r;
                m_.ridge_to_facet[r] = f;
                return true;
            }
        }
        dist_[f] = kInf;
        return false;
    }

    const FacetRidgeGraph& g_;
    std::vector<std::size_t> dist_;
    Matching m_;
};

// Facets reachable from an unmatched facet along alternating paths.
Violator extract_violator(const FacetRidgeGraph& g, const Matching& m)
{
    auto start = std::find(m.facet_to_ridge.begin(), m.facet_to_ridge.end(), kUnmatched);
    std::vector<char> seen_facet(g.facets.size(), 0), seen_ridge(g.ridges.size(), 0);
    std::deque<std::size_t> queue{static_cast<std::size_t>(start - m.facet_to_ridge.begin())};
    seen_facet[queue.front()] = 1;
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop_front();
        for (std::size_t r : g.adjacency[f]) {
            if (seen_ridge[r])
                continue;
            seen_ridge[r] = 1;
            // every reached ridge is matched, else the matching was not maximum
            std::size_t next = m.ridge_to_facet[r];
            if (!seen_facet[next]) {
                seen_facet[next] = 1;
                queue.push_back(next);
            }
        }
    }
    Violator v;
    for (std::size_t f = 0; f < g.facets.size(); ++f)
        if (seen_facet[f])
            v.facets.push_back(g.facets[f]);
    return v;
}

}  // namespace

FacetRidgeGraph build_facet_ridge_graph(const SimplicialComplex& complex)
{
    require_pure(complex);
    FacetRidgeGraph g;
    g.facets = complex.facets();
    std::sort(g.facets.begin(), g.facets.end());
    g.delta = g.facets.front().size();
    if (g.delta > 0)
        g.ridges = family_shadow(g.facets);

    std::unordered_map<VertexSet, std::size_t> ridge_index;
    ridge_index.reserve(g.ridges.size());
    for (std::size_t i = 0; i < g.ridges.size(); ++i)
        ridge_index.emplace(g.ridges[i], i);

    g.adjacency.resize(g.facets.size());
    for (std::size_t f = 0; f < g.facets.size(); ++f) {
        for (unsigned v : g.facets[f].vertices())
            g.adjacency[f].push_back(ridge_index.at(g.facets[f].without(v)));
        std::sort(g.adjacency[f].begin(), g.adjacency[f].end());
    }
    return g;
}

Matching max_matching(const FacetRidgeGraph& graph)
{
    return HopcroftKarp(graph).run();
}

CollapseResult is_uniformly_collapsible(const SimplicialComplex& complex)
{
    FacetRidgeGraph g = build_facet_ridge_graph(complex);
    Matching m = max_matching(g);
    if (m.size < g.facets.size())
        return {false, extract_violator(g, m)};

    Sdr sdr;
    sdr.entries.reserve(g.facets.size());
    for (std::size_t f = 0; f < g.facets.size(); ++f) {
        VertexSet dropped = g.facets[f].minus(g.ridges[m.facet_to_ridge[f]]);
        sdr.entries.push_back({g.facets[f], dropped.max_vertex()});
    }
    return {true, std::move(sdr)};
}

bool verify_certificate(const SimplicialComplex& complex, const CollapseCertificate& certificate)
{
    require_pure(complex);
    std::vector<VertexSet> facets = complex.facets();
    std::sort(facets.begin(), facets.end());
    auto is_facet = [&](VertexSet s) { return std::binary_search(facets.begin(), facets.end(), s); };

    if (const auto* sdr = std::get_if<Sdr>(&certificate)) {
        if (sdr->entries.size() != facets.size())
            return false;
        std::unordered_set<VertexSet> used_facets, faces;
        for (const SdrEntry& e : sdr->entries) {
            if (!is_facet(e.facet) || !e.facet.contains(e.dropped))
                return false;
            if (!used_facets.insert(e.facet).second)
                return false;
            if (!faces.insert(e.facet.without(e.dropped)).second)
                return false;
        }
        return true;
    }

    const auto& violator = std::get<Violator>(certificate);
    if (violator.facets.empty())
        return false;
    std::unordered_set<VertexSet> members, ridges;
    for (VertexSet f : violator.facets) {
        if (!is_facet(f) || !members.insert(f).second)
            return false;
        for (unsigned v : f.vertices())
            ridges.insert(f.without(v));
    }
    return ridges.size() < members.size();
}

IntervalPartition interval_partition_from_sdr(const MonomialIdeal& ideal, const Sdr& sdr)
{
    if (!ideal.is_pure())
        throw NotPure("ideal is not pure");
    const unsigned n = ideal.n();
    const unsigned d = ideal.min_degree();
    if (!verify_certificate(complement_complex(ideal), sdr))
        throw InvalidCertificate("SDR does not verify against the complement complex");

    IntervalPartition part;
    part.cap = d + 1;
    std::unordered_set<VertexSet> tops;
    for (const SdrEntry& e : sdr.entries) {
        VertexSet bottom = e.facet.complement(n);
        VertexSet top = bottom.with(e.dropped);
        part.intervals.push_back({bottom, top});
        tops.insert(top);
    }
    std::sort(part.intervals.begin(), part.intervals.end(),
              [](const Interval& a, const Interval& b) { return a.bottom < b.bottom; });

    std::vector<VertexSet> rest;
    const VertexSet ground = VertexSet::full(n);
    for (VertexSet g : ideal.generators())
        for (unsigned v : ground.minus(g).vertices())
            if (!tops.count(g.with(v)))
                rest.push_back(g.with(v));
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    for (VertexSet c : rest)
        part.intervals.push_back({c, c});
    return part;
}

MonomialIdeal complement_transfer(const MonomialIdeal& ideal, const IntervalPartition& partition)
{
    if (!ideal.is_pure())
        throw NotPure("ideal is not pure");
    const unsigned n = ideal.n();
    const unsigned k = ideal.min_degree();
    if (k >= n || partition.cap != k + 1)
        throw InvalidCertificate("partition cap must be the generator degree plus one");
    if (!verify_partition(build_reduced_poset(ideal, k + 1), partition))
        throw InvalidCertificate("partition does not verify");

    std::unordered_map<VertexSet, VertexSet> top_over;
    for (const Interval& iv : partition.intervals)
        top_over.emplace(iv.bottom, iv.top);

    std::vector<VertexSet> gens;
    for (VertexSet m : ideal.generators())
        gens.push_back(top_over.at(m).complement(n));
    MonomialIdeal j = normalize_ideal(std::move(gens), n);
    if (j.num_generators() != ideal.num_generators())
        throw InvalidCertificate("tops over the generators are not distinct");
    return j;
}

}  // namespace stanley
