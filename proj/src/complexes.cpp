#include "stanley/complexes.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr u64 kFaceBudget = u64{1} << 26;
constexpr u64 kFamilyBudget = u64{1} << 26;

void check_ground_set(unsigned n)
{
    if (n < 1 || n > 64)
        throw InvalidArgument("ground set size must be in 1..64, got " + std::to_string(n));
}

void check_within(VertexSet s, unsigned n)
{
    if (!s.subset_of(VertexSet::full(n)))
        throw InvalidArgument("set uses vertex " + std::to_string(s.max_vertex()) + " outside [" +
                              std::to_string(n) + "]");
}

// Inclusion-minimal (keep_minimal) or inclusion-maximal members, deduplicated,
// in GradedOrder.
std::vector<VertexSet> antichain(std::vector<VertexSet> sets, bool keep_minimal)
{
    std::sort(sets.begin(), sets.end(), GradedOrder{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    if (keep_minimal) {
        for (VertexSet s : sets) {
            bool absorbed = std::any_of(kept.begin(), kept.end(), [&](VertexSet g) { return g.subset_of(s); });
            if (!absorbed)
                kept.push_back(s);
        }
    } else {
        for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
            bool absorbed = std::any_of(kept.begin(), kept.end(), [&](VertexSet g) { return it->subset_of(g); });
            if (!absorbed)
                kept.push_back(*it);
        }
        std::reverse(kept.begin(), kept.end());
    }
    return kept;
}

}  // namespace

std::vector<VertexSet> MonomialIdeal::generators_of_degree(unsigned d) const
{
    std::vector<VertexSet> out;
    for (VertexSet g : generators_)
        if (g.size() == d)
            out.push_back(g);
    return out;
}

bool MonomialIdeal::contains(VertexSet s) const
{
    return std::any_of(generators_.begin(), generators_.end(), [&](VertexSet g) { return g.subset_of(s); });
}

MonomialIdeal normalize_ideal(std::vector<VertexSet> raw_generators, unsigned n)
{
    check_ground_set(n);
    if (raw_generators.empty())
        throw InvalidArgument("ideal needs at least one generator");
    for (VertexSet s : raw_generators)
        check_within(s, n);
    return MonomialIdeal(n, antichain(std::move(raw_generators), true));
}

SimplicialComplex SimplicialComplex::from_faces(unsigned n, std::vector<VertexSet> faces)
{
    check_ground_set(n);
    if (faces.empty())
        throw InvalidArgument("complex needs at least one facet");
    for (VertexSet s : faces)
        check_within(s, n);
    return SimplicialComplex(n, antichain(std::move(faces), false));
}

SimplicialComplex complement_complex(const MonomialIdeal& ideal)
{
    std::vector<VertexSet> facets;
    facets.reserve(ideal.num_generators());
    for (VertexSet g : ideal.generators())
        facets.push_back(g.complement(ideal.n()));
    return SimplicialComplex::from_faces(ideal.n(), std::move(facets));
}

MonomialIdeal complement_ideal(const SimplicialComplex& complex)
{
    std::vector<VertexSet> gens;
    gens.reserve(complex.num_facets());
    for (VertexSet f : complex.facets())
        gens.push_back(f.complement(complex.n()));
    return normalize_ideal(std::move(gens), complex.n());
}

FVector f_vector(const SimplicialComplex& complex)
{
    u64 work = 0;
    for (VertexSet f : complex.facets()) {
        if (f.size() >= 26 || (work += u64{1} << f.size()) > kFaceBudget)
            throw ResourceLimit("f_vector: face enumeration exceeds budget");
    }

    std::unordered_set<VertexSet> faces;
    faces.reserve(static_cast<std::size_t>(work));
    for (VertexSet f : complex.facets()) {
        const std::uint64_t mask = f.bits();
        for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
            faces.insert(VertexSet(sub));
            if (sub == 0)
                break;
        }
    }
    std::vector<u64> entries(complex.facets().back().size() + 1, 0);
    for (VertexSet s : faces)
        ++entries[s.size()];
    return FVector(std::move(entries));
}

bool rev_lex_less(VertexSet s, VertexSet t)
{
    if (s.size() != t.size())
        throw InvalidArgument("rev_lex_less: sets of different size");
    return s < t;
}

std::vector<VertexSet> compressed_family(unsigned n, unsigned k, u64 l)
{
    check_ground_set(n);
    if (k > n)
        throw InvalidArgument("compressed_family: k exceeds n");
    auto total = binomial_checked(n, k);
    if (l < 1 || (total && l > *total))
        throw InvalidArgument("compressed_family: l out of range 1..C(n,k)");
    if (l > kFamilyBudget)
        throw ResourceLimit("compressed_family: family too large to enumerate");

    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(l));
    std::uint64_t x = VertexSet::full(k).bits();
    if (k == 0)
        x = 0;
    out.emplace_back(x);
    while (out.size() < l) {
        // next integer with the same popcount
        std::uint64_t c = x & (~x + 1);
        std::uint64_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
        out.emplace_back(x);
    }
    return out;
}

std::vector<VertexSet> family_shadow(const std::vector<VertexSet>& family)
{
    if (family.empty())
        return {};
    const unsigned k = family.front().size();
    if (k < 1)
        throw InvalidArgument("family_shadow: members must be nonempty");
    std::vector<VertexSet> out;
    out.reserve(family.size() * k);
    for (VertexSet s : family) {
        if (s.size() != k)
            throw InvalidArgument("family_shadow: members of mixed size");
        for (unsigned v : s.vertices())
            out.push_back(s.without(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MonomialIdeal gen_veronese(unsigned n, unsigned d)
{
    check_ground_set(n);
    if (d < 1 || d > n)
        throw InvalidArgument("veronese: need 1 <= d <= n");
    return normalize_ideal(compressed_family(n, d, binomial(n, d)), n);
}

MonomialIdeal gen_compressed_ideal(unsigned n, unsigned d, u64 l)
{
    check_ground_set(n);
    if (d > n)
        throw InvalidArgument("compressed ideal: need d <= n");
    auto facets = compressed_family(n, n - d, l);
    return complement_ideal(SimplicialComplex::from_faces(n, std::move(facets)));
}

SimplicialComplex gen_not_uc(unsigned n, unsigned delta)
{
    check_ground_set(n);
    if (delta < 1 || delta > n)
        throw InvalidArgument("not-uc: need 1 <= delta <= n");
    u64 l = checked_add(xi(delta), 1);
    auto total = binomial_checked(n, delta);
    if (total && l > *total)
        throw InvalidArgument("not-uc: xi_delta + 1 exceeds C(n, delta)");
    return SimplicialComplex::from_faces(n, compressed_family(n, delta, l));
}

SimplicialComplex gen_padded_counterexample(unsigned n, unsigned delta)
{
    SimplicialComplex base = gen_not_uc(n, delta);
    const unsigned ground = n + delta - 1;
    check_ground_set(ground);
    std::vector<VertexSet> facets = base.facets();
    VertexSet extra;
    for (unsigned v = n; v <= ground; ++v)
        extra = extra.with(v);
    facets.push_back(extra);
    return SimplicialComplex::from_faces(ground, std::move(facets));
}

SimplicialComplex gen_cycle_with_chord(unsigned n)
{
    if (n < 4)
        throw InvalidArgument("cycle-chord: need n >= 4");
    check_ground_set(n);
    std::vector<VertexSet> edges;
    for (unsigned v = 1; v < n; ++v)
        edges.push_back(VertexSet{v, v + 1});
    edges.push_back(VertexSet{n, 1});
    edges.push_back(VertexSet{1, 3});
    return SimplicialComplex::from_faces(n, std::move(edges));
}

}  // namespace stanley
