#include "stanley/probes.hpp"

#include <string>

#include "stanley/collapse.hpp"
#include "stanley/errors.hpp"

namespace stanley {

namespace {

std::vector<VertexSet> universe(unsigned n, unsigned k)
{
    auto count = binomial_checked(n, k);
    if (!count || *count > kMaxProbeUniverse)
        throw ResourceLimit("probe: C(" + std::to_string(n) + ", " + std::to_string(k) +
                            ") exceeds the enumeration limit of " + std::to_string(kMaxProbeUniverse));
    return compressed_family(n, k, *count);
}

std::vector<VertexSet> members(const std::vector<VertexSet>& all, std::uint64_t mask)
{
    std::vector<VertexSet> out;
    for (std::uint64_t b = mask; b != 0; b &= b - 1)
        out.push_back(all[static_cast<std::size_t>(std::countr_zero(b))]);
    return out;
}

// collapsible[mask] for every family mask; the empty family counts as collapsible.
std::vector<char> collapsibility_table(unsigned n, const std::vector<VertexSet>& all)
{
    const std::uint64_t total = std::uint64_t{1} << all.size();
    std::vector<char> table(total, 1);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        auto complex = SimplicialComplex::from_faces(n, members(all, mask));
        table[mask] = is_uniformly_collapsible(complex).collapsible ? 1 : 0;
    }
    return table;
}

}  // namespace

StarProbeReport probe_star(unsigned n, unsigned delta)
{
    if (delta < 1 || delta > n)
        throw InvalidArgument("probe-star: need 1 <= delta <= n");
    const std::vector<VertexSet> all = universe(n, delta);

    StarProbeReport report;
    report.n = n;
    report.delta = delta;
    const std::uint64_t total = std::uint64_t{1} << all.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::vector<VertexSet> facets = members(all, mask);
        ++report.complexes;
        const u64 ridges = family_shadow(facets).size();
        if (facets.size() > ridges)
            continue;
        ++report.hypothesis_holds;
        auto complex = SimplicialComplex::from_faces(n, std::move(facets));
        if (!is_uniformly_collapsible(complex).collapsible) {
            ++report.violations;
            if (!report.first_violation)
                report.first_violation = complex;
        }
    }
    return report;
}

XiMinProbeReport probe_xi_min(unsigned n, unsigned d)
{
    if (2 * d < n || d >= n)
        throw InvalidArgument("probe-xi-min: need n/2 <= d < n");
    const unsigned delta = n - d;
    const std::vector<VertexSet> all = universe(n, delta);
    const std::vector<char> collapsible = collapsibility_table(n, all);

    XiMinProbeReport report;
    report.n = n;
    report.d = d;
    report.lower_bound = xi(delta) + 1;
    const std::uint64_t total = std::uint64_t{1} << all.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        ++report.ideals;
        if (collapsible[mask])
            continue;
        bool minimal = true;
        for (std::uint64_t b = mask; b != 0 && minimal; b &= b - 1)
            minimal = collapsible[mask & ~(b & (~b + 1))];
        if (!minimal)
            continue;

        ++report.minimal;
        const u64 mu = static_cast<u64>(std::popcount(mask));
        if (mu < report.lower_bound)
            ++report.below_lower_bound;
        if (!report.min_mu || mu < *report.min_mu)
            report.min_mu = mu;
        if (!report.max_mu || mu > *report.max_mu) {
            report.max_mu = mu;
            report.max_example = complement_ideal(SimplicialComplex::from_faces(n, members(all, mask)));
        }
    }
    return report;
}

}  // namespace stanley
