#include "stanley/sdepth.hpp"

#include <algorithm>
#include <unordered_map>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr u64 kPosetBudget = u64{1} << 22;

// All supersets of base of size exactly base.size() + extra, avoiding no vertex
// outside [n]; emitted in ascending (reverse lexicographic) order.
template <typename Fn>
void for_each_superset_of_size(VertexSet base, unsigned n, unsigned extra, Fn&& fn)
{
    const std::vector<unsigned> free = base.complement(n).vertices();
    if (extra > free.size())
        return;
    if (extra == 0) {
        fn(base);
        return;
    }
    std::uint64_t pick = (std::uint64_t{1} << extra) - 1;
    const std::uint64_t limit = free.size() == 64 ? 0 : (std::uint64_t{1} << free.size());
    while (limit == 0 || pick < limit) {
        VertexSet s = base;
        for (std::uint64_t b = pick; b != 0; b &= b - 1)
            s = s.with(free[static_cast<std::size_t>(std::countr_zero(b))]);
        fn(s);
        std::uint64_t c = pick & (~pick + 1);
        std::uint64_t r = pick + c;
        if (r == 0)
            break;
        pick = (((r ^ pick) >> 2) / c) | r;
    }
}

/**
 * Exact cover of the poset by intervals with tops at the cap.
 *
 * The smallest uncovered element (size, then reverse lexicographic) can only
 * be the bottom of its interval, so each node picks a top for it. Two cuts
 * keep the tree small:
 *  - level counting: with u_j uncovered elements of size j, the number b_i of
 *    future intervals with bottom size i is forced by
 *    u_j = sum_i b_i C(k - i, j - i); a negative b_i is a dead end.
 *  - the uncovered elements of the lowest level are all future bottoms and
 *    need pairwise distinct free tops above them (bipartite matching).
 */
class PartitionSearch {
public:
    PartitionSearch(const ReducedPoset& poset, const SolverOptions& options)
        : poset_(poset), cap_(poset.cap()), budget_(options.node_budget)
    {
        for (const auto& level : poset.levels())
            elements_.insert(elements_.end(), level.begin(), level.end());
        index_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_.emplace(elements_[i].bits(), static_cast<std::uint32_t>(i));

        tops_.resize(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            VertexSet a = elements_[i];
            for_each_superset_of_size(a, poset.n(), cap_ - a.size(),
                                      [&](VertexSet b) { tops_[i].push_back(index_.at(b.bits())); });
            std::sort(tops_[i].begin(), tops_[i].end());
        }

        covered_.assign(elements_.size(), 0);
        uncovered_.assign(cap_ + 1, 0);
        for (VertexSet s : elements_)
            ++uncovered_[s.size()];

        for (unsigned i = 0; i <= cap_; ++i)
            for (unsigned j = i; j <= cap_; ++j)
                choose_[i][j] = static_cast<__int128>(binomial(cap_ - i, j - i));
    }

    PartitionResult run()
    {
        PartitionResult result;
        result.partitionable = feasible() && search(0);
        result.nodes = nodes_;
        if (result.partitionable)
            result.witness = IntervalPartition{cap_, chosen_};
        return result;
    }

private:
    bool search(std::size_t cursor)
    {
        if (++nodes_ > budget_)
            throw ResourceLimit("partition search exceeded the node budget of " + std::to_string(budget_));
        while (cursor < elements_.size() && covered_[cursor])
            ++cursor;
        if (cursor == elements_.size())
            return true;

        const VertexSet bottom = elements_[cursor];
        std::vector<std::uint32_t> members;
        for (std::uint32_t t : tops_[cursor]) {
            if (covered_[t])
                continue;
            if (!collect_interval(bottom, elements_[t], members))
                continue;
            cover(members, true);
            chosen_.push_back({bottom, elements_[t]});
            if (feasible() && search(cursor + 1))
                return true;
            chosen_.pop_back();
            cover(members, false);
        }
        return false;
    }

    bool collect_interval(VertexSet bottom, VertexSet top, std::vector<std::uint32_t>& members) const
    {
        members.clear();
        const std::uint64_t diff = top.minus(bottom).bits();
        for (std::uint64_t sub = diff;; sub = (sub - 1) & diff) {
            std::uint32_t idx = index_.at(bottom.bits() | sub);
            if (covered_[idx])
                return false;
            members.push_back(idx);
            if (sub == 0)
                break;
        }
        return true;
    }

    void cover(const std::vector<std::uint32_t>& members, bool on)
    {
        for (std::uint32_t idx : members) {
            covered_[idx] = on ? 1 : 0;
            uncovered_[elements_[idx].size()] += on ? -1 : 1;
        }
    }

    bool feasible()
    {
        unsigned lowest = 0;
        while (lowest <= cap_ && uncovered_[lowest] == 0)
            ++lowest;
        if (lowest > cap_)
            return true;

        // level counting
        __int128 bottoms[65] = {};
        for (unsigned j = lowest; j <= cap_; ++j) {
            __int128 b = uncovered_[j];
            for (unsigned i = lowest; i < j; ++i)
                b -= bottoms[i] * choose_[i][j];
            if (b < 0)
                return false;
            bottoms[j] = b;
        }
        if (lowest == cap_)
            return true;
        return lowest_level_matchable(lowest);
    }

    bool lowest_level_matchable(unsigned level)
    {
        left_.clear();
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (!covered_[i] && elements_[i].size() == level)
                left_.push_back(static_cast<std::uint32_t>(i));
        owner_.clear();
        for (std::uint32_t l : left_) {
            ++stamp_;
            if (!augment(l))
                return false;
        }
        return true;
    }

    bool augment(std::uint32_t l)
    {
        for (std::uint32_t t : tops_[l]) {
            if (covered_[t])
                continue;
            auto& seen = visit_[t];
            if (seen == stamp_)
                continue;
            seen = stamp_;
            auto it = owner_.find(t);
            if (it == owner_.end() || augment(it->second)) {
                owner_[t] = l;
                return true;
            }
        }
        return false;
    }

    const ReducedPoset& poset_;
    unsigned cap_;
    u64 budget_;
    u64 nodes_ = 0;

    std::vector<VertexSet> elements_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> tops_;
    std::vector<char> covered_;
    std::vector<long long> uncovered_;
    __int128 choose_[65][65] = {};
    std::vector<Interval> chosen_;

    std::vector<std::uint32_t> left_;
    std::unordered_map<std::uint32_t, std::uint32_t> owner_;
    std::unordered_map<std::uint32_t, u64> visit_;
    u64 stamp_ = 0;
};

}  // namespace

ReducedPoset::ReducedPoset(unsigned n, unsigned cap, std::vector<std::vector<VertexSet>> levels)
    : n_(n), cap_(cap), levels_(std::move(levels))
{
    for (const auto& level : levels_)
        members_.insert(level.begin(), level.end());
}

ReducedPoset build_reduced_poset(const MonomialIdeal& ideal, unsigned cap)
{
    const unsigned n = ideal.n();
    if (cap < ideal.min_degree() || cap > n)
        throw InvalidArgument("reduced poset cap must lie between the minimal generator degree and n");

    u64 estimate = 0;
    for (VertexSet g : ideal.generators()) {
        if (g.size() > cap)
            continue;
        for (unsigned extra = 0; extra <= cap - g.size(); ++extra) {
            auto c = binomial_checked(n - g.size(), extra);
            if (!c || (estimate += *c) > kPosetBudget)
                throw ResourceLimit("reduced poset too large to enumerate");
        }
    }

    std::unordered_set<VertexSet> members;
    members.reserve(static_cast<std::size_t>(estimate));
    for (VertexSet g : ideal.generators()) {
        if (g.size() > cap)
            continue;
        for (unsigned extra = 0; extra <= cap - g.size(); ++extra)
            for_each_superset_of_size(g, n, extra, [&](VertexSet s) { members.insert(s); });
    }

    std::vector<std::vector<VertexSet>> levels(cap + 1);
    for (VertexSet s : members)
        levels[s.size()].push_back(s);
    for (auto& level : levels)
        std::sort(level.begin(), level.end());
    return ReducedPoset(n, cap, std::move(levels));
}

PartitionResult is_partitionable(const ReducedPoset& poset, const SolverOptions& options)
{
    return PartitionSearch(poset, options).run();
}

StanleyDepthResult stanley_depth(const MonomialIdeal& ideal, const SolverOptions& options)
{
    StanleyDepthResult best;
    for (unsigned k = ideal.min_degree(); k <= ideal.n(); ++k) {
        PartitionResult r = is_partitionable(build_reduced_poset(ideal, k), options);
        if (!r.partitionable)
            break;
        best.value = k;
        best.witness = std::move(*r.witness);
    }
    return best;
}

bool verify_partition(const ReducedPoset& poset, const IntervalPartition& partition)
{
    if (partition.cap != poset.cap())
        return false;
    std::unordered_set<VertexSet> seen;
    seen.reserve(poset.size());
    for (const Interval& iv : partition.intervals) {
        if (!iv.bottom.subset_of(iv.top) || iv.top.size() != poset.cap())
            return false;
        const std::uint64_t diff = iv.top.minus(iv.bottom).bits();
        if (std::popcount(diff) > 22)
            return false;
        for (std::uint64_t sub = diff;; sub = (sub - 1) & diff) {
            VertexSet c(iv.bottom.bits() | sub);
            if (!poset.contains(c) || !seen.insert(c).second)
                return false;
            if (sub == 0)
                break;
        }
    }
    return seen.size() == poset.size();
}

MainTheoremReport verify_main_theorem(const MonomialIdeal& ideal)
{
    MainTheoremReport report;
    report.n = ideal.n();
    report.d = ideal.min_degree();
    const unsigned n = report.n, d = report.d;

    std::vector<VertexSet> degree_d = ideal.generators_of_degree(d);
    report.mu_d = degree_d.size();
    report.small_case = n >= 2 * d + 1;

    if (d >= 1 && d < n) {
        MinBound mb = min_bound(n, n - d);
        report.bound = mb.value;
        report.branch = mb.which;
    } else if (d == 0) {
        report.bound = std::min(binomial(n, 1), xi(n));
    } else {
        report.bound = 0;  // d == n: C(n, n+1) = 0
    }
    report.hypothesis_met = report.mu_d <= report.bound;

    SimplicialComplex complex = complement_complex(normalize_ideal(std::move(degree_d), n));
    CollapseResult decision = is_uniformly_collapsible(complex);
    report.collapsible = decision.collapsible;
    report.certificate_valid = verify_certificate(complex, decision.certificate);
    report.certificate = std::move(decision.certificate);
    return report;
}

ConjectureReport probe_conjecture(const MonomialIdeal& ideal, const SolverOptions& options)
{
    ConjectureReport report;
    report.n = ideal.n();
    report.d = ideal.min_degree();
    report.conjectured_lower =
        report.d + static_cast<unsigned>(binomial(report.n, report.d + 1) / binomial(report.n, report.d));

    StanleyDepthResult sd = stanley_depth(ideal, options);
    report.exact = sd.value;
    report.meets_lower = report.exact >= report.conjectured_lower;
    report.witness_valid = verify_partition(build_reduced_poset(ideal, sd.value), sd.witness);
    return report;
}

ConjectureReport probe_conjecture(unsigned n, unsigned d, const SolverOptions& options)
{
    ConjectureReport report = probe_conjecture(gen_veronese(n, d), options);
    report.known_upper = report.conjectured_lower;
    return report;
}

bool check_minimal_in_xi(const MonomialIdeal& ideal)
{
    if (!ideal.is_pure())
        throw NotPure("ideal is not pure");
    const unsigned n = ideal.n();
    const unsigned d = ideal.min_degree();
    if (2 * d < n || d >= n)
        throw InvalidArgument("minimality in Xi needs n/2 <= d < n");

    SimplicialComplex complex = complement_complex(ideal);
    if (is_uniformly_collapsible(complex).collapsible)
        return false;  // sdepth(I) >= d + 1

    const auto& facets = complex.facets();
    for (std::size_t skip = 0; skip < facets.size(); ++skip) {
        std::vector<VertexSet> rest;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (i != skip)
                rest.push_back(facets[i]);
        if (rest.empty())
            continue;
        if (!is_uniformly_collapsible(SimplicialComplex::from_faces(n, std::move(rest))).collapsible)
            return false;
    }
    return true;
}

}  // namespace stanley
