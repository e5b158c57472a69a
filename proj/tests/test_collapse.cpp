#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stanley/collapse.hpp"
#include "stanley/errors.hpp"
#include "stanley/sdepth.hpp"

using namespace stanley;

namespace {

SimplicialComplex complex_of(unsigned n, const std::vector<std::uint64_t>& masks)
{
    std::vector<VertexSet> faces(masks.begin(), masks.end());
    return SimplicialComplex::from_faces(n, faces);
}

// maximum matching size through the deficiency form of Hall's theorem
std::size_t deficiency_matching(const std::vector<std::uint64_t>& facets)
{
    const std::size_t m = facets.size();
    std::size_t worst = 0;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
        std::set<std::uint64_t> ridges;
        for (std::size_t i = 0; i < m; ++i)
            if (pick >> i & 1)
                for (std::uint64_t b = facets[i]; b != 0; b &= b - 1)
                    ridges.insert(facets[i] & ~(b & (~b + 1)));
        const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(pick));
        if (size > ridges.size())
            worst = std::max(worst, size - ridges.size());
    }
    return m - worst;
}

}  // namespace

TEST_CASE("facet-ridge graph")
{
    auto single = build_facet_ridge_graph(SimplicialComplex::from_faces(3, {VertexSet{1, 2, 3}}));
    CHECK(single.facets.size() == 1);
    CHECK(single.ridges.size() == 3);
    CHECK(single.adjacency[0].size() == 3);

    auto small = build_facet_ridge_graph(gen_not_uc(4, 2));
    CHECK(small.facets.size() == 5);
    CHECK(small.ridges.size() == 4);

    auto cyc = build_facet_ridge_graph(gen_cycle_with_chord(5));
    CHECK(cyc.facets.size() == 6);
    CHECK(cyc.ridges.size() == 5);
    CHECK(cyc.ridges == family_shadow(cyc.facets));
    for (const auto& adj : cyc.adjacency)
        CHECK(adj.size() == 2);

    auto points = build_facet_ridge_graph(SimplicialComplex::from_faces(3, {VertexSet{1}, VertexSet{2}}));
    CHECK(points.ridges == std::vector<VertexSet>{VertexSet{}});

    CHECK_THROWS_AS(build_facet_ridge_graph(SimplicialComplex::from_faces(4, {VertexSet{1, 2, 3}, VertexSet{3, 4}})), NotPure);
}

TEST_CASE("max_matching")
{
    CHECK(max_matching(build_facet_ridge_graph(SimplicialComplex::from_faces(3, {VertexSet{1, 2, 3}}))).size == 1);
    CHECK(max_matching(build_facet_ridge_graph(gen_not_uc(4, 2))).size == 4);
    CHECK(max_matching(build_facet_ridge_graph(complement_complex(gen_veronese(5, 2)))).size == 10);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        int delta = 1 + static_cast<int>(rng() % (n - 1));
        auto fam = oracle::random_family(rng, n, delta, 1 + rng() % 10);
        auto graph = build_facet_ridge_graph(complex_of(static_cast<unsigned>(n), fam));
        Matching m = max_matching(graph);
        REQUIRE(m.size == deficiency_matching(fam));
        std::size_t matched = 0;
        for (std::size_t f = 0; f < m.facet_to_ridge.size(); ++f)
            if (m.facet_to_ridge[f] != kUnmatched) {
                ++matched;
                REQUIRE(m.ridge_to_facet[m.facet_to_ridge[f]] == f);
                const auto& adj = graph.adjacency[f];
                REQUIRE(std::binary_search(adj.begin(), adj.end(), m.facet_to_ridge[f]));
            }
        REQUIRE(matched == m.size);
        REQUIRE(max_matching(graph).facet_to_ridge == m.facet_to_ridge);
    }
}

TEST_CASE("is_uniformly_collapsible examples")
{
    for (auto [n, delta] : {std::pair{4u, 2u}, {5u, 2u}, {6u, 3u}, {7u, 3u}}) {
        SimplicialComplex d = gen_not_uc(n, delta);
        CollapseResult r = is_uniformly_collapsible(d);
        CHECK_FALSE(r.collapsible);
        REQUIRE(std::holds_alternative<Violator>(r.certificate));
        auto facets = std::get<Violator>(r.certificate).facets;
        std::sort(facets.begin(), facets.end());
        auto all = d.facets();
        std::sort(all.begin(), all.end());
        CHECK(facets == all);
        CHECK(verify_certificate(d, r.certificate));
    }

    SimplicialComplex padded = gen_padded_counterexample(6, 3);
    CollapseResult p = is_uniformly_collapsible(padded);
    CHECK_FALSE(p.collapsible);
    REQUIRE(std::holds_alternative<Violator>(p.certificate));
    for (VertexSet f : std::get<Violator>(p.certificate).facets)
        CHECK(f.max_vertex() <= 6);
    CHECK(verify_certificate(padded, p.certificate));

    for (unsigned n : {4u, 5u, 6u, 7u}) {
        SimplicialComplex g = gen_cycle_with_chord(n);
        CHECK_FALSE(is_uniformly_collapsible(g).collapsible);
        const auto& facets = g.facets();
        for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << facets.size()); ++pick) {
            std::vector<VertexSet> sub;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if (pick >> i & 1)
                    sub.push_back(facets[i]);
            SimplicialComplex s = SimplicialComplex::from_faces(n, sub);
            CollapseResult r = is_uniformly_collapsible(s);
            REQUIRE(r.collapsible);
            REQUIRE(std::holds_alternative<Sdr>(r.certificate));
            REQUIRE(verify_certificate(s, r.certificate));
        }
    }

    CHECK(is_uniformly_collapsible(SimplicialComplex::from_faces(2, {VertexSet{1}})).collapsible);
    CHECK_FALSE(is_uniformly_collapsible(SimplicialComplex::from_faces(2, {VertexSet{1}, VertexSet{2}})).collapsible);
    CHECK_THROWS_AS(is_uniformly_collapsible(SimplicialComplex::from_faces(4, {VertexSet{1, 2, 3}, VertexSet{4}})), NotPure);
}

TEST_CASE("verify_certificate")
{
    SimplicialComplex simplex = SimplicialComplex::from_faces(3, {VertexSet{1, 2, 3}});
    CHECK(verify_certificate(simplex, Sdr{{{VertexSet{1, 2, 3}, 3}}}));
    CHECK_FALSE(verify_certificate(simplex, Sdr{{{VertexSet{1, 2, 3}, 4}}}));
    CHECK_FALSE(verify_certificate(simplex, Sdr{}));
    CHECK_FALSE(verify_certificate(simplex, Violator{{VertexSet{1, 2, 3}}}));

    SimplicialComplex two = SimplicialComplex::from_faces(3, {VertexSet{1, 2}, VertexSet{1, 3}});
    CHECK_FALSE(verify_certificate(two, Sdr{{{VertexSet{1, 2}, 2}, {VertexSet{1, 3}, 3}}}));
    CHECK(verify_certificate(two, Sdr{{{VertexSet{1, 2}, 2}, {VertexSet{1, 3}, 1}}}));
    CHECK_FALSE(verify_certificate(two, Sdr{{{VertexSet{1, 2}, 2}, {VertexSet{1, 2}, 1}}}));
    CHECK_FALSE(verify_certificate(two, Sdr{{{VertexSet{1, 2}, 2}, {VertexSet{2, 3}, 3}}}));

    SimplicialComplex small = gen_not_uc(4, 2);
    CHECK(verify_certificate(small, Violator{small.facets()}));
    CHECK_FALSE(verify_certificate(small, Violator{}));
    CHECK_FALSE(verify_certificate(small, Violator{{small.facets()[0], small.facets()[0]}}));
    CHECK_FALSE(verify_certificate(small, Violator{{VertexSet{3, 4}}}));

    CHECK_THROWS_AS(verify_certificate(SimplicialComplex::from_faces(3, {VertexSet{1, 2}, VertexSet{3}}), Sdr{}), NotPure);
}

TEST_CASE("exhaustive Hall, NUC and heredity on 6 vertices with at most 7 facets")
{
    constexpr int n = 6;
    constexpr int max_facets = 7;
    for (int delta = 1; delta <= n; ++delta) {
        std::vector<std::uint64_t> universe;
        for (const auto& s : oracle::k_subsets(n, delta))
            universe.push_back(oracle::mask_of(s));
        const std::size_t u = universe.size();
        std::vector<signed char> uc(std::size_t{1} << u, -1);
        std::vector<std::uint64_t> order;
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << u); ++pick)
            if (__builtin_popcountll(pick) <= max_facets)
                order.push_back(pick);
        std::stable_sort(order.begin(), order.end(),
                         [](auto a, auto b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });

        for (std::uint64_t pick : order) {
            std::vector<std::uint64_t> fam;
            for (std::size_t i = 0; i < u; ++i)
                if (pick >> i & 1)
                    fam.push_back(universe[i]);
            SimplicialComplex d = complex_of(n, fam);
            CollapseResult r = is_uniformly_collapsible(d);
            uc[pick] = r.collapsible;
            REQUIRE(r.collapsible == oracle::hall_holds(fam));
            REQUIRE(verify_certificate(d, r.certificate));

            const FVector f = f_vector(d);
            const bool counts_ok = f.f(delta - 2) >= f.f(delta - 1);
            if (r.collapsible)
                REQUIRE(counts_ok);

            bool all_proper = true;
            for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1) {
                std::uint64_t sub = pick & ~(rest & (~rest + 1));
                if (sub == 0)
                    continue;
                if (!uc[sub])
                    all_proper = false;
                if (r.collapsible)
                    REQUIRE(uc[sub]);
            }
            if (counts_ok && all_proper)
                REQUIRE(r.collapsible);
        }
    }
}

TEST_CASE("interval_partition_from_sdr")
{
    MonomialIdeal one = normalize_ideal({VertexSet{1, 2}}, 3);
    IntervalPartition p = interval_partition_from_sdr(one, Sdr{{{VertexSet{3}, 3}}});
    CHECK(p.cap == 3);
    CHECK(p.intervals == std::vector<Interval>{{VertexSet{1, 2}, VertexSet{1, 2, 3}}});
    CHECK(verify_partition(build_reduced_poset(one, 3), p));
    CHECK_THROWS_AS(interval_partition_from_sdr(one, Sdr{{{VertexSet{3}, 2}}}), InvalidCertificate);

    MonomialIdeal v52 = gen_veronese(5, 2);
    CollapseResult r = is_uniformly_collapsible(complement_complex(v52));
    REQUIRE(r.collapsible);
    IntervalPartition q = interval_partition_from_sdr(v52, std::get<Sdr>(r.certificate));
    CHECK(q.intervals.size() == 10);
    std::set<VertexSet> tops;
    for (const auto& iv : q.intervals) {
        CHECK(iv.bottom.size() == 2);
        tops.insert(iv.top);
    }
    CHECK(tops.size() == 10);
    CHECK(verify_partition(build_reduced_poset(v52, 3), q));

    CHECK_THROWS_AS(interval_partition_from_sdr(normalize_ideal({VertexSet{1}, VertexSet{2, 3}}, 3), Sdr{}), NotPure);

    // tops over generators number exactly mu
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        int d = 1 + static_cast<int>(rng() % (n - 1));
        auto fam = oracle::random_family(rng, n, d, 1 + rng() % 8);
        MonomialIdeal ideal = normalize_ideal(std::vector<VertexSet>(fam.begin(), fam.end()), static_cast<unsigned>(n));
        CollapseResult c = is_uniformly_collapsible(complement_complex(ideal));
        if (!c.collapsible)
            continue;
        IntervalPartition part = interval_partition_from_sdr(ideal, std::get<Sdr>(c.certificate));
        REQUIRE(verify_partition(build_reduced_poset(ideal, static_cast<unsigned>(d + 1)), part));
        std::size_t raised = 0;
        for (const auto& iv : part.intervals)
            raised += iv.bottom.size() == static_cast<unsigned>(d);
        REQUIRE(raised == ideal.num_generators());
    }
}

TEST_CASE("complement_transfer")
{
    MonomialIdeal x1 = normalize_ideal({VertexSet{1}}, 2);
    IntervalPartition p{2, {{VertexSet{1}, VertexSet{1, 2}}}};
    MonomialIdeal unit = complement_transfer(x1, p);
    CHECK(unit.is_unit());
    CHECK(unit.num_generators() == 1);

    MonomialIdeal v52 = gen_veronese(5, 2);
    IntervalPartition q = stanley_depth(v52).witness;
    REQUIRE(q.cap == 3);
    MonomialIdeal j = complement_transfer(v52, q);
    CHECK(j.num_generators() == 10);
    CHECK(j.is_pure());
    CHECK(j.min_degree() == 2);
    CHECK(stanley_depth(j).value >= 3);

    CHECK_THROWS_AS(complement_transfer(x1, IntervalPartition{2, {}}), InvalidCertificate);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        int d = 1 + static_cast<int>(rng() % (n - 1));
        auto fam = oracle::random_family(rng, n, d, 1 + rng() % 6);
        MonomialIdeal ideal = normalize_ideal(std::vector<VertexSet>(fam.begin(), fam.end()), static_cast<unsigned>(n));
        PartitionResult r = is_partitionable(build_reduced_poset(ideal, static_cast<unsigned>(d + 1)));
        if (!r.partitionable)
            continue;
        MonomialIdeal t = complement_transfer(ideal, *r.witness);
        REQUIRE(t.num_generators() == ideal.num_generators());
        REQUIRE(t.is_pure());
        REQUIRE(t.min_degree() == static_cast<unsigned>(n - d - 1));
    }
}

TEST_CASE("random certificates verify")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        int delta = 1 + static_cast<int>(rng() % n);
        auto fam = oracle::random_family(rng, n, delta, 1 + rng() % 20);
        SimplicialComplex d = complex_of(static_cast<unsigned>(n), fam);
        CollapseResult r = is_uniformly_collapsible(d);
        REQUIRE(std::holds_alternative<Sdr>(r.certificate) == r.collapsible);
        REQUIRE(verify_certificate(d, r.certificate));
    }
}
