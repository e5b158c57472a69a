#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stanley/complexes.hpp"
#include "stanley/errors.hpp"

using namespace stanley;

namespace {

std::vector<VertexSet> from_oracle(const std::vector<oracle::Set>& family)
{
    std::vector<VertexSet> out;
    for (const auto& s : family)
        out.emplace_back(oracle::mask_of(s));
    return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("VertexSet basics")
{
    VertexSet s{1, 3, 64};
    CHECK(s.size() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(2));
    CHECK(s.vertices() == std::vector<unsigned>{1, 3, 64});
    CHECK(s.max_vertex() == 64);
    CHECK(VertexSet{2}.complement(3) == (VertexSet{1, 3}));
    CHECK(VertexSet::full(64).size() == 64);
}

TEST_CASE("normalize_ideal")
{
    MonomialIdeal a = normalize_ideal({VertexSet{1}, VertexSet{1, 2}}, 2);
    CHECK(a.generators() == std::vector<VertexSet>{VertexSet{1}});

    MonomialIdeal unit = normalize_ideal({VertexSet{}, VertexSet{1}}, 2);
    CHECK(unit.generators() == std::vector<VertexSet>{VertexSet{}});
    CHECK(unit.is_unit());

    std::vector<VertexSet> triangle{VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{1, 3}};
    MonomialIdeal t = normalize_ideal(triangle, 3);
    CHECK(sorted(t.generators()) == sorted(triangle));

    MonomialIdeal dup = normalize_ideal({VertexSet{1, 2}, VertexSet{1, 2}, VertexSet{2, 3, 4}}, 4);
    CHECK(dup.num_generators() == 2);
    CHECK_FALSE(dup.is_pure());
    CHECK(dup.min_degree() == 2);

    CHECK_THROWS_AS(normalize_ideal({VertexSet{1}}, 0), InvalidArgument);
    CHECK_THROWS_AS(normalize_ideal({VertexSet{1}}, 65), InvalidArgument);
    CHECK_THROWS_AS(normalize_ideal({VertexSet{1, 4}}, 3), InvalidArgument);
    CHECK_THROWS_AS(normalize_ideal({}, 3), InvalidArgument);
}

TEST_CASE("complement duality")
{
    MonomialIdeal i = normalize_ideal(
        {VertexSet{3, 4}, VertexSet{2, 4}, VertexSet{1, 4}, VertexSet{2, 3}, VertexSet{1, 3}}, 4);
    SimplicialComplex d = complement_complex(i);
    CHECK(sorted(d.facets()) == sorted(from_oracle(oracle::compressed(4, 2, 5))));
    CHECK(complement_ideal(d) == i);

    SimplicialComplex simplex = complement_complex(normalize_ideal({VertexSet{}}, 3));
    CHECK(simplex.facets() == std::vector<VertexSet>{VertexSet{1, 2, 3}});
    CHECK(complement_ideal(simplex).is_unit());

    MonomialIdeal cyc = complement_ideal(gen_cycle_with_chord(5));
    CHECK(cyc.num_generators() == 6);
    CHECK(cyc.is_pure());
    CHECK(cyc.min_degree() == 3);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        int k = static_cast<int>(rng() % (n + 1));
        auto fam = oracle::random_family(rng, n, k, 1 + rng() % 12);
        std::vector<VertexSet> gens;
        for (auto m : fam)
            gens.emplace_back(m);
        MonomialIdeal ideal = normalize_ideal(gens, static_cast<unsigned>(n));
        SimplicialComplex c = complement_complex(ideal);
        REQUIRE(complement_ideal(c) == ideal);
        REQUIRE(c.is_pure());
        REQUIRE(c.dimension() == n - k - 1);
        REQUIRE(f_vector(c).f(n - k - 1) == ideal.num_generators());
    }
}

TEST_CASE("f_vector")
{
    CHECK(f_vector(SimplicialComplex::from_faces(3, {VertexSet{1, 2, 3}})).entries() == std::vector<u64>{1, 3, 3, 1});

    FVector small = f_vector(gen_not_uc(4, 2));
    CHECK(small.entries() == std::vector<u64>{1, 4, 5});
    CHECK(small.f(1) == xi(2) + 1);
    CHECK(small.f(0) == xi(2));

    FVector padded = f_vector(gen_padded_counterexample(6, 3));
    CHECK(padded.f(1) == xi(3) + 3);
    CHECK(padded.f(1) == 17);
    CHECK(padded.f(2) == xi(3) + 2);
    CHECK(padded.f(2) == 16);

    FVector mixed = f_vector(SimplicialComplex::from_faces(4, {VertexSet{1, 2, 3}, VertexSet{3, 4}}));
    CHECK(mixed.entries() == std::vector<u64>{1, 4, 4, 1});
    CHECK(mixed.f(-1) == 1);
    CHECK(mixed.f(5) == 0);
}

TEST_CASE("rev_lex_less")
{
    CHECK(rev_lex_less(VertexSet{2, 3}, VertexSet{1, 4}));
    CHECK_FALSE(rev_lex_less(VertexSet{2, 3}, VertexSet{2, 3}));
    CHECK(rev_lex_less(VertexSet{1, 2}, VertexSet{1, 3}));
    CHECK_THROWS_AS(rev_lex_less(VertexSet{1}, VertexSet{1, 2}), InvalidArgument);

    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto all = oracle::k_subsets(n, k);
            for (const auto& s : all)
                for (const auto& t : all) {
                    VertexSet a(oracle::mask_of(s)), b(oracle::mask_of(t));
                    bool lt = rev_lex_less(a, b), gt = rev_lex_less(b, a);
                    REQUIRE(lt == oracle::rlex_less(s, t));
                    REQUIRE((int(lt) + int(gt) + int(a == b)) == 1);
                }
        }
}

TEST_CASE("compressed_family")
{
    auto fam = compressed_family(4, 2, 5);
    CHECK(fam == std::vector<VertexSet>{VertexSet{1, 2}, VertexSet{1, 3}, VertexSet{2, 3}, VertexSet{1, 4}, VertexSet{2, 4}});
    CHECK(compressed_family(5, 3, 1) == std::vector<VertexSet>{VertexSet{1, 2, 3}});
    CHECK(compressed_family(6, 3, 20).size() == 20);
    CHECK(compressed_family(5, 0, 1) == std::vector<VertexSet>{VertexSet{}});

    CHECK_THROWS_AS(compressed_family(4, 2, 7), InvalidArgument);
    CHECK_THROWS_AS(compressed_family(4, 2, 0), InvalidArgument);
    CHECK_THROWS_AS(compressed_family(4, 5, 1), InvalidArgument);

    // initial segments of the brute-force order, hence downward closed
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            auto order = oracle::compressed(n, k, oracle::pascal(n, k));
            auto full = compressed_family(n, k, oracle::pascal(n, k));
            REQUIRE(full == from_oracle(order));
            for (u64 l = 1; l <= full.size(); ++l) {
                auto prefix = compressed_family(n, k, l);
                REQUIRE(prefix.size() == l);
                REQUIRE(std::equal(prefix.begin(), prefix.end(), full.begin()));
            }
        }
}

TEST_CASE("family_shadow")
{
    CHECK(family_shadow({VertexSet{1, 2}}) == std::vector<VertexSet>{VertexSet{1}, VertexSet{2}});
    CHECK(family_shadow({VertexSet{3}}) == std::vector<VertexSet>{VertexSet{}});
    CHECK_THROWS_AS(family_shadow({VertexSet{1, 2}, VertexSet{1}}), InvalidArgument);
    CHECK_THROWS_AS(family_shadow({VertexSet{}}), InvalidArgument);

    // compressed shadows stay compressed, with size given by the shadow function
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (u64 l = 1; l <= binomial(n, k); ++l) {
                auto shadow = family_shadow(compressed_family(n, k, l));
                REQUIRE(shadow == compressed_family(n, k - 1, shadow_size(l, k)));
            }
}

TEST_CASE("shadow_size matches enumerated compressed shadows up to n = 10")
{
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            auto order = oracle::compressed(n, k, oracle::pascal(n, k));
            std::set<oracle::Set> shadow;
            for (std::size_t l = 1; l <= order.size(); ++l) {
                for (auto s : oracle::shadow({order[l - 1]}))
                    shadow.insert(s);
                REQUIRE(shadow_size(l, k) == shadow.size());
            }
        }
}

TEST_CASE("Kruskal-Katona lower bound on random families")
{
    std::mt19937_64 rng(2024);
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto total = oracle::pascal(n, k);
            for (int trial = 0; trial < 1000; ++trial) {
                auto masks = oracle::random_family(rng, n, k, 1 + rng() % total);
                std::vector<VertexSet> fam(masks.begin(), masks.end());
                REQUIRE(family_shadow(fam).size() >= shadow_size(fam.size(), k));
            }
        }
}

TEST_CASE("generators")
{
    CHECK(gen_veronese(3, 1).generators() == std::vector<VertexSet>{VertexSet{1}, VertexSet{2}, VertexSet{3}});
    CHECK(gen_veronese(4, 2).num_generators() == 6);
    CHECK(gen_veronese(5, 2).num_generators() == 10);
    CHECK_THROWS_AS(gen_veronese(3, 0), InvalidArgument);
    CHECK_THROWS_AS(gen_veronese(3, 4), InvalidArgument);

    MonomialIdeal i425 = gen_compressed_ideal(4, 2, 5);
    CHECK(i425 == normalize_ideal({VertexSet{3, 4}, VertexSet{2, 4}, VertexSet{1, 4}, VertexSet{2, 3}, VertexSet{1, 3}}, 4));
    CHECK(gen_compressed_ideal(4, 2, 1).generators() == std::vector<VertexSet>{VertexSet{3, 4}});
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned d = 1; d < n; ++d)
            CHECK(gen_compressed_ideal(n, d, binomial(n, d)) == gen_veronese(n, d));
    for (unsigned l = 1; l <= 6; ++l) {
        MonomialIdeal c = gen_compressed_ideal(4, 2, l);
        CHECK(c.num_generators() == l);
        CHECK(c.is_pure());
        CHECK(c.min_degree() == 2);
    }

    SimplicialComplex a = gen_not_uc(4, 2);
    CHECK(a.num_facets() == 5);
    SimplicialComplex b = gen_not_uc(6, 3);
    CHECK(b.num_facets() == 15);
    CHECK(f_vector(b).f(1) == 14);
    CHECK(gen_not_uc(5, 2).num_facets() == 5);
    CHECK_THROWS_AS(gen_not_uc(3, 2), InvalidArgument);  // xi_2 + 1 = 5 > C(3,2)

    SimplicialComplex p = gen_padded_counterexample(6, 3);
    CHECK(p.n() == 8);
    CHECK(p.num_facets() == 16);
    CHECK(std::count(p.facets().begin(), p.facets().end(), VertexSet{6, 7, 8}) == 1);

    SimplicialComplex g = gen_cycle_with_chord(5);
    CHECK(sorted(g.facets()) == sorted({VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}, VertexSet{4, 5},
                                        VertexSet{1, 5}, VertexSet{1, 3}}));
    for (unsigned n = 4; n <= 10; ++n)
        CHECK(f_vector(gen_cycle_with_chord(n)).entries() == std::vector<u64>{1, n, n + 1});
    CHECK_THROWS_AS(gen_cycle_with_chord(3), InvalidArgument);
}
