#include "doctest.h"
#include "corpus_files.hpp"
#include "oracles.hpp"

#include "toricfs/corpus.hpp"
#include "toricfs/divisor.hpp"

#include <random>

using namespace toricfs;

namespace {

std::vector<Divisor> sample_divisors(const FanPtr& fan, std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<Divisor> out;
    for (int t = 0; t < count; ++t) {
        std::vector<Int> c;
        for (std::size_t j = 0; j < fan->num_rays(); ++j)
            c.push_back(d(rng));
        out.emplace_back(fan, c);
    }
    return out;
}

std::vector<corpus::NamedFan> smooth_fans()
{
    std::vector<corpus::NamedFan> out;
    for (auto& nf : corpus::fans())
        if (is_smooth(*nf.fan).smooth)
            out.push_back(nf);
    return out;
}

}  // namespace

TEST_CASE("local data and support function")
{
    FanPtr p2 = corpus::projective_space(2);
    Divisor d3(p2, {0, 0, 1});
    CHECK(local_data(d3, 1) == LatticeVector{1, 0});
    CHECK(support_value(d3, LatticeVector{-1, -1}) == -1);
    CHECK(support_value(d3, LatticeVector{1, 0}) == 0);
}

TEST_CASE("support function is well defined on shared rays")
{
    for (const auto& nf : corpus::fans())
        for (const auto& d : sample_divisors(nf.fan, 21, 5)) {
            CAPTURE(nf.name);
            const Fan& f = *nf.fan;
            for (ConeIndex k = 0; k < f.num_cones(); ++k) {
                RationalVector m = rational_local_data(d, k);
                for (auto j : f.cone(k)) {
                    Rational v = 0;
                    for (std::size_t i = 0; i < f.dim(); ++i)
                        v += m[i] * f.ray(j)[i];
                    CHECK(v == -d.coeff(j));
                }
            }
            if (is_smooth(f).smooth)
                for (std::size_t j = 0; j < f.num_rays(); ++j)
                    CHECK(support_value(d, f.ray(j)) == -d.coeff(j));
        }
}

TEST_CASE("positivity")
{
    FanPtr p2 = corpus::projective_space(2);
    Positivity o1 = positivity(corpus::hyperplane(p2, 1));
    CHECK(o1.ample);
    CHECK(o1.very_ample);
    Positivity o0 = positivity(corpus::hyperplane(p2, 0));
    CHECK(o0.basepoint_free);
    CHECK_FALSE(o0.ample);
    CHECK(o0.ample_witness);
    Positivity neg = positivity(corpus::hyperplane(p2, -1));
    CHECK_FALSE(neg.basepoint_free);
    CHECK(neg.bpf_witness);

    for (const auto& nd : corpus::divisors()) {
        CAPTURE(nd.name);
        CHECK(positivity(nd.divisor).very_ample);
    }
    FanPtr w = corpus::weighted_plane();
    Positivity pw = positivity(Divisor(w, {0, 0, 1}));
    CHECK_FALSE(pw.very_ample);
}

TEST_CASE("corpus divisor files match the builders")
{
    for (const auto& nd : corpus::divisors()) {
        CAPTURE(nd.name);
        Divisor d = load_corpus_divisor(load_corpus_fan(nd.fan_name), nd.name);
        CHECK(d.coeffs() == nd.divisor.coeffs());
        CHECK(d.fan().rays() == nd.divisor.fan().rays());
    }
}

TEST_CASE("polytope points agree with a box scan")
{
    for (const auto& nd : corpus::divisors()) {
        CAPTURE(nd.name);
        CHECK(polytope(nd.divisor).points() == oracle::box_points(nd.divisor.fan().rays(), nd.divisor.coeffs(), 8));
    }
    FanPtr p2 = corpus::projective_space(2);
    CHECK(polytope(corpus::hyperplane(p2, 2)).points().size() == 6);
    CHECK(polytope(corpus::hyperplane(p2, -1)).points().empty());
}

TEST_CASE("divisor classes")
{
    FanPtr p2 = corpus::projective_space(2);
    Divisor a(p2, {1, 0, 0}), b(p2, {0, 1, 0}), c(p2, {0, 0, 1}), two(p2, {1, 1, 0});
    CHECK(linear_equivalent(a, b));
    CHECK(linear_equivalent(b, c));
    CHECK_FALSE(linear_equivalent(a, two));
    DivisorClass ca = divisor_class(a);
    CHECK(ca == divisor_class(c));
    CHECK(ca.free_rank == 1);
    CHECK(divisor_class(canonical_divisor(p2)) == divisor_class(corpus::hyperplane(p2, -3)));

    FanPtr q = corpus::p1xp1();
    CHECK(divisor_class(Divisor(q, {1, 0, 0, 0})).free_rank == 2);
    CHECK(linear_equivalent(Divisor(q, {1, 0, 0, 0}), Divisor(q, {0, 0, 1, 0})));
    CHECK_FALSE(linear_equivalent(Divisor(q, {1, 0, 0, 0}), Divisor(q, {0, 1, 0, 0})));
}

TEST_CASE("class equality agrees with linear equivalence")
{
    for (const auto& nf : corpus::fans()) {
        auto ds = sample_divisors(nf.fan, 4, 8);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            Divisor shifted(nf.fan, ds[i].coeffs());
            LatticeVector m(nf.fan->dim());
            m[0] = 2;
            LatticeVector dm = div_of(*nf.fan, m);
            std::vector<Int> moved = ds[i].coeffs();
            for (std::size_t j = 0; j < moved.size(); ++j)
                moved[j] += dm[j];
            CHECK(linear_equivalent(ds[i], Divisor(nf.fan, moved)));
            CHECK(divisor_class(ds[i]) == divisor_class(Divisor(nf.fan, moved)));
            for (std::size_t j = i + 1; j < ds.size(); ++j)
                CHECK((divisor_class(ds[i]) == divisor_class(ds[j])) == linear_equivalent(ds[i], ds[j]));
        }
    }
}

TEST_CASE("xi and e")
{
    FanPtr p2 = corpus::projective_space(2);
    CHECK(xi(*p2, 0, LatticeVector{-1, -1}) == -2);
    CHECK(xi(*p2, 0, LatticeVector{1, 0}) == 1);
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(e_of_fan(*corpus::projective_space(n)).e == -Int(n));
    CHECK(e_of_fan(*corpus::p1xp1()).e == -1);
    CHECK(e_of_fan(*corpus::blowup_p2(3)).e == -1);
    CHECK_THROWS_AS(e_of_fan(*corpus::weighted_plane()), Error);
    CHECK_FALSE(meets_splitting_criterion(*p2));
    CHECK(meets_splitting_criterion(*corpus::p1xp1()));
}

TEST_CASE("e agrees with a Cramer-rule double loop")
{
    for (const auto& nf : smooth_fans()) {
        CAPTURE(nf.name);
        EInvariant e = e_of_fan(*nf.fan);
        oracle::EResult o = oracle::e_value(nf.fan->rays(), nf.fan->max_cones());
        CHECK(e.e == o.e);
        REQUIRE(e.per_cone.size() == o.per_cone.size());
        for (std::size_t k = 0; k < o.per_cone.size(); ++k)
            CHECK(e.per_cone[k].min_xi == o.per_cone[k]);
    }
    for (unsigned a = 0; a <= 3; ++a)
        CHECK(e_of_fan(*corpus::hirzebruch(a)).e == oracle::e_value(corpus::hirzebruch(a)->rays(),
                                                                     corpus::hirzebruch(a)->max_cones())
                                                           .e);
}

TEST_CASE("splitting coefficients")
{
    SplittingCoefficients p1 = splitting_coefficients(*corpus::projective_space(1), 0, 3);
    REQUIRE(p1.coefficients.size() == 1);
    CHECK(p1.coefficients[0].second == 0);
    CHECK(p1.effective);

    SplittingCoefficients p2 = splitting_coefficients(*corpus::projective_space(2), 0, 2);
    REQUIRE(p2.coefficients.size() == 1);
    CHECK(p2.coefficients[0].first == 2);
    CHECK(p2.coefficients[0].second == -1);
    CHECK_FALSE(p2.effective);

    CHECK_THROWS_AS(splitting_coefficients(*corpus::projective_space(2), 0, 4), Error);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("effectivity is the min-xi threshold")
{
    for (const auto& nf : smooth_fans())
        for (ConeIndex k = 0; k < nf.fan->num_cones(); ++k)
            for (std::uint64_t p : {2u, 3u, 5u}) {
                std::optional<Int> lowest;
                BoundarySplit split = boundary_split(*nf.fan, k);
                for (auto j : split.outside) {
                    Int v = xi(*nf.fan, k, nf.fan->ray(j));
                    if (!lowest || v < *lowest)
                        lowest = v;
                }
                SplittingCoefficients sc = splitting_coefficients(*nf.fan, k, p);
                CHECK(sc.effective == (!lowest || *lowest >= -1));
                for (const auto& [j, a] : sc.coefficients)
                    CHECK(a == Int(static_cast<unsigned long>(p - 1)) * (1 + xi(*nf.fan, k, nf.fan->ray(j))));
            }
}
