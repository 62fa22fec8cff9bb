#include "doctest.h"
#include "corpus_files.hpp"
#include "oracles.hpp"

#include "toricfs/corpus.hpp"
#include "toricfs/fan.hpp"

#include <random>

using namespace toricfs;

namespace {

bool check_named(const ValidationReport& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return c.passed;
    FAIL("no check named " << name);
    return false;
}

// Every sampled point has nonnegative Cramer coordinates in some cone.
bool sampled_cover(const Fan& fan, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int t = 0; t < 300; ++t) {
        LatticeVector y(fan.dim());
        for (std::size_t i = 0; i < fan.dim(); ++i)
            y[i] = d(rng);
        bool found = false;
        for (ConeIndex k = 0; k < fan.num_cones() && !found; ++k) {
            std::vector<LatticeVector> basis;
            for (auto j : fan.cone(k))
                basis.push_back(fan.ray(j));
            std::vector<std::vector<Int>> m;
            for (const auto& b : basis)
                m.push_back(b.coords());
            if (oracle::det(m) == 0)
                continue;
            auto c = oracle::cramer(basis, y);
            found = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q >= 0; });
        }
        if (!found)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("corpus files round-trip and validate")
{
    for (const auto& nf : corpus::fans()) {
        CAPTURE(nf.name);
        FanPtr f = load_corpus_fan(nf.name);
        CHECK(f->rays() == nf.fan->rays());
        CHECK(f->max_cones() == nf.fan->max_cones());
        CHECK(validate_fan(*f).all_pass());
        CHECK(is_complete(*f));
        FanPtr again = fan_from_document(parse_fan_document(dump_fan_document(to_document(*f))));
        CHECK(again->rays() == f->rays());
        CHECK(again->max_cones() == f->max_cones());
    }
}

TEST_CASE("smoothness matches hand determinants")
{
    for (const auto& nf : corpus::fans()) {
        CAPTURE(nf.name);
        SmoothnessReport s = is_smooth(*nf.fan);
        if (nf.name == "weighted_plane") {
            CHECK_FALSE(s.smooth);
            REQUIRE(s.offending.size() == 1);
            CHECK(s.offending[0].first == 0);
            CHECK(abs(s.offending[0].second) == 2);
        } else {
            CHECK(s.smooth);
        }
    }
}

TEST_CASE("completeness agrees with sampling on the corpus")
{
    for (const auto& nf : corpus::fans()) {
        CAPTURE(nf.name);
        CHECK(is_complete(*nf.fan) == sampled_cover(*nf.fan, 3));
    }
}

TEST_CASE("incomplete fans")
{
    FanPtr plane = make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {{0, 1}});
    CHECK(validate_fan(*plane).all_pass());
    CHECK_FALSE(is_complete(*plane));
    CHECK_FALSE(sampled_cover(*plane, 3));

    FanPtr half = make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, 0}}, {{0, 1}, {1, 2}});
    CHECK(validate_fan(*half).all_pass());
    CHECK_FALSE(is_complete(*half));
}

TEST_CASE("validation failures")
{
    FanPtr overlap = make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}}, {{0, 1}, {0, 2}});
    CHECK_FALSE(check_named(validate_fan(*overlap), "pairwise face intersection"));

    FanPtr fat = make_fan(2, {LatticeVector{2, 0}, LatticeVector{0, 1}, LatticeVector{-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(check_named(validate_fan(*fat), "primitive rays"));

    FanPtr flat = make_fan(2, {LatticeVector{1, 0}, LatticeVector{-1, 0}, LatticeVector{0, 1}}, {{0, 1}, {0, 2}});
    CHECK_FALSE(check_named(validate_fan(*flat), "full-dimensional maximal cones"));

    FanPtr dup = make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 0}}, {{0, 1}, {1, 2}});
    CHECK_FALSE(check_named(validate_fan(*dup), "distinct rays and cones"));

    FanPtr loose = make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, -1}}, {{0, 1}});
    CHECK_FALSE(check_named(validate_fan(*loose), "every ray in a maximal cone"));

    CHECK_THROWS_AS(make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {{0, 5}}), Error);
    CHECK_THROWS_AS(make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {{0}}), Error);
}

TEST_CASE("locating points")
{
    FanPtr p2 = corpus::projective_space(2);
    ConeLocation loc = locate_cone(*p2, LatticeVector{-2, 1});
    CHECK(loc.cone == 1);
    CHECK(loc.coefficients[0] == 3);
    CHECK(loc.coefficients[1] == 2);
    CHECK(express_in_basis(*p2, 1, LatticeVector{-2, 1}) == std::vector<Int>{3, 2});
    CHECK_THROWS_AS(locate_cone(*make_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {{0, 1}}),
                                LatticeVector{-1, 0}),
                    Error);
}

TEST_CASE("express_in_basis reproduces the point")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-20, 20);
    for (const auto& nf : corpus::fans()) {
        if (!is_smooth(*nf.fan).smooth)
            continue;
        for (ConeIndex k = 0; k < nf.fan->num_cones(); ++k)
            for (int t = 0; t < 10; ++t) {
                LatticeVector y(nf.fan->dim());
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] = d(rng);
                auto a = express_in_basis(*nf.fan, k, y);
                LatticeVector back(y.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    back += a[i] * nf.fan->ray(nf.fan->cone(k)[i]);
                CHECK(back == y);
            }
    }
}
