// Runs every acceptance criterion and prints one PASS/FAIL line per item.

#include "toricfs/bundle.hpp"
#include "toricfs/cli.hpp"
#include "toricfs/corpus.hpp"
#include "toricfs/frobenius.hpp"
#include "toricfs/io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace toricfs;

namespace {

std::string path(const std::string& name) { return std::string(TORICFS_CORPUS_DIR) + "/" + name + ".json"; }

FanPtr fan(const std::string& name)
{
    return fan_from_document(parse_fan_document(read_file(path(name)), name));
}

Divisor divisor(const FanPtr& f, const std::string& name)
{
    return divisor_from_document(f, parse_divisor_document(read_file(path(name)), name), name);
}

struct Pair {
    std::string fan;
    std::string divisor;
};

const std::vector<Pair>& normality_pairs()
{
    static const std::vector<Pair> pairs{
        {"p2", "p2_O1"},           {"p2", "p2_O2"},           {"p2", "p2_O3"},
        {"p1xp1", "p1xp1_O11"},    {"p1xp1", "p1xp1_O12"},    {"p1xp1", "p1xp1_O21"},
        {"p1xp1", "p1xp1_O22"},    {"f0", "f0_ample"},        {"f1", "f1_ample"},
        {"f2", "f2_ample"},        {"p1", "p1_O1"},           {"p1", "p1_O2"},
        {"p1", "p1_O3"},           {"p1", "p1_O4"},           {"bl1_p2", "bl1_p2_anticanonical"},
    };
    return pairs;
}

std::vector<FanPtr> smooth_corpus()
{
    std::vector<FanPtr> out;
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "f0", "f1", "f2", "f3", "bl1_p2", "bl2_p2", "bl3_p2"})
        out.push_back(fan(name));
    return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Each criterion returns an empty string on success, else what failed.
std::string criterion_1()
{
    auto t = Clock::now();
    for (unsigned n = 1; n <= 5; ++n) {
        Int e = e_of_fan(*corpus::projective_space(n)).e;
        if (e != -Int(n))
            return "e(P^" + std::to_string(n) + ") = " + e.get_str();
    }
    if (seconds_since(t) >= 1.0)
        return "took " + std::to_string(seconds_since(t)) + " s";
    return {};
}

std::string criterion_2()
{
    auto t = Clock::now();
    for (const auto& p : normality_pairs()) {
        LatticePolytope poly = polytope(divisor(fan(p.fan), p.divisor));
        DegreeOneReport d = check_degree_one_generation(poly, 5);
        if (!d.ok)
            return p.divisor + ": degree one fails at k = " + std::to_string(*d.first_failure);
        RelationsReport r = relations_generated_in_degree_two(PointConfiguration::from_polytope(poly), 4);
        if (!r.ok)
            return p.divisor + ": relations not generated by quadrics";
    }
    if (seconds_since(t) >= 30.0)
        return "took " + std::to_string(seconds_since(t)) + " s";
    return {};
}

// Counts degree-d monomials and distinct sums by listing multisets.
std::size_t brute_ideal(const std::vector<LatticeVector>& a, unsigned d)
{
    std::size_t monomials = 0;
    std::set<LatticeVector> sums;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, LatticeVector)> rec = [&](std::size_t start, LatticeVector s) {
        if (idx.size() == d) {
            ++monomials;
            sums.insert(s);
            return;
        }
        for (std::size_t v = start; v < a.size(); ++v) {
            idx.push_back(v);
            rec(v, s + a[v]);
            idx.pop_back();
        }
    };
    rec(0, LatticeVector(a.front().size()));
    return monomials - sums.size();
}

std::string criterion_3()
{
    struct Named {
        std::string name;
        std::string fan;
        std::string divisor;
        std::size_t expected;
    };
    for (const auto& n : std::vector<Named>{{"Segre square", "p1xp1", "p1xp1_O11", 1},
                                            {"twisted cubic", "p1", "p1_O3", 3},
                                            {"Veronese", "p2", "p2_O2", 6}}) {
        PointConfiguration a = PointConfiguration::from_polytope(polytope(divisor(fan(n.fan), n.divisor)));
        std::size_t got = ideal_dimension(a, 2);
        if (got != n.expected || brute_ideal(a.points(), 2) != n.expected)
            return n.name + ": " + std::to_string(got) + " quadrics";
    }
    return {};
}

std::string criterion_4()
{
    std::size_t triples = 0;
    for (const auto& p : normality_pairs()) {
        FanPtr f = fan(p.fan);
        Divisor l = divisor(f, p.divisor);
        for (const auto& q : normality_pairs()) {
            if (q.fan != p.fan)
                continue;
            Divisor m = divisor(f, q.divisor);
            for (long b = 1; b <= 3; ++b) {
                Divisor mb = m.scaled(b);
                BundleFan bf = build_bundle_fan(l, mb);
                for (ConeIndex k = 0; k < f->num_cones(); ++k)
                    for (std::size_t j = 0; j < f->num_rays(); ++j)
                        if (xi_bundle_formula(k, {BundleRayKind::Lifted, j}, l, mb) !=
                            xi(*bf.fan, BundleFan::upper_cone(k), bf.fan->ray(j)))
                            return p.divisor + " + " + q.divisor + "^" + std::to_string(b) + ": cone " +
                                   std::to_string(k) + ", ray " + std::to_string(j);
                ++triples;
            }
        }
    }
    if (triples < 20)
        return "only " + std::to_string(triples) + " triples";
    return {};
}

std::string criterion_5()
{
    FanPtr p1 = fan("p1");
    auto rays = [&](const std::string& l, const std::string& m) {
        BundleFan bf = build_bundle_fan(divisor(p1, l), divisor(p1, m));
        return std::set<LatticeVector>(bf.fan->rays().begin(), bf.fan->rays().end());
    };
    std::set<LatticeVector> quadric{LatticeVector{1, 0}, LatticeVector{-1, 0}, LatticeVector{0, 1},
                                    LatticeVector{0, -1}};
    std::set<LatticeVector> f1{LatticeVector{1, 0}, LatticeVector{-1, 1}, LatticeVector{0, 1}, LatticeVector{0, -1}};
    if (rays("p1_O1", "p1_O1") != quadric)
        return "P(O(1) + O(1)) rays differ";
    if (rays("p1_O0", "p1_O1") != f1)
        return "P(O + O(1)) rays differ";
    return {};
}

std::string criterion_6()
{
    for (const auto& f : smooth_corpus())
        for (ConeIndex k = 0; k < f->num_cones(); ++k) {
            std::optional<Int> lowest;
            for (auto j : boundary_split(*f, k).outside) {
                Int v = xi(*f, k, f->ray(j));
                if (!lowest || v < *lowest)
                    lowest = v;
            }
            for (std::uint64_t p : {2u, 3u, 5u})
                if (splitting_coefficients(*f, k, p).effective != (!lowest || *lowest >= -1))
                    return "cone " + std::to_string(k) + ", p = " + std::to_string(p);
        }
    SplittingCoefficients sc = splitting_coefficients(*fan("p2"), 0, 2);
    for (const auto& [j, a] : sc.coefficients)
        if (fan("p2")->ray(j) == LatticeVector{-1, -1})
            return a == -1 && !sc.effective ? "" : "P^2 coefficient on (-1,-1) is " + a.get_str();
    return "P^2 ray (-1,-1) missing";
}

std::string criterion_7()
{
    for (std::uint64_t p : {2u, 3u, 5u}) {
        SplittingAxiomReport r = verify_splitting_axioms(p, 2, 200, 2024);
        if (!r.ok())
            return "p = " + std::to_string(p) + ": " + (r.counterexamples.empty() ? "" : r.counterexamples.front());
        for (const auto& f : smooth_corpus())
            for (ConeIndex k = 0; k < f->num_cones(); ++k)
                if (!verify_splitting_divisor_chart(*f, k, p, static_cast<unsigned>(2 * p)))
                    return "chart " + std::to_string(k) + " fails at p = " + std::to_string(p);
    }
    return {};
}

std::string criterion_8()
{
    FanPtr p1 = fan("p1");
    TwistResult r1 = minimal_twist(divisor(p1, "p1_O1"), divisor(p1, "p1_O1"), 16);
    if (!r1.b || *r1.b != 1)
        return "P^1 twist is not 1";
    FanPtr p2 = fan("p2");
    Divisor h = divisor(p2, "p2_O1");
    TwistResult r2 = minimal_twist(h, h, 16);
    if (!r2.b || r2.e < -1)
        return "no twist for P^2 up to 16";
    auto sweep = twist_sweep(h, h, 16);
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i)
        for (std::size_t k = 0; k < sweep[i].outside_min.size(); ++k)
            if (*sweep[i].outside_min[k] > *sweep[i + 1].outside_min[k])
                return "min xi decreases at b = " + std::to_string(i + 2);
    return {};
}

std::string criterion_9()
{
    for (const auto& p : normality_pairs()) {
        LatticePolytope poly = polytope(divisor(fan(p.fan), p.divisor));
        if (!check_degree_one_generation(poly, 5).ok)
            continue;
        PointConfiguration a = PointConfiguration::from_polytope(poly);
        for (unsigned d = 1; d <= 4; ++d)
            if (hilbert_value(a, d) != dilate_points(poly, d).size())
                return p.divisor + " at degree " + std::to_string(d);
    }
    return {};
}

std::string criterion_10()
{
    std::vector<std::string> args{"--format", "json", "--seed", "1", "theorem1", path("p2"), "--divisor",
                                  path("p2_O2")};
    std::ostringstream a, b, err;
    int ca = run_cli(args, a, err);
    int cb = run_cli(args, b, err);
    if (ca != 0 || cb != 0)
        return "exit codes " + std::to_string(ca) + ", " + std::to_string(cb);
    return a.str() == b.str() ? "" : "reports differ";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"e(P^n) = -n for n = 1..5", criterion_1},
        {"degree one and quadric generation on the corpus pairs", criterion_2},
        {"Segre, twisted cubic and Veronese quadric counts", criterion_3},
        {"xi closed form on at least 20 bundle triples", criterion_4},
        {"bundle fans over P^1", criterion_5},
        {"effectivity matches the min-xi threshold", criterion_6},
        {"splitting axioms and chart pairing", criterion_7},
        {"minimal twists", criterion_8},
        {"hilbert values equal dilate counts", criterion_9},
        {"theorem1 reports are byte-identical", criterion_10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        try {
            why = criteria[i].second();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (why.empty() ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first;
        if (!why.empty()) {
            std::cout << "  (" << why << ")";
            ++failures;
        }
        std::cout << '\n';
    }
    return failures == 0 ? 0 : 1;
}
