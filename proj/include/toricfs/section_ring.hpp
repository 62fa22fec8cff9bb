#pragma once

#include "toricfs/polyhedra.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toricfs {

/// Distinct lattice points, sorted lexicographically. Point i is the
/// variable x_i of the polynomial ring k[x_0..x_s]; its homogenization
/// (m, 1) is implicit.
class PointConfiguration {
public:
    PointConfiguration(std::size_t dim, std::vector<LatticeVector> points);
    static PointConfiguration from_polytope(const LatticePolytope& p);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<LatticeVector>& points() const { return points_; }
    const LatticeVector& point(std::size_t i) const { return points_[i]; }

private:
    std::size_t dim_;
    std::vector<LatticeVector> points_;
};

/// Lattice points of k * P, sorted.
std::vector<LatticeVector> dilate_points(const LatticePolytope& p, unsigned k);

struct DegreeOneStep {
    unsigned k = 0;
    std::size_t sumset_size = 0;
    std::size_t dilate_size = 0;
    std::vector<LatticeVector> missing;  // in (k+1)P but not in P + kP
    bool ok = true;
};

struct DegreeOneReport {
    bool ok = true;
    unsigned max_k = 0;
    std::optional<unsigned> first_failure;
    std::vector<DegreeOneStep> steps;
};

/// Checks (P ∩ M) + (kP ∩ M) = (k+1)P ∩ M for k = 1 .. max_k - 1.
DegreeOneReport check_degree_one_generation(const LatticePolytope& p, unsigned max_k);

/// Number of distinct sums of d points of A (with repetition).
std::size_t hilbert_value(const PointConfiguration& a, unsigned d);

/// Number of degree-d monomials in |A| variables.
std::size_t monomial_count(std::size_t variables, unsigned d);

/// dim I_d = #monomials of degree d - hilbert_value(A, d).
std::size_t ideal_dimension(const PointConfiguration& a, unsigned d);

/// Primes used for the modular cross-check of every rank.
inline constexpr std::uint64_t kRankPrimeA = 1000000007ULL;
inline constexpr std::uint64_t kRankPrimeB = 998244353ULL;

struct RankTriple {
    std::size_t rational = 0;
    std::size_t mod_a = 0;
    std::size_t mod_b = 0;
    bool agree() const { return rational == mod_a && rational == mod_b; }
};

/// Rank of S_{target - relation} * B inside the degree-`target` monomial
/// space, where B is the set of binomials x^u - x^v with u, v of degree
/// `relation` and equal A-sums (one per unordered pair). Computed blockwise
/// over the A-degree fibres, over Q and modulo two primes.
RankTriple multiplied_relation_rank(const PointConfiguration& a, unsigned relation, unsigned target);

/// dim S_{d-2} * I_2. Throws if the three rank computations disagree.
std::size_t quadric_span_dimension(const PointConfiguration& a, unsigned d);

struct RelationDegreeRow {
    unsigned degree = 0;
    std::size_t hilbert = 0;
    std::size_t ideal_dim = 0;
    std::size_t quadric_span_dim = 0;
    bool ok = true;
};

struct RelationsReport {
    bool ok = true;
    unsigned max_degree = 0;
    std::size_t quadrics = 0;  // dim I_2
    std::vector<RelationDegreeRow> rows;  // degrees 3 .. max_degree
};

RelationsReport relations_generated_in_degree_two(const PointConfiguration& a, unsigned max_degree);

struct GeneratorCount {
    unsigned degree = 0;
    std::size_t count = 0;  // dim I_d / S_1 I_{d-1}
};

std::vector<GeneratorCount> minimal_generator_degrees(const PointConfiguration& a, unsigned max_degree);

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
std::size_t rank_fraction_free(std::vector<std::vector<Int>> rows);

/// Rank of a dense matrix over F_p; entries are reduced mod p first.
std::size_t rank_mod_prime(const std::vector<std::vector<long>>& rows, std::uint64_t p);

}  // namespace toricfs
