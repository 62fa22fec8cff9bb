#pragma once

#include "toricfs/divisor.hpp"
#include "toricfs/section_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricfs {

enum class BundleRayKind { Lifted, L0, L1 };

struct BundleRay {
    BundleRayKind kind;
    std::size_t base_ray = 0;  // meaningful for Lifted
};

/// Fan of P(L ⊕ M) over a smooth complete base.
///
/// Ray order: the lift of base ray j is ray j, then l0 = (0,..,0,-1) and
/// l1 = (0,..,0,1). Base cone k yields cones 2k (lift + l0) and 2k + 1
/// (lift + l1).
struct BundleFan {
    FanPtr base;
    FanPtr fan;
    std::vector<BundleRay> provenance;
    std::size_t l0_index = 0;
    std::size_t l1_index = 0;

    static ConeIndex lower_cone(ConeIndex base_cone) { return 2 * base_cone; }
    static ConeIndex upper_cone(ConeIndex base_cone) { return 2 * base_cone + 1; }
};

/// Lifts n_j to (n_j, h_L(n_j) - h_M(n_j)). L and M must share the base fan,
/// which must be smooth and complete.
BundleFan build_bundle_fan(const Divisor& l, const Divisor& m);

struct O1Divisor {
    Divisor divisor;
    std::size_t point_count = 0;
    std::size_t expected_point_count = 0;  // |P_L ∩ M| + |P_M ∩ M|
    bool points_match = false;             // lattice points are P_L x {0} ∪ P_M x {1}
    bool vertices_at_ends = false;         // every vertex has last coordinate 0 or 1
    Positivity positivity;

    bool cayley_ok() const { return points_match && vertices_at_ends; }
};

/// O(1) on P(L ⊕ M): a^L_j on lifted rays, 1 on l0, 0 on l1. The Cayley
/// polytope property is checked, not assumed.
O1Divisor o1_divisor(const BundleFan& bf, const Divisor& l, const Divisor& m);

/// xi of the cone (lift of sigma) + l1 at the lifted ray, by the closed form
///   sum a^i + h_L(y) - <y, m_L(sigma)> + <y, m_M(sigma)> - h_M(y)
/// with y = sum a^i n_i. l0 gives -1 and l1 gives 1.
Int xi_bundle_formula(ConeIndex base_cone, const BundleRay& ray, const Divisor& l, const Divisor& m);

struct TwistSweepRow {
    unsigned b = 0;
    Int e;
    /// xi at upper_cone(k) for each base cone k and base ray j.
    std::vector<std::vector<Int>> xi_upper;
    /// min of xi_upper[k][j] over rays j outside base cone k; unset when
    /// every ray lies in the cone.
    std::vector<std::optional<Int>> outside_min;
};

/// Rows for b = 1 .. b_max of the bundle P(L ⊕ M^b).
std::vector<TwistSweepRow> twist_sweep(const Divisor& l, const Divisor& m, unsigned b_max);

struct TwistResult {
    std::optional<unsigned> b;
    Int e;  // e of the bundle at b, or the best e seen when none works
    std::vector<TwistSweepRow> sweep;
};

/// Smallest b in [1, b_max] with e(P(L ⊕ M^b)) >= -1. M must be ample.
TwistResult minimal_twist(const Divisor& l, const Divisor& m, unsigned b_max);

struct PipelineOptions {
    std::optional<unsigned> max_k;       // default n + 1
    std::optional<unsigned> max_degree;  // default max(3, n + 1)
    unsigned b_max = 16;
};

struct PipelineStage {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PipelineReport {
    std::vector<PipelineStage> hypotheses;
    std::string route;  // "direct", "bundle" or "none"
    std::optional<Int> e_base;
    std::optional<unsigned> twist;
    std::optional<Int> e_bundle;
    unsigned max_k = 0;
    unsigned max_degree = 0;
    std::optional<DegreeOneReport> degree_one;
    std::optional<RelationsReport> relations;
    std::string conclusion_error;

    bool hypotheses_ok() const;
    bool conclusions_ok() const;
    bool passed() const { return hypotheses_ok() && conclusions_ok(); }
};

/// Hypothesis chain (smooth, complete, very ample, e >= -1 directly or on
/// P(L ⊕ L^b) with O(1) very ample) followed by the direct checks of degree
/// one generation and quadric generation on P_L.
PipelineReport normality_pipeline(const Divisor& l, const PipelineOptions& options = {});

}  // namespace toricfs
