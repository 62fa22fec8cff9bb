#pragma once

#include "toricfs/lattice.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace toricfs {

/// <normal, x> >= bound
struct Inequality {
    LatticeVector normal;
    Int bound;
};

/// <normal, x> == value
struct Equation {
    LatticeVector normal;
    Int value;
};

/// Exact feasibility over Q of a system of linear equations and
/// inequalities. Equations are eliminated by substitution, the remaining
/// inequalities by Fourier-Motzkin elimination.
bool is_feasible(std::size_t dim, const std::vector<Equation>& equations,
                 const std::vector<Inequality>& inequalities);

/// Polyhedron {u : <normal_i, u> >= bound_i} with its lattice points.
///
/// Lattice points are enumerated on first request (vertex enumeration,
/// then a scan of the integral bounding box) and cached. Copies share the
/// cache. Points come back sorted lexicographically.
class LatticePolytope {
public:
    LatticePolytope(std::size_t dim, std::vector<Inequality> inequalities);

    std::size_t dim() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return inequalities_; }

    bool contains(const LatticeVector& u) const;
    bool is_bounded() const;
    /// Vertices in lexicographic order. Empty for an empty polyhedron.
    std::vector<RationalVector> vertices() const;
    /// Throws Error when the polyhedron is unbounded.
    const std::vector<LatticeVector>& points() const;

    /// k * P, obtained by scaling every bound.
    LatticePolytope dilate(const Int& k) const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<LatticeVector> points;
    };

    std::size_t dim_;
    std::vector<Inequality> inequalities_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace toricfs
