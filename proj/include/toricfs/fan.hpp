#pragma once

#include "toricfs/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toricfs {

using ConeIndex = std::size_t;

/// Simplicial fan given by its rays and full-dimensional maximal cones.
/// Lower-dimensional cones are the faces of the maximal ones and are not
/// stored.
///
/// The constructor only checks structure (index ranges, cone sizes, ray
/// lengths). Geometric axioms are checked by validate_fan().
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones);

    std::size_t dim() const { return dim_; }
    std::size_t num_rays() const { return rays_.size(); }
    std::size_t num_cones() const { return cones_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t j) const { return rays_[j]; }
    const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }
    const std::vector<std::size_t>& cone(ConeIndex k) const { return cones_[k]; }

    bool cone_contains_ray(ConeIndex k, std::size_t j) const;
    /// Rows are the cone's rays in cone order.
    IntegerMatrix cone_matrix(ConeIndex k) const;
    const Int& cone_determinant(ConeIndex k) const { return data_[k].det; }
    bool cone_is_smooth(ConeIndex k) const { return abs(data_[k].det) == 1; }
    /// Rows m_i dual to the cone's rays. Throws for a non-smooth cone.
    const IntegerMatrix& cone_dual_basis(ConeIndex k) const;
    /// Dual basis over Q (rows). Throws for a degenerate cone.
    const std::vector<RationalVector>& cone_rational_dual(ConeIndex k) const;

private:
    struct ConeData {
        Int det;
        std::optional<IntegerMatrix> dual;
        std::optional<std::vector<RationalVector>> rational_dual;
    };

    std::size_t dim_;
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<std::size_t>> cones_;
    std::vector<ConeData> data_;
};

using FanPtr = std::shared_ptr<const Fan>;

FanPtr make_fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
};

/// Primitivity, distinctness, full-dimensionality, ray coverage and the
/// pairwise face-intersection property (via exact separating functionals).
ValidationReport validate_fan(const Fan& fan);

struct SmoothnessReport {
    bool smooth = true;
    std::vector<std::pair<ConeIndex, Int>> offending;  // cone, determinant
};

SmoothnessReport is_smooth(const Fan& fan);

/// Every facet of a maximal cone lies in exactly two maximal cones and the
/// adjacency graph is connected. Valid for validated simplicial fans.
bool is_complete(const Fan& fan);

struct ConeLocation {
    ConeIndex cone;
    RationalVector coefficients;  // y = sum coefficients[i] * ray(cone[i]), all >= 0
};

/// Lowest-index maximal cone containing y.
ConeLocation locate_cone(const Fan& fan, const LatticeVector& y);

/// Integer coordinates a^i with y = sum a^i n_i over the rays of a smooth cone.
std::vector<Int> express_in_basis(const Fan& fan, ConeIndex cone, const LatticeVector& y);

}  // namespace toricfs
