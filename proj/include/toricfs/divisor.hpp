#pragma once

#include "toricfs/fan.hpp"
#include "toricfs/polyhedra.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toricfs {

/// T-Cartier divisor D = sum a_i D_i, one coefficient per ray.
///
/// Sign convention: the support function satisfies h_D(n_i) = -a_i and the
/// section polytope is P_D = {u : <u, n_i> >= -a_i}.
class Divisor {
public:
    Divisor(FanPtr fan, std::vector<Int> coeffs);
    static Divisor zero(FanPtr fan);

    const Fan& fan() const { return *fan_; }
    const FanPtr& fan_ptr() const { return fan_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(std::size_t j) const { return coeffs_[j]; }

    Divisor scaled(const Int& k) const;
    friend Divisor operator+(const Divisor& a, const Divisor& b);
    friend Divisor operator-(const Divisor& a, const Divisor& b);

private:
    FanPtr fan_;
    std::vector<Int> coeffs_;
};

/// m_D(sigma) in M with <m_D(sigma), n_i> = -a_i on the rays of sigma.
/// The cone must be smooth.
LatticeVector local_data(const Divisor& d, ConeIndex cone);

/// Same functional over Q; defined for any full-dimensional cone.
RationalVector rational_local_data(const Divisor& d, ConeIndex cone);

/// h_D(y), evaluated on the cone returned by locate_cone.
Int support_value(const Divisor& d, const LatticeVector& y);

struct Positivity {
    bool basepoint_free = false;
    bool ample = false;
    bool very_ample = false;
    /// First (cone, ray) violating the base-point-free or ampleness
    /// inequality, when any.
    std::optional<std::pair<ConeIndex, std::size_t>> bpf_witness;
    std::optional<std::pair<ConeIndex, std::size_t>> ample_witness;
};

/// Ampleness through strict convexity of the support function; very ample
/// is taken as ample on a smooth fan.
Positivity positivity(const Divisor& d);

/// P_D with its lattice points. Throws when the fan is not complete.
LatticePolytope polytope(const Divisor& d);

Divisor canonical_divisor(const FanPtr& fan);

struct BoundarySplit {
    std::vector<std::size_t> inside;
    std::vector<std::size_t> outside;
};

BoundarySplit boundary_split(const Fan& fan, ConeIndex cone);

/// Class of a divisor in Z^r / {div m}. `canonical` is a normal form
/// obtained from the Smith form of the div map, so equal classes have equal
/// canonical vectors.
struct DivisorClass {
    std::vector<Int> representative;
    std::vector<Int> canonical;
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;
    /// Coordinates in the basis {D_j : j not in cone 0}; set when cone 0
    /// is smooth and the fan complete.
    std::optional<std::vector<std::pair<std::size_t, Int>>> reduced;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.canonical == b.canonical; }
};

/// div m = sum <m, n_i> D_i as an r x n matrix with rows n_i.
IntegerMatrix div_matrix(const Fan& fan);
LatticeVector div_of(const Fan& fan, const LatticeVector& m);

DivisorClass divisor_class(const Divisor& d);
/// Decided by solving coeff(a) - coeff(b) = div m over Z.
bool linear_equivalent(const Divisor& a, const Divisor& b);

/// xi_sigma(y) = sum_i <m_i, y> for the dual basis of a smooth cone.
Int xi(const Fan& fan, ConeIndex cone, const LatticeVector& y);

struct ConeMinimum {
    ConeIndex cone;
    Int min_xi;
    std::size_t argmin_ray;
};

struct EInvariant {
    Int e;
    ConeIndex best_cone;
    std::vector<ConeMinimum> per_cone;
};

/// max over maximal cones of the min over all rays of xi_sigma(n_j).
EInvariant e_of_fan(const Fan& fan);

bool meets_splitting_criterion(const Fan& fan);

bool is_prime(std::uint64_t p);

struct SplittingCoefficients {
    ConeIndex cone;
    std::uint64_t p;
    std::vector<std::pair<std::size_t, Int>> coefficients;  // ray outside the cone, a_j
    bool effective = true;
    std::vector<std::size_t> zero_rays;
};

/// a_j = (p - 1)(1 + xi_sigma(n_j)) for every ray outside the cone.
SplittingCoefficients splitting_coefficients(const Fan& fan, ConeIndex cone, std::uint64_t p);

}  // namespace toricfs
