#pragma once

#include "toricfs/divisor.hpp"

#include <string>
#include <vector>

namespace toricfs::corpus {

/// Rays e_1, .., e_n, -(e_1 + .. + e_n). Cone k holds rays k, .., k + n - 1
/// mod n + 1, sorted.
FanPtr projective_space(unsigned n);

/// Rays e1, e2, -e1 + a e2, -e2 with consecutive cones.
FanPtr hirzebruch(unsigned a);

/// Rays e1, e2, -e1, -e2.
FanPtr p1xp1();

/// P^2 blown up at k = 0..3 torus-fixed points; rays in cyclic order.
FanPtr blowup_p2(unsigned k);

/// Rays (1,0), (1,2), (-1,-1). Complete but not smooth.
FanPtr weighted_plane();

/// d times the last boundary divisor of P^n, i.e. O(d).
Divisor hyperplane(const FanPtr& pn, long d);

/// O(a, b) on P^1 x P^1.
Divisor bidegree(const FanPtr& quadric, long a, long b);

/// D_3 + D_4 on F_a, whose polytope is a trapezoid.
Divisor hirzebruch_ample(const FanPtr& fa);

/// Sum of all boundary divisors.
Divisor anticanonical(const FanPtr& fan);

struct NamedFan {
    std::string name;
    FanPtr fan;
};

struct NamedDivisor {
    std::string name;  // e.g. "p2_O2"
    std::string fan_name;
    Divisor divisor;
};

/// Every bundled fan, the singular one last.
std::vector<NamedFan> fans();

/// Every bundled (fan, very ample divisor) pair.
std::vector<NamedDivisor> divisors();

}  // namespace toricfs::corpus
