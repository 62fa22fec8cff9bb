#include "toricfs/divisor.hpp"

#include <algorithm>

namespace toricfs {

Divisor::Divisor(FanPtr fan, std::vector<Int> coeffs) : fan_(std::move(fan)), coeffs_(std::move(coeffs))
{
    if (!fan_)
        throw Error("divisor without a fan");
    if (coeffs_.size() != fan_->num_rays())
        throw Error("divisor has " + std::to_string(coeffs_.size()) + " coefficients but the fan has " +
                    std::to_string(fan_->num_rays()) + " rays");
}

Divisor Divisor::zero(FanPtr fan)
{
    std::size_t r = fan->num_rays();
    return Divisor(std::move(fan), std::vector<Int>(r));
}

Divisor Divisor::scaled(const Int& k) const
{
    std::vector<Int> c = coeffs_;
    for (auto& x : c)
        x *= k;
    return Divisor(fan_, std::move(c));
}

Divisor operator+(const Divisor& a, const Divisor& b)
{
    if (a.fan_ != b.fan_)
        throw Error("divisors live on different fans");
    std::vector<Int> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeffs_[i];
    return Divisor(a.fan_, std::move(c));
}

Divisor operator-(const Divisor& a, const Divisor& b) { return a + b.scaled(-1); }

LatticeVector local_data(const Divisor& d, ConeIndex cone)
{
    const Fan& fan = d.fan();
    const IntegerMatrix& dual = fan.cone_dual_basis(cone);
    LatticeVector m(fan.dim());
    for (std::size_t i = 0; i < fan.dim(); ++i)
        m -= d.coeff(fan.cone(cone)[i]) * dual.row(i);
    return m;
}

RationalVector rational_local_data(const Divisor& d, ConeIndex cone)
{
    const Fan& fan = d.fan();
    const auto& dual = fan.cone_rational_dual(cone);
    RationalVector m(fan.dim());
    for (std::size_t i = 0; i < fan.dim(); ++i) {
        const Int& a = d.coeff(fan.cone(cone)[i]);
        for (std::size_t j = 0; j < fan.dim(); ++j)
            m[j] -= a * dual[i][j];
    }
    return m;
}

Int support_value(const Divisor& d, const LatticeVector& y)
{
    ConeLocation loc = locate_cone(d.fan(), y);
    return dot(local_data(d, loc.cone), y);
}

Positivity positivity(const Divisor& d)
{
    const Fan& fan = d.fan();
    Positivity p;
    p.basepoint_free = true;
    p.ample = true;
    for (ConeIndex k = 0; k < fan.num_cones(); ++k) {
        RationalVector m = rational_local_data(d, k);
        for (std::size_t j = 0; j < fan.num_rays(); ++j) {
            Rational v = d.coeff(j);
            for (std::size_t t = 0; t < fan.dim(); ++t)
                v += m[t] * fan.ray(j)[t];
            if (v < 0 && p.basepoint_free) {
                p.basepoint_free = false;
                p.bpf_witness = std::make_pair(k, j);
            }
            if (!fan.cone_contains_ray(k, j) && v <= 0 && p.ample) {
                p.ample = false;
                p.ample_witness = std::make_pair(k, j);
            }
        }
    }
    p.very_ample = p.ample && is_smooth(fan).smooth;
    return p;
}

LatticePolytope polytope(const Divisor& d)
{
    const Fan& fan = d.fan();
    std::vector<Inequality> ineqs;
    for (std::size_t j = 0; j < fan.num_rays(); ++j)
        ineqs.push_back({fan.ray(j), -d.coeff(j)});
    LatticePolytope poly(fan.dim(), std::move(ineqs));
    poly.points();
    return poly;
}

Divisor canonical_divisor(const FanPtr& fan)
{
    return Divisor(fan, std::vector<Int>(fan->num_rays(), Int(-1)));
}

BoundarySplit boundary_split(const Fan& fan, ConeIndex cone)
{
    BoundarySplit s;
    for (std::size_t j = 0; j < fan.num_rays(); ++j)
        (fan.cone_contains_ray(cone, j) ? s.inside : s.outside).push_back(j);
    return s;
}

IntegerMatrix div_matrix(const Fan& fan) { return IntegerMatrix::from_rows(fan.rays(), fan.dim()); }

LatticeVector div_of(const Fan& fan, const LatticeVector& m) { return div_matrix(fan) * m; }

DivisorClass divisor_class(const Divisor& d)
{
    const Fan& fan = d.fan();
    DivisorClass c;
    c.representative = d.coeffs();
    SmithForm s = smith_normal_form(div_matrix(fan));
    LatticeVector w = s.U * LatticeVector(d.coeffs());
    for (std::size_t i = 0; i < s.rank; ++i)
        mpz_fdiv_r(w[i].get_mpz_t(), w[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    c.canonical = w.coords();
    c.invariant_factors = s.invariant_factors();
    c.free_rank = fan.num_rays() - s.rank;

    if (fan.num_cones() > 0 && fan.cone_is_smooth(0) && is_complete(fan)) {
        const IntegerMatrix& dual = fan.cone_dual_basis(0);
        std::vector<std::pair<std::size_t, Int>> reduced;
        for (std::size_t j = 0; j < fan.num_rays(); ++j) {
            if (fan.cone_contains_ray(0, j))
                continue;
            Int x = d.coeff(j);
            for (std::size_t i = 0; i < fan.dim(); ++i)
                x -= d.coeff(fan.cone(0)[i]) * dot(dual.row(i), fan.ray(j));
            reduced.emplace_back(j, x);
        }
        c.reduced = std::move(reduced);
    }
    return c;
}

bool linear_equivalent(const Divisor& a, const Divisor& b)
{
    Divisor diff = a - b;
    return solve_integer(div_matrix(a.fan()), LatticeVector(diff.coeffs())).has_value();
}

Int xi(const Fan& fan, ConeIndex cone, const LatticeVector& y)
{
    Int s = 0;
    for (const auto& a : express_in_basis(fan, cone, y))
        s += a;
    return s;
}

EInvariant e_of_fan(const Fan& fan)
{
    if (!is_smooth(fan).smooth)
        throw Error("fan not smooth; e(X) is defined for nonsingular fans only");
    if (fan.num_cones() == 0)
        throw Error("fan has no maximal cones");
    EInvariant out;
    for (ConeIndex k = 0; k < fan.num_cones(); ++k) {
        ConeMinimum cm{k, 0, 0};
        for (std::size_t j = 0; j < fan.num_rays(); ++j) {
            Int v = xi(fan, k, fan.ray(j));
            if (j == 0 || v < cm.min_xi) {
                cm.min_xi = v;
                cm.argmin_ray = j;
            }
        }
        if (k == 0 || cm.min_xi > out.e) {
            out.e = cm.min_xi;
            out.best_cone = k;
        }
        out.per_cone.push_back(cm);
    }
    return out;
}

bool meets_splitting_criterion(const Fan& fan) { return e_of_fan(fan).e >= -1; }

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

SplittingCoefficients splitting_coefficients(const Fan& fan, ConeIndex cone, std::uint64_t p)
{
    if (!is_prime(p))
        throw Error("p = " + std::to_string(p) + " is not a prime");
    SplittingCoefficients out{cone, p, {}, true, {}};
    const Int pm1 = Int(static_cast<unsigned long>(p - 1));
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
        if (fan.cone_contains_ray(cone, j))
            continue;
        Int a = pm1 * (1 + xi(fan, cone, fan.ray(j)));
        if (a < 0)
            out.effective = false;
        if (a == 0)
            out.zero_rays.push_back(j);
        out.coefficients.emplace_back(j, a);
    }
    return out;
}

}  // namespace toricfs
