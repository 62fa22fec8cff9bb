#include "toricfs/fan.hpp"

#include "toricfs/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toricfs {

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones))
{
    if (dim_ == 0)
        throw Error("fan dimension must be positive");
    for (const auto& r : rays_)
        if (r.size() != dim_)
            throw Error("ray length does not match fan dimension");
    for (const auto& c : cones_) {
        if (c.size() != dim_)
            throw Error("maximal cone is not simplicial of full dimension");
        for (std::size_t j : c)
            if (j >= rays_.size())
                throw Error("ray index out of range");
    }
    data_.reserve(cones_.size());
    for (ConeIndex k = 0; k < cones_.size(); ++k) {
        ConeData d;
        IntegerMatrix m = cone_matrix(k);
        d.det = determinant(m);
        if (d.det != 0) {
            auto inv = rational_inverse(m);
            std::vector<RationalVector> dual(dim_, RationalVector(dim_));
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j)
                    dual[i][j] = (*inv)[j][i];
            d.rational_dual = std::move(dual);
        }
        if (abs(d.det) == 1)
            d.dual = dual_basis(m);
        data_.push_back(std::move(d));
    }
}

bool Fan::cone_contains_ray(ConeIndex k, std::size_t j) const
{
    return std::find(cones_[k].begin(), cones_[k].end(), j) != cones_[k].end();
}

IntegerMatrix Fan::cone_matrix(ConeIndex k) const
{
    IntegerMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            m(i, j) = rays_[cones_[k][i]][j];
    return m;
}

const IntegerMatrix& Fan::cone_dual_basis(ConeIndex k) const
{
    if (!data_.at(k).dual)
        throw Error("cone " + std::to_string(k) + " not smooth; dual basis not integral");
    return *data_[k].dual;
}

const std::vector<RationalVector>& Fan::cone_rational_dual(ConeIndex k) const
{
    if (!data_.at(k).rational_dual)
        throw Error("cone " + std::to_string(k) + " is not full-dimensional");
    return *data_[k].rational_dual;
}

FanPtr make_fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones)
{
    return std::make_shared<const Fan>(dim, std::move(rays), std::move(max_cones));
}

bool ValidationReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

namespace {

// Some m with <m,.> = 0 on the shared rays, > 0 on the rest of a and < 0 on
// the rest of b exists iff the two simplicial cones meet in a common face.
bool meet_in_common_face(const Fan& fan, ConeIndex a, ConeIndex b)
{
    std::set<std::size_t> ra(fan.cone(a).begin(), fan.cone(a).end());
    std::set<std::size_t> rb(fan.cone(b).begin(), fan.cone(b).end());
    std::vector<Equation> eqs;
    std::vector<Inequality> ineqs;
    for (std::size_t j : ra) {
        if (rb.count(j))
            eqs.push_back({fan.ray(j), 0});
        else
            ineqs.push_back({fan.ray(j), 1});
    }
    for (std::size_t j : rb)
        if (!ra.count(j))
            ineqs.push_back({-fan.ray(j), 1});
    return is_feasible(fan.dim(), eqs, ineqs);
}

}  // namespace

ValidationReport validate_fan(const Fan& fan)
{
    ValidationReport report;

    ValidationCheck prim{"primitive rays", true, ""};
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
        if (content(fan.ray(j)) != 1) {
            prim.passed = false;
            prim.detail = "ray " + std::to_string(j) + " " + to_string(fan.ray(j)) + " is not primitive";
            break;
        }
    }
    report.checks.push_back(prim);

    ValidationCheck distinct{"distinct rays and cones", true, ""};
    for (std::size_t i = 0; i < fan.num_rays() && distinct.passed; ++i)
        for (std::size_t j = i + 1; j < fan.num_rays(); ++j)
            if (fan.ray(i) == fan.ray(j)) {
                distinct.passed = false;
                distinct.detail = "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
                break;
            }
    if (distinct.passed) {
        std::map<std::vector<std::size_t>, ConeIndex> seen;
        for (ConeIndex k = 0; k < fan.num_cones(); ++k) {
            auto key = fan.cone(k);
            std::sort(key.begin(), key.end());
            auto [it, inserted] = seen.emplace(key, k);
            if (!inserted) {
                distinct.passed = false;
                distinct.detail = "cones " + std::to_string(it->second) + " and " + std::to_string(k) + " coincide";
                break;
            }
        }
    }
    report.checks.push_back(distinct);

    ValidationCheck full{"full-dimensional maximal cones", true, ""};
    for (ConeIndex k = 0; k < fan.num_cones(); ++k)
        if (fan.cone_determinant(k) == 0) {
            full.passed = false;
            full.detail = "cone " + std::to_string(k) + " has determinant 0";
            break;
        }
    report.checks.push_back(full);

    ValidationCheck used{"every ray in a maximal cone", true, ""};
    std::vector<bool> hit(fan.num_rays(), false);
    for (const auto& c : fan.max_cones())
        for (std::size_t j : c)
            hit[j] = true;
    for (std::size_t j = 0; j < fan.num_rays(); ++j)
        if (!hit[j]) {
            used.passed = false;
            used.detail = "ray " + std::to_string(j) + " lies in no maximal cone";
            break;
        }
    report.checks.push_back(used);

    ValidationCheck faces{"pairwise face intersection", true, ""};
    if (!full.passed) {
        faces.passed = false;
        faces.detail = "skipped: degenerate cones";
    } else {
        for (ConeIndex a = 0; a < fan.num_cones() && faces.passed; ++a)
            for (ConeIndex b = a + 1; b < fan.num_cones(); ++b)
                if (!meet_in_common_face(fan, a, b)) {
                    faces.passed = false;
                    faces.detail = "cones " + std::to_string(a) + " and " + std::to_string(b) +
                                   " do not meet in a common face";
                    break;
                }
    }
    report.checks.push_back(faces);
    return report;
}

SmoothnessReport is_smooth(const Fan& fan)
{
    SmoothnessReport r;
    for (ConeIndex k = 0; k < fan.num_cones(); ++k)
        if (!fan.cone_is_smooth(k)) {
            r.smooth = false;
            r.offending.emplace_back(k, fan.cone_determinant(k));
        }
    return r;
}

bool is_complete(const Fan& fan)
{
    if (fan.num_cones() == 0)
        return false;
    std::map<std::vector<std::size_t>, std::vector<ConeIndex>> facets;
    for (ConeIndex k = 0; k < fan.num_cones(); ++k) {
        auto c = fan.cone(k);
        std::sort(c.begin(), c.end());
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<std::size_t> f;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop)
                    f.push_back(c[i]);
            facets[f].push_back(k);
        }
    }
    std::vector<ConeIndex> parent(fan.num_cones());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](ConeIndex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [f, owners] : facets) {
        if (owners.size() != 2)
            return false;
        parent[find(owners[0])] = find(owners[1]);
    }
    for (ConeIndex k = 1; k < fan.num_cones(); ++k)
        if (find(k) != find(0))
            return false;
    return true;
}

ConeLocation locate_cone(const Fan& fan, const LatticeVector& y)
{
    if (y.size() != fan.dim())
        throw Error("point dimension does not match fan dimension");
    for (ConeIndex k = 0; k < fan.num_cones(); ++k) {
        if (fan.cone_determinant(k) == 0)
            continue;
        const auto& dual = fan.cone_rational_dual(k);
        RationalVector coeffs(fan.dim());
        bool inside = true;
        for (std::size_t i = 0; i < fan.dim() && inside; ++i) {
            for (std::size_t j = 0; j < fan.dim(); ++j)
                coeffs[i] += dual[i][j] * y[j];
            inside = coeffs[i] >= 0;
        }
        if (inside)
            return {k, coeffs};
    }
    throw Error("point not in fan support");
}

std::vector<Int> express_in_basis(const Fan& fan, ConeIndex cone, const LatticeVector& y)
{
    const IntegerMatrix& dual = fan.cone_dual_basis(cone);
    std::vector<Int> a(fan.dim());
    for (std::size_t i = 0; i < fan.dim(); ++i)
        a[i] = dot(dual.row(i), y);
    return a;
}

}  // namespace toricfs
