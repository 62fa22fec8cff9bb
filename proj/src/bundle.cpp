#include "toricfs/bundle.hpp"

#include <algorithm>
#include <set>

namespace toricfs {

namespace {

void require_same_base(const Divisor& l, const Divisor& m)
{
    if (l.fan_ptr() != m.fan_ptr())
        throw Error("L and M must be divisors on the same fan");
}

std::string cone_ray(ConeIndex k, std::size_t j) { return "cone " + std::to_string(k) + ", ray " + std::to_string(j); }

}  // namespace

BundleFan build_bundle_fan(const Divisor& l, const Divisor& m)
{
    require_same_base(l, m);
    const Fan& base = l.fan();
    if (!is_smooth(base).smooth || !is_complete(base))
        throw Error("base fan must be smooth and complete");

    const std::size_t n = base.dim();
    const std::size_t r = base.num_rays();
    BundleFan bf;
    bf.base = l.fan_ptr();
    bf.l0_index = r;
    bf.l1_index = r + 1;

    std::vector<LatticeVector> rays;
    for (std::size_t j = 0; j < r; ++j) {
        const LatticeVector& y = base.ray(j);
        LatticeVector lifted(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            lifted[i] = y[i];
        lifted[n] = support_value(l, y) - support_value(m, y);
        rays.push_back(std::move(lifted));
        bf.provenance.push_back({BundleRayKind::Lifted, j});
    }
    LatticeVector l0(n + 1), l1(n + 1);
    l0[n] = -1;
    l1[n] = 1;
    rays.push_back(l0);
    rays.push_back(l1);
    bf.provenance.push_back({BundleRayKind::L0, 0});
    bf.provenance.push_back({BundleRayKind::L1, 0});

    std::vector<std::vector<std::size_t>> cones;
    for (ConeIndex k = 0; k < base.num_cones(); ++k) {
        auto lower = base.cone(k);
        auto upper = base.cone(k);
        lower.push_back(bf.l0_index);
        upper.push_back(bf.l1_index);
        cones.push_back(std::move(lower));
        cones.push_back(std::move(upper));
    }
    bf.fan = make_fan(n + 1, std::move(rays), std::move(cones));
    return bf;
}

O1Divisor o1_divisor(const BundleFan& bf, const Divisor& l, const Divisor& m)
{
    require_same_base(l, m);
    if (l.fan_ptr() != bf.base)
        throw Error("divisors do not live on the bundle's base fan");
    const std::size_t n = l.fan().dim();
    std::vector<Int> coeffs;
    for (const auto& ray : bf.provenance) {
        switch (ray.kind) {
        case BundleRayKind::Lifted: coeffs.push_back(l.coeff(ray.base_ray)); break;
        case BundleRayKind::L0: coeffs.push_back(1); break;
        case BundleRayKind::L1: coeffs.push_back(0); break;
        }
    }
    O1Divisor out{Divisor(bf.fan, std::move(coeffs)), 0, 0, false, false, {}};

    LatticePolytope cayley = polytope(out.divisor);
    const auto& pts = cayley.points();
    LatticePolytope poly_l = polytope(l);
    LatticePolytope poly_m = polytope(m);
    const auto& pl = poly_l.points();
    const auto& pm = poly_m.points();
    out.point_count = pts.size();
    out.expected_point_count = pl.size() + pm.size();

    std::set<LatticeVector> expected;
    for (const auto& [slice, height] : {std::pair{&pl, 0L}, std::pair{&pm, 1L}})
        for (const auto& u : *slice) {
            LatticeVector v(n + 1);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = u[i];
            v[n] = height;
            expected.insert(v);
        }
    out.points_match = std::set<LatticeVector>(pts.begin(), pts.end()) == expected;

    auto verts = cayley.vertices();
    out.vertices_at_ends = std::all_of(verts.begin(), verts.end(),
                                       [&](const RationalVector& v) { return v[n] == 0 || v[n] == 1; });
    out.positivity = positivity(out.divisor);
    return out;
}

Int xi_bundle_formula(ConeIndex base_cone, const BundleRay& ray, const Divisor& l, const Divisor& m)
{
    require_same_base(l, m);
    if (ray.kind == BundleRayKind::L0)
        return -1;
    if (ray.kind == BundleRayKind::L1)
        return 1;
    const Fan& base = l.fan();
    const LatticeVector& y = base.ray(ray.base_ray);
    Int s = 0;
    for (const auto& a : express_in_basis(base, base_cone, y))
        s += a;
    return s + support_value(l, y) - dot(y, local_data(l, base_cone)) + dot(y, local_data(m, base_cone)) -
           support_value(m, y);
}

namespace {

TwistSweepRow sweep_row(const Divisor& l, const Divisor& m, unsigned b)
{
    BundleFan bf = build_bundle_fan(l, m.scaled(Int(b)));
    const Fan& base = l.fan();
    TwistSweepRow row;
    row.b = b;
    row.e = e_of_fan(*bf.fan).e;
    for (ConeIndex k = 0; k < base.num_cones(); ++k) {
        std::vector<Int> values;
        std::optional<Int> lowest;
        for (std::size_t j = 0; j < base.num_rays(); ++j) {
            Int v = xi(*bf.fan, BundleFan::upper_cone(k), bf.fan->ray(j));
            if (!base.cone_contains_ray(k, j) && (!lowest || v < *lowest))
                lowest = v;
            values.push_back(std::move(v));
        }
        row.xi_upper.push_back(std::move(values));
        row.outside_min.push_back(lowest);
    }
    return row;
}

void check_twist_inputs(const Divisor& l, const Divisor& m, unsigned b_max)
{
    require_same_base(l, m);
    if (b_max < 1)
        throw Error("b_max must be at least 1");
    if (!positivity(m).ample)
        throw Error("M is not ample; the twist argument needs an ample M");
}

}  // namespace

std::vector<TwistSweepRow> twist_sweep(const Divisor& l, const Divisor& m, unsigned b_max)
{
    check_twist_inputs(l, m, b_max);
    std::vector<TwistSweepRow> rows;
    for (unsigned b = 1; b <= b_max; ++b)
        rows.push_back(sweep_row(l, m, b));
    return rows;
}

TwistResult minimal_twist(const Divisor& l, const Divisor& m, unsigned b_max)
{
    check_twist_inputs(l, m, b_max);
    TwistResult out;
    for (unsigned b = 1; b <= b_max; ++b) {
        TwistSweepRow row = sweep_row(l, m, b);
        if (b == 1 || row.e > out.e)
            out.e = row.e;
        bool found = row.e >= -1;
        out.sweep.push_back(std::move(row));
        if (found) {
            out.b = b;
            out.e = out.sweep.back().e;
            break;
        }
    }
    return out;
}

bool PipelineReport::hypotheses_ok() const
{
    return !hypotheses.empty() &&
           std::all_of(hypotheses.begin(), hypotheses.end(), [](const PipelineStage& s) { return s.passed; });
}

bool PipelineReport::conclusions_ok() const
{
    return conclusion_error.empty() && degree_one && degree_one->ok && relations && relations->ok;
}

PipelineReport normality_pipeline(const Divisor& l, const PipelineOptions& options)
{
    const Fan& fan = l.fan();
    const unsigned n = static_cast<unsigned>(fan.dim());
    PipelineReport rep;
    rep.route = "none";
    rep.max_k = options.max_k.value_or(n + 1);
    rep.max_degree = options.max_degree.value_or(std::max(3u, n + 1));

    auto stage = [&](std::string name, bool ok, std::string detail) {
        rep.hypotheses.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    ValidationReport v = validate_fan(fan);
    std::string vdetail;
    for (const auto& c : v.checks)
        if (!c.passed) {
            vdetail = c.name + ": " + c.detail;
            break;
        }
    bool ok = stage("fan is valid", v.all_pass(), vdetail);

    SmoothnessReport sm = is_smooth(fan);
    ok = stage("fan is smooth", sm.smooth,
               sm.smooth ? "" : "cone " + std::to_string(sm.offending[0].first) + " has determinant " +
                                    sm.offending[0].second.get_str()) && ok;
    ok = stage("fan is complete", v.all_pass() && is_complete(fan), "") && ok;

    if (ok) {
        Positivity pos = positivity(l);
        std::string detail;
        if (pos.ample_witness)
            detail = "ampleness fails at " + cone_ray(pos.ample_witness->first, pos.ample_witness->second);
        ok = stage("L is very ample", pos.very_ample, detail);
    }

    if (ok) {
        EInvariant e = e_of_fan(fan);
        rep.e_base = e.e;
        if (e.e >= -1) {
            rep.route = "direct";
            stage("splitting route", true, "direct: e = " + e.e.get_str() + " at cone " + std::to_string(e.best_cone));
        } else {
            rep.route = "bundle";
            stage("splitting route", true, "bundle P(L + L^b): e = " + e.e.get_str() + " < -1");
            TwistResult t = minimal_twist(l, l, options.b_max);
            if (!t.b) {
                stage("twist found", false,
                      "no b <= " + std::to_string(options.b_max) + "; best e = " + t.e.get_str());
            } else {
                rep.twist = *t.b;
                stage("twist found", true, "b = " + std::to_string(*t.b));
                Divisor mb = l.scaled(Int(*t.b));
                BundleFan bf = build_bundle_fan(l, mb);
                bool valid = validate_fan(*bf.fan).all_pass() && is_smooth(*bf.fan).smooth && is_complete(*bf.fan);
                stage("bundle fan smooth and complete", valid, "");
                EInvariant eb = e_of_fan(*bf.fan);
                rep.e_bundle = eb.e;
                stage("bundle e >= -1", eb.e >= -1,
                      "e = " + eb.e.get_str() + " at cone " + std::to_string(eb.best_cone));
                O1Divisor o1 = o1_divisor(bf, l, mb);
                stage("O(1) very ample", o1.positivity.very_ample && o1.cayley_ok(),
                      std::to_string(o1.point_count) + " lattice points, expected " +
                          std::to_string(o1.expected_point_count));
            }
        }
    }

    try {
        LatticePolytope p = polytope(l);
        rep.degree_one = check_degree_one_generation(p, rep.max_k);
        rep.relations = relations_generated_in_degree_two(PointConfiguration::from_polytope(p), rep.max_degree);
    } catch (const Error& e) {
        rep.conclusion_error = e.what();
    }
    return rep;
}

}  // namespace toricfs
