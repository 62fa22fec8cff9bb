#include "toricfs/cli.hpp"

#include "toricfs/bundle.hpp"
#include "toricfs/frobenius.hpp"
#include "toricfs/io.hpp"
#include "toricfs/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>

namespace toricfs {

namespace {

using ojson = nlohmann::ordered_json;

ojson int_json(const Int& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

FanPtr load_fan(const std::string& path, Report& r)
{
    std::string text = read_file(path);
    std::string name = std::filesystem::path(path).filename().string();
    r.inputs.push_back({name, sha256_hex(text)});
    return fan_from_document(parse_fan_document(text, name));
}

Divisor load_divisor(const FanPtr& fan, const std::string& path, Report& r)
{
    std::string text = read_file(path);
    std::string name = std::filesystem::path(path).filename().string();
    r.inputs.push_back({name, sha256_hex(text)});
    return divisor_from_document(fan, parse_divisor_document(text, name), name);
}

std::string first_failure(const ValidationReport& v)
{
    for (const auto& c : v.checks)
        if (!c.passed)
            return c.name + ": " + c.detail;
    return {};
}

// A facet that does not lie in exactly two maximal cones, if any.
std::string completeness_witness(const Fan& fan)
{
    std::map<std::vector<std::size_t>, std::vector<ConeIndex>> owners;
    for (ConeIndex k = 0; k < fan.num_cones(); ++k)
        for (std::size_t drop = 0; drop < fan.dim(); ++drop) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < fan.dim(); ++i)
                if (i != drop)
                    facet.push_back(fan.cone(k)[i]);
            std::sort(facet.begin(), facet.end());
            owners[facet].push_back(k);
        }
    for (const auto& [facet, cones] : owners)
        if (cones.size() != 2)
            return "facet {" + join(facet) + "} of cone " + std::to_string(cones[0]) + " lies in " +
                   std::to_string(cones.size()) + " maximal cone(s)";
    return "maximal cones are not connected through shared facets";
}

// Validity, then smoothness and completeness as requested. Returns false
// when a check failed; the failure is recorded in the report.
bool require_fan(const Fan& fan, Report& r, bool smooth, bool complete)
{
    ValidationReport v = validate_fan(fan);
    r.check("fan is valid", v.all_pass(), first_failure(v));
    if (!v.all_pass())
        return false;
    bool ok = true;
    if (smooth) {
        SmoothnessReport s = is_smooth(fan);
        std::string detail;
        if (!s.smooth)
            detail = "cone " + std::to_string(s.offending[0].first) + " has determinant " +
                     s.offending[0].second.get_str();
        r.check("fan is smooth", s.smooth, detail);
        ok = ok && s.smooth;
    }
    if (complete) {
        bool c = is_complete(fan);
        r.check("fan is complete", c, c ? "" : completeness_witness(fan));
        ok = ok && c;
    }
    return ok;
}

void degree_one_rows(const DegreeOneReport& rep, Report& r)
{
    ReportTable t{"degree one generation", {"k", "|P + kP|", "|(k+1)P|", "missing"}, {}};
    for (const auto& s : rep.steps) {
        std::string detail;
        if (!s.missing.empty())
            detail = "lattice point " + to_string(s.missing.front()) + " of " + std::to_string(s.k + 1) +
                     "P is not a sum";
        else if (!s.ok)
            detail = "sumset leaves " + std::to_string(s.k + 1) + "P";
        r.check("P + " + std::to_string(s.k) + "P = " + std::to_string(s.k + 1) + "P", s.ok, detail);
        t.rows.push_back({std::to_string(s.k), std::to_string(s.sumset_size), std::to_string(s.dilate_size),
                          std::to_string(s.missing.size())});
    }
    r.tables.push_back(std::move(t));
}

void relation_rows(const PointConfiguration& a, const RelationsReport& rep, Report& r)
{
    ReportTable t{"toric ideal by degree", {"degree", "hilbert", "dim I_d", "quadric span"}, {}};
    t.rows.push_back({"2", std::to_string(hilbert_value(a, 2)), std::to_string(rep.quadrics),
                      std::to_string(rep.quadrics)});
    for (const auto& row : rep.rows) {
        r.check("I_" + std::to_string(row.degree) + " generated by quadrics", row.ok,
                row.ok ? "" : "degree " + std::to_string(row.degree) + ": dim I_d = " + std::to_string(row.ideal_dim) +
                                  ", quadric span = " + std::to_string(row.quadric_span_dim));
        t.rows.push_back({std::to_string(row.degree), std::to_string(row.hilbert), std::to_string(row.ideal_dim),
                          std::to_string(row.quadric_span_dim)});
    }
    r.tables.push_back(std::move(t));
}

void point_table(const std::vector<LatticeVector>& pts, Report& r)
{
    ReportTable t{"lattice points of P", {"point"}, {}};
    for (const auto& u : pts)
        t.rows.push_back({to_string(u)});
    r.tables.push_back(std::move(t));
}

void cmd_validate(const std::string& fan_path, Report& r)
{
    FanPtr fan = load_fan(fan_path, r);
    r.values["dim"] = fan->dim();
    r.values["rays"] = fan->num_rays();
    r.values["max_cones"] = fan->num_cones();
    ValidationReport v = validate_fan(*fan);
    for (const auto& c : v.checks)
        r.check(c.name, c.passed, c.detail);
    if (v.all_pass()) {
        r.values["smooth"] = is_smooth(*fan).smooth;
        r.values["complete"] = is_complete(*fan);
    }
}

void cmd_invariants(const std::string& fan_path, Report& r)
{
    FanPtr fan = load_fan(fan_path, r);
    ValidationReport v = validate_fan(*fan);
    r.check("fan is valid", v.all_pass(), first_failure(v));
    if (!v.all_pass())
        return;
    SmoothnessReport s = is_smooth(*fan);
    bool complete = is_complete(*fan);
    r.values["smooth"] = s.smooth;
    r.values["complete"] = complete;

    ReportTable t{"maximal cones", {"cone", "rays", "det", "min xi", "argmin ray"}, {}};
    if (s.smooth) {
        EInvariant e = e_of_fan(*fan);
        r.values["e"] = int_json(e.e);
        r.values["e_cone"] = e.best_cone;
        r.values["splitting_criterion"] = e.e >= -1;
        for (const auto& c : e.per_cone)
            t.rows.push_back({std::to_string(c.cone), join(fan->cone(c.cone)), fan->cone_determinant(c.cone).get_str(),
                              c.min_xi.get_str(), std::to_string(c.argmin_ray)});
    } else {
        r.values["e"] = nullptr;
        for (ConeIndex k = 0; k < fan->num_cones(); ++k)
            t.rows.push_back({std::to_string(k), join(fan->cone(k)), fan->cone_determinant(k).get_str(), "-", "-"});
    }
    r.tables.push_back(std::move(t));

    std::string detail;
    if (!s.smooth)
        detail = "cone " + std::to_string(s.offending[0].first) + " has determinant " + s.offending[0].second.get_str();
    r.check("fan is smooth", s.smooth, detail);
    r.check("fan is complete", complete, complete ? "" : completeness_witness(*fan));
}

void cmd_normality(const std::string& fan_path, const std::string& div_path, std::optional<unsigned> max_k, Report& r)
{
    FanPtr fan = load_fan(fan_path, r);
    Divisor d = load_divisor(fan, div_path, r);
    unsigned k = max_k.value_or(static_cast<unsigned>(fan->dim()) + 1);
    r.parameters["max_k"] = k;
    if (!require_fan(*fan, r, false, true))
        return;
    LatticePolytope p = polytope(d);
    r.values["lattice_points"] = p.points().size();
    r.values["ample"] = positivity(d).ample;
    degree_one_rows(check_degree_one_generation(p, k), r);
    point_table(p.points(), r);
}

void cmd_quadrics(const std::string& fan_path, const std::string& div_path, std::optional<unsigned> max_degree,
                  Report& r)
{
    FanPtr fan = load_fan(fan_path, r);
    Divisor d = load_divisor(fan, div_path, r);
    unsigned top = max_degree.value_or(std::max(3u, static_cast<unsigned>(fan->dim()) + 1));
    r.parameters["max_degree"] = top;
    if (!require_fan(*fan, r, false, true))
        return;
    PointConfiguration a = PointConfiguration::from_polytope(polytope(d));
    RelationsReport rep = relations_generated_in_degree_two(a, top);
    r.values["lattice_points"] = a.size();
    r.values["quadrics"] = rep.quadrics;
    relation_rows(a, rep, r);
}

std::string ray_kind(const BundleRay& b)
{
    switch (b.kind) {
    case BundleRayKind::Lifted: return "lift of " + std::to_string(b.base_ray);
    case BundleRayKind::L0: return "l0";
    case BundleRayKind::L1: return "l1";
    }
    return {};
}

void cmd_bundle(const std::string& fan_path, const std::string& l_path, const std::string& m_path,
                std::optional<unsigned> twist, std::optional<unsigned> b_max, Report& r)
{
    FanPtr fan = load_fan(fan_path, r);
    Divisor l = load_divisor(fan, l_path, r);
    Divisor m = load_divisor(fan, m_path, r);
    if (twist)
        r.parameters["twist"] = *twist;
    if (b_max)
        r.parameters["b_max"] = *b_max;
    if (!require_fan(*fan, r, true, true))
        return;

    unsigned b = twist.value_or(1);
    if (b_max && !twist) {
        Positivity pm = positivity(m);
        std::string detail;
        if (pm.ample_witness)
            detail = "cone " + std::to_string(pm.ample_witness->first) + ", ray " +
                     std::to_string(pm.ample_witness->second);
        r.check("M is ample", pm.ample, detail);
        if (!pm.ample)
            return;
        TwistResult t = minimal_twist(l, m, *b_max);
        ReportTable sweep{"twist sweep", {"b", "e", "min xi outside each base cone"}, {}};
        for (const auto& row : t.sweep) {
            std::string mins;
            for (std::size_t k = 0; k < row.outside_min.size(); ++k)
                mins += (k ? " " : "") + std::to_string(k) + ":" +
                        (row.outside_min[k] ? row.outside_min[k]->get_str() : "-");
            sweep.rows.push_back({std::to_string(row.b), row.e.get_str(), mins});
        }
        r.tables.push_back(std::move(sweep));
        r.check("twist with e >= -1 found", t.b.has_value(),
                t.b ? "" : "no b <= " + std::to_string(*b_max) + "; best e = " + t.e.get_str());
        if (!t.b)
            return;
        b = *t.b;
    }
    r.values["twist"] = b;

    Divisor mb = m.scaled(Int(b));
    BundleFan bf = build_bundle_fan(l, mb);
    const Fan& total = *bf.fan;

    ReportTable rays{"bundle rays", {"ray", "kind", "vector"}, {}};
    for (std::size_t j = 0; j < total.num_rays(); ++j)
        rays.rows.push_back({std::to_string(j), ray_kind(bf.provenance[j]), to_string(total.ray(j))});
    r.tables.push_back(std::move(rays));
    ReportTable cones{"bundle cones", {"cone", "rays"}, {}};
    for (ConeIndex k = 0; k < total.num_cones(); ++k)
        cones.rows.push_back({std::to_string(k), join(total.cone(k))});
    r.tables.push_back(std::move(cones));

    ValidationReport v = validate_fan(total);
    r.check("bundle fan is valid", v.all_pass(), first_failure(v));
    SmoothnessReport s = is_smooth(total);
    r.check("bundle fan is smooth", s.smooth,
            s.smooth ? "" : "cone " + std::to_string(s.offending[0].first) + " has determinant " +
                                s.offending[0].second.get_str());
    bool complete = v.all_pass() && is_complete(total);
    r.check("bundle fan is complete", complete, complete ? "" : completeness_witness(total));
    if (!s.smooth || !complete)
        return;

    EInvariant e = e_of_fan(total);
    r.values["e_bundle"] = int_json(e.e);
    r.values["e_bundle_cone"] = e.best_cone;

    std::string mismatch;
    for (ConeIndex k = 0; k < fan->num_cones() && mismatch.empty(); ++k)
        for (std::size_t j = 0; j < fan->num_rays(); ++j) {
            Int closed = xi_bundle_formula(k, {BundleRayKind::Lifted, j}, l, mb);
            Int direct = xi(total, BundleFan::upper_cone(k), total.ray(j));
            if (closed != direct) {
                mismatch = "base cone " + std::to_string(k) + ", ray " + std::to_string(j) + ": formula " +
                           closed.get_str() + ", direct " + direct.get_str();
                break;
            }
        }
    r.check("xi closed form matches the bundle fan", mismatch.empty(), mismatch);

    O1Divisor o1 = o1_divisor(bf, l, mb);
    r.values["o1_lattice_points"] = o1.point_count;
    r.values["o1_ample"] = o1.positivity.ample;
    r.values["o1_very_ample"] = o1.positivity.very_ample;
    r.check("O(1) polytope is the Cayley polytope", o1.cayley_ok(),
            std::to_string(o1.point_count) + " lattice points, expected " + std::to_string(o1.expected_point_count) +
                (o1.vertices_at_ends ? "" : "; a vertex lies strictly between the ends"));
}

void cmd_split_check(const std::string& fan_path, std::uint64_t p, std::uint64_t seed, std::optional<unsigned> bound,
                     std::size_t samples, std::optional<unsigned> dim, Report& r)
{
    FanPtr fan;
    if (!fan_path.empty())
        fan = load_fan(fan_path, r);
    const std::size_t n = dim.value_or(fan ? static_cast<unsigned>(fan->dim()) : 2u);
    const unsigned box = bound.value_or(static_cast<unsigned>(2 * p));
    r.parameters["p"] = p;
    r.parameters["seed"] = seed;
    r.parameters["samples"] = samples;
    r.parameters["dim"] = n;
    r.parameters["bound"] = box;

    SplittingAxiomReport ax = verify_splitting_axioms(p, n, samples, seed);
    auto witness = [&](std::size_t failures) {
        return failures == 0 || ax.counterexamples.empty() ? std::string()
                                                           : std::to_string(failures) + " failure(s); " +
                                                                 ax.counterexamples.front();
    };
    r.check("a(1) = 1", ax.unit_ok, ax.unit_ok ? "" : "a(1) != 1");
    r.check("a is additive", ax.additivity_failures == 0, witness(ax.additivity_failures));
    r.check("a(F(x)) = x", ax.section_failures == 0, witness(ax.section_failures));
    r.check("a(F(x) y) = x a(y)", ax.projection_failures == 0, witness(ax.projection_failures));
    if (!fan)
        return;
    if (!require_fan(*fan, r, true, false))
        return;

    EInvariant e = e_of_fan(*fan);
    r.values["e"] = int_json(e.e);
    ReportTable t{"splitting coefficients", {"cone", "a_j on outside rays", "effective"}, {}};
    for (ConeIndex k = 0; k < fan->num_cones(); ++k) {
        const std::string c = "chart " + std::to_string(k);
        r.check(c + ": a(x^b) matches the duality pairing", verify_splitting_divisor_chart(*fan, k, p, box));
        r.check(c + ": pM meets S in pS", saturation_check(*fan, k, p, box));
        const auto& rays = fan->cone(k);
        for (std::size_t mask = 1; mask < (std::size_t(1) << rays.size()); ++mask) {
            ChartFace face{k, {}};
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (mask & (std::size_t(1) << i))
                    face.face.push_back(rays[i]);
            r.check(c + ": ideal of face {" + join(face.face) + "} is compatible",
                    compatible_ideal_check(*fan, face, p, box));
        }
        SplittingCoefficients sc = splitting_coefficients(*fan, k, p);
        std::string coeffs;
        for (const auto& [j, a] : sc.coefficients)
            coeffs += (coeffs.empty() ? "" : " ") + std::to_string(j) + ":" + a.get_str();
        t.rows.push_back({std::to_string(k), coeffs.empty() ? "-" : coeffs, sc.effective ? "yes" : "no"});
    }
    r.tables.push_back(std::move(t));
}

void cmd_theorem1(const std::string& fan_path, const std::string& div_path, const PipelineOptions& opts, Report& r)
{
    FanPtr fan = load_fan(fan_path, r);
    Divisor d = load_divisor(fan, div_path, r);
    PipelineReport rep = normality_pipeline(d, opts);
    r.parameters["max_k"] = rep.max_k;
    r.parameters["max_degree"] = rep.max_degree;
    r.parameters["b_max"] = opts.b_max;
    r.values["route"] = rep.route;
    r.values["e"] = rep.e_base ? int_json(*rep.e_base) : ojson(nullptr);
    r.values["twist"] = rep.twist ? ojson(*rep.twist) : ojson(nullptr);
    r.values["e_bundle"] = rep.e_bundle ? int_json(*rep.e_bundle) : ojson(nullptr);
    for (const auto& s : rep.hypotheses)
        r.check(s.name, s.passed, s.detail);
    if (!rep.conclusion_error.empty()) {
        r.check("section ring of L", false, rep.conclusion_error);
        return;
    }
    degree_one_rows(*rep.degree_one, r);
    PointConfiguration a = PointConfiguration::from_polytope(polytope(d));
    r.values["lattice_points"] = a.size();
    relation_rows(a, *rep.relations, r);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact toric geometry checks", "toricfs"};
    app.set_version_flag("--version", TORICFS_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "Random seed (split-check)");

    std::string fan_path, div_path, l_path, m_path;
    std::optional<unsigned> max_k, max_degree, twist, b_max, bound, dim;
    std::uint64_t p = 0;
    std::size_t samples = 200;
    unsigned pipeline_b_max = 16;

    auto* validate = app.add_subcommand("validate", "Validate a fan");
    validate->add_option("fan", fan_path, "Fan JSON file")->required();

    auto* invariants = app.add_subcommand("invariants", "Smoothness, completeness and e(X)");
    invariants->add_option("fan", fan_path, "Fan JSON file")->required();

    auto* normality = app.add_subcommand("normality", "Degree one generation of the section ring");
    normality->add_option("fan", fan_path, "Fan JSON file")->required();
    normality->add_option("--divisor", div_path, "Divisor JSON file")->required();
    normality->add_option("--max-k", max_k, "Largest k checked")->check(CLI::Range(1u, 64u));

    auto* quadrics = app.add_subcommand("quadrics", "Quadric generation of the toric ideal");
    quadrics->add_option("fan", fan_path, "Fan JSON file")->required();
    quadrics->add_option("--divisor", div_path, "Divisor JSON file")->required();
    quadrics->add_option("--max-degree", max_degree, "Largest degree checked")->check(CLI::Range(3u, 16u));

    auto* bundle = app.add_subcommand("bundle", "Fan of P(L + M^b)");
    bundle->add_option("fan", fan_path, "Base fan JSON file")->required();
    bundle->add_option("--L", l_path, "Divisor L")->required();
    bundle->add_option("--M", m_path, "Divisor M")->required();
    auto* twist_opt = bundle->add_option("--twist", twist, "Twist b")->check(CLI::Range(0u, 1024u));
    bundle->add_option("--b-max", b_max, "Search the smallest twist up to this bound")
        ->check(CLI::Range(1u, 1024u))
        ->excludes(twist_opt);

    auto* split = app.add_subcommand("split-check", "Frobenius splitting checks");
    split->add_option("fan", fan_path, "Fan JSON file");
    split->add_option("-p", p, "Prime")->required()->check([](const std::string& s) -> std::string {
        try {
            return is_prime(std::stoull(s)) ? "" : s + " is not a prime";
        } catch (const std::exception&) {
            return s + " is not a prime";
        }
    });
    split->add_option("--bound", bound, "Box bound for chart checks (default 2p)");
    split->add_option("--samples", samples, "Random samples per axiom");
    split->add_option("--dim", dim, "Lattice rank for the axiom samples");

    auto* theorem1 = app.add_subcommand("theorem1", "Hypotheses and conclusions for (X, L)");
    theorem1->add_option("fan", fan_path, "Fan JSON file")->required();
    theorem1->add_option("--divisor", div_path, "Divisor JSON file")->required();
    theorem1->add_option("--max-k", max_k, "Largest k checked")->check(CLI::Range(1u, 64u));
    theorem1->add_option("--max-degree", max_degree, "Largest degree checked")->check(CLI::Range(3u, 16u));
    theorem1->add_option("--b-max", pipeline_b_max, "Twist search bound")->check(CLI::Range(1u, 1024u));

    std::vector<std::string> argv_store{"toricfs"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Report r;
    try {
        if (validate->parsed()) {
            r.command = "validate";
            cmd_validate(fan_path, r);
        } else if (invariants->parsed()) {
            r.command = "invariants";
            cmd_invariants(fan_path, r);
        } else if (normality->parsed()) {
            r.command = "normality";
            cmd_normality(fan_path, div_path, max_k, r);
        } else if (quadrics->parsed()) {
            r.command = "quadrics";
            cmd_quadrics(fan_path, div_path, max_degree, r);
        } else if (bundle->parsed()) {
            r.command = "bundle";
            cmd_bundle(fan_path, l_path, m_path, twist, b_max, r);
        } else if (split->parsed()) {
            r.command = "split-check";
            cmd_split_check(fan_path, p, seed, bound, samples, dim, r);
        } else if (theorem1->parsed()) {
            r.command = "theorem1";
            cmd_theorem1(fan_path, div_path, PipelineOptions{max_k, max_degree, pipeline_b_max}, r);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        r.check("computation", false, e.what());
    }

    out << render(r, format == "json" ? Format::Json : Format::Text);
    return r.passed() ? 0 : 1;
}

}  // namespace toricfs
