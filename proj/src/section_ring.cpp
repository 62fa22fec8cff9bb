#include "toricfs/section_ring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricfs {

PointConfiguration::PointConfiguration(std::size_t dim, std::vector<LatticeVector> points)
    : dim_(dim), points_(std::move(points))
{
    for (const auto& p : points_)
        if (p.size() != dim_)
            throw Error("point dimension does not match configuration dimension");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointConfiguration PointConfiguration::from_polytope(const LatticePolytope& p)
{
    return PointConfiguration(p.dim(), p.points());
}

std::vector<LatticeVector> dilate_points(const LatticePolytope& p, unsigned k)
{
    if (k == 0)
        throw Error("dilation factor must be positive");
    return p.dilate(Int(k)).points();
}

DegreeOneReport check_degree_one_generation(const LatticePolytope& p, unsigned max_k)
{
    if (max_k == 0)
        throw Error("max_k must be at least 1");
    DegreeOneReport report;
    report.max_k = max_k;
    const auto& base = p.points();
    std::vector<LatticeVector> current = base;
    for (unsigned k = 1; k < max_k; ++k) {
        std::set<LatticeVector> sums;
        for (const auto& a : base)
            for (const auto& b : current)
                sums.insert(a + b);
        std::vector<LatticeVector> next = dilate_points(p, k + 1);
        DegreeOneStep step;
        step.k = k;
        step.sumset_size = sums.size();
        step.dilate_size = next.size();
        for (const auto& u : next)
            if (!sums.count(u))
                step.missing.push_back(u);
        step.ok = step.missing.empty() && sums.size() == next.size();
        if (!step.ok && report.ok) {
            report.ok = false;
            report.first_failure = k;
        }
        report.steps.push_back(std::move(step));
        current = std::move(next);
    }
    return report;
}

std::size_t hilbert_value(const PointConfiguration& a, unsigned d)
{
    if (d == 0)
        return 1;
    std::set<LatticeVector> sums(a.points().begin(), a.points().end());
    for (unsigned t = 1; t < d; ++t) {
        std::set<LatticeVector> next;
        for (const auto& s : sums)
            for (const auto& p : a.points())
                next.insert(s + p);
        sums = std::move(next);
    }
    return sums.size();
}

std::size_t monomial_count(std::size_t variables, unsigned d)
{
    if (variables == 0)
        return d == 0 ? 1 : 0;
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), variables - 1 + d, d);
    return c.get_ui();
}

std::size_t ideal_dimension(const PointConfiguration& a, unsigned d)
{
    return monomial_count(a.size(), d) - hilbert_value(a, d);
}

namespace {

using Monomial = std::vector<std::uint32_t>;  // sorted variable indices

// Degree-d monomials grouped by their A-degree.
struct GradedPiece {
    std::vector<Monomial> monomials;  // lexicographic
    std::map<Monomial, std::size_t> index;
    std::vector<std::size_t> fiber_of;
    std::vector<std::size_t> position_in_fiber;
    std::vector<std::vector<std::size_t>> fibers;
};

void enumerate_monomials(std::size_t vars, unsigned d, Monomial& cur, std::vector<Monomial>& out)
{
    if (cur.size() == d) {
        out.push_back(cur);
        return;
    }
    std::uint32_t start = cur.empty() ? 0 : cur.back();
    for (std::uint32_t v = start; v < vars; ++v) {
        cur.push_back(v);
        enumerate_monomials(vars, d, cur, out);
        cur.pop_back();
    }
}

GradedPiece graded_piece(const PointConfiguration& a, unsigned d)
{
    GradedPiece g;
    Monomial cur;
    enumerate_monomials(a.size(), d, cur, g.monomials);
    std::map<LatticeVector, std::size_t> fiber_ids;
    std::vector<LatticeVector> sums;
    for (const auto& mono : g.monomials) {
        LatticeVector s(a.dim());
        for (auto v : mono)
            s += a.point(v);
        sums.push_back(s);
        fiber_ids.emplace(s, 0);
    }
    std::size_t id = 0;
    for (auto& [s, f] : fiber_ids)
        f = id++;
    g.fibers.resize(fiber_ids.size());
    for (std::size_t i = 0; i < g.monomials.size(); ++i) {
        g.index.emplace(g.monomials[i], i);
        std::size_t f = fiber_ids.at(sums[i]);
        g.fiber_of.push_back(f);
        g.position_in_fiber.push_back(g.fibers[f].size());
        g.fibers[f].push_back(i);
    }
    return g;
}

Monomial multiply(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank_fraction_free(std::vector<std::vector<Int>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t m = rows.size();
    const std::size_t n = rows[0].size();
    Int prev = 1;
    std::size_t r = 0;
    Int t, rem;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && rows[p][c] == 0)
            ++p;
        if (p == m)
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_tdiv_qr(rows[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("inexact Bareiss division");
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_mod_prime(const std::vector<std::vector<long>>& input, std::uint64_t p)
{
    if (input.empty())
        return 0;
    const std::size_t m = input.size();
    const std::size_t n = input[0].size();
    std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(n));
    const long sp = static_cast<long>(p);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = static_cast<std::uint64_t>(((input[i][j] % sp) + sp) % sp);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && rows[piv][c] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(rows[piv], rows[r]);
        std::uint64_t inv = pow_mod(rows[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (rows[i][c] == 0)
                continue;
            std::uint64_t f = rows[i][c] * inv % p;
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        ++r;
    }
    return r;
}

RankTriple multiplied_relation_rank(const PointConfiguration& a, unsigned relation, unsigned target)
{
    if (relation == 0 || relation > target)
        throw Error("relation degree must lie in 1 .. target degree");
    GradedPiece low = graded_piece(a, relation);
    GradedPiece high = graded_piece(a, target);

    std::vector<std::pair<std::size_t, std::size_t>> binomials;
    for (const auto& fiber : low.fibers)
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                binomials.emplace_back(fiber[i], fiber[j]);

    std::vector<Monomial> multipliers;
    Monomial cur;
    enumerate_monomials(a.size(), target - relation, cur, multipliers);

    // The matrix is block diagonal over the target-degree fibres.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks(high.fibers.size());
    std::vector<std::set<std::pair<std::size_t, std::size_t>>> seen(high.fibers.size());
    for (const auto& w : multipliers)
        for (const auto& [u, v] : binomials) {
            std::size_t cu = high.index.at(multiply(w, low.monomials[u]));
            std::size_t cv = high.index.at(multiply(w, low.monomials[v]));
            std::size_t f = high.fiber_of[cu];
            std::size_t lu = high.position_in_fiber[cu];
            std::size_t lv = high.position_in_fiber[cv];
            if (seen[f].insert(std::minmax(lu, lv)).second)
                blocks[f].emplace_back(lu, lv);
        }

    RankTriple total;
    for (std::size_t f = 0; f < blocks.size(); ++f) {
        if (blocks[f].empty())
            continue;
        const std::size_t cols = high.fibers[f].size();
        std::vector<std::vector<Int>> exact(blocks[f].size(), std::vector<Int>(cols));
        std::vector<std::vector<long>> small(blocks[f].size(), std::vector<long>(cols, 0));
        for (std::size_t i = 0; i < blocks[f].size(); ++i) {
            auto [u, v] = blocks[f][i];
            exact[i][u] = 1;
            exact[i][v] = -1;
            small[i][u] = 1;
            small[i][v] = -1;
        }
        total.rational += rank_fraction_free(std::move(exact));
        total.mod_a += rank_mod_prime(small, kRankPrimeA);
        total.mod_b += rank_mod_prime(small, kRankPrimeB);
    }
    return total;
}

namespace {

std::size_t checked_rank(const PointConfiguration& a, unsigned relation, unsigned target)
{
    RankTriple r = multiplied_relation_rank(a, relation, target);
    if (!r.agree())
        throw std::logic_error("rank over Q (" + std::to_string(r.rational) + ") disagrees with modular ranks (" +
                               std::to_string(r.mod_a) + ", " + std::to_string(r.mod_b) + ")");
    return r.rational;
}

}  // namespace

std::size_t quadric_span_dimension(const PointConfiguration& a, unsigned d)
{
    if (d < 2)
        throw Error("quadric span needs degree at least 2");
    return checked_rank(a, 2, d);
}

RelationsReport relations_generated_in_degree_two(const PointConfiguration& a, unsigned max_degree)
{
    if (max_degree < 3)
        throw Error("max degree must be at least 3");
    RelationsReport report;
    report.max_degree = max_degree;
    report.quadrics = ideal_dimension(a, 2);
    for (unsigned d = 3; d <= max_degree; ++d) {
        RelationDegreeRow row;
        row.degree = d;
        row.hilbert = hilbert_value(a, d);
        row.ideal_dim = monomial_count(a.size(), d) - row.hilbert;
        row.quadric_span_dim = quadric_span_dimension(a, d);
        row.ok = row.quadric_span_dim == row.ideal_dim;
        report.ok = report.ok && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<GeneratorCount> minimal_generator_degrees(const PointConfiguration& a, unsigned max_degree)
{
    if (max_degree < 2)
        throw Error("max degree must be at least 2");
    std::vector<GeneratorCount> out;
    for (unsigned d = 2; d <= max_degree; ++d)
        out.push_back({d, ideal_dimension(a, d) - checked_rank(a, d - 1, d)});
    return out;
}

}  // namespace toricfs
