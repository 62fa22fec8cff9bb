#include "toricfs/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricfs {

namespace {

// a . x >= b with a primitive (or zero) and b rational.
using System = std::map<std::vector<Int>, Rational>;

// Returns false when the constraint is trivially infeasible.
bool insert_constraint(System& sys, std::vector<Int> a, Rational b)
{
    Int g = content(LatticeVector(a));
    if (g == 0)
        return b <= 0;
    for (auto& x : a)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    b /= g;
    auto [it, inserted] = sys.try_emplace(std::move(a), b);
    if (!inserted && it->second < b)
        it->second = b;
    return true;
}

}  // namespace

bool is_feasible(std::size_t dim, const std::vector<Equation>& equations,
                 const std::vector<Inequality>& inequalities)
{
    std::vector<std::pair<std::vector<Int>, Int>> eqs;
    std::vector<std::pair<std::vector<Int>, Int>> ineqs;
    for (const auto& e : equations) {
        if (e.normal.size() != dim)
            throw Error("constraint dimension mismatch");
        eqs.emplace_back(e.normal.coords(), e.value);
    }
    for (const auto& q : inequalities) {
        if (q.normal.size() != dim)
            throw Error("constraint dimension mismatch");
        ineqs.emplace_back(q.normal.coords(), q.bound);
    }

    // Substitute equations away.
    while (!eqs.empty()) {
        auto [c, d] = eqs.back();
        eqs.pop_back();
        std::size_t k = 0;
        while (k < dim && c[k] == 0)
            ++k;
        if (k == dim) {
            if (d != 0)
                return false;
            continue;
        }
        const Int ck = abs(c[k]);
        const int sk = sgn(c[k]);
        auto eliminate = [&](std::vector<Int>& a, Int& b) {
            if (a[k] == 0)
                return;
            Int f = sk * a[k];
            for (std::size_t j = 0; j < dim; ++j)
                a[j] = ck * a[j] - f * c[j];
            b = ck * b - f * d;
        };
        for (auto& [a, b] : eqs)
            eliminate(a, b);
        for (auto& [a, b] : ineqs)
            eliminate(a, b);
    }

    System sys;
    for (auto& [a, b] : ineqs)
        if (!insert_constraint(sys, a, Rational(b)))
            return false;

    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<std::pair<std::vector<Int>, Rational>> pos, neg;
        System next;
        for (const auto& [a, b] : sys) {
            if (a[k] > 0)
                pos.emplace_back(a, b);
            else if (a[k] < 0)
                neg.emplace_back(a, b);
            else
                next.emplace(a, b);
        }
        for (const auto& [pa, pb] : pos)
            for (const auto& [na, nb] : neg) {
                Int fp = -na[k];
                Int fn = pa[k];
                std::vector<Int> a(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    a[j] = fp * pa[j] + fn * na[j];
                if (!insert_constraint(next, std::move(a), Rational(fp) * pb + Rational(fn) * nb))
                    return false;
            }
        sys = std::move(next);
    }
    return std::all_of(sys.begin(), sys.end(), [](const auto& c) { return c.second <= 0; });
}

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Inequality> inequalities)
    : dim_(dim), inequalities_(std::move(inequalities)), cache_(std::make_shared<Cache>())
{
    for (const auto& q : inequalities_)
        if (q.normal.size() != dim_)
            throw Error("inequality normal has wrong dimension");
}

bool LatticePolytope::contains(const LatticeVector& u) const
{
    return std::all_of(inequalities_.begin(), inequalities_.end(),
                       [&](const Inequality& q) { return dot(q.normal, u) >= q.bound; });
}

bool LatticePolytope::is_bounded() const
{
    std::vector<Inequality> recession;
    for (const auto& q : inequalities_)
        recession.push_back({q.normal, 0});
    for (std::size_t k = 0; k < dim_; ++k)
        for (long s : {1L, -1L}) {
            auto sys = recession;
            LatticeVector e(dim_);
            e[k] = s;
            sys.push_back({e, 1});
            if (is_feasible(dim_, {}, sys))
                return false;
        }
    return true;
}

std::vector<RationalVector> LatticePolytope::vertices() const
{
    const std::size_t r = inequalities_.size();
    std::set<RationalVector> found;
    if (r < dim_)
        return {};
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim_), true);
    do {
        IntegerMatrix a(dim_, dim_);
        RationalVector b(dim_);
        std::size_t row = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (!pick[i])
                continue;
            for (std::size_t j = 0; j < dim_; ++j)
                a(row, j) = inequalities_[i].normal[j];
            b[row] = inequalities_[i].bound;
            ++row;
        }
        auto x = solve_rational(a, b);
        if (!x)
            continue;
        bool inside = std::all_of(inequalities_.begin(), inequalities_.end(), [&](const Inequality& q) {
            Rational s = 0;
            for (std::size_t j = 0; j < dim_; ++j)
                s += q.normal[j] * (*x)[j];
            return s >= q.bound;
        });
        if (inside)
            found.insert(*x);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

const std::vector<LatticeVector>& LatticePolytope::points() const
{
    std::call_once(cache_->once, [this] {
        if (!is_bounded())
            throw Error("polyhedron is unbounded; fan not complete");
        auto verts = vertices();
        if (verts.empty())
            return;
        std::vector<Int> lo(dim_), hi(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Rational mn = verts[0][j], mx = verts[0][j];
            for (const auto& v : verts) {
                mn = std::min(mn, v[j]);
                mx = std::max(mx, v[j]);
            }
            mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
            mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
            if (lo[j] > hi[j])
                return;
        }
        // Odometer, last coordinate fastest: lexicographic order.
        LatticeVector u(lo);
        while (true) {
            if (contains(u))
                cache_->points.push_back(u);
            std::size_t j = dim_;
            while (j > 0) {
                --j;
                if (u[j] < hi[j]) {
                    u[j] += 1;
                    break;
                }
                u[j] = lo[j];
                if (j == 0)
                    return;
            }
            if (dim_ == 0)
                return;
        }
    });
    return cache_->points;
}

LatticePolytope LatticePolytope::dilate(const Int& k) const
{
    std::vector<Inequality> scaled = inequalities_;
    for (auto& q : scaled)
        q.bound *= k;
    return LatticePolytope(dim_, std::move(scaled));
}

}  // namespace toricfs
