#include "toricfs/frobenius.hpp"

#include "toricfs/divisor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace toricfs {

MonoidElement::MonoidElement(std::uint64_t p, std::size_t dim) : p_(p), dim_(dim)
{
    if (!is_prime(p))
        throw Error("p = " + std::to_string(p) + " is not a prime");
}

MonoidElement MonoidElement::one(std::uint64_t p, std::size_t dim)
{
    MonoidElement x(p, dim);
    x.add_term(LatticeVector(dim), 1);
    return x;
}

MonoidElement MonoidElement::monomial(std::uint64_t p, const LatticeVector& exponent, std::uint64_t coeff)
{
    MonoidElement x(p, exponent.size());
    x.add_term(exponent, coeff);
    return x;
}

void MonoidElement::add_term(const LatticeVector& exponent, std::uint64_t coeff)
{
    if (exponent.size() != dim_)
        throw Error("exponent dimension mismatch");
    coeff %= p_;
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second = (it->second + coeff) % p_;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b)
{
    if (a.p_ != b.p_ || a.dim_ != b.dim_)
        throw Error("monoid elements over different rings");
    MonoidElement s = a;
    for (const auto& [m, c] : b.terms_)
        s.add_term(m, c);
    return s;
}

MonoidElement operator*(const MonoidElement& a, const MonoidElement& b)
{
    if (a.p_ != b.p_ || a.dim_ != b.dim_)
        throw Error("monoid elements over different rings");
    MonoidElement s(a.p_, a.dim_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            s.add_term(ma + mb, ca * cb % a.p_);
    return s;
}

std::string to_string(const MonoidElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        os << (first ? "" : " + ") << c << "*e" << m;
        first = false;
    }
    return os.str();
}

MonoidElement frobenius_push(const MonoidElement& x)
{
    MonoidElement y(x.p(), x.dim());
    const Int p(static_cast<unsigned long>(x.p()));
    for (const auto& [m, c] : x.terms())
        y.add_term(p * m, c);
    return y;
}

namespace {

std::optional<LatticeVector> divide_exact(const LatticeVector& m, std::uint64_t p)
{
    LatticeVector q = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!mpz_divisible_ui_p(m[i].get_mpz_t(), p))
            return std::nullopt;
        mpz_divexact_ui(q[i].get_mpz_t(), m[i].get_mpz_t(), p);
    }
    return q;
}

// Calls f(c) for every c in [0, bound]^n, last coordinate fastest.
void for_each_in_box(std::size_t n, unsigned bound, const std::function<bool(const std::vector<Int>&)>& f)
{
    std::vector<Int> c(n, 0);
    while (true) {
        if (!f(c))
            return;
        std::size_t j = n;
        while (true) {
            if (j == 0)
                return;
            --j;
            if (c[j] < bound) {
                c[j] += 1;
                break;
            }
            c[j] = 0;
        }
    }
}

LatticeVector from_chart(const IntegerMatrix& dual, const std::vector<Int>& c)
{
    LatticeVector m(dual.cols());
    for (std::size_t i = 0; i < c.size(); ++i)
        m += c[i] * dual.row(i);
    return m;
}

}  // namespace

MonoidElement splitting_a(const MonoidElement& x)
{
    MonoidElement y(x.p(), x.dim());
    for (const auto& [m, c] : x.terms())
        if (auto q = divide_exact(m, x.p()))
            y.add_term(*q, c);
    return y;
}

SplittingAxiomReport verify_splitting_axioms(std::uint64_t p, std::size_t dim, std::size_t samples, std::uint64_t seed)
{
    SplittingAxiomReport r;
    r.p = p;
    r.dim = dim;
    r.samples = samples;
    r.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<long> expo(0, 10);
    std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
    auto random_element = [&] {
        MonoidElement x(p, dim);
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            LatticeVector m(dim);
            for (std::size_t j = 0; j < dim; ++j)
                m[j] = expo(rng);
            x.add_term(m, coeff(rng));
        }
        return x;
    };
    auto note = [&](const std::string& what) {
        if (r.counterexamples.size() < 5)
            r.counterexamples.push_back(what);
    };

    const MonoidElement one = MonoidElement::one(p, dim);
    r.unit_ok = splitting_a(one) == one;
    if (!r.unit_ok)
        note("a(1) != 1");

    for (std::size_t s = 0; s < samples; ++s) {
        MonoidElement x = random_element();
        MonoidElement y = random_element();
        MonoidElement z = random_element();
        if (splitting_a(y + z) != splitting_a(y) + splitting_a(z)) {
            ++r.additivity_failures;
            note("additivity: y = " + to_string(y) + ", y' = " + to_string(z));
        }
        if (splitting_a(frobenius_push(x)) != x) {
            ++r.section_failures;
            note("a(F(x)) != x for x = " + to_string(x));
        }
        if (splitting_a(frobenius_push(x) * y) != x * splitting_a(y)) {
            ++r.projection_failures;
            note("projection: x = " + to_string(x) + ", y = " + to_string(y));
        }
    }
    return r;
}

bool saturation_check(const Fan& fan, ConeIndex cone, std::uint64_t p, unsigned bound)
{
    const IntegerMatrix& dual = fan.cone_dual_basis(cone);
    bool ok = true;
    for_each_in_box(fan.dim(), bound, [&](const std::vector<Int>& c) {
        auto q = divide_exact(from_chart(dual, c), p);
        if (!q)
            return true;
        for (std::size_t j : fan.cone(cone))
            if (dot(*q, fan.ray(j)) < 0) {
                ok = false;
                return false;
            }
        return true;
    });
    return ok;
}

bool saturation_check(const std::vector<LatticeVector>& generators, std::uint64_t p, unsigned bound)
{
    if (generators.empty())
        return true;
    const std::size_t n = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != n)
            throw Error("generators of different dimensions");
        if (g.is_zero() || std::any_of(g.coords().begin(), g.coords().end(), [](const Int& x) { return x < 0; }))
            throw Error("monoid generators must be nonzero with nonnegative entries");
    }
    auto in_box = [&](const LatticeVector& v) {
        return std::all_of(v.coords().begin(), v.coords().end(), [&](const Int& x) { return x <= bound; });
    };
    std::set<LatticeVector> monoid{LatticeVector(n)};
    std::deque<LatticeVector> queue{LatticeVector(n)};
    while (!queue.empty()) {
        LatticeVector s = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            LatticeVector t = s + g;
            if (in_box(t) && monoid.insert(t).second)
                queue.push_back(t);
        }
    }
    for (const auto& m : monoid) {
        auto q = divide_exact(m, p);
        if (q && !monoid.count(*q))
            return false;
    }
    return true;
}

bool compatible_ideal_check(const Fan& fan, const ChartFace& chart, std::uint64_t p, unsigned bound)
{
    for (std::size_t j : chart.face)
        if (!fan.cone_contains_ray(chart.cone, j))
            throw Error("face ray " + std::to_string(j) + " is not a ray of cone " + std::to_string(chart.cone));
    const IntegerMatrix& dual = fan.cone_dual_basis(chart.cone);
    auto in_ideal = [&](const LatticeVector& m) {
        bool in_monoid = true;
        for (std::size_t j : fan.cone(chart.cone))
            in_monoid = in_monoid && dot(m, fan.ray(j)) >= 0;
        return in_monoid && std::any_of(chart.face.begin(), chart.face.end(),
                                        [&](std::size_t j) { return dot(m, fan.ray(j)) > 0; });
    };
    bool ok = true;
    for_each_in_box(fan.dim(), bound, [&](const std::vector<Int>& c) {
        LatticeVector m = from_chart(dual, c);
        if (!in_ideal(m))
            return true;
        MonoidElement image = splitting_a(MonoidElement::monomial(p, m));
        for (const auto& [q, coeff] : image.terms())
            if (!in_ideal(q)) {
                ok = false;
                return false;
            }
        return true;
    });
    return ok;
}

std::optional<std::vector<Int>> local_duality_eval(const std::vector<Int>& alpha, const std::vector<Int>& beta,
                                                   std::uint64_t p)
{
    if (alpha.size() != beta.size())
        throw Error("exponent tuples of different lengths");
    std::vector<Int> out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0 || beta[i] < 0)
            throw Error("exponents must be nonnegative");
        Int s = alpha[i] + beta[i] + 1;
        if (!mpz_divisible_ui_p(s.get_mpz_t(), p))
            return std::nullopt;
        mpz_divexact_ui(out[i].get_mpz_t(), s.get_mpz_t(), p);
        out[i] -= 1;
    }
    return out;
}

bool verify_splitting_divisor_chart(const Fan& fan, ConeIndex cone, std::uint64_t p, unsigned box_bound)
{
    if (!is_prime(p))
        throw Error("p = " + std::to_string(p) + " is not a prime");
    const IntegerMatrix& dual = fan.cone_dual_basis(cone);
    const std::vector<Int> alpha(fan.dim(), Int(static_cast<unsigned long>(p - 1)));
    bool ok = true;
    for_each_in_box(fan.dim(), box_bound, [&](const std::vector<Int>& beta) {
        MonoidElement image = splitting_a(MonoidElement::monomial(p, from_chart(dual, beta)));
        std::optional<std::vector<Int>> split;
        if (!image.is_zero()) {
            const LatticeVector& m = image.terms().begin()->first;
            std::vector<Int> chart(fan.dim());
            for (std::size_t i = 0; i < fan.dim(); ++i)
                chart[i] = dot(m, fan.ray(fan.cone(cone)[i]));
            split = chart;
        }
        if (split != local_duality_eval(alpha, beta, p)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace toricfs
