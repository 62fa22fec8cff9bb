#include "toricfs/corpus.hpp"

#include <algorithm>

namespace toricfs::corpus {

namespace {

LatticeVector vec2(long x, long y) { return LatticeVector{x, y}; }

std::vector<std::vector<std::size_t>> cyclic_cones(std::size_t r)
{
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < r; ++i)
        cones.push_back({i, (i + 1) % r});
    return cones;
}

}  // namespace

FanPtr projective_space(unsigned n)
{
    if (n == 0)
        throw Error("projective space needs n >= 1");
    std::vector<LatticeVector> rays;
    LatticeVector last(n);
    for (unsigned i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        rays.push_back(e);
        last[i] = -1;
    }
    rays.push_back(last);
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            c.push_back((k + i) % (n + 1));
        std::sort(c.begin(), c.end());
        cones.push_back(std::move(c));
    }
    return make_fan(n, std::move(rays), std::move(cones));
}

FanPtr hirzebruch(unsigned a)
{
    return make_fan(2, {vec2(1, 0), vec2(0, 1), vec2(-1, static_cast<long>(a)), vec2(0, -1)}, cyclic_cones(4));
}

FanPtr p1xp1() { return make_fan(2, {vec2(1, 0), vec2(0, 1), vec2(-1, 0), vec2(0, -1)}, cyclic_cones(4)); }

FanPtr blowup_p2(unsigned k)
{
    std::vector<LatticeVector> rays;
    switch (k) {
    case 0: return projective_space(2);
    case 1: rays = {vec2(1, 0), vec2(1, 1), vec2(0, 1), vec2(-1, -1)}; break;
    case 2: rays = {vec2(1, 0), vec2(1, 1), vec2(0, 1), vec2(-1, 0), vec2(-1, -1)}; break;
    case 3: rays = {vec2(1, 0), vec2(1, 1), vec2(0, 1), vec2(-1, 0), vec2(-1, -1), vec2(0, -1)}; break;
    default: throw Error("only blow-ups at up to 3 fixed points are bundled");
    }
    const std::size_t r = rays.size();
    return make_fan(2, std::move(rays), cyclic_cones(r));
}

FanPtr weighted_plane() { return make_fan(2, {vec2(1, 0), vec2(1, 2), vec2(-1, -1)}, cyclic_cones(3)); }

Divisor hyperplane(const FanPtr& pn, long d)
{
    std::vector<Int> c(pn->num_rays(), 0);
    c.back() = d;
    return Divisor(pn, std::move(c));
}

Divisor bidegree(const FanPtr& quadric, long a, long b) { return Divisor(quadric, {0, 0, a, b}); }

Divisor hirzebruch_ample(const FanPtr& fa) { return Divisor(fa, {0, 0, 1, 1}); }

Divisor anticanonical(const FanPtr& fan) { return Divisor(fan, std::vector<Int>(fan->num_rays(), 1)); }

std::vector<NamedFan> fans()
{
    std::vector<NamedFan> out;
    for (unsigned n = 1; n <= 3; ++n)
        out.push_back({"p" + std::to_string(n), projective_space(n)});
    out.push_back({"p1xp1", p1xp1()});
    for (unsigned a = 0; a <= 3; ++a)
        out.push_back({"f" + std::to_string(a), hirzebruch(a)});
    for (unsigned k = 1; k <= 3; ++k)
        out.push_back({"bl" + std::to_string(k) + "_p2", blowup_p2(k)});
    out.push_back({"weighted_plane", weighted_plane()});
    return out;
}

std::vector<NamedDivisor> divisors()
{
    std::vector<NamedDivisor> out;
    FanPtr p1 = projective_space(1);
    for (long d = 1; d <= 4; ++d)
        out.push_back({"p1_O" + std::to_string(d), "p1", hyperplane(p1, d)});
    FanPtr p2 = projective_space(2);
    for (long d = 1; d <= 3; ++d)
        out.push_back({"p2_O" + std::to_string(d), "p2", hyperplane(p2, d)});
    out.push_back({"p3_O1", "p3", hyperplane(projective_space(3), 1)});
    FanPtr q = p1xp1();
    for (long a = 1; a <= 2; ++a)
        for (long b = 1; b <= 2; ++b)
            out.push_back({"p1xp1_O" + std::to_string(a) + std::to_string(b), "p1xp1", bidegree(q, a, b)});
    for (unsigned a = 0; a <= 2; ++a) {
        std::string name = "f" + std::to_string(a);
        out.push_back({name + "_ample", name, hirzebruch_ample(hirzebruch(a))});
    }
    out.push_back({"bl1_p2_anticanonical", "bl1_p2", anticanonical(blowup_p2(1))});
    return out;
}

}  // namespace toricfs::corpus
