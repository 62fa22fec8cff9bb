#pragma once

#include "toricfs/fan.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricfs {

/// Finite F_p-linear combination of monomials e(m), m in a lattice.
/// Zero coefficients are never stored.
class MonoidElement {
public:
    MonoidElement(std::uint64_t p, std::size_t dim);
    static MonoidElement one(std::uint64_t p, std::size_t dim);
    static MonoidElement monomial(std::uint64_t p, const LatticeVector& exponent, std::uint64_t coeff = 1);

    std::uint64_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::map<LatticeVector, std::uint64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * e(exponent), coefficient taken mod p.
    void add_term(const LatticeVector& exponent, std::uint64_t coeff);

    friend MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);
    friend MonoidElement operator*(const MonoidElement& a, const MonoidElement& b);
    friend bool operator==(const MonoidElement& a, const MonoidElement& b)
    {
        return a.p_ == b.p_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MonoidElement& a, const MonoidElement& b) { return !(a == b); }

private:
    std::uint64_t p_;
    std::size_t dim_;
    std::map<LatticeVector, std::uint64_t> terms_;
};

std::string to_string(const MonoidElement& x);

/// e(m) -> e(p m). Coefficients lie in F_p, where c^p = c.
MonoidElement frobenius_push(const MonoidElement& x);

/// e(m) -> e(m / p) when p divides every coordinate of m, else 0.
MonoidElement splitting_a(const MonoidElement& x);

struct SplittingAxiomReport {
    std::uint64_t p = 0;
    std::size_t dim = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool unit_ok = true;  // a(1) = 1
    std::size_t additivity_failures = 0;
    std::size_t section_failures = 0;     // a(F(x)) = x
    std::size_t projection_failures = 0;  // a(F(x) y) = x a(y)
    std::vector<std::string> counterexamples;

    bool ok() const { return unit_ok && additivity_failures == 0 && section_failures == 0 && projection_failures == 0; }
};

/// Pseudorandom elements with at most 5 terms and exponents in [0,10]^dim.
SplittingAxiomReport verify_splitting_axioms(std::uint64_t p, std::size_t dim, std::size_t samples, std::uint64_t seed);

/// pM ∩ S = pS on the chart monoid S = dual(sigma) ∩ M, restricted to the
/// box [0, bound]^n in dual-basis coordinates. Requires a smooth cone.
bool saturation_check(const Fan& fan, ConeIndex cone, std::uint64_t p, unsigned bound);

/// Same property for the monoid generated by `generators` (nonzero vectors
/// with nonnegative entries), enumerated inside [0, bound]^n.
bool saturation_check(const std::vector<LatticeVector>& generators, std::uint64_t p, unsigned bound);

/// Face tau of a maximal cone sigma, as a subset of sigma's ray indices.
struct ChartFace {
    ConeIndex cone;
    std::vector<std::size_t> face;
};

/// The ideal of V(tau) on U_sigma is spanned by e(m) with <m, n_i> > 0 for
/// some ray n_i of tau. Checks a(I) ⊂ I on the box [0, bound]^n of the
/// chart's dual-basis coordinates.
bool compatible_ideal_check(const Fan& fan, const ChartFace& chart, std::uint64_t p, unsigned bound);

/// (alpha + beta + 1)/p - 1 componentwise, when every component is integral.
std::optional<std::vector<Int>> local_duality_eval(const std::vector<Int>& alpha, const std::vector<Int>& beta,
                                                   std::uint64_t p);

/// Compares a(x^beta), computed in M coordinates, against the duality
/// pairing with x^{(p-1,...,p-1)} for every beta in [0, box_bound]^n.
bool verify_splitting_divisor_chart(const Fan& fan, ConeIndex cone, std::uint64_t p, unsigned box_bound);

}  // namespace toricfs
