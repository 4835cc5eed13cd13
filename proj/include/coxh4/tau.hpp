#ifndef COXH4_TAU_HPP
#define COXH4_TAU_HPP

#include <array>
#include <vector>

#include "coxh4/flagbasis.hpp"
#include "coxh4/group.hpp"
#include "coxh4/polynomial.hpp"
#include "coxh4/roots.hpp"

namespace coxh4 {

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentScales : std::runtime_error {
    explicit InconsistentScales(const std::string& what) : std::runtime_error(what) {}
};

// The four invariant coordinates tau_1..tau_4 as polynomials in x,
// homogeneous of x-degrees 2, 12, 20, 30.
class TauMap {
public:
    // built from the explicit monomial-symmetric / delta4 tables
    static TauMap explicit_build();

    // arbitrary components (orbit-sum route)
    explicit TauMap(std::array<Polynomial, 4> taus) : tau_(std::move(taus)) {}

    const Polynomial& tau(int a) const { return tau_[a]; }
    const std::array<Polynomial, 4>& components() const { return tau_; }

    // substitute the map into a tau-context polynomial, producing x-context
    Polynomial pull_back(const Polynomial& tau_poly) const;

    // values (tau_1..tau_4) at an x-point
    std::array<Scalar, 4> eval(const Vector4& pt) const;

private:
    std::array<Polynomial, 4> tau_{Polynomial(Ctx::cart), Polynomial(Ctx::cart),
                                   Polynomial(Ctx::cart), Polynomial(Ctx::cart)};
};

// t_a(x) = sum over the orbit of (w.x)^a
Polynomial orbit_power_sum(int a, const std::vector<Vector4>& orb);

// parameters of the degree-mixing freedom in the orbit-sum invariants
struct AmbiguityParams {
    std::array<Scalar, 7> a;
    static AmbiguityParams published();
};

// the four orbit power sums t_2, t_12, t_20, t_30 of the shortest orbit
std::array<Polynomial, 4> orbit_invariants(const RootSystemH4& rs);

// apply the degree-mixing substitutions to scaled orbit sums:
//   u_a = scale_a * t_a, then
//   s_2 = u_2,  s_12 = u_12 + A1 u_2^6,  s_20 = ...,  s_30 = ...
std::array<Polynomial, 4> mix_orbit_invariants(const std::array<Polynomial, 4>& t,
                                               const AmbiguityParams& params,
                                               const std::array<Scalar, 4>& scales);

// Find scales making each mixed component proportional to the explicit tau,
// with scale_1 = 1 by convention (the mixing is weighted-homogeneous, so one
// overall normalization is free). Returns the per-invariant scales and the
// resulting proportionality factors; throws InconsistentScales when the
// mixing parameters cannot reach the explicit map.
struct OrbitFit {
    std::array<Scalar, 4> scales;       // sigma_a applied to t_a
    std::array<Scalar, 4> proportions;  // s_a = proportion_a * tau_a
};
OrbitFit fit_orbit_scales(const std::array<Polynomial, 4>& t, const AmbiguityParams& params,
                          const TauMap& tau);

// Express an H4-invariant x-polynomial in the tau coordinates exactly.
// Candidate tau-monomials of the matching weighted degree are fitted by
// exact evaluation at deterministic points, then certified by full symbolic
// substitution (skippable for callers that certify differently).
Polynomial invariantize(const Polynomial& p, const TauMap& tau, bool certify = true);

// determinant of the Jacobian matrix  d tau_i / d x_k  (x-degree 60)
Polynomial jacobian(const TauMap& tau);

// invariantize(J^2): the boundary surface of the configuration space
Polynomial boundary_surface(const TauMap& tau, const Polynomial& jac);

// weighted projective transformation parameters
struct WptParams {
    Scalar a;
    std::array<Scalar, 6> b;
    std::array<Scalar, 13> c;
    std::array<Scalar, 26> d;
};

// substitute the flag-preserving shifts into a tau-context polynomial
Polynomial wpt_substitution(const Polynomial& p, const WptParams& params);

// parameter-only polynomial moved between contexts (main exponents must be 0)
Polynomial convert_param_poly(const Polynomial& p, Ctx target);

}  // namespace coxh4

#endif
