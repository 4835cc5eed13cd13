#ifndef COXH4_GAUGE_HPP
#define COXH4_GAUGE_HPP

#include <optional>
#include <vector>

#include "coxh4/diffop.hpp"
#include "coxh4/roots.hpp"
#include "coxh4/tau.hpp"

namespace coxh4 {

struct NonzeroFreeTerm : std::runtime_error {
    explicit NonzeroFreeTerm(const std::string& what) : std::runtime_error(what) {}
};

struct FNotEigen : std::runtime_error {
    explicit FNotEigen(const std::string& what) : std::runtime_error(what) {}
};

// Rational model data: inverse-square couplings sit on the 60 root factors
// with strength g |alpha|^2 / 2 where g = nu(nu-1); the ground state is
// (prod alpha.x)^nu exp(-omega r^2 / 2) with energy E0.
struct ModelSpec {
    std::vector<LinearForm> roots;
    std::vector<Polynomial> coefficients;  // per-root potential coefficient (in nu)
    Polynomial ground_energy;              // E0(nu, omega)

    static ModelSpec h4(const RootSystemH4& rs);
    // same construction for an arbitrary root list (small oracle systems)
    static ModelSpec custom(std::vector<LinearForm> roots);

    Polynomial coupling() const;  // g = nu^2 - nu
};

// Gauge-rotated operator in Cartesian variables: a polynomial-coefficient
// part plus per-root first-order terms  numerator/(alpha.x) (alpha.grad),
// kept factored so applications reduce to exact per-root divisions.
class GaugeOperator {
public:
    struct RootTerm {
        LinearForm alpha;
        Polynomial numerator;
    };

    DiffOperator poly_part{Ctx::cart};
    std::vector<RootTerm> root_terms;

    // exact action on a polynomial; NotDivisible propagates for inputs that
    // are not reflection-invariant
    Polynomial apply(const Polynomial& p) const;
};

// Sum over plane-grouped root pairs of (a.b)/((a.x)(b.x)) vanishes; verified
// exactly plane by plane. Returns false (with the failing plane) otherwise.
bool verify_pair_plane_identity(const std::vector<LinearForm>& roots,
                                std::string* detail = nullptr);

// h = -2 Psi0^{-1} (H - E0) Psi0 = Laplacian + 2 grad(log Psi0).grad.
// The zero-order term is certified to cancel exactly (per-root pole
// cancellation, the plane identity, and the constant balance); throws
// NonzeroFreeTerm on any mismatch.
GaugeOperator gauge_rotate_hamiltonian(const ModelSpec& spec);

// The separation integral in Cartesian form,
//   F = -1/2 sum_{i<j} J_ij^2 + r^2 U(x),   J_ij = x_i d_j - x_j d_i.
struct CartesianIntegral {
    DiffOperator angular_part{Ctx::cart};  // -1/2 sum J_ij^2
    Polynomial gamma0;                     // lowest eigenvalue, derived
};

// builds F and certifies F Psi0 = gamma0 Psi0 exactly (throws FNotEigen)
CartesianIntegral build_integral_cartesian(const ModelSpec& spec);

// f = Psi0^{-1} (F - gamma0) Psi0, omega-free with zero free term
GaugeOperator gauge_rotate_integral(const CartesianIntegral& integral, const ModelSpec& spec);

// reference (slow) action of f, organized pair by pair; used as an oracle
// against GaugeOperator::apply
Polynomial integral_apply_reference(const ModelSpec& spec, const Polynomial& p);

// [H, F] = 0 as an exact operator identity: polynomial brackets vanish by
// direct composition, rational brackets vanish root by root
void verify_hamiltonian_integral_commute(const ModelSpec& spec);

// J_ij = x_i d_j - x_j d_i as a polynomial-coefficient operator
DiffOperator angular_momentum(Ctx ctx, int i, int j);

// Push a constant-annihilating operator to the tau coordinates:
//   second-order coefficients from the bilinear identity
//   A_ab = (op(T_a T_b) - T_a op(T_b) - T_b op(T_a)) / 2,
//   first-order coefficients B_a = op(T_a), all invariantized exactly.
DiffOperator pushforward(const GaugeOperator& op, const TauMap& tau);

// symmetric-matrix accessor: A_ab with A = A^T, i.e. half the stored
// off-diagonal multi-index coefficient
Polynomial symmetric_coefficient(const DiffOperator& op, int a, int b);
// first-order coefficient B_a
Polynomial first_order_coefficient(const DiffOperator& op, int a);

}  // namespace coxh4

#endif
