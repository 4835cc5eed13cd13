#ifndef COXH4_SPECTRAL_HPP
#define COXH4_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "coxh4/diffop.hpp"
#include "coxh4/flagbasis.hpp"
#include "coxh4/linalg.hpp"

namespace coxh4 {

struct NotInvariantSubspace : std::runtime_error {
    explicit NotInvariantSubspace(const std::string& what) : std::runtime_error(what) {}
};

struct DefectiveMatrix : std::runtime_error {
    explicit DefectiveMatrix(const std::string& what) : std::runtime_error(what) {}
};

// Matrix of a tau-context operator on a flag basis, entries symbolic in
// nu and omega (parameter-only polynomials). Column j expands op(monomial j)
// over the basis; any leftover term raises NotInvariantSubspace.
std::vector<std::vector<Polynomial>> matrix_on_basis(const DiffOperator& op,
                                                     const FlagBasis& basis);

// same with nu, omega specialized to rationals
ScalarMatrix matrix_on_basis_at(const DiffOperator& op, const FlagBasis& basis,
                                const Scalar& nu, const Scalar& omega);

// no entry connects a lower flag weight to a higher one
bool check_triangular(const std::vector<std::vector<Polynomial>>& m, const FlagBasis& basis);
bool check_triangular(const ScalarMatrix& m, const FlagBasis& basis);

// strict upper-triangularity in the basis order (eigenvalues on the diagonal)
bool strictly_upper_triangular(const ScalarMatrix& m);

// diagonal entries in basis order, symbolic
std::vector<Polynomial> diagonal_spectrum(const DiffOperator& op, const FlagBasis& basis);

// one eigenvalue with its exact eigenvectors (basis coordinates)
struct EigenSpace {
    Scalar eigenvalue;
    std::vector<std::vector<Scalar>> vectors;
};

// full eigen decomposition of a triangular matrix; every eigenvalue read off
// the diagonal, eigenvectors by exact kernel computation, deterministic
// echelon normalization. Throws DefectiveMatrix when geometric multiplicity
// falls short anywhere.
std::vector<EigenSpace> eigen_decompose(const ScalarMatrix& m);

// eigenvector coordinates -> tau polynomial over the basis monomials,
// normalized to make the graded-leading coefficient one
Polynomial eigenvector_polynomial(const FlagBasis& basis, const std::vector<Scalar>& coords);

// p lies in the span of the given polynomials
bool in_span(const Polynomial& p, const std::vector<Polynomial>& space);

// L_{n1}^{(1+60 nu)}(omega tau1) and its h-eigenvalue factor: the family of
// tau1-only eigenfunctions
struct LaguerreEigen {
    Polynomial phi;      // tau-context
    Polynomial epsilon;  // 2 omega n1
};
LaguerreEigen laguerre_family(int n1);

// Joint diagonalization of h and f on P_n^{(1,6,10,15)} at rational nu,
// omega: per h-eigenvalue block the f-eigenvalues (with geometric
// multiplicities) must be gamma(k2,k3,k4) over the block monomials.
struct JointBlockReport {
    Scalar h_diag;                    // h-matrix diagonal value (-2 epsilon)
    std::size_t dimension;
    std::vector<std::pair<Scalar, std::size_t>> gamma_multiplicities;
};
std::vector<JointBlockReport> joint_diagonalize(const DiffOperator& h, const DiffOperator& f,
                                                const FlagBasis& basis, const Scalar& nu,
                                                const Scalar& omega);

}  // namespace coxh4

#endif
