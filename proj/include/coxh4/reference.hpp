#ifndef COXH4_REFERENCE_HPP
#define COXH4_REFERENCE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxh4/polynomial.hpp"

// Published closed-form values for the H4 rational model, embedded as exact
// data; every derivation in the library is diffed against these.
namespace coxh4::reference {

inline constexpr int kDataVersion = 1;

inline constexpr long kGroupOrder = 14400;
inline constexpr std::array<long, 4> kOrbitLengths{120, 600, 720, 1200};

// gauge-rotated Hamiltonian coefficients (tau context, nu/omega symbolic)
Polynomial hamiltonian_A(int i, int j);
Polynomial hamiltonian_B(int i);

// gauge-rotated separation integral coefficients
Polynomial integral_F(int i, int j);
Polynomial integral_G(int i);

// boundary surface polynomial (38 terms, degree 18 in tau)
Polynomial boundary_polynomial();

// E0 = 2 omega (1 + 30 nu), gamma0 = 60 nu (1 + 30 nu)
Polynomial ground_energy(Ctx ctx);
Polynomial gamma0(Ctx ctx);

// f-eigenvalue at quantum numbers (k2, k3, k4), nu symbolic
Polynomial gamma_eigenvalue(int k2, int k3, int k4);

// closed-form eigenfunctions
struct ClosedForm {
    std::string name;
    Polynomial phi;               // tau context, nu/omega symbolic
    Polynomial epsilon;           // h phi = -2 epsilon phi
    std::optional<Polynomial> gamma;  // f phi = gamma phi when known
};
// the minimal-flag list up to level 5 (includes the level-5 tau2 state)
std::vector<ClosedForm> h_eigenfunctions();
// the joint list up to level 6 (Laguerre family rows plus the tau2 state)
std::vector<ClosedForm> joint_eigenfunctions();

// tau tables exactly as printed, in bracket notation; component = 2, 3, 4
std::string tau_text(int component);

// expands "c1*[p|q|r|s] + ... ++ S*sqrt5*Delta4*{ ... }" into a polynomial
Polynomial parse_bracket_text(const std::string& text);

}  // namespace coxh4::reference

#endif
