#ifndef COXH4_FLAGBASIS_HPP
#define COXH4_FLAGBASIS_HPP

#include <array>
#include <vector>

#include "coxh4/context.hpp"

namespace coxh4 {

// characteristic vector of a flag of invariant polynomial subspaces
using FlagVector = std::array<int, 4>;

inline constexpr FlagVector kMinimalFlag{1, 5, 8, 12};
inline constexpr FlagVector kSeparationFlag{1, 6, 10, 15};

// tau-monomial exponents (p1, p2, p3, p4)
using TauExp = std::array<int, 4>;

inline int weighted_degree(const TauExp& p, const FlagVector& v) {
    return p[0] * v[0] + p[1] * v[1] + p[2] * v[2] + p[3] * v[3];
}

// Ordered monomial basis of P_n^{(v)} = span{ tau^p : 0 <= p.v <= n }.
// Graded order: v-weight, then (1,6,10,15)-weight, then p1, then the packed
// exponents; both gauge-rotated operators are triangular in this order.
class FlagBasis {
public:
    FlagBasis(FlagVector v, int level);

    const FlagVector& characteristic() const { return v_; }
    int level() const { return n_; }
    std::size_t dimension() const { return monos_.size(); }
    const std::vector<TauExp>& monomials() const { return monos_; }
    const TauExp& monomial(std::size_t i) const { return monos_[i]; }

    // index of the exponent vector, or -1 when outside the space
    long index_of(const TauExp& p) const;

    Mono to_mono(std::size_t i) const;

private:
    FlagVector v_;
    int n_;
    std::vector<TauExp> monos_;
};

// number of solutions of n1 + 6 n2 + 10 n3 + 15 n4 = n in nonnegative integers
long degeneracy(int n);

}  // namespace coxh4

#endif
