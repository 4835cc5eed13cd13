#ifndef COXH4_DIFFOP_HPP
#define COXH4_DIFFOP_HPP

#include <array>
#include <vector>

#include "coxh4/polynomial.hpp"

namespace coxh4 {

// derivative multi-index over the four main variables of a context
using DerivIndex = std::array<int, 4>;

// Differential operator with polynomial coefficients:
//   sum_m  coeff_m(vars) * d^m / d vars^m
// kept in canonical form (unique multi-indices in a fixed order, no zero
// coefficients).
class DiffOperator {
public:
    struct Term {
        DerivIndex deriv;
        Polynomial coeff;
    };

    explicit DiffOperator(Ctx ctx = Ctx::cart) : ctx_(ctx) {}

    static DiffOperator zero(Ctx ctx) { return DiffOperator(ctx); }
    // multiplication operator by p
    static DiffOperator multiplication(const Polynomial& p);
    // c * d^m
    static DiffOperator term(DerivIndex m, Polynomial coeff);
    // sum of second derivatives in the main variables
    static DiffOperator laplacian(Ctx ctx);
    // p * (v . grad) for a coefficient vector over the main variables
    static DiffOperator euler(Ctx ctx, const Polynomial& scale);  // scale * sum x_i d_i

    Ctx ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;
    const std::vector<Term>& terms() const { return terms_; }

    // coefficient of d^m (zero polynomial if absent)
    Polynomial coefficient(const DerivIndex& m) const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    DiffOperator scaled(const Scalar& c) const;
    DiffOperator scaled(const Polynomial& p) const;  // left multiplication by p

    friend bool operator==(const DiffOperator& a, const DiffOperator& b);
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    Polynomial apply(const Polynomial& p) const;

    static DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
    static DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

    static DiffOperator from_terms(Ctx ctx, std::vector<Term> terms);

private:
    Ctx ctx_;
    std::vector<Term> terms_;
    void normalize();
};

// d^m p
Polynomial multi_derivative(const Polynomial& p, const DerivIndex& m);

}  // namespace coxh4

#endif
