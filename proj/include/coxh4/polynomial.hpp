#ifndef COXH4_POLYNOMIAL_HPP
#define COXH4_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxh4/context.hpp"
#include "coxh4/scalar.hpp"

namespace coxh4 {

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct ParamPart;

// Sparse multivariate polynomial over Q(sqrt5) in a fixed variable context.
// Terms are kept in canonical order (graded lex, leading term first) with no
// zero coefficients; equality is plain term-wise comparison.
class Polynomial {
public:
    struct Term {
        Mono mono;
        Scalar coeff;
    };

    explicit Polynomial(Ctx ctx = Ctx::cart) : ctx_(ctx) {}

    static Polynomial zero(Ctx ctx) { return Polynomial(ctx); }
    static Polynomial constant(Ctx ctx, Scalar c);
    static Polynomial variable(Ctx ctx, int i, int e = 1);
    static Polynomial monomial(Ctx ctx, Mono m, Scalar c);

    Ctx ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // leading term in canonical order; polynomial must be nonzero
    const Term& leading() const { return terms_.front(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }
    // constant term (zero if absent)
    Scalar constant_term() const;

    int degree() const;                 // total degree over all context variables
    int main_degree() const;            // degree in the four main variables
    int degree_in(int var) const;
    Scalar coefficient(Mono m) const;   // zero if absent

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial mono_multiplied(Mono m, const Scalar& c) const;
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(int var) const;

    // substitute exact values for the four main variables; parameters stay
    Polynomial eval_main(const std::array<Scalar, 4>& pt) const;
    // substitute values for every variable
    Scalar eval_full(const std::array<Scalar, kNumVars>& pt) const;
    // substitute values for nu and omega only
    Polynomial specialize_params(const Scalar& nu, const Scalar& omega) const;

    // substitute images[i] for variable i; images live in target_ctx
    Polynomial substitute(Ctx target_ctx, const std::array<Polynomial, kNumVars>& images) const;

    // split by degree in the main variables: degree -> homogeneous part
    std::map<int, Polynomial> main_homogeneous_parts() const;

    // split by the (nu, omega) exponent pair: returns list of
    // (nu exp, omega exp, polynomial with zero parameter exponents)
    std::vector<ParamPart> param_parts() const;

    bool has_var(int var) const;

    std::string str() const;

    // construction from raw term list (sorts, merges, drops zeros)
    static Polynomial from_terms(Ctx ctx, std::vector<Term> terms);

    // raw append during bulk construction; call normalize() when done
    void raw_push(Mono m, Scalar c) { terms_.push_back({m, std::move(c)}); }
    void normalize();

private:
    Ctx ctx_;
    std::vector<Term> terms_;

    void check_ctx(const Polynomial& o) const {
        if (ctx_ != o.ctx_) throw ContextMismatch();
    }
};

struct ParamPart {
    int nu_exp;
    int om_exp;
    Polynomial poly;
};

// Linear form c . x in the four main variables of the Cartesian context.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::array<Scalar, 4> c) : c_(std::move(c)) {}

    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }

    bool is_zero() const;
    Scalar dot(const LinearForm& o) const;          // c . c'
    Scalar dot_vec(const std::array<Scalar, 4>& v) const;
    Scalar norm_sq() const { return dot(*this); }

    Polynomial to_poly() const;

    // b = lambda * a for some scalar lambda; returns lambda through out
    bool proportional_to(const LinearForm& o, Scalar* lambda = nullptr) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b);

    std::string str() const;

private:
    std::array<Scalar, 4> c_{};
};

// exact quotient p / lf; throws NotDivisible when the remainder is nonzero
Polynomial divide_by_linear_form(const Polynomial& p, const LinearForm& lf);

// as above but signalling failure through the return value
std::optional<Polynomial> try_divide_by_linear_form(const Polynomial& p, const LinearForm& lf);

// exact quotient p / q by leading-term elimination in the canonical order
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

// directional derivative  (c . grad) p  over the four main variables
Polynomial directional_derivative(const Polynomial& p, const LinearForm& c);

// p composed with x -> M x (rows of m give the images of the variables)
Polynomial compose_linear(const Polynomial& p, const std::array<LinearForm, 4>& images);

// fast path for x -> x + dir * (lf . x), the shape of a reflection
Polynomial compose_reflection(const Polynomial& p, const LinearForm& lf,
                              const std::array<Scalar, 4>& dir);

}  // namespace coxh4

#endif
