#include "coxh4/gauge.hpp"

#include <map>
#include <set>

#include "coxh4/special.hpp"

namespace coxh4 {

namespace {

Polynomial nu_poly(long c0, long c1) {
    // c0 + c1 * nu
    Polynomial p(Ctx::cart);
    if (c0) p.raw_push(Mono(), Scalar(c0));
    if (c1) p.raw_push(Mono::var(kNu), Scalar(c1));
    p.normalize();
    return p;
}

Polynomial coupling_poly() {
    // g = nu^2 - nu
    Polynomial p(Ctx::cart);
    p.raw_push(Mono::var(kNu, 2), Scalar(1));
    p.raw_push(Mono::var(kNu), Scalar(-1));
    p.normalize();
    return p;
}

// sum_k num[k] / (alpha.x)^k with polynomial numerators; index = pole order
class RootRational {
public:
    explicit RootRational(LinearForm alpha) : alpha_(std::move(alpha)) {}
    RootRational(LinearForm alpha, Polynomial num, int order) : alpha_(std::move(alpha)) {
        set(order, std::move(num));
    }

    const LinearForm& alpha() const { return alpha_; }

    void set(int order, Polynomial num) {
        if (static_cast<int>(num_.size()) <= order) num_.resize(order + 1, Polynomial(Ctx::cart));
        num_[order] += num;
    }

    RootRational& operator+=(const RootRational& o) {
        if (static_cast<int>(num_.size()) < static_cast<int>(o.num_.size()))
            num_.resize(o.num_.size(), Polynomial(Ctx::cart));
        for (std::size_t k = 0; k < o.num_.size(); ++k) num_[k] += o.num_[k];
        return *this;
    }

    RootRational scaled(const Polynomial& p) const {
        RootRational r(alpha_);
        r.num_.reserve(num_.size());
        for (const auto& n : num_) r.num_.push_back(n * p);
        return r;
    }

    RootRational scaled(const Scalar& c) const {
        RootRational r(alpha_);
        for (const auto& n : num_) r.num_.push_back(n.scaled(c));
        return r;
    }

    RootRational derivative(int var) const {
        // d/dx (n / u^k) = n' / u^k - k a_var n / u^{k+1}
        RootRational r(alpha_);
        for (int k = 0; k < static_cast<int>(num_.size()); ++k) {
            r.set(k, num_[k].derivative(var));
            if (k > 0 || !alpha_[var].is_zero()) {
                Polynomial drop = num_[k].scaled(Scalar(-k) * alpha_[var]);
                if (!drop.is_zero()) r.set(k + 1, std::move(drop));
            }
        }
        return r;
    }

    // x_i d_j - x_j d_i
    RootRational angular(int i, int j) const {
        RootRational r = derivative(j).scaled(Polynomial::variable(Ctx::cart, i));
        RootRational s = derivative(i).scaled(Polynomial::variable(Ctx::cart, j));
        for (auto& n : s.num_) n = -n;
        r += s;
        return r;
    }

    // cancel (alpha.x) factors; afterwards pole numerators carry no factor
    void reduce() {
        for (int k = static_cast<int>(num_.size()) - 1; k >= 1; --k) {
            while (!num_[k].is_zero()) {
                auto q = try_divide_by_linear_form(num_[k], alpha_);
                if (!q) break;
                num_[k] = Polynomial(Ctx::cart);
                num_[k - 1] += *q;
            }
        }
        while (num_.size() > 1 && num_.back().is_zero()) num_.pop_back();
    }

    // valid after reduce(): distinct pole orders cannot cancel each other
    bool is_zero_reduced() const {
        for (const auto& n : num_)
            if (!n.is_zero()) return false;
        return true;
    }

    // after reduce(): the rational part must vanish; returns the remaining
    // polynomial part or nothing if a pole survives
    std::optional<Polynomial> polynomial_part() const {
        for (std::size_t k = 1; k < num_.size(); ++k)
            if (!num_[k].is_zero()) return std::nullopt;
        return num_.empty() ? Polynomial(Ctx::cart) : num_[0];
    }

private:
    LinearForm alpha_;
    std::vector<Polynomial> num_;
};

// J_ij applied to the function (x_i a_j - x_j a_i), etc. all go through
// RootRational, so no identity is assumed beyond exact arithmetic.

std::vector<std::vector<int>> pair_planes(const std::vector<LinearForm>& roots,
                                          const std::vector<std::pair<int, int>>& pairs) {
    // group non-orthogonal pairs by the set of roots in their 2-plane
    std::set<std::vector<int>> planes;
    int n = static_cast<int>(roots.size());
    for (auto [i, j] : pairs) {
        std::vector<int> members;
        for (int k = 0; k < n; ++k) {
            // alpha_k in span(alpha_i, alpha_j)?
            const LinearForm &a = roots[i], &b = roots[j], &c = roots[k];
            int r1 = -1, r2 = -1;
            Scalar det;
            for (int p = 0; p < 4 && r1 < 0; ++p)
                for (int q = p + 1; q < 4; ++q) {
                    det = a[p] * b[q] - a[q] * b[p];
                    if (!det.is_zero()) {
                        r1 = p;
                        r2 = q;
                        break;
                    }
                }
            Scalar s = (c[r1] * b[r2] - c[r2] * b[r1]) / det;
            Scalar t = (a[r1] * c[r2] - a[r2] * c[r1]) / det;
            bool in_span = true;
            for (int p = 0; p < 4; ++p)
                if (!(s * a[p] + t * b[p] == c[p])) {
                    in_span = false;
                    break;
                }
            if (in_span) members.push_back(k);
        }
        planes.insert(members);
    }
    return {planes.begin(), planes.end()};
}

}  // namespace

bool verify_pair_plane_identity(const std::vector<LinearForm>& roots, std::string* detail) {
    std::vector<std::pair<int, int>> pairs;
    int n = static_cast<int>(roots.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!roots[i].dot(roots[j]).is_zero()) pairs.emplace_back(i, j);
    if (pairs.empty()) return true;

    for (const auto& plane : pair_planes(roots, pairs)) {
        // numerator of sum_{a != b in plane} (a.b)/((a.x)(b.x)) over the
        // common denominator prod_{c in plane}(c.x); unordered pairs twice
        Polynomial numerator(Ctx::cart);
        std::size_t m = plane.size();
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q) {
                Scalar dot = roots[plane[p]].dot(roots[plane[q]]);
                if (dot.is_zero()) continue;
                Polynomial prod = Polynomial::constant(Ctx::cart, Scalar(2) * dot);
                for (std::size_t r = 0; r < m; ++r)
                    if (r != p && r != q) prod = prod * roots[plane[r]].to_poly();
                numerator += prod;
            }
        if (!numerator.is_zero()) {
            if (detail) {
                *detail = "plane {";
                for (int idx : plane) *detail += " " + std::to_string(idx);
                *detail += " } has nonvanishing pair sum";
            }
            return false;
        }
    }
    return true;
}

ModelSpec ModelSpec::h4(const RootSystemH4& rs) {
    ModelSpec s;
    s.roots = rs.roots();
    Polynomial g = coupling_poly();
    for (int i = 0; i < rs.count(); ++i)
        s.coefficients.push_back(g.scaled(rs.norm_sq(i) * Scalar(1, 2)));
    // E0 = 2 omega (1 + 30 nu)
    Polynomial e0(Ctx::cart);
    e0.raw_push(Mono::var(kOmega), Scalar(2));
    e0.raw_push(Mono::var(kOmega) * Mono::var(kNu), Scalar(60));
    e0.normalize();
    s.ground_energy = e0;
    return s;
}

ModelSpec ModelSpec::custom(std::vector<LinearForm> roots) {
    ModelSpec s;
    s.roots = std::move(roots);
    Polynomial g = coupling_poly();
    for (const auto& r : s.roots) s.coefficients.push_back(g.scaled(r.norm_sq() * Scalar(1, 2)));
    // E0 = omega (N/2 + nu * #roots) with N = 4 ambient dimensions
    Polynomial e0(Ctx::cart);
    e0.raw_push(Mono::var(kOmega), Scalar(2));
    e0.raw_push(Mono::var(kOmega) * Mono::var(kNu), Scalar(static_cast<long>(s.roots.size())));
    e0.normalize();
    s.ground_energy = e0;
    return s;
}

Polynomial ModelSpec::coupling() const { return coupling_poly(); }

Polynomial GaugeOperator::apply(const Polynomial& p) const {
    Polynomial r = poly_part.apply(p);
    for (const auto& rt : root_terms) {
        Polynomial dir = directional_derivative(p, rt.alpha);
        if (dir.is_zero()) continue;
        r += rt.numerator * divide_by_linear_form(dir, rt.alpha);
    }
    return r;
}

GaugeOperator gauge_rotate_hamiltonian(const ModelSpec& spec) {
    // Free-term cancellation, certified in three exact pieces.
    // 1. second-order poles: the potential coefficient on every root must
    //    equal g |alpha|^2 / 2, the value produced by the Laplacian acting
    //    on the (alpha.x)^nu factor
    Polynomial g = spec.coupling();
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        Polynomial expect = g.scaled(spec.roots[i].norm_sq() * Scalar(1, 2));
        if (!(expect == spec.coefficients[i]))
            throw NonzeroFreeTerm("potential coefficient on root " + std::to_string(i) +
                                  " does not cancel the gauge factor");
    }
    // 2. first-order pole cross terms vanish plane by plane
    std::string detail;
    if (!verify_pair_plane_identity(spec.roots, &detail))
        throw NonzeroFreeTerm("cross terms survive: " + detail);
    // 3. constant balance: E0 = omega (N/2 + nu |R+|)
    Polynomial e0(Ctx::cart);
    e0.raw_push(Mono::var(kOmega), Scalar(2));
    e0.raw_push(Mono::var(kOmega) * Mono::var(kNu), Scalar(static_cast<long>(spec.roots.size())));
    e0.normalize();
    if (!(e0 == spec.ground_energy))
        throw NonzeroFreeTerm("ground-state energy does not balance the constant term");

    GaugeOperator h;
    h.poly_part = DiffOperator::laplacian(Ctx::cart);
    Polynomial minus2om(Ctx::cart);
    minus2om.raw_push(Mono::var(kOmega), Scalar(-2));
    minus2om.normalize();
    h.poly_part += DiffOperator::euler(Ctx::cart, minus2om);
    Polynomial two_nu(Ctx::cart);
    two_nu.raw_push(Mono::var(kNu), Scalar(2));
    two_nu.normalize();
    for (const auto& a : spec.roots) h.root_terms.push_back({a, two_nu});
    return h;
}

DiffOperator angular_momentum(Ctx ctx, int i, int j) {
    DerivIndex di{}, dj{};
    di[i] = 1;
    dj[j] = 1;
    return DiffOperator::term(dj, Polynomial::variable(ctx, i)) -
           DiffOperator::term(di, Polynomial::variable(ctx, j));
}

CartesianIntegral build_integral_cartesian(const ModelSpec& spec) {
    CartesianIntegral F;
    DiffOperator jsum(Ctx::cart);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            DiffOperator jij = angular_momentum(Ctx::cart, i, j);
            jsum += DiffOperator::compose(jij, jij);
        }
    F.angular_part = jsum.scaled(Scalar(-1, 2));

    // Certify F Psi0 = gamma0 Psi0: the conjugated operator applied to 1 is
    //   -1/2 sum_{i<j} [J_ij(w_ij) + w_ij^2] + r^2 U
    // with w_ij = nu sum_a (x_i a_j - x_j a_i)/(a.x). All single-root pieces
    // reduce exactly; cross terms reduce to the plane identity plus constants.
    Polynomial nu = Polynomial::variable(Ctx::cart, kNu);
    Polynomial r2 = radius_squared();
    Polynomial constant_acc(Ctx::cart);

    std::size_t n = spec.roots.size();
    for (std::size_t a = 0; a < n; ++a) {
        const LinearForm& alpha = spec.roots[a];
        RootRational acc(alpha);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                // w_ij factor for this root (without the nu prefactor)
                Polynomial num = Polynomial::variable(Ctx::cart, i).scaled(alpha[j]) -
                                 Polynomial::variable(Ctx::cart, j).scaled(alpha[i]);
                RootRational w(alpha, num, 1);
                // -1/2 [ nu J_ij(w) + nu^2 w^2 ]
                RootRational jw = w.angular(i, j).scaled(nu.scaled(Scalar(-1, 2)));
                acc += jw;
                RootRational w2(alpha, num * num, 2);
                acc += w2.scaled((nu * nu).scaled(Scalar(-1, 2)));
            }
        // potential piece c_a r^2/(a.x)^2
        acc += RootRational(alpha, spec.coefficients[a] * r2, 2);
        acc.reduce();
        auto poly = acc.polynomial_part();
        if (!poly)
            throw FNotEigen("single-root terms do not cancel on root " + std::to_string(a));
        if (poly->main_degree() > 0)
            throw FNotEigen("x-dependent residue on root " + std::to_string(a));
        constant_acc += *poly;
    }

    // cross terms: -1/2 nu^2 sum_{a != b} sum_{i<j} (x_i a_j - x_j a_i)(x_i b_j - x_j b_i)
    //              / ((a.x)(b.x))
    // The numerator equals r^2 (a.b) - (a.x)(b.x) by exact expansion; the
    // residual sum of (a.b)/((a.x)(b.x)) vanishes by the plane identity.
    Polynomial cross_const(Ctx::cart);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const LinearForm &af = spec.roots[a], &bf = spec.roots[b];
            Polynomial num(Ctx::cart);
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    Polynomial wa = Polynomial::variable(Ctx::cart, i).scaled(af[j]) -
                                    Polynomial::variable(Ctx::cart, j).scaled(af[i]);
                    Polynomial wb = Polynomial::variable(Ctx::cart, i).scaled(bf[j]) -
                                    Polynomial::variable(Ctx::cart, j).scaled(bf[i]);
                    num += wa * wb;
                }
            Polynomial lagrange = r2.scaled(af.dot(bf)) - af.to_poly() * bf.to_poly();
            if (!(num == lagrange))
                throw FNotEigen("cross-term expansion mismatch");
            // the -(a.x)(b.x) part divides out: contributes +1/2 nu^2
            cross_const += (nu * nu).scaled(Scalar(1, 2));
        }
    std::string detail;
    if (!verify_pair_plane_identity(spec.roots, &detail))
        throw FNotEigen("cross terms survive: " + detail);
    constant_acc += cross_const;

    if (constant_acc.main_degree() > 0 || constant_acc.has_var(kOmega))
        throw FNotEigen("ground state is not an eigenfunction of the integral");
    F.gamma0 = constant_acc;
    return F;
}

GaugeOperator gauge_rotate_integral(const CartesianIntegral& integral, const ModelSpec& spec) {
    // f(p) = -1/2 sum J_ij^2 p - sum_{i<j} w_ij J_ij p; contracting the pair
    // sum gives  - nu sum_a [ r^2 (a.grad p) - (a.x)(x.grad p) ] / (a.x),
    // so the polynomial part gains + nu |R+| (x.grad) and each root carries
    // the factored numerator  - nu r^2.
    GaugeOperator f;
    f.poly_part = integral.angular_part;
    Polynomial nu = Polynomial::variable(Ctx::cart, kNu);
    f.poly_part += DiffOperator::euler(
        Ctx::cart, nu.scaled(Scalar(static_cast<long>(spec.roots.size()))));
    Polynomial num = -(nu * radius_squared());
    for (const auto& a : spec.roots) f.root_terms.push_back({a, num});
    return f;
}

Polynomial integral_apply_reference(const ModelSpec& spec, const Polynomial& p) {
    // pair-by-pair route: -1/2 sum J_ij^2 p - nu sum_a (1/(a.x)) *
    //                       sum_{i<j} (x_i a_j - x_j a_i) J_ij(p)
    Polynomial result(Ctx::cart);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            DiffOperator jij = angular_momentum(Ctx::cart, i, j);
            result += jij.apply(jij.apply(p)).scaled(Scalar(-1, 2));
        }
    Polynomial nu = Polynomial::variable(Ctx::cart, kNu);
    for (const auto& alpha : spec.roots) {
        Polynomial pair_sum(Ctx::cart);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Polynomial w = Polynomial::variable(Ctx::cart, i).scaled(alpha[j]) -
                               Polynomial::variable(Ctx::cart, j).scaled(alpha[i]);
                pair_sum += w * angular_momentum(Ctx::cart, i, j).apply(p);
            }
        if (pair_sum.is_zero()) continue;
        result -= nu * divide_by_linear_form(pair_sum, alpha);
    }
    return result;
}

void verify_hamiltonian_integral_commute(const ModelSpec& spec) {
    // [H, F] with H = -1/2 Lap + 1/2 om^2 r^2 + U and F = FJ + r^2 U splits
    // into polynomial brackets (composed directly) and per-root rational
    // brackets; multiplication operators commute identically.
    DiffOperator lap = DiffOperator::laplacian(Ctx::cart);
    DiffOperator jsum(Ctx::cart);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            DiffOperator jij = angular_momentum(Ctx::cart, i, j);
            jsum += DiffOperator::compose(jij, jij);
        }
    DiffOperator fj = jsum.scaled(Scalar(-1, 2));
    if (!DiffOperator::commutator(lap, fj).is_zero())
        throw FNotEigen("[Laplacian, angular part] != 0");
    DiffOperator r2op = DiffOperator::multiplication(radius_squared());
    if (!DiffOperator::commutator(r2op, fj).is_zero())
        throw FNotEigen("[r^2, angular part] != 0");

    // rational brackets, root by root:
    //   zero order:  -1/2 Lap(r^2 u) + 1/2 sum_{i<j} J_ij(J_ij(u))  == 0
    //   first order (coefficient of d_k):
    //        -d_k(r^2 u) + sum_{i<j} J_ij(u) (x_i [j==k] - x_j [i==k]) == 0
    // with u = c_a/(a.x)^2.
    Polynomial r2 = radius_squared();
    for (std::size_t a = 0; a < spec.roots.size(); ++a) {
        const LinearForm& alpha = spec.roots[a];
        RootRational u(alpha, spec.coefficients[a], 2);
        RootRational ru(alpha, spec.coefficients[a] * r2, 2);

        RootRational zero_order(alpha);
        for (int i = 0; i < 4; ++i) {
            RootRational d = ru.derivative(i).derivative(i);
            zero_order += d.scaled(Scalar(-1, 2));
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                zero_order += u.angular(i, j).angular(i, j).scaled(Scalar(1, 2));
        zero_order.reduce();
        if (!zero_order.is_zero_reduced())
            throw FNotEigen("zero-order bracket survives on root " + std::to_string(a));

        for (int k = 0; k < 4; ++k) {
            RootRational first(alpha);
            RootRational drk = ru.derivative(k);
            first += drk.scaled(Scalar(-1));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    if (j == k)
                        first += u.angular(i, j).scaled(Polynomial::variable(Ctx::cart, i));
                    else if (i == k)
                        first += u.angular(i, j).scaled(-Polynomial::variable(Ctx::cart, j));
                }
            first.reduce();
            if (!first.is_zero_reduced())
                throw FNotEigen("first-order bracket survives on root " + std::to_string(a));
        }
    }
}

DiffOperator pushforward(const GaugeOperator& op, const TauMap& tau) {
    if (!op.apply(Polynomial::constant(Ctx::cart, Scalar(1))).is_zero())
        throw NonzeroFreeTerm("pushforward requires an operator annihilating constants");

    std::array<Polynomial, 4> image;   // op(T_a)
    for (int a = 0; a < 4; ++a) image[a] = op.apply(tau.tau(a));

    std::vector<DiffOperator::Term> terms;
    for (int a = 0; a < 4; ++a) {
        Polynomial ba = invariantize(image[a], tau);
        if (!ba.is_zero()) {
            DerivIndex m{};
            m[a] = 1;
            terms.push_back({m, std::move(ba)});
        }
        for (int b = a; b < 4; ++b) {
            Polynomial ab = op.apply(tau.tau(a) * tau.tau(b)) - tau.tau(a) * image[b] -
                            tau.tau(b) * image[a];
            ab = ab.scaled(Scalar(1, 2));
            if (ab.is_zero()) continue;
            Polynomial aab = invariantize(ab, tau);
            DerivIndex m{};
            m[a] += 1;
            m[b] += 1;
            // stored multi-index coefficient carries both (a,b) and (b,a)
            terms.push_back({m, a == b ? std::move(aab) : aab + aab});
        }
    }
    return DiffOperator::from_terms(Ctx::tau, std::move(terms));
}

Polynomial symmetric_coefficient(const DiffOperator& op, int a, int b) {
    DerivIndex m{};
    m[a] += 1;
    m[b] += 1;
    Polynomial c = op.coefficient(m);
    return a == b ? c : c.scaled(Scalar(1, 2));
}

Polynomial first_order_coefficient(const DiffOperator& op, int a) {
    DerivIndex m{};
    m[a] = 1;
    return op.coefficient(m);
}

}  // namespace coxh4
