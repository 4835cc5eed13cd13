#include "coxh4/diffop.hpp"

#include <algorithm>

namespace coxh4 {

namespace {

bool deriv_less(const DerivIndex& a, const DerivIndex& b) {
    int da = a[0] + a[1] + a[2] + a[3];
    int db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da < db;
    return a < b;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Polynomial multi_derivative(const Polynomial& p, const DerivIndex& m) {
    Polynomial r = p;
    for (int v = 0; v < 4; ++v)
        for (int i = 0; i < m[v]; ++i) r = r.derivative(v);
    return r;
}

DiffOperator DiffOperator::multiplication(const Polynomial& p) {
    return term({0, 0, 0, 0}, p);
}

DiffOperator DiffOperator::term(DerivIndex m, Polynomial coeff) {
    DiffOperator op(coeff.ctx());
    if (!coeff.is_zero()) op.terms_.push_back({m, std::move(coeff)});
    return op;
}

DiffOperator DiffOperator::laplacian(Ctx ctx) {
    DiffOperator op(ctx);
    for (int v = 0; v < 4; ++v) {
        DerivIndex m{};
        m[v] = 2;
        op.terms_.push_back({m, Polynomial::constant(ctx, Scalar(1))});
    }
    op.normalize();
    return op;
}

DiffOperator DiffOperator::euler(Ctx ctx, const Polynomial& scale) {
    DiffOperator op(ctx);
    for (int v = 0; v < 4; ++v) {
        DerivIndex m{};
        m[v] = 1;
        Polynomial c = scale * Polynomial::variable(ctx, v);
        if (!c.is_zero()) op.terms_.push_back({m, std::move(c)});
    }
    op.normalize();
    return op;
}

int DiffOperator::order() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.deriv[0] + t.deriv[1] + t.deriv[2] + t.deriv[3]);
    return d;
}

Polynomial DiffOperator::coefficient(const DerivIndex& m) const {
    for (const auto& t : terms_)
        if (t.deriv == m) return t.coeff;
    return Polynomial::zero(ctx_);
}

void DiffOperator::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return deriv_less(a.deriv, b.deriv); });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().deriv == t.deriv)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(ctx_);
    for (const auto& t : terms_) r.terms_.push_back({t.deriv, -t.coeff});
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (ctx_ != o.ctx_) throw ContextMismatch();
    for (const auto& t : o.terms_) terms_.push_back(t);
    normalize();
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) { return *this += -o; }

DiffOperator DiffOperator::scaled(const Scalar& c) const {
    DiffOperator r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& t : terms_) r.terms_.push_back({t.deriv, t.coeff.scaled(c)});
    return r;
}

DiffOperator DiffOperator::scaled(const Polynomial& p) const {
    DiffOperator r(ctx_);
    for (const auto& t : terms_) {
        Polynomial c = p * t.coeff;
        if (!c.is_zero()) r.terms_.push_back({t.deriv, std::move(c)});
    }
    r.normalize();
    return r;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
    if (a.ctx_ != b.ctx_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].deriv != b.terms_[i].deriv || !(a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    return true;
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
    if (p.ctx() != ctx_) throw ContextMismatch();
    Polynomial r(ctx_);
    for (const auto& t : terms_) {
        Polynomial d = multi_derivative(p, t.deriv);
        if (!d.is_zero()) r += t.coeff * d;
    }
    return r;
}

DiffOperator DiffOperator::compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch();
    DiffOperator r(a.ctx_);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            // (c d^m)(d d^n f) = c sum_{k<=m} C(m,k) d^k(coeff_b) d^{m-k+n} f
            DerivIndex k{};
            for (k[0] = 0; k[0] <= ta.deriv[0]; ++k[0])
                for (k[1] = 0; k[1] <= ta.deriv[1]; ++k[1])
                    for (k[2] = 0; k[2] <= ta.deriv[2]; ++k[2])
                        for (k[3] = 0; k[3] <= ta.deriv[3]; ++k[3]) {
                            Polynomial dk = multi_derivative(tb.coeff, k);
                            if (dk.is_zero()) continue;
                            long mult = 1;
                            for (int v = 0; v < 4; ++v) mult *= binom(ta.deriv[v], k[v]);
                            DerivIndex out;
                            for (int v = 0; v < 4; ++v) out[v] = ta.deriv[v] - k[v] + tb.deriv[v];
                            Polynomial c = ta.coeff * dk;
                            if (mult != 1) c = c.scaled(Scalar(mult));
                            if (!c.is_zero()) r.terms_.push_back({out, std::move(c)});
                        }
        }
    }
    r.normalize();
    return r;
}

DiffOperator DiffOperator::commutator(const DiffOperator& a, const DiffOperator& b) {
    return compose(a, b) - compose(b, a);
}

DiffOperator DiffOperator::from_terms(Ctx ctx, std::vector<Term> terms) {
    DiffOperator op(ctx);
    op.terms_ = std::move(terms);
    op.normalize();
    return op;
}

}  // namespace coxh4
