#include "coxh4/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <unordered_map>

namespace coxh4 {

namespace {

// canonical term order: graded lex, leading (largest) first
bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
    return Mono::grlex_less(b.mono, a.mono);
}

int worker_threads() {
    static int n = [] {
        if (const char* env = std::getenv("COXH4_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : static_cast<int>(hc);
    }();
    return n;
}

using AccMap = std::unordered_map<std::uint64_t, Scalar>;

void accumulate_product(AccMap& acc, const std::vector<Polynomial::Term>& lhs,
                        std::size_t lo, std::size_t hi,
                        const std::vector<Polynomial::Term>& rhs) {
    for (std::size_t i = lo; i < hi; ++i) {
        const auto& a = lhs[i];
        for (const auto& b : rhs) {
            std::uint64_t k = a.mono.key() + b.mono.key();
            auto it = acc.find(k);
            if (it == acc.end())
                acc.emplace(k, a.coeff * b.coeff);
            else
                it->second += a.coeff * b.coeff;
        }
    }
}

}  // namespace

Polynomial Polynomial::constant(Ctx ctx, Scalar c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.push_back({Mono(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(Ctx ctx, int i, int e) {
    if (e == 0) return constant(ctx, Scalar(1));
    Polynomial p(ctx);
    p.terms_.push_back({Mono::var(i, e), Scalar(1)});
    return p;
}

Polynomial Polynomial::monomial(Ctx ctx, Mono m, Scalar c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(Ctx ctx, std::vector<Term> terms) {
    Polynomial p(ctx);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_before);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        Mono m = terms_[i].mono;
        Scalar c = std::move(terms_[i].coeff);
        ++i;
        while (i < terms_.size() && terms_[i].mono == m) {
            c += terms_[i].coeff;
            ++i;
        }
        if (!c.is_zero()) terms_[out++] = {m, std::move(c)};
    }
    terms_.resize(out);
}

Scalar Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_constant()) return terms_.back().coeff;
    return Scalar(0);
}

int Polynomial::degree() const {
    int d = -1;
    if (!terms_.empty()) d = terms_.front().mono.degree();
    return d;
}

int Polynomial::main_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.main_degree());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
    return d;
}

Scalar Polynomial::coefficient(Mono m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ctx(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        } else if (term_before(terms_[i], o.terms_[j])) {
            merged.push_back(terms_[i]);
            ++i;
        } else {
            merged.push_back(o.terms_[j]);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ctx(b);
    Polynomial r(a.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    const auto& small = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
    const auto& large = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;

    AccMap acc;
    acc.reserve(large.size() * 2);
    std::size_t work = small.size() * large.size();
    int nthreads = worker_threads();
    if (nthreads > 1 && work > (1u << 21) && small.size() > 1) {
        // term-batched product: partial maps per batch, merged afterwards;
        // exact arithmetic makes the merged result independent of the split
        std::size_t nbatch = std::min<std::size_t>(nthreads, small.size());
        std::vector<AccMap> partial(nbatch);
        std::vector<std::thread> pool;
        std::size_t chunk = (small.size() + nbatch - 1) / nbatch;
        for (std::size_t b = 0; b < nbatch; ++b) {
            std::size_t lo = b * chunk, hi = std::min(small.size(), lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, lo, hi, b] { accumulate_product(partial[b], small, lo, hi, large); });
        }
        for (auto& t : pool) t.join();
        acc = std::move(partial[0]);
        for (std::size_t b = 1; b < nbatch; ++b)
            for (auto& kv : partial[b]) {
                auto it = acc.find(kv.first);
                if (it == acc.end())
                    acc.emplace(kv.first, std::move(kv.second));
                else
                    it->second += kv.second;
            }
    } else {
        accumulate_product(acc, small, 0, small.size(), large);
    }

    r.terms_.reserve(acc.size());
    for (auto& kv : acc)
        if (!kv.second.is_zero()) r.terms_.push_back({Mono(kv.first), std::move(kv.second)});
    std::sort(r.terms_.begin(), r.terms_.end(), term_before);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ctx_);
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::mono_multiplied(Mono m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ctx_);
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = constant(ctx_, Scalar(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ctx_ != b.ctx_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        int e = t.mono.exp(var);
        if (e == 0) continue;
        r.terms_.push_back({Mono(t.mono.key() - Mono::var(var).key()), t.coeff * Scalar(e)});
    }
    r.normalize();
    return r;
}

namespace {

// power tables keyed by exponent, one per substituted variable
struct PowerTable {
    std::vector<Scalar> pows{Scalar(1)};
    const Scalar& get(const Scalar& base, int e) {
        while (static_cast<int>(pows.size()) <= e) pows.push_back(pows.back() * base);
        return pows[e];
    }
};

}  // namespace

Polynomial Polynomial::eval_main(const std::array<Scalar, 4>& pt) const {
    std::array<PowerTable, 4> tables;
    Polynomial r(ctx_);
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        for (int v = 0; v < 4; ++v) {
            int e = t.mono.exp(v);
            if (e) c *= tables[v].get(pt[v], e);
        }
        std::array<int, kNumVars> exps{};
        exps[kNu] = t.mono.exp(kNu);
        exps[kOmega] = t.mono.exp(kOmega);
        r.terms_.push_back({Mono::from_exps(exps), std::move(c)});
    }
    r.normalize();
    return r;
}

Scalar Polynomial::eval_full(const std::array<Scalar, kNumVars>& pt) const {
    std::array<PowerTable, kNumVars> tables;
    Scalar acc(0);
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        for (int v = 0; v < kNumVars; ++v) {
            int e = t.mono.exp(v);
            if (e) c *= tables[v].get(pt[v], e);
        }
        acc += c;
    }
    return acc;
}

Polynomial Polynomial::specialize_params(const Scalar& nu, const Scalar& omega) const {
    PowerTable tn, to;
    Polynomial r(ctx_);
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        int en = t.mono.exp(kNu), eo = t.mono.exp(kOmega);
        if (en) c *= tn.get(nu, en);
        if (eo) c *= to.get(omega, eo);
        auto exps = t.mono.exps();
        exps[kNu] = 0;
        exps[kOmega] = 0;
        r.terms_.push_back({Mono::from_exps(exps), std::move(c)});
    }
    r.normalize();
    return r;
}

namespace {

Polynomial substitute_rec(Ctx target, const std::vector<Polynomial::Term>& terms,
                          const std::array<Polynomial, kNumVars>& images,
                          const std::array<int, kNumVars>& order, int level) {
    if (terms.empty()) return Polynomial::zero(target);
    if (level == kNumVars) {
        Scalar c(0);
        for (const auto& t : terms) c += t.coeff;
        return Polynomial::constant(target, c);
    }
    int slot = order[level];
    int emax = 0;
    for (const auto& t : terms) emax = std::max(emax, t.mono.exp(slot));
    std::vector<std::vector<Polynomial::Term>> buckets(emax + 1);
    for (const auto& t : terms) buckets[t.mono.exp(slot)].push_back(t);

    Polynomial result = substitute_rec(target, buckets[emax], images, order, level + 1);
    for (int e = emax - 1; e >= 0; --e) {
        result = result * images[slot];
        result += substitute_rec(target, buckets[e], images, order, level + 1);
    }
    return result;
}

}  // namespace

Polynomial Polynomial::substitute(Ctx target_ctx,
                                  const std::array<Polynomial, kNumVars>& images) const {
    for (const auto& im : images)
        if (!im.is_zero() && im.ctx() != target_ctx) throw ContextMismatch();
    // evaluate costly images as few times as possible: outermost first
    std::array<int, kNumVars> order{0, 1, 2, 3, 4, 5};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return images[a].term_count() > images[b].term_count();
    });
    return substitute_rec(target_ctx, terms_, images, order, 0);
}

std::map<int, Polynomial> Polynomial::main_homogeneous_parts() const {
    std::map<int, Polynomial> parts;
    for (const auto& t : terms_) {
        auto [it, fresh] = parts.try_emplace(t.mono.main_degree(), ctx_);
        it->second.terms_.push_back(t);
    }
    for (auto& [d, p] : parts) p.normalize();
    return parts;
}

std::vector<ParamPart> Polynomial::param_parts() const {
    std::map<std::pair<int, int>, Polynomial> parts;
    for (const auto& t : terms_) {
        auto key = std::make_pair(t.mono.exp(kNu), t.mono.exp(kOmega));
        auto [it, fresh] = parts.try_emplace(key, ctx_);
        auto exps = t.mono.exps();
        exps[kNu] = 0;
        exps[kOmega] = 0;
        it->second.terms_.push_back({Mono::from_exps(exps), t.coeff});
    }
    std::vector<ParamPart> out;
    for (auto& [k, p] : parts) {
        p.normalize();
        out.push_back({k.first, k.second, std::move(p)});
    }
    return out;
}

bool Polynomial::has_var(int var) const {
    for (const auto& t : terms_)
        if (t.mono.exp(var) > 0) return true;
    return false;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        const auto& t = terms_[i];
        out += "(" + t.coeff.str() + ")";
        for (int v = 0; v < kNumVars; ++v) {
            int e = t.mono.exp(v);
            if (e == 0) continue;
            out += "*";
            out += var_name(ctx_, v);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearForm

bool LinearForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Scalar LinearForm::dot(const LinearForm& o) const {
    Scalar s(0);
    for (int i = 0; i < 4; ++i) s += c_[i] * o.c_[i];
    return s;
}

Scalar LinearForm::dot_vec(const std::array<Scalar, 4>& v) const {
    Scalar s(0);
    for (int i = 0; i < 4; ++i) s += c_[i] * v[i];
    return s;
}

Polynomial LinearForm::to_poly() const {
    Polynomial p(Ctx::cart);
    for (int i = 0; i < 4; ++i)
        if (!c_[i].is_zero()) p.raw_push(Mono::var(i), c_[i]);
    p.normalize();
    return p;
}

bool LinearForm::proportional_to(const LinearForm& o, Scalar* lambda) const {
    int pivot = -1;
    for (int i = 0; i < 4; ++i)
        if (!c_[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) return o.is_zero();
    if (o.c_[pivot].is_zero()) return false;
    Scalar l = o.c_[pivot] / c_[pivot];
    for (int i = 0; i < 4; ++i)
        if (!(c_[i] * l == o.c_[i])) return false;
    if (lambda) *lambda = l;
    return true;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
    for (int i = 0; i < 4; ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

std::string LinearForm::str() const { return to_poly().str(); }

// ---------------------------------------------------------------------------
// division

std::optional<Polynomial> try_divide_by_linear_form(const Polynomial& p, const LinearForm& lf) {
    if (lf.is_zero()) throw std::invalid_argument("division by zero linear form");
    if (p.is_zero()) return Polynomial(p.ctx());
    int v = -1;
    for (int i = 0; i < 4; ++i)
        if (!lf[i].is_zero()) {
            v = i;
            break;
        }
    Scalar cv_inv = lf[v].inverse();
    Polynomial rest(p.ctx());  // lf minus its v-term
    for (int i = 0; i < 4; ++i)
        if (i != v && !lf[i].is_zero()) rest.raw_push(Mono::var(i), lf[i]);
    rest.normalize();

    // p = sum_d P_d v^d;  q = sum_d Q_d v^d with
    //   Q_{d-1} = (P_d - rest * Q_d) / c_v  going down from the top degree
    int dmax = p.degree_in(v);
    std::vector<Polynomial> parts(dmax + 1, Polynomial(p.ctx()));
    for (const auto& t : p.terms()) {
        auto exps = t.mono.exps();
        int d = exps[v];
        exps[v] = 0;
        parts[d].raw_push(Mono::from_exps(exps), t.coeff);
    }
    for (auto& q : parts) q.normalize();

    std::vector<Polynomial> quot(std::max(dmax, 1), Polynomial(p.ctx()));
    Polynomial carry(p.ctx());
    for (int d = dmax; d >= 1; --d) {
        Polynomial qd = (parts[d] - carry).scaled(cv_inv);
        carry = rest * qd;
        quot[d - 1] = std::move(qd);
    }
    if (!(parts[0] - carry).is_zero()) return std::nullopt;

    Polynomial q(p.ctx());
    for (int d = 0; d < static_cast<int>(quot.size()); ++d)
        q += quot[d].mono_multiplied(Mono::var(v, d), Scalar(1));
    return q;
}

Polynomial divide_by_linear_form(const Polynomial& p, const LinearForm& lf) {
    auto q = try_divide_by_linear_form(p, lf);
    if (!q) throw NotDivisible("nonzero remainder dividing by " + lf.str());
    return *q;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return Polynomial(p.ctx());
    if (p.ctx() != q.ctx()) throw ContextMismatch();

    if (q.term_count() == 1) {
        const auto& dt = q.leading();
        Scalar inv = dt.coeff.inverse();
        Polynomial out(p.ctx());
        for (const auto& t : p.terms()) {
            if (!t.mono.divisible_by(dt.mono))
                throw NotDivisible("monomial not divisible");
            out.raw_push(t.mono / dt.mono, t.coeff * inv);
        }
        out.normalize();
        return out;
    }

    Polynomial r = p;
    Polynomial quot(p.ctx());
    Scalar lead_inv = q.leading().coeff.inverse();
    while (!r.is_zero()) {
        const auto& lt = r.leading();
        if (!lt.mono.divisible_by(q.leading().mono))
            throw NotDivisible("leading term not divisible");
        Mono m = lt.mono / q.leading().mono;
        Scalar c = lt.coeff * lead_inv;
        quot += Polynomial::monomial(p.ctx(), m, c);
        r -= q.mono_multiplied(m, c);
    }
    return quot;
}

Polynomial directional_derivative(const Polynomial& p, const LinearForm& c) {
    Polynomial r(p.ctx());
    for (int i = 0; i < 4; ++i)
        if (!c[i].is_zero()) r += p.derivative(i).scaled(c[i]);
    return r;
}

Polynomial compose_linear(const Polynomial& p, const std::array<LinearForm, 4>& images) {
    std::array<Polynomial, kNumVars> ims;
    for (int i = 0; i < 4; ++i) ims[i] = images[i].to_poly();
    ims[kNu] = Polynomial::variable(Ctx::cart, kNu);
    ims[kOmega] = Polynomial::variable(Ctx::cart, kOmega);
    return p.substitute(Ctx::cart, ims);
}

Polynomial compose_reflection(const Polynomial& p, const LinearForm& lf,
                              const std::array<Scalar, 4>& dir) {
    // p(x + dir * L(x)) = sum_m  (dir.grad)^m p / m!  *  L^m
    LinearForm dirf(dir);
    Polynomial lpoly = lf.to_poly();
    Polynomial result = p;
    Polynomial dm = p;
    Polynomial lpow = Polynomial::constant(p.ctx(), Scalar(1));
    for (int m = 1; !dm.is_zero(); ++m) {
        dm = directional_derivative(dm, dirf).scaled(Scalar(1, m));
        if (dm.is_zero()) break;
        lpow = lpow * lpoly;
        result += dm * lpow;
    }
    return result;
}

}  // namespace coxh4
