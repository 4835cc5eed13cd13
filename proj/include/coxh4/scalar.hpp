#ifndef COXH4_SCALAR_HPP
#define COXH4_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxh4 {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero in Q(sqrt5)") {}
};

// Element of the real quadratic field Q(sqrt5), stored as rat + irr*sqrt5.
// mpq_class keeps both rationals canonical (lowest terms, positive
// denominator), so equality is plain component comparison.
class Scalar {
public:
    Scalar() : rat_(0), irr_(0) {}
    Scalar(long v) : rat_(v), irr_(0) {}
    Scalar(long num, long den) : rat_(num, den), irr_(0) { rat_.canonicalize(); }
    explicit Scalar(const mpq_class& r) : rat_(r), irr_(0) {}
    Scalar(mpq_class r, mpq_class i) : rat_(std::move(r)), irr_(std::move(i)) {}

    static Scalar sqrt5() { return Scalar(mpq_class(0), mpq_class(1)); }
    // golden ratio (1+sqrt5)/2 and its algebraic conjugate (1-sqrt5)/2
    static Scalar phi_plus() { return Scalar(mpq_class(1, 2), mpq_class(1, 2)); }
    static Scalar phi_minus() { return Scalar(mpq_class(1, 2), mpq_class(-1, 2)); }

    const mpq_class& rat() const { return rat_; }
    const mpq_class& irr() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }
    bool is_one() const { return irr_ == 0 && rat_ == 1; }

    Scalar operator-() const { return Scalar(-rat_, -irr_); }

    Scalar& operator+=(const Scalar& o) {
        rat_ += o.rat_;
        irr_ += o.irr_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        rat_ -= o.rat_;
        irr_ -= o.irr_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // (a + b s)(c + d s) = (ac + 5bd) + (ad + bc) s
        mpq_class a = rat_ * o.rat_ + 5 * (irr_ * o.irr_);
        mpq_class b = rat_ * o.irr_ + irr_ * o.rat_;
        rat_ = std::move(a);
        irr_ = std::move(b);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    // sqrt5 -> -sqrt5
    Scalar conjugate() const { return Scalar(rat_, -irr_); }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        // 1/(a + b s) = (a - b s)/(a^2 - 5 b^2); the norm vanishes only at 0
        // because sqrt5 is irrational.
        mpq_class n = rat_ * rat_ - 5 * (irr_ * irr_);
        return Scalar(rat_ / n, -irr_ / n);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator/=(const Scalar& b) { return *this = *this * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Order induced by the real embedding sqrt5 -> +2.2360...
    int sign() const {
        int sr = sgn(rat_);
        int si = sgn(irr_);
        if (si == 0) return sr;
        if (sr == 0) return si;
        if (sr == si) return sr;
        // opposite signs: compare |rat| with |irr|*sqrt5, i.e. rat^2 vs 5 irr^2
        mpq_class d = rat_ * rat_ - 5 * (irr_ * irr_);
        int sd = sgn(d);
        return sd == 0 ? 0 : (sd > 0 ? sr : si);
    }

    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }

    // total order usable as a map key (NOT the real-embedding order)
    int cmp_key(const Scalar& o) const {
        int c = cmp(rat_, o.rat_);
        if (c != 0) return c;
        return cmp(irr_, o.irr_);
    }

    // canonical text form "a/b" or "a/b+c/d*sqrt5" (sign folded into c)
    std::string str() const;

    // parses the output of str()
    static Scalar parse(const std::string& s);

private:
    mpq_class rat_;
    mpq_class irr_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace coxh4

#endif
