#ifndef COXH4_CONTEXT_HPP
#define COXH4_CONTEXT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxh4 {

struct ContextMismatch : std::runtime_error {
    ContextMismatch() : std::runtime_error("polynomial variable contexts differ") {}
};

// Two fixed variable contexts, each with four main variables plus the model
// parameters nu and omega as ring indeterminates.
enum class Ctx : std::uint8_t {
    cart,  // x1 x2 x3 x4 nu omega
    tau,   // tau1 tau2 tau3 tau4 nu omega
};

inline constexpr int kNumVars = 6;
inline constexpr int kNu = 4;
inline constexpr int kOmega = 5;

inline const char* var_name(Ctx c, int i) {
    static const char* cart[] = {"x1", "x2", "x3", "x4", "nu", "om"};
    static const char* tau[] = {"tau1", "tau2", "tau3", "tau4", "nu", "om"};
    return c == Ctx::cart ? cart[i] : tau[i];
}

inline const char* ctx_name(Ctx c) { return c == Ctx::cart ? "x" : "tau"; }

// Exponent vector packed into 64 bits, 10 bits per variable, variable 0 in
// the most significant field so that integer comparison is lexicographic.
class Mono {
public:
    static constexpr int kBits = 10;
    static constexpr std::uint64_t kMaxExp = (1u << kBits) - 1;

    Mono() : key_(0) {}
    explicit Mono(std::uint64_t key) : key_(key) {}

    static Mono from_exps(const std::array<int, kNumVars>& e) {
        std::uint64_t k = 0;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] < 0 || static_cast<std::uint64_t>(e[i]) > kMaxExp)
                throw std::overflow_error("monomial exponent out of range");
            k |= static_cast<std::uint64_t>(e[i]) << shift(i);
        }
        return Mono(k);
    }

    static Mono var(int i, int e = 1) {
        std::array<int, kNumVars> v{};
        v[i] = e;
        return from_exps(v);
    }

    std::uint64_t key() const { return key_; }
    int exp(int i) const { return static_cast<int>((key_ >> shift(i)) & kMaxExp); }

    std::array<int, kNumVars> exps() const {
        std::array<int, kNumVars> e;
        for (int i = 0; i < kNumVars; ++i) e[i] = exp(i);
        return e;
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < kNumVars; ++i) d += exp(i);
        return d;
    }

    // degree in the four main variables only
    int main_degree() const {
        int d = 0;
        for (int i = 0; i < 4; ++i) d += exp(i);
        return d;
    }

    bool is_constant() const { return key_ == 0; }

    Mono operator*(const Mono& o) const { return Mono(key_ + o.key_); }

    bool divisible_by(const Mono& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (exp(i) < o.exp(i)) return false;
        return true;
    }
    Mono operator/(const Mono& o) const { return Mono(key_ - o.key_); }

    friend bool operator==(const Mono& a, const Mono& b) { return a.key_ == b.key_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.key_ != b.key_; }

    // graded lexicographic, larger first when used with std::sort + cmp
    static bool grlex_less(const Mono& a, const Mono& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.key_ < b.key_;
    }

private:
    static constexpr int shift(int i) { return (kNumVars - 1 - i) * kBits; }
    std::uint64_t key_;
};

}  // namespace coxh4

#endif
