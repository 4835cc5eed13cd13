#include "coxh4/special.hpp"

#include <algorithm>

namespace coxh4 {

std::vector<std::array<int, 4>> distinct_permutations(const Partition& lambda) {
    std::array<int, 4> v = lambda;
    std::sort(v.begin(), v.end());
    std::vector<std::array<int, 4>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Polynomial monomial_symmetric(const Partition& lambda) {
    for (int i = 0; i + 1 < 4; ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    if (lambda[3] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    Polynomial p(Ctx::cart);
    for (const auto& mu : distinct_permutations(lambda)) {
        std::array<int, kNumVars> e{};
        for (int i = 0; i < 4; ++i) e[i] = 2 * mu[i];
        p.raw_push(Mono::from_exps(e), Scalar(1));
    }
    p.normalize();
    return p;
}

Polynomial alternating_delta4() {
    Polynomial d = Polynomial::constant(Ctx::cart, Scalar(1));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            d = d * (Polynomial::variable(Ctx::cart, i, 2) - Polynomial::variable(Ctx::cart, j, 2));
    return d;
}

Polynomial laguerre(int n, const Polynomial& alpha, const Polynomial& z) {
    if (n < 0) throw std::invalid_argument("laguerre degree must be nonnegative");
    Ctx ctx = z.ctx();
    Polynomial one = Polynomial::constant(ctx, Scalar(1));
    if (n == 0) return one;
    Polynomial prev = one;                 // L_0
    Polynomial cur = one + alpha - z;      // L_1
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha-z) L_k - (k+alpha) L_{k-1}
        Polynomial next =
            ((Polynomial::constant(ctx, Scalar(2 * k + 1)) + alpha - z) * cur -
             (Polynomial::constant(ctx, Scalar(k)) + alpha) * prev)
                .scaled(Scalar(1, k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial radius_squared() {
    Polynomial p(Ctx::cart);
    for (int i = 0; i < 4; ++i) p.raw_push(Mono::var(i, 2), Scalar(1));
    p.normalize();
    return p;
}

}  // namespace coxh4
