#include <vector>

#include "coxh4/linalg.hpp"
#include "coxh4/tau.hpp"

namespace coxh4 {

namespace {

// Fixed evaluation-point stream, documented for reproducibility: the i-th
// point is (2 + (3i+1) mod 23, 3 + (5i+2) mod 29, 5 + (7i+3) mod 31,
// 7 + (11i+4) mod 37). Generic for every system met here; rank is checked
// and more points are drawn on demand.
Vector4 eval_point(long i) {
    return {Scalar(2 + (3 * i + 1) % 23), Scalar(3 + (5 * i + 2) % 29),
            Scalar(5 + (7 * i + 3) % 31), Scalar(7 + (11 * i + 4) % 37)};
}

// tau exponent vectors with weighted x^2-degree (1,6,10,15).p == w
std::vector<TauExp> weight_candidates(int w) {
    std::vector<TauExp> out;
    for (int p4 = 0; 15 * p4 <= w; ++p4)
        for (int p3 = 0; 15 * p4 + 10 * p3 <= w; ++p3)
            for (int p2 = 0; 15 * p4 + 10 * p3 + 6 * p2 <= w; ++p2) {
                int p1 = w - 15 * p4 - 10 * p3 - 6 * p2;
                out.push_back({p1, p2, p3, p4});
            }
    return out;
}

// one homogeneous piece of x-degree 2w
Polynomial invariantize_part(const Polynomial& part, int w, const TauMap& tau) {
    std::vector<TauExp> cand = weight_candidates(w);
    if (cand.empty()) throw NotInvariant("no invariant of this degree");
    std::size_t n = cand.size();

    for (std::size_t rows = n + 4; rows <= 4 * n + 16; rows *= 2) {
        ScalarMatrix m(rows, n);
        std::vector<Polynomial> rhs;
        rhs.reserve(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            Vector4 pt = eval_point(static_cast<long>(r));
            std::array<Scalar, 4> tv = tau.eval(pt);
            // powers of the tau values
            std::array<std::vector<Scalar>, 4> pw;
            for (int i = 0; i < 4; ++i) pw[i].assign(1, Scalar(1));
            for (std::size_t c = 0; c < n; ++c) {
                Scalar v(1);
                for (int i = 0; i < 4; ++i) {
                    auto& table = pw[i];
                    while (static_cast<int>(table.size()) <= cand[c][i])
                        table.push_back(table.back() * tv[i]);
                    v *= table[cand[c][i]];
                }
                m.at(r, c) = std::move(v);
            }
            rhs.push_back(convert_param_poly(part.eval_main(pt), Ctx::tau));
        }
        auto sol = solve_full_column_rank(std::move(m), std::move(rhs));
        if (!sol) continue;  // retry with more rows before giving up
        Polynomial q(Ctx::tau);
        for (std::size_t c = 0; c < n; ++c) {
            const auto& p = cand[c];
            Mono mono = Mono::from_exps({p[0], p[1], p[2], p[3], 0, 0});
            for (const auto& t : (*sol)[c].terms()) q.raw_push(mono * t.mono, t.coeff);
        }
        q.normalize();
        return q;
    }
    throw NotInvariant("no exact tau expression matches the evaluations");
}

}  // namespace

Polynomial invariantize(const Polynomial& p, const TauMap& tau, bool certify) {
    if (p.ctx() != Ctx::cart) throw ContextMismatch();
    Polynomial result(Ctx::tau);
    for (const auto& [deg, part] : p.main_homogeneous_parts()) {
        if (deg == 0) {
            result += convert_param_poly(part, Ctx::tau);
            continue;
        }
        if (deg % 2 != 0) throw NotInvariant("odd homogeneous degree");
        result += invariantize_part(part, deg / 2, tau);
    }
    if (certify && !(tau.pull_back(result) == p))
        throw NotInvariant("substitution check failed");
    return result;
}

}  // namespace coxh4
