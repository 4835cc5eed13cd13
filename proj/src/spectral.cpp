#include "coxh4/spectral.hpp"

#include <algorithm>
#include <map>

#include "coxh4/special.hpp"
#include "coxh4/tau.hpp"

namespace coxh4 {

namespace {

// split a tau polynomial into (basis index -> parameter coefficient)
std::vector<std::pair<long, Polynomial>> expand_over_basis(const Polynomial& p,
                                                           const FlagBasis& basis) {
    std::map<long, Polynomial> acc;
    for (const auto& t : p.terms()) {
        TauExp e{t.mono.exp(0), t.mono.exp(1), t.mono.exp(2), t.mono.exp(3)};
        long idx = basis.index_of(e);
        if (idx < 0)
            throw NotInvariantSubspace("image leaves the flag space at tau exponents (" +
                                       std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                                       std::to_string(e[2]) + "," + std::to_string(e[3]) + ")");
        std::array<int, kNumVars> pe{};
        pe[kNu] = t.mono.exp(kNu);
        pe[kOmega] = t.mono.exp(kOmega);
        auto [it, fresh] = acc.try_emplace(idx, Ctx::tau);
        it->second.raw_push(Mono::from_exps(pe), t.coeff);
    }
    std::vector<std::pair<long, Polynomial>> out;
    for (auto& [idx, poly] : acc) {
        poly.normalize();
        if (!poly.is_zero()) out.emplace_back(idx, std::move(poly));
    }
    return out;
}

}  // namespace

std::vector<std::vector<Polynomial>> matrix_on_basis(const DiffOperator& op,
                                                     const FlagBasis& basis) {
    std::size_t n = basis.dimension();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(Ctx::tau)));
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial img = op.apply(Polynomial::monomial(Ctx::tau, basis.to_mono(j), Scalar(1)));
        for (auto& [i, coeff] : expand_over_basis(img, basis)) m[i][j] = std::move(coeff);
    }
    return m;
}

ScalarMatrix matrix_on_basis_at(const DiffOperator& op, const FlagBasis& basis, const Scalar& nu,
                                const Scalar& omega) {
    std::size_t n = basis.dimension();
    ScalarMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial img = op.apply(Polynomial::monomial(Ctx::tau, basis.to_mono(j), Scalar(1)))
                             .specialize_params(nu, omega);
        for (auto& [i, coeff] : expand_over_basis(img, basis)) {
            if (!coeff.is_constant()) throw std::logic_error("parameters survived specialization");
            m.at(i, j) = coeff.constant_term();
        }
    }
    return m;
}

bool check_triangular(const std::vector<std::vector<Polynomial>>& m, const FlagBasis& basis) {
    std::size_t n = basis.dimension();
    for (std::size_t j = 0; j < n; ++j) {
        int wj = weighted_degree(basis.monomial(j), basis.characteristic());
        for (std::size_t i = 0; i < n; ++i) {
            int wi = weighted_degree(basis.monomial(i), basis.characteristic());
            if (wi > wj && !m[i][j].is_zero()) return false;
        }
    }
    return true;
}

bool check_triangular(const ScalarMatrix& m, const FlagBasis& basis) {
    std::size_t n = basis.dimension();
    for (std::size_t j = 0; j < n; ++j) {
        int wj = weighted_degree(basis.monomial(j), basis.characteristic());
        for (std::size_t i = 0; i < n; ++i) {
            int wi = weighted_degree(basis.monomial(i), basis.characteristic());
            if (wi > wj && !m.at(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool strictly_upper_triangular(const ScalarMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = j + 1; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

std::vector<Polynomial> diagonal_spectrum(const DiffOperator& op, const FlagBasis& basis) {
    auto m = matrix_on_basis(op, basis);
    std::vector<Polynomial> d;
    d.reserve(basis.dimension());
    for (std::size_t i = 0; i < basis.dimension(); ++i) d.push_back(m[i][i]);
    return d;
}

std::vector<EigenSpace> eigen_decompose(const ScalarMatrix& m) {
    if (!strictly_upper_triangular(m))
        throw std::invalid_argument("eigen decomposition requires a triangular matrix");
    std::size_t n = m.rows();
    // distinct diagonal values with algebraic multiplicities
    std::vector<std::pair<Scalar, std::size_t>> values;
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (auto& [v, c] : values)
            if (v == m.at(i, i)) {
                ++c;
                found = true;
                break;
            }
        if (!found) values.emplace_back(m.at(i, i), 1);
    }
    std::vector<EigenSpace> out;
    std::size_t total = 0;
    for (const auto& [v, mult] : values) {
        EigenSpace es;
        es.eigenvalue = v;
        es.vectors = eigen_kernel(m, v);
        if (es.vectors.size() != mult)
            throw DefectiveMatrix("geometric multiplicity below algebraic at one eigenvalue");
        total += es.vectors.size();
        out.push_back(std::move(es));
    }
    if (total != n) throw DefectiveMatrix("eigenvectors do not span");
    return out;
}

Polynomial eigenvector_polynomial(const FlagBasis& basis, const std::vector<Scalar>& coords) {
    Polynomial p(Ctx::tau);
    long lead = -1;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) lead = static_cast<long>(i);
    if (lead < 0) return p;
    Scalar inv = coords[lead].inverse();
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            p += Polynomial::monomial(Ctx::tau, basis.to_mono(i), coords[i] * inv);
    return p;
}

bool in_span(const Polynomial& p, const std::vector<Polynomial>& space) {
    // collect all monomials
    std::map<std::uint64_t, std::size_t> rows;
    auto note = [&](const Polynomial& q) {
        for (const auto& t : q.terms()) rows.try_emplace(t.mono.key(), rows.size());
    };
    for (const auto& q : space) note(q);
    note(p);
    ScalarMatrix m(rows.size(), space.size());
    std::vector<Polynomial> rhs(rows.size(), Polynomial(p.ctx()));
    for (std::size_t c = 0; c < space.size(); ++c)
        for (const auto& t : space[c].terms()) m.at(rows[t.mono.key()], c) = t.coeff;
    for (const auto& t : p.terms())
        rhs[rows[t.mono.key()]] = Polynomial::constant(p.ctx(), t.coeff);
    return solve_full_column_rank(std::move(m), std::move(rhs)).has_value();
}

LaguerreEigen laguerre_family(int n1) {
    Polynomial alpha(Ctx::tau);  // 1 + 60 nu
    alpha.raw_push(Mono(), Scalar(1));
    alpha.raw_push(Mono::var(kNu), Scalar(60));
    alpha.normalize();
    Polynomial z(Ctx::tau);  // omega tau1
    z.raw_push(Mono::var(kOmega) * Mono::var(0), Scalar(1));
    z.normalize();
    LaguerreEigen out;
    out.phi = laguerre(n1, alpha, z);
    Polynomial eps(Ctx::tau);
    if (n1) eps.raw_push(Mono::var(kOmega), Scalar(2 * n1));
    eps.normalize();
    out.epsilon = eps;
    return out;
}

std::vector<JointBlockReport> joint_diagonalize(const DiffOperator& h, const DiffOperator& f,
                                                const FlagBasis& basis, const Scalar& nu,
                                                const Scalar& omega) {
    ScalarMatrix mh = matrix_on_basis_at(h, basis, nu, omega);
    ScalarMatrix mf = matrix_on_basis_at(f, basis, nu, omega);
    if (!strictly_upper_triangular(mh) || !strictly_upper_triangular(mf))
        throw NotInvariantSubspace("operators are not triangular on this basis");

    std::vector<JointBlockReport> reports;
    for (const auto& hspace : eigen_decompose(mh)) {
        // f preserves the h-eigenspace since [h, f] = 0; express f on it
        const auto& K = hspace.vectors;
        std::size_t dim = basis.dimension(), k = K.size();
        ScalarMatrix kmat(dim, k);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t r = 0; r < dim; ++r) kmat.at(r, c) = K[c][r];
        ScalarMatrix fb(k, k);
        for (std::size_t c = 0; c < k; ++c) {
            // f * K_c expressed in the K basis
            std::vector<Polynomial> rhs(dim, Polynomial(Ctx::tau));
            for (std::size_t r = 0; r < dim; ++r) {
                Scalar s(0);
                for (std::size_t t = 0; t < dim; ++t)
                    if (!mf.at(r, t).is_zero() && !K[c][t].is_zero()) s += mf.at(r, t) * K[c][t];
                rhs[r] = Polynomial::constant(Ctx::tau, s);
            }
            auto sol = solve_full_column_rank(kmat, std::move(rhs));
            if (!sol) throw NotInvariantSubspace("f does not preserve an h-eigenspace");
            for (std::size_t r = 0; r < k; ++r) {
                if (!(*sol)[r].is_constant()) throw std::logic_error("non-constant coordinates");
                fb.at(r, c) = (*sol)[r].constant_term();
            }
        }
        // eigenvalues of the block: collect distinct values among candidates
        // read from the f-diagonal on the same-weight monomials
        JointBlockReport rep;
        rep.h_diag = hspace.eigenvalue;
        rep.dimension = k;
        std::vector<Scalar> candidates;
        for (std::size_t i = 0; i < dim; ++i)
            if (mh.at(i, i) == hspace.eigenvalue) {
                bool seen = false;
                for (const auto& c : candidates)
                    if (c == mf.at(i, i)) seen = true;
                if (!seen) candidates.push_back(mf.at(i, i));
            }
        std::size_t found = 0;
        for (const auto& g : candidates) {
            auto kern = eigen_kernel(fb, g);
            if (!kern.empty()) {
                rep.gamma_multiplicities.emplace_back(g, kern.size());
                found += kern.size();
            }
        }
        if (found != k)
            throw DefectiveMatrix("joint block not diagonalizable by the diagonal candidates");
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace coxh4
