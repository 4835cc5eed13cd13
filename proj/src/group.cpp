#include "coxh4/group.hpp"

#include <algorithm>
#include <set>

namespace coxh4 {

SignedPerm signed_perm_identity() {
    SignedPerm p;
    for (int i = 0; i < 60; ++i) p[i] = static_cast<std::int16_t>(i + 1);
    return p;
}

SignedPerm signed_perm_compose(const SignedPerm& g, const SignedPerm& h) {
    SignedPerm r;
    for (int i = 0; i < 60; ++i) {
        std::int16_t hv = h[i];
        int sign = hv > 0 ? 1 : -1;
        int j = (hv > 0 ? hv : -hv) - 1;
        std::int16_t gv = g[j];
        r[i] = static_cast<std::int16_t>(sign > 0 ? gv : -gv);
    }
    return r;
}

SignedPerm signed_perm_inverse(const SignedPerm& g) {
    SignedPerm r;
    for (int i = 0; i < 60; ++i) {
        std::int16_t gv = g[i];
        int sign = gv > 0 ? 1 : -1;
        int j = (gv > 0 ? gv : -gv) - 1;
        r[j] = static_cast<std::int16_t>(sign * (i + 1));
    }
    return r;
}

namespace {

SignedPerm reflection_perm(const RootSystemH4& rs, int root_idx) {
    SignedPerm p;
    for (int i = 0; i < rs.count(); ++i) {
        Vector4 v;
        for (int k = 0; k < 4; ++k) v[k] = rs.root(i)[k];
        Vector4 img = rs.reflect(root_idx, v);
        int j, sign;
        if (!rs.image_root(img, &j, &sign))
            throw GenerationOverflow();  // reflection does not preserve the root set
        p[i] = static_cast<std::int16_t>(sign * (j + 1));
    }
    return p;
}

}  // namespace

GroupH4 GroupH4::generate(const RootSystemH4& rs, std::size_t safety_bound) {
    std::vector<SignedPerm> gens;
    gens.reserve(rs.count());
    for (int i = 0; i < rs.count(); ++i) gens.push_back(reflection_perm(rs, i));

    std::set<SignedPerm> seen;
    seen.insert(signed_perm_identity());
    std::vector<SignedPerm> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                SignedPerm prod = signed_perm_compose(g, e);
                if (seen.insert(prod).second) {
                    next.push_back(prod);
                    if (seen.size() > safety_bound) throw GenerationOverflow();
                }
            }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }

    GroupH4 grp;
    grp.rs_ = &rs;
    grp.elements_.assign(seen.begin(), seen.end());
    return grp;
}

Matrix4 GroupH4::matrix_of(const SignedPerm& p) const {
    // the first four roots are the coordinate forms x_k, so column k of the
    // matrix is the exact image vector of e_k
    Matrix4 m;
    for (int k = 0; k < 4; ++k) {
        int sign = p[k] > 0 ? 1 : -1;
        int j = (p[k] > 0 ? p[k] : -p[k]) - 1;
        // |image| = |e_k| = 1, so the scale is 1/|root_j|
        Scalar scale = Scalar(sign);
        const Scalar& nsq = rs_->norm_sq(j);
        if (nsq == Scalar(4))
            scale = scale * Scalar(1, 2);
        else if (!(nsq == Scalar(1)))
            throw std::logic_error("unexpected root norm");
        for (int r = 0; r < 4; ++r) m.m[r][k] = scale * rs_->root(j)[r];
    }
    return m;
}

bool GroupH4::contains(const SignedPerm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<Vector4> orbit(const RootSystemH4& rs, const Vector4& v) {
    std::set<Vector4, Vector4Less> seen;
    seen.insert(v);
    std::vector<Vector4> frontier{v};
    while (!frontier.empty()) {
        std::vector<Vector4> next;
        for (const auto& w : frontier)
            for (int i = 0; i < rs.count(); ++i) {
                Vector4 img = rs.reflect(i, w);
                if (seen.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return std::vector<Vector4>(seen.begin(), seen.end());
}

}  // namespace coxh4
