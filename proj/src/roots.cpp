#include "coxh4/roots.hpp"

#include <algorithm>

namespace coxh4 {

Matrix4 Matrix4::identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = Scalar(1);
    return r;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Scalar s(0);
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = std::move(s);
        }
    return r;
}

Vector4 Matrix4::apply(const Vector4& v) const {
    Vector4 r;
    for (int i = 0; i < 4; ++i) {
        Scalar s(0);
        for (int k = 0; k < 4; ++k) s += m[i][k] * v[k];
        r[i] = std::move(s);
    }
    return r;
}

Matrix4 Matrix4::transposed() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

Scalar Matrix4::det() const {
    // cofactor expansion along the first row
    auto minor3 = [&](int skip_col) {
        std::array<int, 3> cols;
        int c = 0;
        for (int j = 0; j < 4; ++j)
            if (j != skip_col) cols[c++] = j;
        const auto& a = m;
        return a[1][cols[0]] * (a[2][cols[1]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[1]]) -
               a[1][cols[1]] * (a[2][cols[0]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[0]]) +
               a[1][cols[2]] * (a[2][cols[0]] * a[3][cols[1]] - a[2][cols[1]] * a[3][cols[0]]);
    };
    Scalar d(0);
    for (int j = 0; j < 4; ++j) {
        Scalar term = m[0][j] * minor3(j);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

bool Matrix4::is_orthogonal() const {
    Matrix4 p = transposed() * *this;
    return p == identity();
}

bool operator==(const Matrix4& a, const Matrix4& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(a.m[i][j] == b.m[i][j])) return false;
    return true;
}

// ---------------------------------------------------------------------------

RootSystemH4 RootSystemH4::build() {
    RootSystemH4 rs;
    const Scalar one(1), zero(0);
    const Scalar pp = Scalar::phi_plus(), pm = Scalar::phi_minus();

    // x_k
    for (int k = 0; k < 4; ++k) {
        std::array<Scalar, 4> c{zero, zero, zero, zero};
        c[k] = one;
        rs.roots_.emplace_back(c);
    }
    // x1 +- x2 +- x3 +- x4
    for (int m2 = 0; m2 < 2; ++m2)
        for (int m3 = 0; m3 < 2; ++m3)
            for (int m4 = 0; m4 < 2; ++m4) {
                std::array<Scalar, 4> c{one, m2 ? -one : one, m3 ? -one : one, m4 ? -one : one};
                rs.roots_.emplace_back(c);
            }
    // x_i +- phi+ x_j +- phi- x_k over the even permutations {i,j,k,l}
    static const int even_perms[12][4] = {
        {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    for (const auto& p : even_perms)
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                std::array<Scalar, 4> c{zero, zero, zero, zero};
                c[p[0]] = one;
                c[p[1]] = m1 ? -pp : pp;
                c[p[2]] = m2 ? -pm : pm;
                rs.roots_.emplace_back(c);
            }

    for (const auto& r : rs.roots_) rs.norm_sq_.push_back(r.norm_sq());
    return rs;
}

Vector4 RootSystemH4::reflect(int i, const Vector4& v) const {
    const LinearForm& a = roots_[i];
    Scalar t = a.dot_vec(v) * Scalar(2) / norm_sq_[i];
    Vector4 r;
    for (int k = 0; k < 4; ++k) r[k] = v[k] - t * a[k];
    return r;
}

Matrix4 RootSystemH4::reflection_matrix(int i) const {
    const LinearForm& a = roots_[i];
    Scalar f = Scalar(2) / norm_sq_[i];
    Matrix4 r = Matrix4::identity();
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) r.m[p][q] -= f * a[p] * a[q];
    return r;
}

Polynomial RootSystemH4::reflect_poly(int i, const Polynomial& p) const {
    const LinearForm& a = roots_[i];
    Scalar f = -(Scalar(2) / norm_sq_[i]);
    std::array<Scalar, 4> dir{f * a[0], f * a[1], f * a[2], f * a[3]};
    return compose_reflection(p, a, dir);
}

bool RootSystemH4::is_invariant(const Polynomial& p) const {
    for (int i = 0; i < count(); ++i)
        if (!(reflect_poly(i, p) == p)) return false;
    return true;
}

bool RootSystemH4::image_root(const Vector4& image, int* idx, int* sign) const {
    LinearForm f(image);
    for (int j = 0; j < count(); ++j) {
        Scalar lambda;
        if (roots_[j].proportional_to(f, &lambda)) {
            // lambda with roots_[j] * lambda == f
            if (idx) *idx = j;
            if (sign) *sign = lambda.sign();
            return true;
        }
    }
    return false;
}

Polynomial RootSystemH4::delta_product() const {
    Polynomial p = Polynomial::constant(Ctx::cart, Scalar(1));
    for (const auto& r : roots_) p = p * r.to_poly();
    return p;
}

Polynomial RootSystemH4::delta1() const {
    Polynomial p = Polynomial::constant(Ctx::cart, Scalar(1));
    for (int i = 0; i < 4; ++i) p = p * roots_[i].to_poly();
    return p;
}

Polynomial RootSystemH4::delta2() const {
    Polynomial p = Polynomial::constant(Ctx::cart, Scalar(1));
    for (int i = 4; i < 12; ++i) p = p * roots_[i].to_poly();
    return p;
}

Polynomial RootSystemH4::delta3() const {
    Polynomial p = Polynomial::constant(Ctx::cart, Scalar(1));
    for (int i = 12; i < 60; ++i) p = p * roots_[i].to_poly();
    return p;
}

Vector4 RootSystemH4::chamber_point() const {
    // deterministic scan; a generic point off every root hyperplane
    for (long t = 0; t < 1000; ++t) {
        Vector4 c{Scalar(1 + t), Scalar(17 + 3 * t), Scalar(131 + 7 * t), Scalar(1009 + 13 * t)};
        bool good = true;
        for (const auto& r : roots_)
            if (r.dot_vec(c).is_zero()) {
                good = false;
                break;
            }
        if (good) return c;
    }
    throw std::runtime_error("no chamber point found");
}

std::vector<int> RootSystemH4::chamber_signs() const {
    Vector4 c = chamber_point();
    std::vector<int> s;
    for (const auto& r : roots_) s.push_back(r.dot_vec(c).sign());
    return s;
}

std::vector<int> RootSystemH4::simple_root_indices() const {
    std::vector<int> signs = chamber_signs();
    auto pos = [&](int i) {
        Vector4 v;
        for (int k = 0; k < 4; ++k) v[k] = roots_[i][k] * Scalar(signs[i]);
        return v;
    };
    int n = count();
    std::vector<int> simple;
    for (int i = 0; i < n; ++i) {
        Vector4 a = pos(i);
        bool extreme = true;
        // a is non-extreme iff a = s*b + t*c with s,t > 0 for positive roots b,c
        for (int j = 0; j < n && extreme; ++j) {
            if (j == i) continue;
            Vector4 b = pos(j);
            for (int k = j + 1; k < n && extreme; ++k) {
                if (k == i) continue;
                Vector4 c = pos(k);
                // solve a = s b + t c on two independent coordinates, verify the rest
                int r1 = -1, r2 = -1;
                Scalar det;
                for (int p = 0; p < 4 && r1 < 0; ++p)
                    for (int q = p + 1; q < 4; ++q) {
                        det = b[p] * c[q] - b[q] * c[p];
                        if (!det.is_zero()) {
                            r1 = p;
                            r2 = q;
                            break;
                        }
                    }
                if (r1 < 0) continue;  // b, c proportional
                Scalar s = (a[r1] * c[r2] - a[r2] * c[r1]) / det;
                Scalar t = (b[r1] * a[r2] - b[r2] * a[r1]) / det;
                if (s.sign() <= 0 || t.sign() <= 0) continue;
                bool ok = true;
                for (int p = 0; p < 4; ++p)
                    if (!(s * b[p] + t * c[p] == a[p])) {
                        ok = false;
                        break;
                    }
                if (ok) extreme = false;
            }
        }
        if (extreme) simple.push_back(i);
    }
    return simple;
}

int RootSystemH4::product_order(int a, int b, int bound) const {
    Matrix4 p = reflection_matrix(a) * reflection_matrix(b);
    Matrix4 cur = p;
    Matrix4 id = Matrix4::identity();
    for (int k = 1; k <= bound; ++k) {
        if (cur == id) return k;
        cur = cur * p;
    }
    throw std::runtime_error("reflection product order exceeds bound");
}

std::array<Vector4, 4> RootSystemH4::fundamental_weights() {
    const Scalar pp = Scalar::phi_plus();
    Scalar pp2 = pp * pp, pp3 = pp2 * pp, pp4 = pp3 * pp;
    Scalar zero(0), one(1), two(2);
    return {
        Vector4{zero, zero, zero, two * pp},
        Vector4{one, pp2, zero, pp4},
        Vector4{zero, pp, one, pp4 - one},
        Vector4{zero, two * pp, zero, two * pp3},
    };
}

}  // namespace coxh4
