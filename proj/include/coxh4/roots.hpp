#ifndef COXH4_ROOTS_HPP
#define COXH4_ROOTS_HPP

#include <array>
#include <vector>

#include "coxh4/polynomial.hpp"

namespace coxh4 {

using Vector4 = std::array<Scalar, 4>;

// 4x4 matrix over Q(sqrt5)
struct Matrix4 {
    std::array<std::array<Scalar, 4>, 4> m{};

    static Matrix4 identity();
    Matrix4 operator*(const Matrix4& o) const;
    Vector4 apply(const Vector4& v) const;
    Matrix4 transposed() const;
    Scalar det() const;
    bool is_orthogonal() const;
    friend bool operator==(const Matrix4& a, const Matrix4& b);
};

// lexicographic key comparison for Vector4 map/set use
struct Vector4Less {
    bool operator()(const Vector4& a, const Vector4& b) const {
        for (int i = 0; i < 4; ++i) {
            int c = a[i].cmp_key(b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

// The 60 positive-root linear factors of the ground-state prefactor:
//   4 coordinate forms x_k                         (factors of Delta_1)
//   8 forms x1 +- x2 +- x3 +- x4                   (factors of Delta_2)
//   48 forms x_i +- phi+ x_j +- phi- x_k           (factors of Delta_3)
class RootSystemH4 {
public:
    static RootSystemH4 build();

    const std::vector<LinearForm>& roots() const { return roots_; }
    int count() const { return static_cast<int>(roots_.size()); }
    const LinearForm& root(int i) const { return roots_[i]; }
    const Scalar& norm_sq(int i) const { return norm_sq_[i]; }

    // s_alpha(v) = v - 2 (alpha.v)/(alpha.alpha) alpha
    Vector4 reflect(int root_idx, const Vector4& v) const;
    Matrix4 reflection_matrix(int root_idx) const;

    // p composed with the reflection in root i
    Polynomial reflect_poly(int root_idx, const Polynomial& p) const;

    // true iff p is fixed by all 60 generating reflections
    bool is_invariant(const Polynomial& p) const;

    // index j and sign s with  M alpha_i  proportional to  s * alpha_j,
    // scale positive; returns false if the image misses the root set
    bool image_root(const Vector4& image, int* idx, int* sign) const;

    // product of all 60 printed factors = Delta_1 Delta_2 Delta_3
    Polynomial delta_product() const;
    Polynomial delta1() const;
    Polynomial delta2() const;
    Polynomial delta3() const;

    // deterministic interior point with all (alpha.x) nonzero, and the
    // per-root signs making each form positive there
    Vector4 chamber_point() const;
    std::vector<int> chamber_signs() const;  // +1 / -1 per root

    // indices (with chamber signs applied) of the four simple roots,
    // i.e. extreme rays of the positive-root cone
    std::vector<int> simple_root_indices() const;

    // order of s_a s_b in the group (composition of two reflections)
    int product_order(int a, int b, int bound = 64) const;

    // fundamental weights as printed, orbit lengths 120/600/720/1200
    static std::array<Vector4, 4> fundamental_weights();

private:
    std::vector<LinearForm> roots_;
    std::vector<Scalar> norm_sq_;
};

}  // namespace coxh4

#endif
