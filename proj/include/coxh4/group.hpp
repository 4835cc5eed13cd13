#ifndef COXH4_GROUP_HPP
#define COXH4_GROUP_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coxh4/roots.hpp"

namespace coxh4 {

struct GenerationOverflow : std::runtime_error {
    GenerationOverflow()
        : std::runtime_error("group closure exceeded the safety bound (wrong roots?)") {}
};

// Group element as a signed permutation of the 60 root directions:
// entry i holds +-(j+1) when the element maps root i to (+-scale) root j.
// The action on the signed root set is faithful, so this is a lossless
// encoding; 4x4 matrices are materialized on demand.
using SignedPerm = std::array<std::int16_t, 60>;

SignedPerm signed_perm_compose(const SignedPerm& g, const SignedPerm& h);  // g after h
SignedPerm signed_perm_identity();
SignedPerm signed_perm_inverse(const SignedPerm& g);

class GroupH4 {
public:
    // breadth-first closure of the 60 reflections; deterministic canonical
    // element order (lexicographic in the signed-permutation encoding)
    static GroupH4 generate(const RootSystemH4& rs, std::size_t safety_bound = 20000);

    std::size_t order() const { return elements_.size(); }
    const std::vector<SignedPerm>& elements() const { return elements_; }

    const RootSystemH4& roots() const { return *rs_; }

    // matrix of element k (columns are the images of the coordinate axes)
    Matrix4 matrix(std::size_t k) const { return matrix_of(elements_[k]); }
    Matrix4 matrix_of(const SignedPerm& p) const;

    bool contains(const SignedPerm& p) const;

private:
    const RootSystemH4* rs_ = nullptr;
    std::vector<SignedPerm> elements_;  // sorted
};

// distinct images {g v : g in the group generated by the reflections},
// computed by breadth-first expansion with the 60 reflections;
// returned in canonical (lexicographic) order
std::vector<Vector4> orbit(const RootSystemH4& rs, const Vector4& v);

}  // namespace coxh4

#endif
