#include "coxh4/flagbasis.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace coxh4 {

FlagBasis::FlagBasis(FlagVector v, int level) : v_(v), n_(level) {
    for (int p4 = 0; p4 * v[3] <= n_; ++p4)
        for (int p3 = 0; p4 * v[3] + p3 * v[2] <= n_; ++p3)
            for (int p2 = 0; p4 * v[3] + p3 * v[2] + p2 * v[1] <= n_; ++p2)
                for (int p1 = 0; p4 * v[3] + p3 * v[2] + p2 * v[1] + p1 * v[0] <= n_; ++p1)
                    monos_.push_back({p1, p2, p3, p4});
    auto key = [&](const TauExp& p) {
        return std::make_tuple(weighted_degree(p, v_), weighted_degree(p, kSeparationFlag),
                               p[0], p[1], p[2], p[3]);
    };
    std::sort(monos_.begin(), monos_.end(),
              [&](const TauExp& a, const TauExp& b) { return key(a) < key(b); });
}

long FlagBasis::index_of(const TauExp& p) const {
    auto it = std::find(monos_.begin(), monos_.end(), p);
    return it == monos_.end() ? -1 : static_cast<long>(it - monos_.begin());
}

Mono FlagBasis::to_mono(std::size_t i) const {
    const TauExp& p = monos_[i];
    return Mono::from_exps({p[0], p[1], p[2], p[3], 0, 0});
}

long degeneracy(int n) {
    long count = 0;
    for (int n4 = 0; 15 * n4 <= n; ++n4)
        for (int n3 = 0; 15 * n4 + 10 * n3 <= n; ++n3)
            for (int n2 = 0; 15 * n4 + 10 * n3 + 6 * n2 <= n; ++n2)
                ++count;  // n1 is forced
    return count;
}

}  // namespace coxh4
