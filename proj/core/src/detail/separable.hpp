#ifndef QWVD_DETAIL_SEPARABLE_HPP
#define QWVD_DETAIL_SEPARABLE_HPP

#include <cstddef>
#include <vector>

#include "qwvd/quaternion.hpp"

namespace qwvd::detail {

// out(o1,o2) = Sum_{i1,i2} L(o1,i1) * x(i1,i2) * R(i2,o2) * w
// with L stored row-major (out1 x in1) and R row-major (in2 x out2).
// The sum is re-associated through an intermediate M(i1,o2); quaternion
// multiplication order (left kernel, value, right kernel) is preserved.
inline std::vector<Quaternion> separable_apply(const std::vector<Quaternion>& x, int in1, int in2,
                                               int out1, int out2,
                                               const std::vector<Quaternion>& left,
                                               const std::vector<Quaternion>& right, double w) {
    std::vector<Quaternion> mid(static_cast<std::size_t>(in1) * out2);
    for (int i1 = 0; i1 < in1; ++i1) {
        const Quaternion* row = &x[static_cast<std::size_t>(i1) * in2];
        for (int i2 = 0; i2 < in2; ++i2) {
            const Quaternion& v = row[i2];
            const Quaternion* rrow = &right[static_cast<std::size_t>(i2) * out2];
            Quaternion* mrow = &mid[static_cast<std::size_t>(i1) * out2];
            for (int o2 = 0; o2 < out2; ++o2) mrow[o2] += v * rrow[o2];
        }
    }
    std::vector<Quaternion> out(static_cast<std::size_t>(out1) * out2);
    for (int o1 = 0; o1 < out1; ++o1) {
        const Quaternion* lrow = &left[static_cast<std::size_t>(o1) * in1];
        Quaternion* orow = &out[static_cast<std::size_t>(o1) * out2];
        for (int i1 = 0; i1 < in1; ++i1) {
            const Quaternion& l = lrow[i1];
            const Quaternion* mrow = &mid[static_cast<std::size_t>(i1) * out2];
            for (int o2 = 0; o2 < out2; ++o2) orow[o2] += l * mrow[o2];
        }
    }
    for (auto& q : out) q *= w;
    return out;
}

}  // namespace qwvd::detail

#endif
