#pragma once

#include <doctest.h>

#include "jcsim/core.hpp"
#include "jcsim/sphere.hpp"

namespace jcsim::test {

inline void check_bloch_close(const BlochVector& a, const BlochVector& b, double tol) {
    CHECK(std::abs(a.x - b.x) < tol);
    CHECK(std::abs(a.y - b.y) < tol);
    CHECK(std::abs(a.z - b.z) < tol);
}

inline double bloch_distance(const BlochVector& a, const BlochVector& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}

inline double matrix_distance(const Mat2& a, const Mat2& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Deterministic well-spread pure states.
inline std::vector<PureQubit> sample_states(int count) {
    std::vector<PureQubit> states;
    states.reserve(static_cast<size_t>(count));
    for (const SpherePoint& p : SphereGrid::fibonacci(count).nodes) {
        states.push_back(p.to_qubit());
    }
    return states;
}

}  // namespace jcsim::test
