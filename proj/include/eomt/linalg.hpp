#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "eomt/errors.hpp"

// Small dense kernels sized for the three-mode system and two-mode covariance
// matrices. Extended precision throughout: downstream tolerances sit at 1e-12
// relative and double internals lose that margin to cancellation.

namespace eomt::detail {

using cld = std::complex<long double>;
using mat3 = std::array<std::array<cld, 3>, 3>;
using vec3 = std::array<cld, 3>;

// Gaussian elimination with partial pivoting.
inline vec3 solve3(mat3 a, vec3 b)
{
    for (int k = 0; k < 3; ++k) {
        int piv = k;
        long double best = std::abs(a[k][k]);
        for (int r = k + 1; r < 3; ++r) {
            const long double cand = std::abs(a[r][k]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (!(best > 0.0L))
            throw numerical_error("solve3: singular system at pivot column " + std::to_string(k));
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (int r = k + 1; r < 3; ++r) {
            const cld f = a[r][k] / a[k][k];
            a[r][k] = cld(0);
            for (int c = k + 1; c < 3; ++c)
                a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }
    vec3 x{};
    for (int k = 2; k >= 0; --k) {
        cld s = b[k];
        for (int c = k + 1; c < 3; ++c)
            s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }
    return x;
}

// determinant via partially pivoted elimination
inline long double det4(std::array<std::array<long double, 4>, 4> a)
{
    long double det = 1.0L;
    for (int k = 0; k < 4; ++k) {
        int piv = k;
        for (int r = k + 1; r < 4; ++r)
            if (std::fabs(a[r][k]) > std::fabs(a[piv][k]))
                piv = r;
        if (a[piv][k] == 0.0L)
            return 0.0L;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int r = k + 1; r < 4; ++r) {
            const long double f = a[r][k] / a[k][k];
            a[r][k] = 0.0L;
            for (int c = k + 1; c < 4; ++c)
                a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

} // namespace eomt::detail
