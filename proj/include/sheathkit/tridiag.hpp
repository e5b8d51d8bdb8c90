#pragma once

#include <cmath>
#include <vector>

#include "sheathkit/errors.hpp"

namespace sheathkit {

// Thomas algorithm: solves the tridiagonal system with sub-diagonal a,
// diagonal b, super-diagonal c (a[0] and c[n-1] unused). Overwrites rhs
// with the solution.
inline void solve_tridiag(const std::vector<double>& a,
                          const std::vector<double>& b,
                          const std::vector<double>& c,
                          std::vector<double>& rhs) {
    const size_t n = b.size();
    std::vector<double> cp(n);
    double beta = b[0];
    if (beta == 0.0) throw singular_system("tridiagonal solve: zero pivot");
    rhs[0] /= beta;
    for (size_t i = 1; i < n; ++i) {
        cp[i] = c[i - 1] / beta;
        beta = b[i] - a[i] * cp[i];
        if (beta == 0.0) throw singular_system("tridiagonal solve: zero pivot");
        rhs[i] = (rhs[i] - a[i] * rhs[i - 1]) / beta;
    }
    for (size_t i = n - 1; i-- > 0;) rhs[i] -= cp[i + 1] * rhs[i + 1];
}

} // namespace sheathkit
