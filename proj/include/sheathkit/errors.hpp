#pragma once

#include <stdexcept>
#include <string>

namespace sheathkit {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct non_positive_density : error {
    using error::error;
};
struct quadrature_failure : error {
    using error::error;
};
struct curvature_degenerate : error {
    using error::error;
};
struct no_convergence : error {
    int iterations = 0;
    double residual = 0.0;
    no_convergence(const std::string& what, int iters, double res)
        : error(what), iterations(iters), residual(res) {}
};
struct constraint_violation : error {
    using error::error;
};
struct singular_system : error {
    using error::error;
};
struct range_exceeded : error {
    using error::error;
};
struct history_gap : error {
    using error::error;
};
struct horizon_exceeded : error {
    using error::error;
};
struct separatrix_point : error {
    using error::error;
};
struct picard_diverged : error {
    int iterates = 0;
    picard_diverged(const std::string& what, int n) : error(what), iterates(n) {}
};
struct condition_violated : error {
    using error::error;
};
struct parse_error : error {
    int line = 0;
    parse_error(const std::string& what, int ln) : error(what), line(ln) {}
};
struct validation_error : error {
    std::string field;
    validation_error(const std::string& fld, const std::string& reason)
        : error(fld + ": " + reason), field(fld) {}
};
struct unresolved_support : error {
    using error::error;
};

} // namespace sheathkit
