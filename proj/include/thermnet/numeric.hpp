#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace thermnet {

/// Deterministic RNG used by every stochastic stage. Generates uniforms
/// and normals from a self-contained 64-bit stream so results do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller.
    double normal();
    /// Integer in [0, n).
    std::uint64_t index(std::uint64_t n);

private:
    std::uint64_t next_u64();

    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes).
/// Preserves monotonicity of the data; evaluation outside the knot range
/// clamps to the end values.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;

    const std::vector<double>& knots() const { return x_; }

private:
    std::vector<double> x_, y_, d_;
};

/// Local quadratic least-squares smoothing over a centered window
/// (shrinks near the ends). window must be odd and >= 3.
std::vector<double> local_quadratic_smooth(const std::vector<double>& y, int window);

/// Solve A x = b for a dense row-major n x n system in place via
/// partially pivoted Gaussian elimination. Throws NumericError on a
/// (numerically) singular matrix.
void solve_dense(std::vector<double>& a, std::vector<double>& b, int n);

struct NelderMeadResult {
    std::vector<double> x;
    double fval = 0.0;
    int iterations = 0;
};

/// Derivative-free downhill-simplex minimizer. Deterministic: the initial
/// simplex is x0 plus per-coordinate steps. Stops when the simplex
/// f-spread falls below ftol (absolute + relative) or after max_iter.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0,
                             const std::vector<double>& step,
                             int max_iter = 2000,
                             double ftol = 1e-12);

/// Bisection on [lo, hi]; requires a sign change. tol_x is the bracket
/// width at which to stop.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol_x);

/// FNV-1a 64-bit hash, used for config provenance stamps.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

} // namespace thermnet
