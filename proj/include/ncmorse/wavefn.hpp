#pragma once

// Normalized Morse wavefunctions of the fixed-sigma family
//
//   phi_n(x) = N_n y^sigma e^{-y/2} L^{2 sigma - 1}_n(y),   y = nu e^{-alpha x},
//   N_n = sqrt(alpha n! / Gamma(2 sigma + n)),
//
// sampled on uniform grids, with trapezoidal inner products and a check of the
// differential form of the ladder operators against their matrix action.

#include "ncmorse/morse_model.hpp"
#include "ncmorse/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ncmorse {

struct GridFunction {
    std::vector<double> xs;
    std::vector<complex> values;

    void validate() const {
        if (xs.size() != values.size()) {
            throw std::invalid_argument("GridFunction: xs and values differ in length");
        }
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (!(xs[i] > xs[i - 1])) {
                throw std::invalid_argument("GridFunction: xs must be strictly increasing");
            }
        }
    }
};

/// L^a_n(y) by the three-term recurrence.
inline double laguerre_eval(std::size_t n, double a, double y) {
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 1.0 + a - y;
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double next = ((2.0 * kd + 1.0 + a - y) * cur - (kd + a) * prev) / (kd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// d/dy L^a_n(y) = -L^{a+1}_{n-1}(y).
inline double laguerre_derivative(std::size_t n, double a, double y) {
    return n == 0 ? 0.0 : -laguerre_eval(n - 1, a + 1.0, y);
}

namespace detail {

inline void require_sigma(double sigma) {
    if (!(sigma > 0.0)) {
        throw std::domain_error("wavefunction: sigma must be > 0");
    }
}

inline double log_norm(std::size_t n, double sigma, double alpha) {
    const double nd = static_cast<double>(n);
    return 0.5 * (std::log(alpha) + std::lgamma(nd + 1.0) - std::lgamma(2.0 * sigma + nd));
}

// N y^sigma e^{-y/2}, evaluated in log space.
inline double envelope(std::size_t n, double sigma, double y, double alpha) {
    if (y <= 0.0) {
        return 0.0;
    }
    return std::exp(log_norm(n, sigma, alpha) + sigma * std::log(y) - 0.5 * y);
}

inline double y_of(double x, const MorseParams& params) { return params.nu() * std::exp(-params.alpha * x); }

} // namespace detail

inline double phi_eval(std::size_t n, double sigma, double x, const MorseParams& params) {
    detail::require_sigma(sigma);
    const double y = detail::y_of(x, params);
    return detail::envelope(n, sigma, y, params.alpha) * laguerre_eval(n, 2.0 * sigma - 1.0, y);
}

/// Analytic d phi_n / dx, using dy/dx = -alpha y.
inline double phi_derivative(std::size_t n, double sigma, double x, const MorseParams& params) {
    detail::require_sigma(sigma);
    const double y = detail::y_of(x, params);
    const double a = 2.0 * sigma - 1.0;
    const double bracket = (sigma - 0.5 * y) * laguerre_eval(n, a, y) + y * laguerre_derivative(n, a, y);
    return -params.alpha * detail::envelope(n, sigma, y, params.alpha) * bracket;
}

/// Uniform x grid whose image under y = nu e^{-alpha x} spans [y_min, y_max].
inline std::vector<double> default_grid(const MorseParams& params, std::size_t samples = 4000, double y_min = 1e-8,
                                        double y_max = 700.0) {
    if (samples < 2) {
        throw std::invalid_argument("default_grid: need at least 2 samples");
    }
    const double nu = params.nu();
    const double x_lo = -std::log(y_max / nu) / params.alpha;
    const double x_hi = -std::log(y_min / nu) / params.alpha;
    std::vector<double> xs(samples);
    const double h = (x_hi - x_lo) / static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        xs[i] = x_lo + h * static_cast<double>(i);
    }
    xs.back() = x_hi;
    return xs;
}

inline GridFunction sample_phi(std::size_t n, double sigma, const MorseParams& params, const std::vector<double>& xs) {
    GridFunction f;
    f.xs = xs;
    f.values.reserve(xs.size());
    for (double x : xs) {
        f.values.emplace_back(phi_eval(n, sigma, x, params), 0.0);
    }
    return f;
}

/// Trapezoidal integral of conj(f) g over the shared grid.
inline complex inner_product(const GridFunction& f, const GridFunction& g) {
    f.validate();
    g.validate();
    if (f.xs != g.xs) {
        throw std::invalid_argument("inner_product: grids differ");
    }
    complex acc = 0.0;
    for (std::size_t i = 1; i < f.xs.size(); ++i) {
        const double h = f.xs[i] - f.xs[i - 1];
        acc += 0.5 * h * (std::conj(f.values[i - 1]) * g.values[i - 1] + std::conj(f.values[i]) * g.values[i]);
    }
    return acc;
}

inline double grid_norm(const GridFunction& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

enum class LadderSign { Minus, Plus };

/// Applies K-+ = (q + n) - y/2 +- i p_y / (hbar alpha), p_y = -i hbar d/dx, to
/// phi_n and returns the relative grid L2 distance to C_n phi_{n-1} (minus) or
/// C_{n+1} phi_{n+1} (plus). For n = 0 with minus the absolute norm of K- phi_0
/// is returned, since the target state does not exist.
inline double ladder_differential_residual(std::size_t n, LadderSign sign, double sigma, double q,
                                           const MorseParams& params, const std::vector<double>& xs) {
    detail::require_sigma(sigma);
    params.validate();
    // i p_y / (hbar alpha) = (1/alpha) d/dx
    const double deriv_sign = sign == LadderSign::Minus ? 1.0 : -1.0;
    const double shift = q + static_cast<double>(n);

    const bool has_target = sign == LadderSign::Plus || n > 0;
    const std::size_t target_n = sign == LadderSign::Minus ? (n > 0 ? n - 1 : 0) : n + 1;
    const double coeff = sign == LadderSign::Minus ? ladder_coefficient(n, q) : ladder_coefficient(n + 1, q);

    GridFunction diff;
    GridFunction target;
    diff.xs = xs;
    target.xs = xs;
    diff.values.reserve(xs.size());
    target.values.reserve(xs.size());
    for (double x : xs) {
        const double y = detail::y_of(x, params);
        const double phi = phi_eval(n, sigma, x, params);
        const double dphi = phi_derivative(n, sigma, x, params);
        const double applied = (shift - 0.5 * y) * phi + deriv_sign * dphi / params.alpha;
        const double want = has_target ? coeff * phi_eval(target_n, sigma, x, params) : 0.0;
        diff.values.emplace_back(applied - want, 0.0);
        target.values.emplace_back(want, 0.0);
    }
    const double num = grid_norm(diff);
    if (!has_target) {
        return num;
    }
    return num / grid_norm(target);
}

inline double ladder_differential_residual(std::size_t n, LadderSign sign, double sigma, double q,
                                           const MorseParams& params) {
    return ladder_differential_residual(n, sign, sigma, q, params, default_grid(params));
}

} // namespace ncmorse
