#pragma once

// Physical Morse parameters and the scalar quantities derived from them:
// well parameter nu, bound-state spectrum, potential, ladder coefficients.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncmorse {

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MorseParams {
    double v0 = 1.0;    // well depth
    double alpha = 1.0; // inverse range
    double mu = 1.0;    // reduced mass
    double hbar = 1.0;

    void validate() const {
        auto check = [](double value, const char* name) {
            if (!(value > 0.0) || !std::isfinite(value)) {
                throw InvalidParameter(std::string("MorseParams: ") + name + " must be finite and > 0");
            }
        };
        check(v0, "v0");
        check(alpha, "alpha");
        check(mu, "mu");
        check(hbar, "hbar");
    }

    /// hbar^2 alpha^2 / (2 mu), the prefactor of the ladder-form Hamiltonian.
    double energy_scale() const { return hbar * hbar * alpha * alpha / (2.0 * mu); }

    /// nu = sqrt(8 mu V0 / (alpha^2 hbar^2)).
    double nu() const { return std::sqrt(8.0 * mu * v0 / (alpha * alpha * hbar * hbar)); }

    /// Parameters whose well parameter equals `nu` with the other constants fixed.
    static MorseParams from_nu(double nu, double alpha = 1.0, double mu = 1.0, double hbar = 1.0) {
        MorseParams p{nu * nu * alpha * alpha * hbar * hbar / (8.0 * mu), alpha, mu, hbar};
        p.validate();
        return p;
    }
};

struct SpectralData {
    double nu = 0.0;
    std::size_t bound_count = 0;
    std::vector<double> s_values;
    std::vector<double> energies;
    double energy_scale = 0.0;
};

/// Bound states are the n >= 0 with s_n = (nu - 1 - 2n)/2 > 0, E_n = -scale * s_n^2.
inline SpectralData derive_spectral_data(const MorseParams& params) {
    params.validate();
    SpectralData out;
    out.nu = params.nu();
    out.energy_scale = params.energy_scale();
    for (std::size_t n = 0; 2.0 * static_cast<double>(n) < out.nu - 1.0; ++n) {
        const double s = (out.nu - 1.0 - 2.0 * static_cast<double>(n)) / 2.0;
        out.s_values.push_back(s);
        out.energies.push_back(-out.energy_scale * s * s);
    }
    out.bound_count = out.s_values.size();
    return out;
}

/// C_n = sqrt(n (n + 2q - 1)); exactly zero at n = 0.
inline double ladder_coefficient(std::size_t n, double q) {
    if (!(q > 0.5)) {
        throw InvalidParameter("ladder_coefficient: q must exceed 1/2");
    }
    if (n == 0) {
        return 0.0;
    }
    const double nd = static_cast<double>(n);
    const double radicand = nd * (nd + 2.0 * q - 1.0);
    if (radicand < 0.0) {
        throw std::domain_error("ladder_coefficient: negative radicand");
    }
    return std::sqrt(radicand);
}

/// V(x) = V0 (e^{-2 alpha x} - 2 e^{-alpha x}). Written as V0 u (u - 2) with
/// u = e^{-alpha x} so that overflow at very negative x gives +inf, never NaN.
inline double potential_value(double x, const MorseParams& params) {
    const double u = std::exp(-params.alpha * x);
    if (std::isinf(u)) {
        return std::numeric_limits<double>::infinity();
    }
    return params.v0 * u * (u - 2.0);
}

} // namespace ncmorse
