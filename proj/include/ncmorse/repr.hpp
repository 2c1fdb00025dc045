#pragma once

// Truncated matrix representation of the Morse ladder algebra on the basis
// phi_0 .. phi_{N-1}:
//
//   K- phi_n = C_n phi_{n-1},   K+ phi_n = C_{n+1} phi_{n+1},   K0 phi_n = (n + q) phi_n
//
// with C_n = sqrt(n (n + 2q - 1)). The K0 diagonal n + q is the one that makes
// [K-, K+] = 2 K0 and [K0, K-+] = -+K-+ exact away from the cutoff.

#include "ncmorse/identity.hpp"
#include "ncmorse/morse_model.hpp"
#include "ncmorse/operator_matrix.hpp"

#include <cstddef>
#include <vector>

namespace ncmorse {

struct Representation {
    std::size_t dim = 8;
    double q = 1.5;

    void validate() const {
        if (dim < 2) {
            throw InvalidParameter("Representation: dim must be at least 2");
        }
        if (!(q > 0.5) || !std::isfinite(q)) {
            throw InvalidParameter("Representation: q must exceed 1/2");
        }
    }
};

struct Generators {
    OperatorMatrix kminus;
    OperatorMatrix kplus;
    OperatorMatrix kzero;
};

inline Generators build_generators(const Representation& rep) {
    rep.validate();
    const auto n = static_cast<Eigen::Index>(rep.dim);
    Matrix km = Matrix::Zero(n, n);
    Matrix kp = Matrix::Zero(n, n);
    Matrix k0 = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        k0(i, i) = static_cast<double>(i) + rep.q;
        if (i + 1 < n) {
            const double c = ladder_coefficient(static_cast<std::size_t>(i + 1), rep.q);
            km(i, i + 1) = c;
            kp(i + 1, i) = c;
        }
    }
    return {OperatorMatrix(std::move(km), "K-"), OperatorMatrix(std::move(kp), "K+"),
            OperatorMatrix(std::move(k0), "K0")};
}

/// C = K0^2 - (K+K- + K-K+)/2. Acts as q(q-1) on the interior block.
inline OperatorMatrix casimir_matrix(const Generators& g) {
    const OperatorMatrix sum = g.kplus * g.kminus + g.kminus * g.kplus;
    return (g.kzero * g.kzero - 0.5 * sum).relabeled("C");
}

inline OperatorMatrix casimir_matrix(const Representation& rep) { return casimir_matrix(build_generators(rep)); }

/// The defining relations of the single-axis algebra plus the Casimir value.
inline std::vector<IdentityReport> algebra_audit(const Representation& rep, double tol = kDefaultTolerance) {
    const Generators g = build_generators(rep);
    const std::size_t dim = rep.dim;
    std::vector<IdentityReport> out;
    out.push_back(identity_check("1d: [K-,K+] = 2 K0", commutator(g.kminus, g.kplus), 2.0 * g.kzero, 1,
                                 AssertionClass::Proven, "1d ladder algebra", tol));
    out.push_back(identity_check("1d: [K0,K-] = -K-", commutator(g.kzero, g.kminus), -g.kminus, 1,
                                 AssertionClass::Proven, "1d ladder algebra", tol));
    out.push_back(identity_check("1d: [K0,K+] = +K+", commutator(g.kzero, g.kplus), g.kplus, 1,
                                 AssertionClass::Proven, "1d ladder algebra", tol));
    out.push_back(identity_check("1d: C = q(q-1) I", casimir_matrix(g),
                                 rep.q * (rep.q - 1.0) * OperatorMatrix::identity(dim), 1, AssertionClass::Proven,
                                 "1d casimir", tol));
    return out;
}

} // namespace ncmorse
