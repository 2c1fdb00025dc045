#pragma once

// Residual bookkeeping for operator identities on truncated representations.
//
// A relation of the infinite-dimensional algebra only survives truncation on
// states far enough from the cutoff. Each check therefore compares lhs and rhs
// on an interior block: the basis states whose quantum numbers sit at least
// `margin` below the top of every axis.

#include "ncmorse/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncmorse {

inline constexpr double kDefaultTolerance = 1e-10;

enum class AssertionClass { Proven, PaperClaimed };
enum class Verdict { Pass, Flagged };

inline std::string_view to_string(AssertionClass c) {
    return c == AssertionClass::Proven ? "PROVEN" : "PAPER-CLAIMED";
}

inline std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FLAGGED"; }

struct IdentityReport {
    std::string name;
    std::string paper_ref;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    double residual_norm = 0.0;
    std::size_t interior_margin = 0;
    AssertionClass assertion_class = AssertionClass::Proven;
    Verdict verdict = Verdict::Pass;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Leading indices 0 .. dim-margin-1 of a single axis.
inline std::vector<std::size_t> interior_indices(std::size_t dim, std::size_t margin) {
    if (margin >= dim) {
        throw std::invalid_argument("interior_indices: margin leaves an empty block");
    }
    std::vector<std::size_t> idx(dim - margin);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

inline Verdict judge(double residual, double lhs_norm, double rhs_norm, double tol) {
    return residual <= tol * (1.0 + std::max(lhs_norm, rhs_norm)) ? Verdict::Pass : Verdict::Flagged;
}

/// Compares lhs and rhs on the principal submatrix selected by `keep`.
inline IdentityReport identity_check_on(std::string name, std::string paper_ref, const OperatorMatrix& lhs,
                                        const OperatorMatrix& rhs, const std::vector<std::size_t>& keep,
                                        std::size_t margin, AssertionClass cls,
                                        double tol = kDefaultTolerance) {
    if (lhs.dim() != rhs.dim()) {
        throw DimensionMismatch("identity_check: dimension mismatch for " + name);
    }
    double lhs_sq = 0.0;
    double rhs_sq = 0.0;
    double res_sq = 0.0;
    for (std::size_t r : keep) {
        for (std::size_t c : keep) {
            const complex a = lhs(r, c);
            const complex b = rhs(r, c);
            lhs_sq += std::norm(a);
            rhs_sq += std::norm(b);
            res_sq += std::norm(a - b);
        }
    }
    IdentityReport rep;
    rep.name = std::move(name);
    rep.paper_ref = std::move(paper_ref);
    rep.lhs_norm = std::sqrt(lhs_sq);
    rep.rhs_norm = std::sqrt(rhs_sq);
    rep.residual_norm = std::sqrt(res_sq);
    rep.interior_margin = margin;
    rep.assertion_class = cls;
    rep.verdict = judge(rep.residual_norm, rep.lhs_norm, rep.rhs_norm, tol);
    return rep;
}

/// Single-axis form: the leading (dim - margin) x (dim - margin) block.
inline IdentityReport identity_check(std::string name, const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                                     std::size_t margin, AssertionClass cls, std::string paper_ref = {},
                                     double tol = kDefaultTolerance) {
    if (lhs.dim() != rhs.dim()) {
        throw DimensionMismatch("identity_check: dimension mismatch for " + name);
    }
    return identity_check_on(std::move(name), std::move(paper_ref), lhs, rhs, interior_indices(lhs.dim(), margin),
                             margin, cls, tol);
}

} // namespace ncmorse
