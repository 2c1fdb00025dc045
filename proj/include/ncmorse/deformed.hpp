#pragma once

// Deformed ladder operators. A matrix g in GL(2, C) mixes the two slots row-wise:
//
//   Kg-i = g_i1 K-1 + g_i2 K-2,   Kg+i = g_i1 K+1 + g_i2 K+2,   Kg0i = K0i.
//
// Coefficients enter every bracket bilinearly (no conjugation), so the
// relations below hold for complex g as written.

#include "ncmorse/identity.hpp"
#include "ncmorse/operator_matrix.hpp"
#include "ncmorse/tensor2d.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncmorse {

class SingularDeformation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DeformationParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DeformationMatrix {
public:
    static constexpr double kMinDeterminant = 1e-12;

    DeformationMatrix(complex g11, complex g12, complex g21, complex g22) : g_{g11, g12, g21, g22} {
        if (!(std::abs(det()) > kMinDeterminant)) {
            throw SingularDeformation("DeformationMatrix: |det g| <= 1e-12");
        }
    }

    static DeformationMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// 1-based access, g(i, j) = g_ij.
    complex operator()(int i, int j) const {
        if (i < 1 || i > 2 || j < 1 || j > 2) {
            throw std::out_of_range("DeformationMatrix: index must be 1 or 2");
        }
        return g_[static_cast<std::size_t>((i - 1) * 2 + (j - 1))];
    }

    complex det() const { return g_[0] * g_[3] - g_[1] * g_[2]; }

    bool is_real() const {
        return std::all_of(g_.begin(), g_.end(), [](complex z) { return z.imag() == 0.0; });
    }

    /// Ordinary matrix product (this * rhs).
    DeformationMatrix operator*(const DeformationMatrix& rhs) const {
        const auto& a = *this;
        return {a(1, 1) * rhs(1, 1) + a(1, 2) * rhs(2, 1), a(1, 1) * rhs(1, 2) + a(1, 2) * rhs(2, 2),
                a(2, 1) * rhs(1, 1) + a(2, 2) * rhs(2, 1), a(2, 1) * rhs(1, 2) + a(2, 2) * rhs(2, 2)};
    }

    /// Copy with one entry replaced; validates invertibility again.
    DeformationMatrix with_entry(int i, int j, complex value) const {
        auto e = g_;
        e[static_cast<std::size_t>((i - 1) * 2 + (j - 1))] = value;
        return {e[0], e[1], e[2], e[3]};
    }

private:
    std::array<complex, 4> g_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// entry = float | float ("+"|"-") float "i"
inline complex parse_entry(std::string_view text) {
    const std::string s(trim(text));
    if (s.empty()) {
        throw DeformationParseError("empty entry in deformation matrix");
    }
    const char* begin = s.c_str();
    char* end = nullptr;
    const double re = std::strtod(begin, &end);
    if (end == begin) {
        throw DeformationParseError("malformed entry '" + s + "'");
    }
    if (*end == '\0') {
        return {re, 0.0};
    }
    if (*end != '+' && *end != '-') {
        throw DeformationParseError("malformed entry '" + s + "'");
    }
    const char* im_begin = end;
    const double im = std::strtod(im_begin, &end);
    if (end == im_begin + 1 || end == im_begin || *end != 'i' || *(end + 1) != '\0') {
        throw DeformationParseError("malformed imaginary part in '" + s + "'");
    }
    return {re, im};
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

} // namespace detail

/// Parses "g11,g12;g21,g22", e.g. "1,0.5+0.5i;0,1". All four entries are required.
inline DeformationMatrix parse_deformation(std::string_view text) {
    const auto rows = detail::split(text, ';');
    if (rows.size() != 2) {
        throw DeformationParseError("deformation matrix needs two rows separated by ';'");
    }
    std::array<complex, 4> e{};
    for (std::size_t r = 0; r < 2; ++r) {
        const auto cols = detail::split(rows[r], ',');
        if (cols.size() != 2) {
            throw DeformationParseError("each deformation row needs two entries separated by ','");
        }
        e[2 * r] = detail::parse_entry(cols[0]);
        e[2 * r + 1] = detail::parse_entry(cols[1]);
    }
    return {e[0], e[1], e[2], e[3]};
}

/// Row-wise mixing: out_i = g_i1 ops_1 + g_i2 ops_2.
inline std::array<OperatorMatrix, 2> mix_rows(const std::array<OperatorMatrix, 2>& ops, const DeformationMatrix& g) {
    return {g(1, 1) * ops[0] + g(1, 2) * ops[1], g(2, 1) * ops[0] + g(2, 2) * ops[1]};
}

class DeformedSet {
public:
    DeformedSet(Generator2DSet gens, const DeformationMatrix& g) : gens_(std::move(gens)), g_(g) {
        const auto minus = mix_rows({gens_.kminus(1), gens_.kminus(2)}, g_);
        const auto plus = mix_rows({gens_.kplus(1), gens_.kplus(2)}, g_);
        for (std::size_t i = 0; i < 2; ++i) {
            const std::string s = std::to_string(i + 1);
            kg_minus_[i] = minus[i].relabeled("Kg-" + s);
            kg_plus_[i] = plus[i].relabeled("Kg+" + s);
        }
    }

    const Generator2DSet& undeformed() const { return gens_; }
    const DeformationMatrix& g() const { return g_; }
    const Basis2D& basis() const { return gens_.basis(); }

    const OperatorMatrix& kg_minus(int i) const { return kg_minus_[index(i)]; }
    const OperatorMatrix& kg_plus(int i) const { return kg_plus_[index(i)]; }
    /// The deformed number operator is the ordinary one.
    const OperatorMatrix& kg_zero(int i) const { return gens_.kzero(i); }

private:
    static std::size_t index(int i) {
        if (i != 1 && i != 2) {
            throw std::invalid_argument("DeformedSet: index must be 1 or 2");
        }
        return static_cast<std::size_t>(i - 1);
    }

    Generator2DSet gens_;
    DeformationMatrix g_;
    std::array<OperatorMatrix, 2> kg_minus_;
    std::array<OperatorMatrix, 2> kg_plus_;
};

inline DeformedSet build_deformed(const Generator2DSet& gens, const DeformationMatrix& g) { return {gens, g}; }

/// C_i^g = K0i^2 - (Kg+i Kg-i + Kg-i Kg+i)/2.
inline OperatorMatrix deformed_casimir(const DeformedSet& ds, int i) {
    const OperatorMatrix& k0 = ds.kg_zero(i);
    const OperatorMatrix sum = ds.kg_plus(i) * ds.kg_minus(i) + ds.kg_minus(i) * ds.kg_plus(i);
    return (k0 * k0 - 0.5 * sum).relabeled("Cg" + std::to_string(i));
}

/// H^g = scale (Kg+1 Kg-1 - K01^2) + scale (Kg+2 Kg-2 - K02^2), from operator products.
inline OperatorMatrix deformed_hamiltonian(const DeformedSet& ds, double scale) {
    OperatorMatrix h = OperatorMatrix::zero(ds.basis().total());
    for (int i = 1; i <= 2; ++i) {
        h = h + scale * (ds.kg_plus(i) * ds.kg_minus(i) - ds.kg_zero(i) * ds.kg_zero(i));
    }
    return h.relabeled("Hg");
}

namespace detail {

inline int other(int i) { return i == 1 ? 2 : 1; }

} // namespace detail

/// Commutators of the deformed generators. The last family is audited twice:
/// with the printed coefficient g_ij (claimed) and with g_ji (derived).
inline std::vector<IdentityReport> deformed_commutator_audit(const DeformedSet& ds, double tol = kDefaultTolerance) {
    const Generator2DSet& k = ds.undeformed();
    const Basis2D& b = ds.basis();
    const auto& g = ds.g();
    std::vector<IdentityReport> out;
    const std::string ref = "deformed commutators";
    for (int i = 1; i <= 2; ++i) {
        const int j = detail::other(i);
        const std::string si = std::to_string(i);
        const std::string sj = std::to_string(j);

        const OperatorMatrix same = 2.0 * (g(i, i) * g(i, i) * k.kzero(i) + g(i, j) * g(i, j) * k.kzero(j));
        out.push_back(identity_check_2d("def: [Kg-" + si + ",Kg+" + si + "] = +2(g" + si + si + "^2 K0" + si + " + g" +
                                            si + sj + "^2 K0" + sj + ")",
                                        commutator(ds.kg_minus(i), ds.kg_plus(i)), same, b, 1,
                                        AssertionClass::Proven, ref, tol));
        out.push_back(identity_check_2d("def: [Kg+" + si + ",Kg-" + si + "] = -2(g" + si + si + "^2 K0" + si + " + g" +
                                            si + sj + "^2 K0" + sj + ")",
                                        commutator(ds.kg_plus(i), ds.kg_minus(i)), -same, b, 1,
                                        AssertionClass::Proven, ref, tol));

        const OperatorMatrix cross = 2.0 * (g(i, i) * g(j, i) * k.kzero(i) + g(i, j) * g(j, j) * k.kzero(j));
        out.push_back(identity_check_2d("def: [Kg-" + si + ",Kg+" + sj + "] = +2(g" + si + si + " g" + sj + si +
                                            " K0" + si + " + g" + si + sj + " g" + sj + sj + " K0" + sj + ")",
                                        commutator(ds.kg_minus(i), ds.kg_plus(j)), cross, b, 1,
                                        AssertionClass::Proven, ref, tol));
        out.push_back(identity_check_2d("def: [Kg+" + si + ",Kg-" + sj + "] = -2(g" + si + si + " g" + sj + si +
                                            " K0" + si + " + g" + si + sj + " g" + sj + sj + " K0" + sj + ")",
                                        commutator(ds.kg_plus(i), ds.kg_minus(j)), -cross, b, 1,
                                        AssertionClass::Proven, ref, tol));

        out.push_back(identity_check_2d("def: [K0" + si + ",Kg-" + si + "] = -g" + si + si + " K-" + si,
                                        commutator(k.kzero(i), ds.kg_minus(i)), -(g(i, i) * k.kminus(i)), b, 1,
                                        AssertionClass::Proven, ref, tol));
        out.push_back(identity_check_2d("def: [K0" + si + ",Kg+" + si + "] = +g" + si + si + " K+" + si,
                                        commutator(k.kzero(i), ds.kg_plus(i)), g(i, i) * k.kplus(i), b, 1,
                                        AssertionClass::Proven, ref, tol));

        out.push_back(identity_check_2d("def: [K0" + si + ",Kg-" + sj + "] = -g" + si + sj + " K-" + si + " (printed)",
                                        commutator(k.kzero(i), ds.kg_minus(j)), -(g(i, j) * k.kminus(i)), b, 1,
                                        AssertionClass::PaperClaimed, ref + " (printed index)", tol));
        out.push_back(identity_check_2d("def: [K0" + si + ",Kg+" + sj + "] = +g" + si + sj + " K+" + si + " (printed)",
                                        commutator(k.kzero(i), ds.kg_plus(j)), g(i, j) * k.kplus(i), b, 1,
                                        AssertionClass::PaperClaimed, ref + " (printed index)", tol));
        out.push_back(identity_check_2d("def: [K0" + si + ",Kg-" + sj + "] = -g" + sj + si + " K-" + si,
                                        commutator(k.kzero(i), ds.kg_minus(j)), -(g(j, i) * k.kminus(i)), b, 1,
                                        AssertionClass::Proven, ref + " (derived index)", tol));
        out.push_back(identity_check_2d("def: [K0" + si + ",Kg+" + sj + "] = +g" + sj + si + " K+" + si,
                                        commutator(k.kzero(i), ds.kg_plus(j)), g(j, i) * k.kplus(i), b, 1,
                                        AssertionClass::Proven, ref + " (derived index)", tol));
    }
    return out;
}

/// The printed commutators of the deformed Casimir with K0i, K0j, Kg-+i and
/// Kg-+j. Right-hand sides are assembled from undeformed generators and the
/// entries of g exactly as printed.
inline std::vector<IdentityReport> deformed_casimir_audit(const DeformedSet& ds, double tol = kDefaultTolerance) {
    const Generator2DSet& k = ds.undeformed();
    const Basis2D& b = ds.basis();
    const auto& g = ds.g();
    std::vector<IdentityReport> out;
    const std::string ref = "deformed casimir commutators";
    for (int i = 1; i <= 2; ++i) {
        const int j = detail::other(i);
        const std::string si = std::to_string(i);
        const std::string sj = std::to_string(j);
        const OperatorMatrix c = deformed_casimir(ds, i);

        // -K-i K+j + K+i K-j + K-j K+i - K+j K-i
        const OperatorMatrix block = k.kplus(i) * k.kminus(j) - k.kminus(i) * k.kplus(j) +
                                     k.kminus(j) * k.kplus(i) - k.kplus(j) * k.kminus(i);

        out.push_back(identity_check_2d("cas: [Cg" + si + ",K0" + si + "] = 1/2 g" + si + si + " g" + si + sj +
                                            " [..]",
                                        commutator(c, k.kzero(i)), 0.5 * g(i, i) * g(i, j) * block, b, 2,
                                        AssertionClass::PaperClaimed, ref, tol));
        out.push_back(identity_check_2d("cas: [Cg" + si + ",K0" + sj + "] = 1/2 g" + si + si + " g" + sj + si +
                                            " [..]",
                                        commutator(c, k.kzero(j)), -(0.5 * g(i, i) * g(j, i) * block), b, 2,
                                        AssertionClass::PaperClaimed, ref, tol));

        const OperatorMatrix b_same = g(i, i) * g(i, i) * k.kzero(i) + g(i, j) * g(i, j) * k.kzero(j);
        const OperatorMatrix b_cross = g(i, i) * g(j, i) * k.kzero(i) + g(i, j) * g(j, j) * k.kzero(j);
        for (int sign : {-1, +1}) {
            const bool minus = sign < 0;
            const std::string tag = minus ? "-" : "+";
            const OperatorMatrix& ladder_i = minus ? k.kminus(i) : k.kplus(i);
            const OperatorMatrix& ladder_j = minus ? k.kminus(j) : k.kplus(j);
            const OperatorMatrix& kg_i = minus ? ds.kg_minus(i) : ds.kg_plus(i);
            const OperatorMatrix& kg_j = minus ? ds.kg_minus(j) : ds.kg_plus(j);
            // Upper sign of the printed -+ / +- pairs corresponds to the lowering case.
            const double s = minus ? 1.0 : -1.0;
            const OperatorMatrix mixed = g(i, i) * ladder_i + g(i, j) * ladder_j;
            const OperatorMatrix sym = k.kzero(i) * ladder_i + ladder_i * k.kzero(i);

            const OperatorMatrix rhs_i = -s * (g(i, i) * sym) + s * (b_same * mixed + mixed * b_same);
            out.push_back(identity_check_2d("cas: [Cg" + si + ",Kg" + tag + si + "] (printed)",
                                            commutator(c, kg_i), rhs_i, b, 3, AssertionClass::PaperClaimed, ref,
                                            tol));
            const OperatorMatrix rhs_j = -s * (g(i, j) * sym) + s * (b_cross * mixed + mixed * b_cross);
            out.push_back(identity_check_2d("cas: [Cg" + si + ",Kg" + tag + sj + "] (printed)",
                                            commutator(c, kg_j), rhs_j, b, 3, AssertionClass::PaperClaimed, ref,
                                            tol));
        }
    }
    return out;
}

/// Compares H^g with its coefficient expansion
///   scale[(g11^2 + g21^2) K+1K-1 + c (K+1K-2 + K+2K-1) + (g12^2 + g22^2) K+2K-2 - K01^2 - K02^2]
/// for the printed cross coefficient c = g11 g12 + g12 g22 and the derived
/// c = g11 g12 + g21 g22.
inline std::vector<IdentityReport> deformed_hamiltonian_audit(const DeformedSet& ds, double scale,
                                                              double tol = kDefaultTolerance) {
    const Generator2DSet& k = ds.undeformed();
    const auto& g = ds.g();
    const OperatorMatrix h = deformed_hamiltonian(ds, scale);
    const OperatorMatrix p11 = k.kplus(1) * k.kminus(1);
    const OperatorMatrix p22 = k.kplus(2) * k.kminus(2);
    const OperatorMatrix crossed = k.kplus(1) * k.kminus(2) + k.kplus(2) * k.kminus(1);
    const OperatorMatrix number = k.kzero(1) * k.kzero(1) + k.kzero(2) * k.kzero(2);
    auto expansion = [&](complex c) {
        return scale * ((g(1, 1) * g(1, 1) + g(2, 1) * g(2, 1)) * p11 + c * crossed +
                        (g(1, 2) * g(1, 2) + g(2, 2) * g(2, 2)) * p22 - number);
    };
    const complex printed = g(1, 1) * g(1, 2) + g(1, 2) * g(2, 2);
    const complex derived = g(1, 1) * g(1, 2) + g(2, 1) * g(2, 2);
    std::vector<IdentityReport> out;
    out.push_back(identity_check_2d("ham: Hg expansion, cross coeff g11 g12 + g12 g22 (printed)", h,
                                    expansion(printed), ds.basis(), 1, AssertionClass::PaperClaimed,
                                    "deformed hamiltonian expansion (printed)", tol));
    out.push_back(identity_check_2d("ham: Hg expansion, cross coeff g11 g12 + g21 g22", h, expansion(derived),
                                    ds.basis(), 1, AssertionClass::Proven, "deformed hamiltonian expansion (derived)",
                                    tol));
    return out;
}

class EigenNonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectrumResult {
    std::vector<complex> eigenvalues;
    double max_residual = 0.0; // max_k ||H v_k - lambda_k v_k|| with ||v_k|| = 1
    double matrix_norm = 0.0;
    bool hermitian_path = false;
};

/// All eigenvalues, sorted by real part then imaginary part. Matrices that are
/// Hermitian within 1e-12 go through the self-adjoint solver.
inline SpectrumResult spectrum(const OperatorMatrix& h) {
    const Matrix& m = h.entries();
    SpectrumResult out;
    out.matrix_norm = m.norm();
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    out.hermitian_path = asym <= 1e-12 * std::max(1.0, out.matrix_norm);

    Eigen::VectorXcd values;
    Matrix vectors;
    if (out.hermitian_path) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
        if (solver.info() != Eigen::Success) {
            throw EigenNonConvergence("spectrum: self-adjoint solver did not converge (dim " +
                                      std::to_string(h.dim()) + ")");
        }
        values = solver.eigenvalues().cast<complex>();
        vectors = solver.eigenvectors();
    } else {
        Eigen::ComplexEigenSolver<Matrix> solver(m);
        if (solver.info() != Eigen::Success) {
            throw EigenNonConvergence("spectrum: complex QR did not converge (dim " + std::to_string(h.dim()) +
                                      ", max iterations " + std::to_string(solver.getMaxIterations()) + ")");
        }
        values = solver.eigenvalues();
        vectors = solver.eigenvectors();
    }

    for (Eigen::Index k = 0; k < values.size(); ++k) {
        const Eigen::VectorXcd v = vectors.col(k).normalized();
        out.max_residual = std::max(out.max_residual, (m * v - values(k) * v).norm());
    }
    if (out.max_residual > 1e-8 * std::max(1.0, out.matrix_norm)) {
        throw EigenNonConvergence("spectrum: eigenpair residual " + std::to_string(out.max_residual) +
                                  " exceeds 1e-8 ||H|| = " + std::to_string(1e-8 * out.matrix_norm));
    }

    out.eigenvalues.assign(values.data(), values.data() + values.size());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](complex a, complex b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    return out;
}

} // namespace ncmorse
