#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncmorse {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense complex square matrix carrying a provenance label. Every generator,
/// Hamiltonian and Casimir in the library is one of these.
class OperatorMatrix {
public:
    OperatorMatrix() = default;

    explicit OperatorMatrix(Matrix entries, std::string label = {})
        : entries_(std::move(entries)), label_(std::move(label)) {
        if (entries_.rows() != entries_.cols()) {
            throw DimensionMismatch("OperatorMatrix: matrix must be square");
        }
        if (!entries_.allFinite()) {
            throw std::invalid_argument("OperatorMatrix: non-finite entry in " + label_);
        }
    }

    static OperatorMatrix zero(std::size_t dim, std::string label = "0") {
        const auto n = static_cast<Eigen::Index>(dim);
        return OperatorMatrix(Matrix::Zero(n, n), std::move(label));
    }

    static OperatorMatrix identity(std::size_t dim, std::string label = "I") {
        const auto n = static_cast<Eigen::Index>(dim);
        return OperatorMatrix(Matrix::Identity(n, n), std::move(label));
    }

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }
    const std::string& label() const { return label_; }

    complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    OperatorMatrix relabeled(std::string label) const { return OperatorMatrix(entries_, std::move(label)); }

    OperatorMatrix transpose() const { return OperatorMatrix(entries_.transpose(), label_ + "^T"); }
    OperatorMatrix adjoint() const { return OperatorMatrix(entries_.adjoint(), label_ + "^H"); }

    double frobenius_norm() const { return entries_.norm(); }

    /// Exact entrywise equality, no tolerance.
    bool exactly_equals(const OperatorMatrix& other) const {
        return dim() == other.dim() && entries_ == other.entries_;
    }

    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
        require_same_dim(a, b, "+");
        return OperatorMatrix(a.entries_ + b.entries_, "(" + a.label_ + " + " + b.label_ + ")");
    }

    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
        require_same_dim(a, b, "-");
        return OperatorMatrix(a.entries_ - b.entries_, "(" + a.label_ + " - " + b.label_ + ")");
    }

    friend OperatorMatrix operator-(const OperatorMatrix& a) { return OperatorMatrix(-a.entries_, "-" + a.label_); }

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        require_same_dim(a, b, "*");
        return OperatorMatrix(a.entries_ * b.entries_, a.label_ + " " + b.label_);
    }

    friend OperatorMatrix operator*(complex s, const OperatorMatrix& a) {
        return OperatorMatrix(s * a.entries_, a.label_);
    }
    friend OperatorMatrix operator*(double s, const OperatorMatrix& a) { return complex(s, 0.0) * a; }

private:
    static void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* op) {
        if (a.dim() != b.dim()) {
            throw DimensionMismatch(std::string("OperatorMatrix ") + op + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
        }
    }

    Matrix entries_;
    std::string label_;
};

/// ab - ba, or ab + ba when `anti` is set.
inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b, bool anti = false) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("commutator: dimension mismatch");
    }
    const Matrix ab = a.entries() * b.entries();
    const Matrix ba = b.entries() * a.entries();
    const char* open = anti ? "{" : "[";
    const char* close = anti ? "}" : "]";
    return OperatorMatrix(anti ? Matrix(ab + ba) : Matrix(ab - ba),
                          std::string(open) + a.label() + ", " + b.label() + close);
}

inline OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return commutator(a, b, true);
}

} // namespace ncmorse
