#pragma once

#include <cstddef>
#include <vector>

namespace lipreg {

/// Symmetric banded matrix with half-bandwidth bw, stored by diagonals:
/// diag d (0 <= d <= bw) holds the entries A(i, i+d). Only what the reduced
/// problems need: accumulation of Gram terms and an SPD Cholesky solve.
class SymmetricBandMatrix {
public:
    SymmetricBandMatrix(std::size_t n, std::size_t bandwidth);

    std::size_t size() const noexcept { return n_; }
    std::size_t bandwidth() const noexcept { return bw_; }

    double at(std::size_t i, std::size_t j) const;
    /// Adds v to A(i,j) and, implicitly, to A(j,i). |i-j| must be <= bw.
    void add(std::size_t i, std::size_t j, double v);
    void add_identity(double v = 1.0);

    /// One-shot Cholesky solve of A x = rhs. Throws std::runtime_error if a
    /// pivot is not strictly positive (matrix not positive definite).
    std::vector<double> solve(std::vector<double> rhs) const;

    /// Reusable factorization for solves against many right-hand sides.
    class Cholesky {
    public:
        explicit Cholesky(const SymmetricBandMatrix& a);
        std::vector<double> solve(std::vector<double> rhs) const;

    private:
        std::size_t n_;
        std::size_t bw_;
        std::vector<std::vector<double>> low_;
    };

private:
    std::size_t n_;
    std::size_t bw_;
    std::vector<std::vector<double>> diags_;
};

} // namespace lipreg
