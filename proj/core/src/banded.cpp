#include "lipreg/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipreg {

SymmetricBandMatrix::SymmetricBandMatrix(std::size_t n, std::size_t bandwidth)
    : n_(n), bw_(bandwidth), diags_(bandwidth + 1) {
    for (std::size_t d = 0; d <= bw_; ++d)
        diags_[d].assign(n_ > d ? n_ - d : 0, 0.0);
}

double SymmetricBandMatrix::at(std::size_t i, std::size_t j) const {
    const std::size_t lo = i < j ? i : j;
    const std::size_t d = i < j ? j - i : i - j;
    if (d > bw_) return 0.0;
    return diags_[d][lo];
}

void SymmetricBandMatrix::add(std::size_t i, std::size_t j, double v) {
    const std::size_t lo = i < j ? i : j;
    const std::size_t d = i < j ? j - i : i - j;
    if (d > bw_) throw std::invalid_argument("SymmetricBandMatrix: entry outside band");
    diags_[d][lo] += v;
}

void SymmetricBandMatrix::add_identity(double v) {
    for (std::size_t i = 0; i < n_; ++i) diags_[0][i] += v;
}

SymmetricBandMatrix::Cholesky::Cholesky(const SymmetricBandMatrix& a)
    : n_(a.size()), bw_(a.bandwidth()), low_(a.bandwidth() + 1) {
    // banded A = L L^T with L(i,j) stored as low_[i-j][j]
    for (std::size_t d = 0; d <= bw_; ++d) low_[d].assign(n_ > d ? n_ - d : 0, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        double diag = a.at(j, j);
        const std::size_t kmin = j > bw_ ? j - bw_ : 0;
        for (std::size_t k = kmin; k < j; ++k) {
            const double ljk = low_[j - k][k];
            diag -= ljk * ljk;
        }
        if (!(diag > 0.0)) throw std::runtime_error("SymmetricBandMatrix: not positive definite");
        const double ljj = std::sqrt(diag);
        low_[0][j] = ljj;
        const std::size_t imax = std::min(j + bw_, n_ - 1);
        for (std::size_t i = j + 1; i <= imax; ++i) {
            double sum = a.at(i, j);
            const std::size_t kmin2 = i > bw_ ? i - bw_ : 0;
            for (std::size_t k = kmin2; k < j; ++k) sum -= low_[i - k][k] * low_[j - k][k];
            low_[i - j][j] = sum / ljj;
        }
    }
}

std::vector<double> SymmetricBandMatrix::Cholesky::solve(std::vector<double> rhs) const {
    if (rhs.size() != n_) throw std::invalid_argument("SymmetricBandMatrix: rhs size mismatch");
    // forward substitution L c = rhs
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = rhs[i];
        const std::size_t kmin = i > bw_ ? i - bw_ : 0;
        for (std::size_t k = kmin; k < i; ++k) sum -= low_[i - k][k] * rhs[k];
        rhs[i] = sum / low_[0][i];
    }
    // back substitution L^T x = c
    for (std::size_t ii = n_; ii-- > 0;) {
        double sum = rhs[ii];
        const std::size_t imax = std::min(ii + bw_, n_ - 1);
        for (std::size_t i = ii + 1; i <= imax; ++i) sum -= low_[i - ii][ii] * rhs[i];
        rhs[ii] = sum / low_[0][ii];
    }
    return rhs;
}

std::vector<double> SymmetricBandMatrix::solve(std::vector<double> rhs) const {
    return Cholesky(*this).solve(std::move(rhs));
}

} // namespace lipreg
