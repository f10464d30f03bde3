#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cuecorr/numeric.hpp"
#include "cuecorr/weingarten.hpp"

namespace cuecorr {

struct ComplexMatrix {
    int N = 0;
    std::vector<std::complex<double>> a;  // row-major

    explicit ComplexMatrix(int N_) : N(N_), a(static_cast<std::size_t>(N_) * N_) {}
    std::complex<double>& at(int r, int c) { return a[static_cast<std::size_t>(r) * N + c]; }
    const std::complex<double>& at(int r, int c) const {
        return a[static_cast<std::size_t>(r) * N + c];
    }
};

double unitarity_residual(const ComplexMatrix& u);  // max |(U U* - I)_{ab}|

// Haar-distributed unitary: Ginibre matrix of i.i.d. standard complex
// Gaussians, orthonormalized by modified Gram-Schmidt.  MGS produces the
// triangular factor with positive real diagonal, which is exactly the phase
// convention that makes Q Haar (plain Householder QR is not).  Deterministic
// per (seed, platform); every sample is checked to residual <= 1e-10.
ComplexMatrix sample_haar(int N, std::uint64_t seed);

struct EstimateReport {
    std::complex<double> mean;
    double standard_error = 0;
    long samples = 0;
    bool has_target = false;
    Rat target = Rat(0);
    double z_score = 0;
};

// Empirical mean of prod u_{i(k)j(k)} conj(u_{i'(k)j'(k)}) with the
// leave-one-out jackknife standard error.  Requires samples >= 1000.
EstimateReport estimate_correlator(const CorrelatorQuery& q, long samples, std::uint64_t seed);

// estimate_correlator plus the exact target from general_correlator and the
// z score |mean - target| / SE.
EstimateReport validate(const CorrelatorQuery& q, long samples, std::uint64_t seed);

// Mean of the single entry u_11 (target 0; no conjugate factor, so it is not
// a CorrelatorQuery).
EstimateReport estimate_entry_mean(int N, long samples, std::uint64_t seed);

}  // namespace cuecorr
