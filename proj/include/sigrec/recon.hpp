#ifndef SIGREC_RECON_HPP
#define SIGREC_RECON_HPP

// Kernel ridge regression over a sampled window: fit combination coefficients
// from weighted observations, then evaluate the model anywhere in [0, T].

#include <vector>

#include <Eigen/Dense>

#include "sigrec/prior.hpp"
#include "sigrec/sampling.hpp"

namespace sigrec {

// Fitted reconstruction. The model is ytilde(t) = sum_i z_i · k(t_i - t),
// where k is the prior's kernel and the z_i already fold in sample weights.
struct ReconModel {
    Prior prior;
    double T = 0.0;
    double epsilon = 0.0;
    std::vector<double> t;
    std::vector<cplx> z;
};

// K(i,j) = w_i · w_j · k(t_i - t_j). Hermitian by construction.
Eigen::MatrixXcd assemble_kernel_matrix(const Prior& prior, const SampleSet& samples);

// Solve (G + epsilon·I)·zbar = ybar with ybar_i = w_i·obs_i and
// G = conj(K) the Gram of the weighted sampling map, then set
// z_i = zbar_i·w_i. G equals K whenever the prior is symmetric. Uses a
// Hermitian Cholesky factorization (a real one when the prior is symmetric
// and the observations are real), retries once with a jitter of
// 1e-12·trace(G) added to epsilon, and verifies the residual
// ||(G + eps·I)·zbar - ybar|| <= 1e-8·||ybar|| before returning.
ReconModel fit(const Prior& prior, const SampleSet& samples,
               const std::vector<cplx>& obs, double epsilon);

cplx evaluate(const ReconModel& model, double t);

// Same arithmetic as evaluate(), point by point.
std::vector<cplx> evaluate_batch(const ReconModel& model, const std::vector<double>& ts);

} // namespace sigrec

#endif
