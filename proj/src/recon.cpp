#include "sigrec/recon.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "sigrec/errors.hpp"

namespace sigrec {

namespace {

// Cholesky solve of (K + eps·I)·x = b with one jittered retry. Returns the
// relative residual actually achieved; throws SolveFailure when even the
// jittered system cannot be solved to 1e-8 relative accuracy.
template <typename Mat, typename Vec>
Vec ridge_solve(const Mat& K, const Vec& b, double epsilon) {
    const double bnorm = b.norm();
    const double trace = K.real().diagonal().sum();
    double shift = epsilon;
    for (int attempt = 0; attempt < 2; ++attempt) {
        Mat M = K;
        M.diagonal().array() += shift;
        Eigen::LLT<Mat> llt(M);
        if (llt.info() == Eigen::Success) {
            Vec x = llt.solve(b);
            const double resid = (M * x - b).norm();
            if (resid <= 1e-8 * bnorm || bnorm == 0.0) return x;
            if (attempt == 1)
                throw SolveFailure("relative residual " + std::to_string(resid / bnorm) +
                                   " after jitter retry");
        } else if (attempt == 1) {
            throw SolveFailure("Cholesky factorization failed after jitter retry");
        }
        shift = epsilon + 1e-12 * trace;
    }
    throw SolveFailure("unreachable");
}

} // namespace

Eigen::MatrixXcd assemble_kernel_matrix(const Prior& prior, const SampleSet& samples) {
    const std::size_t s = samples.t.size();
    if (s == 0 || samples.w.size() != s)
        throw DimensionMismatch("sample set needs matching nonempty nodes and weights");
    Eigen::MatrixXcd K(s, s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const cplx v =
                samples.w[i] * samples.w[j] * kernel_value(prior, samples.t[i] - samples.t[j]);
            K(i, j) = v;
            K(j, i) = std::conj(v);
        }
    }
    return K;
}

ReconModel fit(const Prior& prior, const SampleSet& samples,
               const std::vector<cplx>& obs, double epsilon) {
    const std::size_t s = samples.t.size();
    if (s == 0 || samples.w.size() != s)
        throw DimensionMismatch("sample set needs matching nonempty nodes and weights");
    if (obs.size() != s)
        throw DimensionMismatch("got " + std::to_string(obs.size()) + " observations for " +
                                std::to_string(s) + " samples");
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");

    ReconModel model;
    model.prior = prior;
    model.T = samples.T;
    model.epsilon = epsilon;
    model.t = samples.t;
    model.z.resize(s);

    bool real_path = symmetric(prior);
    if (real_path) {
        for (const cplx& o : obs) {
            if (o.imag() != 0.0) {
                real_path = false;
                break;
            }
        }
    }

    if (real_path) {
        // symmetric prior: the kernel is real, so the whole system stays real
        Eigen::MatrixXd K(s, s);
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const double v = samples.w[i] * samples.w[j] *
                                 kernel_value(prior, samples.t[i] - samples.t[j]).real();
                K(i, j) = v;
                K(j, i) = v;
            }
        }
        Eigen::VectorXd ybar(s);
        for (std::size_t i = 0; i < s; ++i) ybar[i] = samples.w[i] * obs[i].real();
        const Eigen::VectorXd zbar = ridge_solve(K, ybar, epsilon);
        for (std::size_t i = 0; i < s; ++i) model.z[i] = cplx(zbar[i] * samples.w[i], 0.0);
    } else {
        // The weighted sampling map sends coefficients g to
        // sum_i w_i g_i e^{-2 pi i xi t_i}, so its Gram has entries
        // w_i w_j conj(k(t_i - t_j)): the conjugate of the kernel matrix.
        // Solving with the Gram keeps the solve adjoint to the evaluation
        // formula sum_i z_i k(t_i - t); solving with K itself makes the
        // in-model error blow up like 1/epsilon whenever the kernel is
        // complex (for symmetric priors the two matrices coincide).
        const Eigen::MatrixXcd G = assemble_kernel_matrix(prior, samples).conjugate();
        Eigen::VectorXcd ybar(s);
        for (std::size_t i = 0; i < s; ++i) ybar[i] = samples.w[i] * obs[i];
        const Eigen::VectorXcd zbar = ridge_solve(G, ybar, epsilon);
        for (std::size_t i = 0; i < s; ++i) model.z[i] = zbar[i] * samples.w[i];
    }
    return model;
}

cplx evaluate(const ReconModel& model, double t) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < model.t.size(); ++i)
        acc += model.z[i] * kernel_value(model.prior, model.t[i] - t);
    return acc;
}

std::vector<cplx> evaluate_batch(const ReconModel& model, const std::vector<double>& ts) {
    std::vector<cplx> out;
    out.reserve(ts.size());
    for (const double t : ts) out.push_back(evaluate(model, t));
    return out;
}

} // namespace sigrec
