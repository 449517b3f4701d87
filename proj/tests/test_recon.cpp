#include "doctest.h"

#include "sigrec/errors.hpp"
#include "sigrec/prior.hpp"
#include "sigrec/recon.hpp"
#include "sigrec/rng.hpp"
#include "sigrec/sampling.hpp"
#include "sigrec/signals.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace sigrec;

namespace {

constexpr double kPi = std::numbers::pi;

SampleSet hand_samples(std::vector<double> t, std::vector<double> w, double T) {
    SampleSet s;
    s.t = std::move(t);
    s.w = std::move(w);
    s.T = T;
    return s;
}

double grid_mse(const ReconModel& m, const SignalSpec& truth, double T, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) * T / n;
        acc += std::norm(evaluate(m, t) - eval_signal(truth, t));
    }
    return acc / n;
}

std::vector<cplx> sample_signal(const SignalSpec& truth, const SampleSet& s) {
    std::vector<cplx> obs;
    obs.reserve(s.t.size());
    for (double t : s.t) obs.push_back(eval_signal(truth, t));
    return obs;
}

} // namespace

TEST_CASE("one-sample fit matches the scalar hand solve") {
    // atom at frequency zero makes the kernel identically 1, so the model is
    // the constant ytilde(t) = y * w^2 / (w^2 + eps) everywhere
    const Prior prior = SparsePrior{{{0.0, 1.0}}};
    const double w = 0.7;
    const double eps = 0.25;
    const SampleSet s = hand_samples({0.3}, {w}, 1.0);

    SUBCASE("complex observation") {
        const cplx y(2.0, -1.0);
        const ReconModel m = fit(prior, s, {y}, eps);
        const cplx expect = y * (w * w) / (w * w + eps);
        CHECK(std::abs(m.z[0] - expect) <= 1e-14);
        CHECK(std::abs(evaluate(m, 0.0) - expect) <= 1e-14);
        CHECK(std::abs(evaluate(m, 0.9) - expect) <= 1e-14);
    }
    SUBCASE("real observation") {
        const ReconModel m = fit(prior, s, {cplx(3.0, 0.0)}, eps);
        CHECK(m.z[0].real() == doctest::Approx(3.0 * w * w / (w * w + eps)).epsilon(1e-14));
        CHECK(m.z[0].imag() == 0.0);
    }
}

TEST_CASE("single-atom prior fit matches the rank-1 closed form") {
    // one atom at xi: the Gram of the weighted sampling map is the outer
    // product ubar ubar^* with ubar_i = w_i e^{+2 pi i xi t_i}, so
    // (G + eps I)^{-1} ybar = (ybar - ubar <ubar, ybar> / (eps + |ubar|^2)) / eps
    const double xi = -2.3;
    const Prior prior = SparsePrior{{{xi, 1.0}}};
    const SampleSet s = draw_samples(uniform_density(1.0, 1.0), 6, 5);

    Rng rng(31);
    std::vector<cplx> obs;
    for (std::size_t i = 0; i < s.t.size(); ++i)
        obs.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));

    for (const double eps : {1e-3, 0.5, 10.0}) {
        const ReconModel m = fit(prior, s, obs, eps);

        Eigen::VectorXcd ubar(6), ybar(6);
        for (int i = 0; i < 6; ++i) {
            ubar[i] = s.w[i] * std::polar(1.0, 2.0 * kPi * xi * s.t[i]);
            ybar[i] = s.w[i] * obs[i];
        }
        const cplx inner = ubar.dot(ybar); // conjugates the first argument
        const Eigen::VectorXcd zbar =
            (ybar - ubar * (inner / (eps + ubar.squaredNorm()))) / eps;
        for (int i = 0; i < 6; ++i)
            CHECK(std::abs(m.z[i] - zbar[i] * s.w[i]) <= 1e-10 * zbar.norm());
    }
}

TEST_CASE("fit is linear in the observations") {
    const Prior prior = MultibandPrior{{{2.0, 1.0}, {6.5, 0.5}}};
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 8, 77);
    const double eps = 1e-2;

    Rng rng(12);
    std::vector<cplx> a, b, mix;
    const cplx beta(0.6, -1.4);
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        a.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        b.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        mix.push_back(a.back() + beta * b.back());
    }
    const ReconModel ma = fit(prior, s, a, eps);
    const ReconModel mb = fit(prior, s, b, eps);
    const ReconModel mm = fit(prior, s, mix, eps);
    for (std::size_t i = 0; i < s.t.size(); ++i)
        CHECK(std::abs(mm.z[i] - (ma.z[i] + beta * mb.z[i])) <= 1e-9);
}

TEST_CASE("in-sample residual equals eps times z over the squared weight") {
    // (G + eps I) zbar = ybar row i rearranges to
    // obs_i - ytilde(t_i) = eps * z_i / w_i^2 on both solve paths
    const double eps = 3e-3;

    SUBCASE("real path") {
        const Prior prior = BandlimitedPrior{2.0};
        const SampleSet s = draw_samples(universal_density(128.0, 1.0), 10, 4);
        Rng rng(8);
        std::vector<cplx> obs;
        for (std::size_t i = 0; i < s.t.size(); ++i)
            obs.emplace_back(rng.uniform(-2.0, 2.0), 0.0);
        const ReconModel m = fit(prior, s, obs, eps);
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            const cplx lhs = obs[i] - evaluate(m, s.t[i]);
            const cplx rhs = eps * m.z[i] / (s.w[i] * s.w[i]);
            CHECK(std::abs(lhs - rhs) <= 1e-10);
        }
    }
    SUBCASE("complex path") {
        const Prior prior = SparsePrior{{{-1.7, 0.3}, {0.4, 0.45}, {2.9, 0.25}}};
        const SampleSet s = draw_samples(universal_density(128.0, 1.0), 10, 4);
        Rng rng(9);
        std::vector<cplx> obs;
        for (std::size_t i = 0; i < s.t.size(); ++i)
            obs.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const ReconModel m = fit(prior, s, obs, eps);
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            const cplx lhs = obs[i] - evaluate(m, s.t[i]);
            const cplx rhs = eps * m.z[i] / (s.w[i] * s.w[i]);
            CHECK(std::abs(lhs - rhs) <= 1e-10);
        }
    }
}

TEST_CASE("weighted in-sample residual grows with regularization") {
    // the weighted residual w_i (obs_i - ytilde(t_i)) = eps zbar_i has norm
    // eps ||(G + eps I)^{-1} ybar||, increasing in eps eigenvalue by eigenvalue
    const Prior prior = GaussianPrior{1.5};
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 12, 21);
    Rng rng(40);
    std::vector<cplx> obs;
    for (std::size_t i = 0; i < s.t.size(); ++i)
        obs.emplace_back(rng.uniform(-1.0, 1.0), 0.0);

    double prev = -1.0;
    for (const double eps : {1e-6, 1e-4, 1e-2, 1.0, 100.0}) {
        const ReconModel m = fit(prior, s, obs, eps);
        double acc = 0.0;
        for (std::size_t i = 0; i < s.t.size(); ++i)
            acc += std::norm(s.w[i] * (obs[i] - evaluate(m, s.t[i])));
        const double resid = std::sqrt(acc);
        CHECK(resid >= prev - 1e-12);
        prev = resid;
    }
}

TEST_CASE("in-model signals are recovered as eps shrinks") {
    SUBCASE("asymmetric sparse prior") {
        const Prior prior = SparsePrior{{{-1.7, 0.3}, {0.4, 0.45}, {2.9, 0.25}}};
        const SynthResult sr = synth_signal(
            prior, {{0.15, {1.0, 0.5}}, {0.5, {-0.3, 0.2}}, {0.85, {0.4, -1.1}}});
        const SignalSpec truth = sr.signal;
        const SampleSet s = draw_samples(uniform_density(1.0, 1.0), 9, 17);
        const std::vector<cplx> obs = sample_signal(truth, s);

        double mse_coarse = 0.0;
        for (const double eps : {1e-2, 1e-4, 1e-6}) {
            const ReconModel m = fit(prior, s, obs, eps);
            const double mse = grid_mse(m, truth, 1.0, 400);
            CHECK(mse <= 6.0 * eps * sr.energy);
            if (eps == 1e-2) mse_coarse = mse;
            if (eps == 1e-6) CHECK(mse <= 1e-4 * mse_coarse); // genuine eps limit, no floor
        }
    }
    SUBCASE("symmetric bandlimited prior") {
        const Prior prior = BandlimitedPrior{1.0};
        const SynthResult sr = synth_signal(prior, {{0.2, {1.0, 0.0}},
                                                    {0.4, {-0.7, 0.0}},
                                                    {0.6, {0.5, 0.0}},
                                                    {0.8, {0.9, 0.0}}});
        const SignalSpec truth = sr.signal;
        const SampleSet s = draw_samples(uniform_density(1.0, 1.0), 32, 3);
        const std::vector<cplx> obs = sample_signal(truth, s);

        for (const double eps : {1e-3, 1e-5, 1e-7}) {
            const ReconModel m = fit(prior, s, obs, eps);
            CHECK(grid_mse(m, truth, 1.0, 400) <= 6.0 * eps * sr.energy);
        }
    }
}

TEST_CASE("symmetric prior with real observations keeps coefficients real") {
    const Prior prior = GaussianMixturePrior{{{-2.0, 0.5, 0.5}, {2.0, 0.5, 0.5}}};
    REQUIRE(symmetric(prior));
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 7, 60);
    Rng rng(2);
    std::vector<cplx> obs;
    for (std::size_t i = 0; i < s.t.size(); ++i)
        obs.emplace_back(rng.uniform(-3.0, 3.0), 0.0);
    const ReconModel m = fit(prior, s, obs, 1e-3);
    for (const cplx& z : m.z) CHECK(z.imag() == 0.0);
}

TEST_CASE("zero observations produce identically zero coefficients") {
    const Prior prior = CauchyPrior{0.8};
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 5, 13);
    const std::vector<cplx> obs(5, cplx(0.0, 0.0));
    const ReconModel m = fit(prior, s, obs, 1e-4);
    for (const cplx& z : m.z) {
        CHECK(z.real() == 0.0);
        CHECK(z.imag() == 0.0);
    }
    CHECK(std::abs(evaluate(m, 0.5)) == 0.0);
}

TEST_CASE("evaluate_batch matches evaluate point by point") {
    const Prior prior = MultibandPrior{{{2.0, 1.0}, {6.5, 0.5}}};
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 6, 35);
    Rng rng(91);
    std::vector<cplx> obs;
    for (std::size_t i = 0; i < s.t.size(); ++i)
        obs.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const ReconModel m = fit(prior, s, obs, 1e-2);

    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(i / 40.0);
    const std::vector<cplx> batch = evaluate_batch(m, ts);
    REQUIRE(batch.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(batch[i] == evaluate(m, ts[i]));

    CHECK(evaluate_batch(m, {}).empty());
    const std::vector<cplx> one = evaluate_batch(m, {0.25});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == evaluate(m, 0.25));
}

TEST_CASE("kernel matrix is Hermitian PSD and matches quadrature") {
    const Prior prior = MultibandPrior{{{2.0, 1.0}, {6.5, 0.5}}};
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 16, 9);
    const Eigen::MatrixXcd K = assemble_kernel_matrix(prior, s);

    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) CHECK(K(i, j) == std::conj(K(j, i)));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * K.real().trace());

    // spot-check entries against adaptive quadrature of the spectral measure
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 3}, {5, 11}, {15, 2}}) {
        const cplx want =
            s.w[i] * s.w[j] * kernel_quadrature(prior, s.t[i] - s.t[j], 1e-9);
        CHECK(std::abs(K(i, j) - want) <= 1e-7);
    }
}

TEST_CASE("single-atom kernel matrix has one significant eigenvalue") {
    const Prior prior = SparsePrior{{{1.5, 1.0}}};
    const SampleSet s = draw_samples(universal_density(128.0, 1.0), 12, 44);
    const Eigen::MatrixXcd K = assemble_kernel_matrix(prior, s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K, Eigen::EigenvaluesOnly);
    const double trace = K.real().trace();
    CHECK(es.eigenvalues()(11) == doctest::Approx(trace).epsilon(1e-12));
    for (int i = 0; i < 11; ++i) CHECK(std::abs(es.eigenvalues()(i)) <= 1e-10 * trace);
}

TEST_CASE("fit and assemble validate their arguments") {
    const Prior prior = BandlimitedPrior{1.0};
    const SampleSet good = draw_samples(uniform_density(1.0, 1.0), 4, 1);
    const std::vector<cplx> obs(4, cplx(1.0, 0.0));

    CHECK_THROWS_AS((void)fit(prior, good, obs, 0.0), DomainError);
    CHECK_THROWS_AS((void)fit(prior, good, obs, -1e-3), DomainError);

    const std::vector<cplx> short_obs(3, cplx(1.0, 0.0));
    CHECK_THROWS_AS((void)fit(prior, good, short_obs, 1e-3), DimensionMismatch);

    SampleSet ragged = good;
    ragged.w.pop_back();
    CHECK_THROWS_AS((void)assemble_kernel_matrix(prior, ragged), DimensionMismatch);
    CHECK_THROWS_AS((void)fit(prior, ragged, obs, 1e-3), DimensionMismatch);

    SampleSet empty;
    empty.T = 1.0;
    CHECK_THROWS_AS((void)assemble_kernel_matrix(prior, empty), DimensionMismatch);
}
