// Command-line front end: tabulate kernels, draw sample sets, fit and evaluate
// reconstructions, inspect operator spectra and leverage profiles, generate
// hard instances, synthesize test signals, run baseline benchmarks, and plot
// CSV artifacts. One command per process; outputs are written atomically and
// reruns with the same flags and seed are byte-identical.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "sigrec/errors.hpp"
#include "sigrec/io.hpp"
#include "sigrec/prior.hpp"
#include "sigrec/recon.hpp"
#include "sigrec/rng.hpp"
#include "sigrec/sampling.hpp"
#include "sigrec/signals.hpp"
#include "sigrec/spectral.hpp"
#include "sigrec/svg.hpp"

namespace {

using namespace sigrec;
using json = nlohmann::json;

// flag misuse that CLI11 cannot catch on its own; exits with code 2
struct UsageError {
    std::string msg;
};

struct Opts {
    std::string prior_arg;
    double T = 1.0;
    double epsilon = 1e-3;
    double alpha = 0.0;
    std::string alpha_source = "analytic-bound";
    std::string density = "universal";
    std::uint64_t samples = 0; // 0 means use (c, delta)
    double c = 5.0;
    double delta = 0.2;
    std::uint64_t seed = 1;
    int grid_n = 512;
    std::string in;
    std::string out = ".";
    std::string noise = "none";
    bool plot = false;
    int atoms = 8;
    int trials = 5;

    bool T_given = false;
    bool alpha_given = false;
};

std::string out_path(const Opts& o, const std::string& name) {
    std::filesystem::create_directories(o.out);
    return (std::filesystem::path(o.out) / name).string();
}

// ---- config resolution ---------------------------------------------------

struct AlphaResolution {
    double alpha = 128.0;
    double shat = 0.0;         // the statistical-dimension estimate alpha came from
    std::string source;        // analytic-bound | numeric-statdim | explicit
};

// Closed-form statistical-dimension bounds per family (constant factors read
// as 1); mixtures and numeric densities have none and return nothing.
std::optional<double> analytic_statdim_bound(const Prior& prior, double T, double epsilon) {
    const double logterm = std::max(0.0, std::log(1.0 / epsilon));
    if (const auto* p = std::get_if<SparsePrior>(&prior)) return double(p->atoms.size());
    if (const auto* p = std::get_if<BandlimitedPrior>(&prior)) return p->half_width * T + logterm;
    if (const auto* p = std::get_if<MultibandPrior>(&prior)) {
        double widths = 0.0;
        for (const auto& b : p->bands) widths += b.half_width * T;
        return widths + double(p->bands.size()) * logterm;
    }
    if (const auto* p = std::get_if<GaussianPrior>(&prior))
        return p->stdev * T * std::sqrt(logterm) + logterm;
    if (const auto* p = std::get_if<CauchyPrior>(&prior))
        return (p->scale * T + 1.0) * std::sqrt(1.0 / epsilon);
    return std::nullopt;
}

AlphaResolution resolve_alpha(const Opts& o, const Prior& prior) {
    AlphaResolution r;
    if (o.alpha_given) {
        r.alpha = o.alpha;
        r.shat = o.alpha / 256.0;
        r.source = "explicit";
        return r;
    }
    if (o.alpha_source == "explicit")
        throw UsageError{"--alpha-source explicit requires --alpha"};
    std::optional<double> shat;
    r.source = o.alpha_source;
    if (o.alpha_source == "analytic-bound") {
        shat = analytic_statdim_bound(prior, o.T, o.epsilon);
        if (!shat) r.source = "numeric-statdim"; // no formula for this family
    }
    if (!shat) shat = stat_dim(discretize(prior, o.T, o.grid_n), o.epsilon);
    r.shat = *shat;
    r.alpha = std::max(128.0, 256.0 * r.shat);
    return r;
}

SamplingDensity make_density(const Opts& o, const Prior& prior, const AlphaResolution& ar) {
    if (o.density == "universal") return universal_density(ar.alpha, o.T);
    if (o.density == "bandlimited") {
        const auto* b = std::get_if<BandlimitedPrior>(&prior);
        if (!b) throw UsageError{"--density bandlimited requires a bandlimited --prior"};
        return bandlimited_density(b->half_width, o.T, o.epsilon);
    }
    return uniform_density(std::max(1.0, ar.shat), o.T);
}

std::size_t resolve_sample_count(const Opts& o, const SamplingDensity& dens) {
    if (o.samples > 0) return o.samples;
    return recommended_sample_count(std::max(1.0, dens.mass()), o.delta, o.c);
}

// ---- signal and noise specs ----------------------------------------------

SignalSpec signal_from_json(const json& j) {
    try {
        if (j.at("type").get<std::string>() != "synthetic")
            throw ParseFailure("signal JSON must have type 'synthetic' (tables come from CSV)");
        SyntheticSignal sig;
        sig.prior = io::prior_from_json(j.at("prior"));
        for (const auto& a : j.at("atoms")) {
            const auto& c = a.at("coeff");
            sig.atoms.push_back(
                {a.at("node").get<double>(), cplx(c.at(0).get<double>(), c.at(1).get<double>())});
        }
        return sig;
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("signal JSON: ") + e.what());
    }
}

json signal_to_json(const SyntheticSignal& sig, double energy) {
    json atoms = json::array();
    for (const auto& a : sig.atoms)
        atoms.push_back({{"node", a.node}, {"coeff", {a.coeff.real(), a.coeff.imag()}}});
    return {{"type", "synthetic"},
            {"prior", io::prior_to_json(sig.prior)},
            {"atoms", atoms},
            {"energy", energy}};
}

SignalSpec load_signal_arg(const std::string& arg) {
    const std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{')
        return signal_from_json(json::parse(arg, nullptr, true));
    if (arg.size() >= 4 && arg.substr(arg.size() - 4) == ".csv") return io::read_trace_csv(arg);
    json j;
    try {
        j = json::parse(io::read_text(arg));
    } catch (const json::exception& e) {
        throw ParseFailure(arg + ": " + e.what());
    }
    return signal_from_json(j);
}

NoiseSpec parse_noise_arg(const std::string& arg, double T) {
    if (arg == "none") return NoiseNone{};
    json j;
    try {
        const std::size_t first = arg.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && arg[first] == '{')
            j = json::parse(arg);
        else
            j = json::parse(io::read_text(arg));
        const std::string type = j.at("type").get<std::string>();
        if (type == "none") return NoiseNone{};
        if (type == "sinusoid")
            return NoiseSinusoid{j.at("amplitude").get<double>(), j.at("frequency").get<double>(),
                                 j.value("phase", 0.0)};
        if (type == "seeded-grid")
            return NoiseSeededGrid{j.at("seed").get<std::uint64_t>(), j.at("step").get<double>(),
                                   j.at("amplitude").get<double>(), T};
        throw ParseFailure("unknown noise type '" + type + "'");
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("noise JSON: ") + e.what());
    }
}

// ---- provenance ------------------------------------------------------------

json run_provenance(const char* sub, const Opts& o, const Prior* prior,
                    const AlphaResolution* ar, const SamplingDensity* dens, std::size_t s_used) {
    json j = {{"subcommand", sub},
              {"T", o.T},
              {"epsilon", o.epsilon},
              {"grid_n", o.grid_n},
              {"seed", o.seed}};
    if (!o.in.empty()) j["in"] = o.in;
    if (o.noise != "none") j["noise"] = o.noise;
    if (prior) j["prior"] = io::prior_to_json(*prior);
    if (ar) {
        j["alpha"] = ar->alpha;
        j["alpha_source"] = ar->source;
        j["shat"] = ar->shat;
    }
    if (dens) {
        j["density"] = dens->kind_name();
        j["mass"] = dens->mass();
        j["samples"] = s_used;
        j["c"] = o.c;
        j["delta"] = o.delta;
    }
    return j;
}

void write_run_json(const char* sub, const Opts& o, const json& j) {
    io::write_text_atomic(out_path(o, std::string(sub) + ".run.json"), j.dump(2) + "\n");
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return t;
}

// ---- subcommands -----------------------------------------------------------

int run_kernel(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    if (o.grid_n < 2) throw UsageError{"--grid-n must be at least 2"};
    const std::vector<double> dt = linspace(-o.T, o.T, o.grid_n);
    std::vector<cplx> k;
    k.reserve(dt.size());
    for (const double d : dt) k.push_back(kernel_value(prior, d));
    io::write_trace_csv(out_path(o, "kernel.csv"), dt, k);
    write_run_json("kernel", o, run_provenance("kernel", o, &prior, nullptr, nullptr, 0));
    if (o.plot) {
        std::vector<double> re(k.size()), im(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) {
            re[i] = k[i].real();
            im[i] = k[i].imag();
        }
        svg::write_chart(out_path(o, "kernel.svg"), "prior kernel",
                         {{"re", "", dt, re}, {"im", "", dt, im}});
    }
    std::cout << "wrote " << out_path(o, "kernel.csv") << "\n";
    return 0;
}

int run_sample(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    const AlphaResolution ar = resolve_alpha(o, prior);
    const SamplingDensity dens = make_density(o, prior, ar);
    const std::size_t s = resolve_sample_count(o, dens);
    const SampleSet set = draw_samples(dens, s, o.seed);
    io::write_samples(out_path(o, "samples.csv"), set);
    write_run_json("sample", o, run_provenance("sample", o, &prior, &ar, &dens, s));
    std::cout << "wrote " << out_path(o, "samples.csv") << " (" << s << " samples, mass "
              << io::format_double(dens.mass()) << ")\n";
    return 0;
}

int run_fit(const Opts& o) {
    if (o.in.empty()) throw UsageError{"fit requires --in (signal JSON or table CSV)"};
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    const SignalSpec sig = load_signal_arg(o.in);
    const NoiseSpec noise = parse_noise_arg(o.noise, o.T);
    const AlphaResolution ar = resolve_alpha(o, prior);
    const SamplingDensity dens = make_density(o, prior, ar);
    const std::size_t s = resolve_sample_count(o, dens);
    const SampleSet set = draw_samples(dens, s, o.seed);
    std::vector<cplx> obs;
    obs.reserve(set.t.size());
    for (const double t : set.t) obs.push_back(query(sig, noise, t));
    const ReconModel model = fit(prior, set, obs, o.epsilon);
    const json prov = run_provenance("fit", o, &prior, &ar, &dens, s);
    io::write_samples(out_path(o, "samples.csv"), set);
    io::write_model(out_path(o, "model.json"), model, prov);
    write_run_json("fit", o, prov);
    std::cout << "wrote " << out_path(o, "model.json") << " (" << s << " samples)\n";
    return 0;
}

int run_eval(const Opts& o) {
    if (o.in.empty()) throw UsageError{"eval requires --in MODEL.json"};
    if (o.grid_n < 2) throw UsageError{"--grid-n must be at least 2"};
    const ReconModel model = io::read_model(o.in);
    const double T = o.T_given ? o.T : model.T;
    const std::vector<double> t = linspace(0.0, T, o.grid_n);
    const std::vector<cplx> v = evaluate_batch(model, t);
    io::write_trace_csv(out_path(o, "eval.csv"), t, v);
    write_run_json("eval", o, run_provenance("eval", o, nullptr, nullptr, nullptr, 0));
    if (o.plot) {
        std::vector<double> re(v.size()), im(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            re[i] = v[i].real();
            im[i] = v[i].imag();
        }
        svg::write_chart(out_path(o, "eval.svg"), "reconstruction",
                         {{"re", "", t, re}, {"im", "", t, im}});
    }
    std::cout << "wrote " << out_path(o, "eval.csv") << "\n";
    return 0;
}

int run_statdim(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    const SpectrumGrid grid = discretize(prior, o.T, o.grid_n);
    const double s = stat_dim(grid, o.epsilon);
    const int count = eig_count(grid, o.epsilon);
    io::write_spectrum_csv(out_path(o, "spectrum.csv"), grid);
    const json summary = {{"statdim", s},
                          {"eig_count", count},
                          {"epsilon", o.epsilon},
                          {"T", o.T},
                          {"grid_n", o.grid_n}};
    io::write_text_atomic(out_path(o, "statdim.json"), summary.dump(2) + "\n");
    write_run_json("statdim", o, run_provenance("statdim", o, &prior, nullptr, nullptr, 0));
    if (o.plot) {
        std::vector<double> idx(grid.lambda.size()), lg(grid.lambda.size());
        for (int i = 0; i < grid.lambda.size(); ++i) {
            idx[i] = double(i);
            lg[i] = std::log10(std::max(grid.lambda[i], 1e-300));
        }
        svg::write_chart(out_path(o, "spectrum.svg"), "eigenvalue decay (log10)",
                         {{"log10 lambda", "", idx, lg}});
    }
    std::cout << "statdim " << io::format_double(s) << "\n"
              << "eig_count " << count << "\n";
    return 0;
}

int run_leverage(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    const LeverageProfile prof = leverage_profile(prior, o.T, o.grid_n, o.epsilon);
    io::write_leverage_csv(out_path(o, "leverage.csv"), prof);
    write_run_json("leverage", o, run_provenance("leverage", o, &prior, nullptr, nullptr, 0));
    if (o.plot) {
        const double alpha = std::max(128.0, 256.0 * prof.statdim);
        const SamplingDensity bound = universal_density(alpha, o.T);
        std::vector<double> b(prof.t.size());
        for (std::size_t i = 0; i < prof.t.size(); ++i) b[i] = bound.density(prof.t[i]);
        svg::write_chart(out_path(o, "leverage.svg"), "leverage profile",
                         {{"tau_hat", "", prof.t, prof.tau},
                          {"universal bound", "", prof.t, b}});
    }
    std::cout << "wrote " << out_path(o, "leverage.csv") << " (statdim "
              << io::format_double(prof.statdim) << ")\n";
    return 0;
}

int run_hard(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    const SpectrumGrid grid = discretize(prior, o.T, o.grid_n);
    const HardInstance inst = hard_instance(grid, o.epsilon, o.seed);
    io::write_trace_csv(out_path(o, "hard.csv"), inst.signal.times, inst.signal.values);
    const json summary = {
        {"m", inst.m}, {"energy", inst.energy}, {"epsilon", o.epsilon}, {"seed", o.seed}};
    io::write_text_atomic(out_path(o, "hard.json"), summary.dump(2) + "\n");
    write_run_json("hard", o, run_provenance("hard", o, &prior, nullptr, nullptr, 0));
    if (o.plot) {
        std::vector<double> re(inst.signal.values.size());
        for (std::size_t i = 0; i < re.size(); ++i) re[i] = inst.signal.values[i].real();
        svg::write_chart(out_path(o, "hard.svg"), "hard instance",
                         {{"re", "", inst.signal.times, re}});
    }
    std::cout << "wrote " << out_path(o, "hard.csv") << " (m " << inst.m << ", energy "
              << io::format_double(inst.energy) << ")\n";
    return 0;
}

int run_synth(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    if (o.atoms < 1) throw UsageError{"--atoms must be at least 1"};
    if (o.grid_n < 2) throw UsageError{"--grid-n must be at least 2"};
    Rng rng(o.seed);
    std::vector<SignalAtom> atoms(o.atoms);
    for (auto& a : atoms) a.node = rng.uniform(0.0, o.T);
    for (auto& a : atoms) a.coeff = cplx(rng.gaussian(), rng.gaussian());
    SynthResult res = synth_signal(prior, std::move(atoms));
    if (res.energy > 0.0) {
        // rescale to unit prior energy
        const double scale = 1.0 / std::sqrt(res.energy);
        for (auto& a : res.signal.atoms) a.coeff *= scale;
        res = synth_signal(prior, std::move(res.signal.atoms));
    }
    io::write_text_atomic(out_path(o, "signal.json"),
                          signal_to_json(res.signal, res.energy).dump(2) + "\n");
    const std::vector<double> t = linspace(0.0, o.T, o.grid_n);
    std::vector<cplx> v;
    v.reserve(t.size());
    const SignalSpec spec = res.signal;
    for (const double ti : t) v.push_back(eval_signal(spec, ti));
    io::write_trace_csv(out_path(o, "signal.csv"), t, v);
    write_run_json("synth", o, run_provenance("synth", o, &prior, nullptr, nullptr, 0));
    if (o.plot) {
        std::vector<double> re(v.size()), im(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            re[i] = v[i].real();
            im[i] = v[i].imag();
        }
        svg::write_chart(out_path(o, "signal.svg"), "synthetic signal",
                         {{"re", "", t, re}, {"im", "", t, im}});
    }
    std::cout << "wrote " << out_path(o, "signal.json") << " (energy "
              << io::format_double(res.energy) << ")\n";
    return 0;
}

int run_bench(const Opts& o) {
    const Prior prior = io::parse_prior_arg(o.prior_arg);
    const NoiseSpec noise = parse_noise_arg(o.noise, o.T);

    SignalSpec truth;
    if (!o.in.empty()) {
        truth = load_signal_arg(o.in);
    } else {
        Rng rng(Rng::substream_seed(o.seed, 0));
        std::vector<SignalAtom> atoms(o.atoms);
        for (auto& a : atoms) a.node = rng.uniform(0.0, o.T);
        for (auto& a : atoms) a.coeff = cplx(rng.gaussian(), rng.gaussian());
        SynthResult res = synth_signal(prior, std::move(atoms));
        if (res.energy > 0.0) {
            const double scale = 1.0 / std::sqrt(res.energy);
            for (auto& a : res.signal.atoms) a.coeff *= scale;
            res = synth_signal(prior, std::move(res.signal.atoms));
        }
        truth = res.signal;
    }
    const auto truth_fn = [&](double t) { return eval_signal(truth, t); };

    const AlphaResolution ar = resolve_alpha(o, prior);
    const std::size_t s_max = o.samples > 0 ? o.samples : 256;
    std::vector<std::size_t> ladder;
    for (std::size_t s = 8; s <= s_max; s *= 2) ladder.push_back(s);
    if (ladder.empty()) ladder.push_back(s_max);

    const auto median_of = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    const auto fit_mse = [&](const SamplingDensity& dens, std::size_t s,
                             std::uint64_t seed) {
        const SampleSet set = draw_samples(dens, s, seed);
        std::vector<cplx> obs;
        obs.reserve(set.t.size());
        for (const double t : set.t) obs.push_back(query(truth, noise, t));
        const ReconModel model = fit(prior, set, obs, o.epsilon);
        const auto model_fn = [&](double t) { return evaluate(model, t); };
        return mean_sq_error(model_fn, truth_fn, o.T, 256).value;
    };

    std::string csv = "method,s,mse\n";
    std::uint64_t stream = 1;
    std::vector<svg::Series> series;
    const SamplingDensity uni = universal_density(ar.alpha, o.T);
    const SamplingDensity flat = uniform_density(std::max(1.0, ar.shat), o.T);
    const auto* band = std::get_if<BandlimitedPrior>(&prior);

    for (const char* method : {"universal", "uniform", "ws"}) {
        if (std::string(method) == "ws" && !band) continue; // needs a Nyquist grid
        svg::Series ser;
        ser.label = method;
        for (const std::size_t s : ladder) {
            std::vector<double> errs;
            for (int trial = 0; trial < o.trials; ++trial) {
                const std::uint64_t seed = Rng::substream_seed(o.seed, stream++);
                if (std::string(method) == "universal")
                    errs.push_back(fit_mse(uni, s, seed));
                else if (std::string(method) == "uniform")
                    errs.push_back(fit_mse(flat, s, seed));
                else {
                    const double h = 1.0 / (2.0 * band->half_width);
                    std::vector<double> nodes(s);
                    std::vector<cplx> vals(s);
                    for (std::size_t k = 0; k < s; ++k) {
                        nodes[k] = double(k) * h;
                        vals[k] = eval_signal(truth, nodes[k]);
                    }
                    const auto ws_fn = [&](double t) { return ws_truncated(nodes, vals, t); };
                    errs.push_back(mean_sq_error(ws_fn, truth_fn, o.T, 256).value);
                }
            }
            const double med = median_of(errs);
            csv += std::string(method) + "," + std::to_string(s) + "," +
                   io::format_double(med) + "\n";
            ser.x.push_back(double(s));
            ser.y.push_back(std::log10(std::max(med, 1e-300)));
        }
        series.push_back(std::move(ser));
    }
    io::write_text_atomic(out_path(o, "bench.csv"), csv);
    write_run_json("bench", o, run_provenance("bench", o, &prior, &ar, nullptr, 0));
    if (o.plot)
        svg::write_chart(out_path(o, "bench.svg"), "reconstruction error (log10 mse)", series);
    std::cout << "wrote " << out_path(o, "bench.csv") << "\n";
    return 0;
}

int run_plot(const Opts& o) {
    if (o.in.empty()) throw UsageError{"plot requires --in FILE.csv"};
    const std::string text = io::read_text(o.in);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw ParseFailure(o.in + ": missing CSV header");
    std::vector<std::string> header;
    {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                header.push_back(line.substr(start));
                break;
            }
            header.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
    }
    if (header.size() < 2) throw ParseFailure(o.in + ": need at least two columns");
    std::vector<std::vector<double>> cols(header.size());
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t start = 0, col = 0;
        while (col < header.size()) {
            const std::size_t comma = line.find(',', start);
            const std::string field = comma == std::string::npos
                                          ? line.substr(start)
                                          : line.substr(start, comma - start);
            cols[col].push_back(io::parse_double(field));
            if (comma == std::string::npos) break;
            start = comma + 1;
            ++col;
        }
        if (col + 1 != header.size())
            throw ParseFailure(o.in + ":" + std::to_string(lineno) + ": ragged row");
    }
    std::vector<svg::Series> series;
    for (std::size_t j = 1; j < header.size(); ++j)
        series.push_back({header[j], "", cols[0], cols[j]});
    const std::string stem = std::filesystem::path(o.in).stem().string();
    svg::write_chart(out_path(o, stem + ".svg"), stem, series);
    std::cout << "wrote " << out_path(o, stem + ".svg") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{"signal reconstruction from non-uniform samples, plus an operator lab"};
    app.require_subcommand(1);

    std::vector<CLI::Option*> t_opts;
    std::vector<CLI::Option*> alpha_opts;
    const auto add_common = [&](CLI::App* sub, bool needs_prior) {
        auto* p = sub->add_option("--prior", o.prior_arg, "prior JSON file or inline JSON");
        if (needs_prior) p->required();
        t_opts.push_back(sub->add_option("--T", o.T, "time window length"));
        sub->add_option("--epsilon", o.epsilon, "accuracy parameter");
        sub->add_option("--grid-n", o.grid_n, "grid resolution");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out", o.out, "output directory");
        sub->add_flag("--plot", o.plot, "also write SVG charts");
    };
    const auto add_sampling = [&](CLI::App* sub) {
        alpha_opts.push_back(
            sub->add_option("--alpha", o.alpha, "explicit density parameter alpha"));
        sub->add_option("--alpha-source", o.alpha_source, "how alpha is chosen")
            ->check(CLI::IsMember({"analytic-bound", "numeric-statdim", "explicit"}));
        sub->add_option("--density", o.density, "sampling density kind")
            ->check(CLI::IsMember({"universal", "bandlimited", "uniform"}));
        sub->add_option("--samples", o.samples, "sample count (overrides --c/--delta)");
        sub->add_option("--c", o.c, "sample-count constant");
        sub->add_option("--delta", o.delta, "sample-count failure parameter");
    };

    auto* sc_kernel = app.add_subcommand("kernel", "tabulate the prior kernel over [-T, T]");
    add_common(sc_kernel, true);
    auto* sc_sample = app.add_subcommand("sample", "draw a weighted sample set");
    add_common(sc_sample, true);
    add_sampling(sc_sample);
    auto* sc_fit = app.add_subcommand("fit", "sample a signal and fit a reconstruction");
    add_common(sc_fit, true);
    add_sampling(sc_fit);
    sc_fit->add_option("--in", o.in, "signal spec JSON or table CSV");
    sc_fit->add_option("--noise", o.noise, "noise spec JSON or 'none'");
    auto* sc_eval = app.add_subcommand("eval", "evaluate a fitted model over a grid");
    add_common(sc_eval, false);
    sc_eval->add_option("--in", o.in, "model JSON path");
    auto* sc_statdim = app.add_subcommand("statdim", "grid spectrum and statistical dimension");
    add_common(sc_statdim, true);
    auto* sc_leverage = app.add_subcommand("leverage", "tabulate the ridge leverage profile");
    add_common(sc_leverage, true);
    auto* sc_hard = app.add_subcommand("hard", "draw a hard reconstruction instance");
    add_common(sc_hard, true);
    auto* sc_synth = app.add_subcommand("synth", "generate a unit-energy synthetic signal");
    add_common(sc_synth, true);
    sc_synth->add_option("--atoms", o.atoms, "number of kernel atoms");
    auto* sc_bench = app.add_subcommand("bench", "error-vs-samples benchmark curves");
    add_common(sc_bench, true);
    add_sampling(sc_bench);
    sc_bench->add_option("--in", o.in, "signal spec JSON (default: internal synth)");
    sc_bench->add_option("--noise", o.noise, "noise spec JSON or 'none'");
    sc_bench->add_option("--trials", o.trials, "trials per sample count");
    sc_bench->add_option("--atoms", o.atoms, "atoms for the internal synth signal");
    auto* sc_plot = app.add_subcommand("plot", "render a CSV artifact as an SVG chart");
    sc_plot->add_option("--in", o.in, "CSV path (first column is x)")->required();
    sc_plot->add_option("--out", o.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    // only the parsed subcommand's options can have been counted
    for (const CLI::Option* opt : t_opts) o.T_given = o.T_given || opt->count() > 0;
    for (const CLI::Option* opt : alpha_opts) o.alpha_given = o.alpha_given || opt->count() > 0;

    try {
        if (sc_kernel->parsed()) return run_kernel(o);
        if (sc_sample->parsed()) return run_sample(o);
        if (sc_fit->parsed()) return run_fit(o);
        if (sc_eval->parsed()) return run_eval(o);
        if (sc_statdim->parsed()) return run_statdim(o);
        if (sc_leverage->parsed()) return run_leverage(o);
        if (sc_hard->parsed()) return run_hard(o);
        if (sc_synth->parsed()) return run_synth(o);
        if (sc_bench->parsed()) return run_bench(o);
        if (sc_plot->parsed()) return run_plot(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.msg << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
