#ifndef SIGREC_IO_HPP
#define SIGREC_IO_HPP

// File formats: shortest round-trip number text, atomic writes, a JSON schema
// for priors and fitted models, CSV tables for samples, spectra, leverage
// profiles, and signal traces.

#include <string>
#include <vector>

#include "json.hpp"

#include "sigrec/prior.hpp"
#include "sigrec/recon.hpp"
#include "sigrec/sampling.hpp"
#include "sigrec/signals.hpp"
#include "sigrec/spectral.hpp"

namespace sigrec::io {

using json = nlohmann::json;

// Shortest decimal string that parses back to the identical double.
std::string format_double(double v);
double parse_double(const std::string& text);

std::string read_text(const std::string& path);
// Writes to <path>.tmp then renames it in, so readers never see a torn file.
void write_text_atomic(const std::string& path, const std::string& text);

// {"type": "sparse"|"bandlimited"|"multiband"|"gaussian"|"cauchy"|
//  "gaussian_mixture"|"numeric", ...family fields}. Parsing validates.
json prior_to_json(const Prior& prior);
Prior prior_from_json(const json& j);
// Accepts either an inline JSON object (first non-space byte '{') or a path.
Prior parse_prior_arg(const std::string& arg);

// samples CSV "index,t,w" plus a sidecar <csv_path>.meta.json that records
// the density kind, its parameters, the seed, T, and the mass.
void write_samples(const std::string& csv_path, const SampleSet& samples);
SampleSet read_samples(const std::string& csv_path);

json model_to_json(const ReconModel& model, const json& provenance);
ReconModel model_from_json(const json& j);
void write_model(const std::string& path, const ReconModel& model, const json& provenance);
ReconModel read_model(const std::string& path);

void write_spectrum_csv(const std::string& path, const SpectrumGrid& grid); // index,lambda
void write_leverage_csv(const std::string& path, const LeverageProfile& prof); // t,tau_hat

// trace CSV "t,re,im"
void write_trace_csv(const std::string& path, const std::vector<double>& t,
                     const std::vector<cplx>& v);
TableSignal read_trace_csv(const std::string& path);

} // namespace sigrec::io

#endif
