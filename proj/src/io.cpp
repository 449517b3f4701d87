#include "sigrec/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "sigrec/errors.hpp"

namespace sigrec::io {

namespace {

template <class... Ts>
struct overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overload(Ts...) -> overload<Ts...>;

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Parses a CSV body (after the header) into rows of `width` doubles.
std::vector<std::vector<double>> parse_rows(const std::string& text, const std::string& header,
                                            std::size_t width, const std::string& path) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw ParseFailure(path + ": expected header '" + header + "'");
    std::vector<std::vector<double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != width)
            throw ParseFailure(path + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(width) + " fields");
        std::vector<double> row;
        row.reserve(width);
        for (const auto& f : fields) row.push_back(parse_double(f));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double v = 0.0;
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(text.data(), last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseFailure("bad number '" + text + "'");
    return v;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("read failed for " + path);
    return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot open " + tmp);
        out.write(text.data(), std::streamsize(text.size()));
        out.flush();
        if (!out.good()) throw IoFailure("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoFailure("rename " + tmp + " -> " + path + ": " + ec.message());
}

json prior_to_json(const Prior& prior) {
    return std::visit(
        overload{
            [](const SparsePrior& p) {
                json atoms = json::array();
                for (const auto& a : p.atoms) atoms.push_back({{"freq", a.freq}, {"mass", a.mass}});
                return json{{"type", "sparse"}, {"atoms", atoms}};
            },
            [](const BandlimitedPrior& p) {
                return json{{"type", "bandlimited"}, {"half_width", p.half_width}};
            },
            [](const MultibandPrior& p) {
                json bands = json::array();
                for (const auto& b : p.bands)
                    bands.push_back({{"center", b.center}, {"half_width", b.half_width}});
                return json{{"type", "multiband"}, {"bands", bands}};
            },
            [](const GaussianPrior& p) {
                return json{{"type", "gaussian"}, {"stdev", p.stdev}};
            },
            [](const CauchyPrior& p) {
                return json{{"type", "cauchy"}, {"scale", p.scale}};
            },
            [](const GaussianMixturePrior& p) {
                json comps = json::array();
                for (const auto& c : p.components)
                    comps.push_back(
                        {{"center", c.center}, {"stdev", c.stdev}, {"weight", c.weight}});
                return json{{"type", "gaussian_mixture"}, {"components", comps}};
            },
            [](const NumericDensityPrior& p) {
                return json{{"type", "numeric"}, {"knots", p.knots()}, {"values", p.values()}};
            },
        },
        prior);
}

Prior prior_from_json(const json& j) {
    try {
        const std::string type = j.at("type").get<std::string>();
        Prior prior;
        if (type == "sparse") {
            SparsePrior p;
            for (const auto& a : j.at("atoms"))
                p.atoms.push_back({a.at("freq").get<double>(), a.at("mass").get<double>()});
            prior = std::move(p);
        } else if (type == "bandlimited") {
            prior = BandlimitedPrior{j.at("half_width").get<double>()};
        } else if (type == "multiband") {
            MultibandPrior p;
            for (const auto& b : j.at("bands"))
                p.bands.push_back({b.at("center").get<double>(), b.at("half_width").get<double>()});
            prior = std::move(p);
        } else if (type == "gaussian") {
            prior = GaussianPrior{j.at("stdev").get<double>()};
        } else if (type == "cauchy") {
            prior = CauchyPrior{j.at("scale").get<double>()};
        } else if (type == "gaussian_mixture") {
            GaussianMixturePrior p;
            for (const auto& c : j.at("components"))
                p.components.push_back({c.at("center").get<double>(), c.at("stdev").get<double>(),
                                        c.at("weight").get<double>()});
            prior = std::move(p);
        } else if (type == "numeric") {
            prior = NumericDensityPrior(j.at("knots").get<std::vector<double>>(),
                                        j.at("values").get<std::vector<double>>());
        } else {
            throw ParseFailure("unknown prior type '" + type + "'");
        }
        validate(prior);
        return prior;
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("prior JSON: ") + e.what());
    }
}

Prior parse_prior_arg(const std::string& arg) {
    const std::size_t first = arg.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && arg[first] == '{')
        text = arg;
    else
        text = read_text(arg);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("prior JSON: ") + e.what());
    }
    return prior_from_json(j);
}

void write_samples(const std::string& csv_path, const SampleSet& samples) {
    std::string text = "index,t,w\n";
    for (std::size_t i = 0; i < samples.t.size(); ++i) {
        text += std::to_string(i);
        text += ',';
        text += format_double(samples.t[i]);
        text += ',';
        text += format_double(samples.w[i]);
        text += '\n';
    }
    write_text_atomic(csv_path, text);
    const json meta = {{"kind", samples.density_kind}, {"seed", samples.seed},
                       {"T", samples.T},               {"mass", samples.mass},
                       {"alpha", samples.alpha},       {"F", samples.F},
                       {"epsilon", samples.epsilon},   {"q", samples.q}};
    write_text_atomic(csv_path + ".meta.json", meta.dump(2) + "\n");
}

SampleSet read_samples(const std::string& csv_path) {
    SampleSet s;
    const auto rows = parse_rows(read_text(csv_path), "index,t,w", 3, csv_path);
    s.t.reserve(rows.size());
    s.w.reserve(rows.size());
    for (const auto& row : rows) {
        s.t.push_back(row[1]);
        s.w.push_back(row[2]);
    }
    try {
        const json meta = json::parse(read_text(csv_path + ".meta.json"));
        s.density_kind = meta.at("kind").get<std::string>();
        s.seed = meta.at("seed").get<std::uint64_t>();
        s.T = meta.at("T").get<double>();
        s.mass = meta.at("mass").get<double>();
        s.alpha = meta.at("alpha").get<double>();
        s.F = meta.at("F").get<double>();
        s.epsilon = meta.at("epsilon").get<double>();
        s.q = meta.at("q").get<int>();
    } catch (const json::exception& e) {
        throw ParseFailure(csv_path + ".meta.json: " + e.what());
    }
    return s;
}

json model_to_json(const ReconModel& model, const json& provenance) {
    json z = json::array();
    for (const cplx& v : model.z) z.push_back(json::array({v.real(), v.imag()}));
    json j = {{"format", "sigrec-model"},
              {"prior", prior_to_json(model.prior)},
              {"T", model.T},
              {"epsilon", model.epsilon},
              {"t", model.t},
              {"z", z}};
    if (!provenance.is_null()) j["provenance"] = provenance;
    return j;
}

ReconModel model_from_json(const json& j) {
    try {
        if (j.at("format").get<std::string>() != "sigrec-model")
            throw ParseFailure("not a sigrec-model document");
        ReconModel m;
        m.prior = prior_from_json(j.at("prior"));
        m.T = j.at("T").get<double>();
        m.epsilon = j.at("epsilon").get<double>();
        m.t = j.at("t").get<std::vector<double>>();
        for (const auto& pair : j.at("z")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseFailure("coefficient entries must be [re, im] pairs");
            m.z.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        if (m.z.size() != m.t.size())
            throw ParseFailure("node and coefficient counts differ");
        return m;
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("model JSON: ") + e.what());
    }
}

void write_model(const std::string& path, const ReconModel& model, const json& provenance) {
    write_text_atomic(path, model_to_json(model, provenance).dump(2) + "\n");
}

ReconModel read_model(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw ParseFailure(path + ": " + e.what());
    }
    return model_from_json(j);
}

void write_spectrum_csv(const std::string& path, const SpectrumGrid& grid) {
    std::string text = "index,lambda\n";
    for (int i = 0; i < grid.lambda.size(); ++i) {
        text += std::to_string(i);
        text += ',';
        text += format_double(grid.lambda[i]);
        text += '\n';
    }
    write_text_atomic(path, text);
}

void write_leverage_csv(const std::string& path, const LeverageProfile& prof) {
    std::string text = "t,tau_hat\n";
    for (std::size_t i = 0; i < prof.t.size(); ++i) {
        text += format_double(prof.t[i]);
        text += ',';
        text += format_double(prof.tau[i]);
        text += '\n';
    }
    write_text_atomic(path, text);
}

void write_trace_csv(const std::string& path, const std::vector<double>& t,
                     const std::vector<cplx>& v) {
    if (t.size() != v.size()) throw DimensionMismatch("trace times and values differ in length");
    std::string text = "t,re,im\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        text += format_double(t[i]);
        text += ',';
        text += format_double(v[i].real());
        text += ',';
        text += format_double(v[i].imag());
        text += '\n';
    }
    write_text_atomic(path, text);
}

TableSignal read_trace_csv(const std::string& path) {
    const auto rows = parse_rows(read_text(path), "t,re,im", 3, path);
    TableSignal sig;
    sig.times.reserve(rows.size());
    sig.values.reserve(rows.size());
    for (const auto& row : rows) {
        if (!sig.times.empty() && row[0] <= sig.times.back())
            throw ParseFailure(path + ": times must be strictly increasing");
        sig.times.push_back(row[0]);
        sig.values.emplace_back(row[1], row[2]);
    }
    return sig;
}

} // namespace sigrec::io
