#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Spawns the installed binary (path injected by the build) and checks exit
// codes and written artifacts; the library side is covered by unit_tests.

#include "sigrec/io.hpp"
#include "sigrec/prior.hpp"
#include "sigrec/recon.hpp"
#include "sigrec/sampling.hpp"
#include "sigrec/signals.hpp"

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace sigrec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("sigrec-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SIGREC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const std::string kBandlimited = "'{\"type\": \"bandlimited\", \"half_width\": 1.5}'";
const std::string kSparse =
    "'{\"type\": \"sparse\", \"atoms\": [{\"freq\": -1.7, \"mass\": 0.5}, "
    "{\"freq\": 2.9, \"mass\": 0.5}]}'";

} // namespace

TEST_CASE("help exits zero, misuse exits two, runtime failure exits one") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("sample --help") == 0);

    CHECK(run_cli("--no-such-flag") == 2);
    CHECK(run_cli("sample") == 2);                       // --prior is required
    CHECK(run_cli("kernel --prior " + kBandlimited + " --bogus 1") == 2);
    TempDir dir;
    CHECK(run_cli("fit --prior " + kBandlimited + " --out " + dir.file("o")) == 2);
    CHECK(run_cli("sample --prior " + kSparse + " --density bandlimited --out " +
                  dir.file("o2")) == 2);                 // density needs a bandlimited prior

    CHECK(run_cli("eval --in " + dir.file("missing.json")) == 1);
    CHECK(run_cli("sample --prior '{\"type\": \"gaussian\", \"stdev\": -2}' --out " +
                  dir.file("o3")) == 1);                 // invalid prior is a runtime error
}

TEST_CASE("sample honors the requested count and records provenance") {
    TempDir dir;
    const std::string out = dir.file("run");
    REQUIRE(run_cli("sample --prior " + kBandlimited + " --samples 37 --seed 5 --out " + out) ==
            0);

    const SampleSet s = io::read_samples(out + "/samples.csv");
    CHECK(s.t.size() == 37);
    CHECK(s.seed == 5);
    CHECK(s.density_kind == "universal");

    const io::json run = io::json::parse(io::read_text(out + "/sample.run.json"));
    CHECK(run.at("samples").get<std::size_t>() == 37);
    CHECK(run.at("seed").get<std::uint64_t>() == 5);
    CHECK(run.at("alpha").get<double>() >= 128.0);
    // nothing in the provenance may depend on where the artifacts landed
    CHECK(io::read_text(out + "/sample.run.json").find(out) == std::string::npos);
}

TEST_CASE("reruns with identical flags are byte-identical across directories") {
    TempDir a, b;
    const std::string signal = "'{\"type\": \"synthetic\", \"prior\": {\"type\": "
                               "\"bandlimited\", \"half_width\": 1.5}, \"atoms\": "
                               "[{\"node\": 0.3, \"coeff\": [1, 0]}, {\"node\": 0.7, "
                               "\"coeff\": [0.5, -0.5]}]}'";
    const std::string flags = "fit --prior " + kBandlimited + " --in " + signal +
                              " --samples 24 --seed 11 --epsilon 1e-3 --out ";
    REQUIRE(run_cli(flags + a.file("x")) == 0);
    REQUIRE(run_cli(flags + b.file("y")) == 0);

    for (const char* name : {"samples.csv", "samples.csv.meta.json", "model.json",
                             "fit.run.json"}) {
        CAPTURE(name);
        CHECK(io::read_text(a.file("x") + "/" + std::string(name)) ==
              io::read_text(b.file("y") + "/" + std::string(name)));
    }
}

TEST_CASE("eval on a persisted model reproduces in-memory evaluation") {
    TempDir dir;
    const std::string out = dir.file("run");
    const std::string signal = "'{\"type\": \"synthetic\", \"prior\": {\"type\": \"sparse\", "
                               "\"atoms\": [{\"freq\": -1.7, \"mass\": 0.5}, {\"freq\": 2.9, "
                               "\"mass\": 0.5}]}, \"atoms\": [{\"node\": 0.25, \"coeff\": "
                               "[1, 0.5]}, {\"node\": 0.6, \"coeff\": [-0.3, 0.2]}]}'";
    REQUIRE(run_cli("fit --prior " + kSparse + " --in " + signal +
                    " --samples 16 --seed 9 --epsilon 1e-3 --out " + out) == 0);
    REQUIRE(run_cli("eval --in " + out + "/model.json --grid-n 101 --out " + out) == 0);

    // rebuild the same model in process from the persisted sample set
    const ReconModel model = io::read_model(out + "/model.json");
    const TableSignal trace = io::read_trace_csv(out + "/eval.csv");
    REQUIRE(trace.times.size() == 101);
    CHECK(trace.times.front() == 0.0);
    CHECK(trace.times.back() == model.T);
    const std::vector<cplx> direct = evaluate_batch(model, trace.times);
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        CHECK(std::abs(trace.values[i] - direct[i]) <= 1e-12);
}

TEST_CASE("plot flag adds charts without disturbing the data artifacts") {
    TempDir a, b;
    const std::string base = "leverage --prior " + kBandlimited +
                             " --grid-n 64 --epsilon 1e-2 --out ";
    REQUIRE(run_cli(base + a.file("plain")) == 0);
    REQUIRE(run_cli(base + b.file("plotted") + " --plot") == 0);

    CHECK(io::read_text(a.file("plain") + "/leverage.csv") ==
          io::read_text(b.file("plotted") + "/leverage.csv"));
    CHECK(!fs::exists(a.file("plain") + "/leverage.svg"));
    CHECK(fs::exists(b.file("plotted") + "/leverage.svg"));

    // plot subcommand renders any CSV artifact
    REQUIRE(run_cli("plot --in " + b.file("plotted") + "/leverage.csv --out " +
                    b.file("plotted")) == 0);
}

TEST_CASE("statdim reports the spectrum summary") {
    TempDir dir;
    const std::string out = dir.file("run");
    REQUIRE(run_cli("statdim --prior " + kSparse + " --grid-n 64 --epsilon 1e-3 --out " + out) ==
            0);
    const io::json summary = io::json::parse(io::read_text(out + "/statdim.json"));
    // two unit-mass-split atoms: statdim just under 2, eig_count exactly 2
    CHECK(summary.at("statdim").get<double>() > 1.9);
    CHECK(summary.at("statdim").get<double>() < 2.0);
    CHECK(summary.at("eig_count").get<int>() == 2);
    CHECK(fs::exists(out + "/spectrum.csv"));
}
