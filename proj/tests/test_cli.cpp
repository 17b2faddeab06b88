#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "causetq/io.hpp"
#include "causetq/oracle.hpp"

using namespace causetq;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = CAUSET_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("causetq_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int line_count(const fs::path& p) {
    std::ifstream in(p);
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    return lines;
}

}  // namespace

TEST_CASE("gen is deterministic and validates flags") {
    TempDir tmp;
    const std::string a = (tmp.path / "a.json").string();
    const std::string b = (tmp.path / "b.json").string();
    CHECK(run("gen --dim 2 --box 0,0,24,16 --density 1.5 --seed 7 --output " + a) == 0);
    CHECK(run("gen --dim 2 --box 0,0,24,16 --density 1.5 --seed 7 --output " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());

    CHECK(run("gen --dim 2 --box 0,0,24,16 --density 0 --seed 7 --output " + a) == 2);
    CHECK(run("gen --dim 2 --box 0,0,24 --density 1 --seed 7 --output " + a) == 2);
    CHECK(run("gen --box 0,0,24,16 --density 1 --output " + a) == 2);  // seed required
    CHECK(run("frobnicate") == 2);
}

TEST_CASE("quantify partitions events between csv and sidecar") {
    TempDir tmp;
    CHECK(run("scenario --name fig3 --output " + tmp.path.string()) == 0);
    const fs::path causet = tmp.path / "fig3.causet.json";
    const fs::path frame = tmp.path / "fig3.frame_PQ.json";
    const fs::path csv = tmp.path / "out.csv";
    CHECK(run("quantify --input " + causet.string() + " --frame " + frame.string() +
              " --output " + csv.string()) == 0);

    const LoadedCauset loaded = load_causet_json(causet);
    const int rows = line_count(csv) - 1;  // header
    const json sidecar = json::parse(slurp(csv.string() + ".sidecar.json"));
    CHECK(rows + sidecar.at("unquantified").size() == loaded.causet.size());
    CHECK(rows > 0);

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "event_id,p,q,t,x,scalar,class");
}

TEST_CASE("quantify rejects an unsynchronized frame with exit 4") {
    TempDir tmp;
    CHECK(run("scenario --name fig2b --output " + tmp.path.string()) == 0);
    const fs::path causet = tmp.path / "fig2b.causet.json";
    const fs::path frame = tmp.path / "fig2b.frame_PQ.json";

    // Corrupt the frame: keep every second quantifying event of P.
    json f = json::parse(slurp(frame));
    json thinned_events = json::array();
    json thinned_vals = json::array();
    for (std::size_t i = 0; i < f["P"]["events"].size(); i += 2) {
        thinned_events.push_back(f["P"]["events"][i]);
        thinned_vals.push_back(thinned_vals.size());
    }
    f["P"]["events"] = thinned_events;
    f["P"]["valuations"] = thinned_vals;
    const fs::path bad = tmp.path / "bad_frame.json";
    std::ofstream(bad) << f.dump();

    CHECK(run("quantify --input " + causet.string() + " --frame " + bad.string() +
              " --output " + (tmp.path / "x.csv").string()) == 4);
}

TEST_CASE("frames reports the relation and exit codes") {
    TempDir tmp;

    // A rest frame and a moving pair drifting between its chains.
    const double v = 0.2;
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    EmbeddedCauset ec = EmbeddedCauset::from_points(2, {0.0, 110.0, 0.0, 64.0}, {});
    ec.embed_observer({4.0, 0, 0, 0, 1.0, 0.0}, "P");
    ec.embed_observer({44.0, 0, 0, 0, 1.0, 0.0}, "Q");
    ec.embed_observer({8.3, 0, v, 0, 1.0, 0.0}, "P2");
    ec.embed_observer({8.3 + 30.5 / gamma, 0, v, 0, 1.0, 0.0}, "Q2");

    const fs::path causet = tmp.path / "causet.json";
    const fs::path rest = tmp.path / "rest.json";
    const fs::path rest_reversed = tmp.path / "rest_reversed.json";
    const fs::path moving = tmp.path / "moving.json";
    save_causet_json(causet, ec);
    save_frame_json(rest, ec.chain("P"), ec.chain("Q"));
    save_frame_json(rest_reversed, ec.chain("Q"), ec.chain("P"));
    save_frame_json(moving, ec.chain("P2"), ec.chain("Q2"));

    const fs::path report = tmp.path / "report.json";
    CHECK(run("frames --input " + causet.string() + " --frame " + rest.string() +
              " --frame2 " + moving.string() + " --output " + report.string()) == 0);
    const json forward = json::parse(slurp(report));
    CHECK(std::abs(forward.at("beta").get<double>() - v) <= 0.05);

    SUBCASE("interchanging the reference chains negates beta") {
        CHECK(run("frames --input " + causet.string() + " --frame " +
                  rest_reversed.string() + " --frame2 " + moving.string() +
                  " --output " + report.string()) == 0);
        const json reversed = json::parse(slurp(report));
        CHECK(std::abs(reversed.at("beta").get<double>() + v) <= 0.05);
        CHECK(reversed.at("m").get<double>() == forward.at("n").get<double>());
        CHECK(reversed.at("n").get<double>() == forward.at("m").get<double>());
    }

    SUBCASE("identical frames are mutually at rest") {
        CHECK(run("frames --input " + causet.string() + " --frame " + rest.string() +
                  " --frame2 " + rest.string() + " --output " + report.string()) == 0);
        const json self = json::parse(slurp(report));
        CHECK(self.at("beta").get<double>() == 0.0);
        CHECK(self.at("m").get<double>() == 1.0);
        CHECK(self.at("n").get<double>() == 1.0);
    }
}

TEST_CASE("frames exits 5 when the chains are not coordinated") {
    TempDir tmp;

    // Wobbly chain: tick spacing alternates 1 and 3 against the references.
    const int nw = 8, np = 32;
    const EventId w0 = 0, w20 = nw, p0 = 2 * nw, q0 = 2 * nw + np;
    std::vector<IdPair> edges;
    for (int i = 0; i + 1 < nw; ++i) {
        edges.emplace_back(w0 + i, w0 + i + 1);
        edges.emplace_back(w20 + i, w20 + i + 1);
        edges.emplace_back(w0 + i, w20 + i + 1);
        edges.emplace_back(w20 + i, w0 + i + 1);
    }
    for (int i = 0; i + 1 < np; ++i) {
        edges.emplace_back(p0 + i, p0 + i + 1);
        edges.emplace_back(q0 + i, q0 + i + 1);
        edges.emplace_back(p0 + i, q0 + i + 1);
        edges.emplace_back(q0 + i, p0 + i + 1);
    }
    for (int i = 0; i < nw; ++i) {
        const int arrival = 4 * (i / 2) + (i % 2) + 1;
        if (arrival < np) {
            edges.emplace_back(w0 + i, p0 + arrival);
            edges.emplace_back(w0 + i, q0 + arrival);
        }
    }
    const CausalSet cs = CausalSet::build(2 * nw + 2 * np, edges);

    const fs::path causet = tmp.path / "causet.json";
    save_causet_json(causet, cs);
    auto ids = [](EventId base, int count) {
        std::vector<EventId> v;
        for (int i = 0; i < count; ++i) v.push_back(base + i);
        return v;
    };
    auto vals = [](int count) {
        std::vector<long long> v;
        for (int i = 0; i < count; ++i) v.push_back(i);
        return v;
    };
    const fs::path ref = tmp.path / "ref.json";
    const fs::path wobble = tmp.path / "wobble.json";
    save_frame_json(ref, ObserverChain(cs, ids(p0, np), vals(np)),
                    ObserverChain(cs, ids(q0, np), vals(np)));
    save_frame_json(wobble, ObserverChain(cs, ids(w0, nw), vals(nw)),
                    ObserverChain(cs, ids(w20, nw), vals(nw)));

    CHECK(run("frames --input " + causet.string() + " --frame " + ref.string() +
              " --frame2 " + wobble.string()) == 5);
}

TEST_CASE("frames recovers the fig6 velocity through files") {
    TempDir tmp;
    CHECK(run("scenario --name fig6 --output " + tmp.path.string()) == 0);
    const fs::path report = tmp.path / "r.json";
    CHECK(run("frames --input " + (tmp.path / "fig6.causet.json").string() + " --frame " +
              (tmp.path / "fig6.frame_rest.json").string() + " --frame2 " +
              (tmp.path / "fig6.frame_moving.json").string() + " --output " +
              report.string()) == 0);
    const json r = json::parse(slurp(report));
    CHECK(std::abs(r.at("beta").get<double>() - 0.6) <= 0.05);
}

TEST_CASE("missing input files exit 3") {
    TempDir tmp;
    CHECK(run("quantify --input " + (tmp.path / "absent.json").string() + " --frame " +
              (tmp.path / "absent2.json").string() + " --output " +
              (tmp.path / "o.csv").string()) == 3);
    const fs::path garbage = tmp.path / "garbage.json";
    std::ofstream(garbage) << "{not json";
    CHECK(run("quantify --input " + garbage.string() + " --frame " + garbage.string() +
              " --output " + (tmp.path / "o.csv").string()) == 3);
}

TEST_CASE("pythagoras accepts an explicit config file") {
    TempDir tmp;
    CHECK(run("scenario --name fig7 --output " + tmp.path.string()) == 0);
    const json events = json::parse(slurp(tmp.path / "fig7.events.json"));
    json cfg;
    cfg["D_frame"] = "fig7.frame_D.json";
    cfg["X_frame"] = "fig7.frame_X.json";
    cfg["Y_frame"] = "fig7.frame_Y.json";
    cfg["e1"] = events.at("e1");
    cfg["e2"] = events.at("e2");
    cfg["e3"] = events.at("e3");
    const fs::path cfg_path = tmp.path / "cfg.json";
    std::ofstream(cfg_path) << cfg.dump();

    const fs::path report = tmp.path / "p.json";
    CHECK(run("pythagoras --input " + (tmp.path / "fig7.causet.json").string() +
              " --config " + cfg_path.string() + " --output " + report.string()) == 0);
    const json r = json::parse(slurp(report));
    CHECK(r.at("ok").get<bool>());
    CHECK(r.at("dd2").get<double>() > 0.0);
}

TEST_CASE("transform subcommand") {
    TempDir tmp;
    const fs::path report = tmp.path / "t.json";
    CHECK(run("transform --pair 3,1 --rho 2 --output " + report.string()) == 0);
    const json pair_report = json::parse(slurp(report));
    CHECK(pair_report.at("pair").at("scalar_before").get<double>() == 3.0);
    CHECK(pair_report.at("pair").at("scalar_after").get<double>() == 3.0);
    CHECK(pair_report.at("pair").at("invariant").get<bool>());

    CHECK(run("transform --coords 1,0 --beta 0.6 --output " + report.string()) == 0);
    const json boost_report = json::parse(slurp(report));
    CHECK(boost_report.at("coordinates").at("boosted")[0].get<double>() == 1.25);
    CHECK(boost_report.at("coordinates").at("boosted")[1].get<double>() == -0.75);

    CHECK(run("transform") == 2);
}

TEST_CASE("pythagoras subcommand reports both routes") {
    TempDir tmp;
    const fs::path report = tmp.path / "p.json";
    CHECK(run("pythagoras --scenario fig7 --density 4 --output " + report.string()) == 0);
    const json r = json::parse(slurp(report));
    const double scale = r.at("scale").get<double>();
    CHECK(r.at("continuum").at("dd2").get<double>() / (scale * scale) ==
          doctest::Approx(25.0).epsilon(1e-9));
    CHECK(r.at("continuum").at("residual").get<double>() < 1e-9);
    CHECK(r.at("discrete").at("ok").get<bool>());
}

TEST_CASE("validate filters suites and reports json") {
    TempDir tmp;
    const fs::path report = tmp.path / "v.json";
    CHECK(run("validate --only decomposition --output " + report.string()) == 0);
    const json r = json::parse(slurp(report));
    CHECK(r.at("all_pass").get<bool>());
    CHECK(r.at("suites").size() == 1);
    CHECK(r.at("suites")[0].at("name").get<std::string>() == "decomposition");
    CHECK(run("validate --only nonsense") == 2);
}

TEST_CASE("scenario export is addressable by stable names") {
    TempDir tmp;
    for (const std::string name : {"fig5", "fig6"}) {
        CHECK(run("scenario --name " + name + " --output " + tmp.path.string()) == 0);
        CHECK(fs::exists(tmp.path / (name + ".causet.json")));
        CHECK(fs::exists(tmp.path / (name + ".events.json")));
    }
    CHECK(fs::exists(tmp.path / "fig5.frame_QR.json"));
    CHECK(run("scenario --name bogus --output " + tmp.path.string()) == 2);
}
