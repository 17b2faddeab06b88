#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "causetq/frames.hpp"
#include "causetq/io.hpp"
#include "causetq/pythagoras.hpp"
#include "causetq/scenarios.hpp"
#include "causetq/validate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 failed validation, 2 invalid flags, 3 I/O failure,
// 4 frame not synchronized, 5 frames not coordinated.
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitSync = 4;
constexpr int kExitCoordination = 5;

std::vector<double> parse_numbers(const std::string& csv) {
    std::vector<double> values;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) values.push_back(std::stod(item));
    return values;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    out << text << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

struct GenOptions {
    int dim = 2;
    std::string box;
    double density = 1.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    const std::vector<double> bounds = parse_numbers(opt.box);
    const std::size_t expected = opt.dim == 2 ? 4 : 6;
    if (bounds.size() != expected) {
        std::cerr << "--box needs " << expected << " comma-separated numbers for --dim "
                  << opt.dim << "\n";
        return kExitUsage;
    }
    causetq::SprinkleConfig config;
    config.dimension = opt.dim;
    config.density = opt.density;
    config.seed = opt.seed;
    if (opt.dim == 2) {
        config.region = {bounds[0], bounds[2], bounds[1], bounds[3]};
    } else {
        config.region = {bounds[0], bounds[3], bounds[1], bounds[4], bounds[2], bounds[5]};
    }

    causetq::EmbeddedCauset ec;
    try {
        ec = causetq::EmbeddedCauset::sprinkle(config);
    } catch (const causetq::RegionError& e) {
        std::cerr << "invalid sprinkle config: " << e.what() << "\n";
        return kExitUsage;
    }
    causetq::save_causet_json(opt.output, ec);
    std::cout << "events: " << ec.event_count() << "\n"
              << "density: " << opt.density << " over volume "
              << config.region.volume(opt.dim) << "\n"
              << "wrote " << opt.output << "\n";
    return 0;
}

int run_quantify(const std::string& input, const std::string& frame_path,
                 const std::string& output) {
    const causetq::LoadedCauset loaded = causetq::load_causet_json(input);
    std::optional<causetq::Frame> frame;
    try {
        frame = causetq::load_frame_json(frame_path, loaded.causet);
    } catch (const causetq::SyncError& e) {
        std::cerr << "frame failed synchronization at index " << e.violation_index << "\n";
        return kExitSync;
    } catch (const causetq::ChainError& e) {
        std::cerr << "invalid chain: " << e.what() << "\n";
        return kExitSync;
    } catch (const causetq::EmptyChainError& e) {
        std::cerr << "invalid chain: " << e.what() << "\n";
        return kExitSync;
    }

    std::vector<causetq::QuantRow> rows;
    json sidecar = json::array();
    for (causetq::EventId e = 0; e < loaded.causet.size(); ++e) {
        auto pair = causetq::quantify_event(loaded.causet, e, *frame);
        if (!pair) {
            sidecar.push_back({{"event_id", e}, {"reason", "no projection"}});
            continue;
        }
        causetq::QuantRow row;
        row.event_id = e;
        row.pair = *pair;
        row.coords = causetq::coordinates(*pair);
        row.scalar = causetq::interval_scalar(*pair);
        row.cls = causetq::classify(*pair);
        rows.push_back(row);
    }
    causetq::write_quantify_csv(output, rows);
    write_text(output + ".sidecar.json", json{{"unquantified", sidecar}}.dump(1));
    std::cout << "quantified " << rows.size() << " of " << loaded.causet.size()
              << " events; " << sidecar.size() << " listed in sidecar\n";
    return 0;
}

int run_frames(const std::string& input, const std::string& frame1_path,
               const std::string& frame2_path, double tolerance,
               const std::string& output) {
    const causetq::LoadedCauset loaded = causetq::load_causet_json(input);
    try {
        const causetq::Frame f1 = causetq::load_frame_json(frame1_path, loaded.causet);
        const causetq::Frame f2 = causetq::load_frame_json(frame2_path, loaded.causet);
        const causetq::FrameRelation r =
            causetq::measure_frame_relation(loaded.causet, f1, f2, tolerance);
        const std::string report = causetq::frame_relation_json(r);
        if (!output.empty()) write_text(output, report);
        std::cout << report << "\n";
    } catch (const causetq::SyncError& e) {
        std::cerr << "frame failed synchronization at index " << e.violation_index << "\n";
        return kExitSync;
    } catch (const causetq::ChainError& e) {
        std::cerr << "invalid chain: " << e.what() << "\n";
        return kExitSync;
    } catch (const causetq::EmptyChainError& e) {
        std::cerr << "invalid chain: " << e.what() << "\n";
        return kExitSync;
    } catch (const causetq::NotCoordinatedError& e) {
        std::cerr << "not coordinated: " << e.what() << "\n";
        return kExitCoordination;
    } catch (const causetq::NoProjectionError& e) {
        std::cerr << "not measurable: " << e.what() << "\n";
        return kExitCoordination;
    }
    return 0;
}

int run_transform(const std::string& pair_csv, double rho, double sigma,
                  const std::string& coords_csv, std::optional<double> beta,
                  const std::string& output) {
    json report;
    if (!pair_csv.empty()) {
        const auto values = parse_numbers(pair_csv);
        if (values.size() != 2) {
            std::cerr << "--pair needs two comma-separated numbers\n";
            return kExitUsage;
        }
        const causetq::ProjectionPair pair{values[0], values[1]};
        const causetq::ProjectionPair transformed = causetq::transform_pair(pair, rho);
        const causetq::InvarianceCheck check = causetq::invariance_check(pair, rho, sigma);
        report["pair"] = {{"input", {pair.p, pair.q}},
                          {"rho", rho},
                          {"sigma", sigma},
                          {"transformed", {sigma * transformed.p, sigma * transformed.q}},
                          {"scalar_before", check.s1},
                          {"scalar_after", check.s2},
                          {"invariant", check.ok}};
    }
    if (!coords_csv.empty()) {
        if (!beta) {
            std::cerr << "--coords requires --beta\n";
            return kExitUsage;
        }
        const auto values = parse_numbers(coords_csv);
        if (values.size() != 2) {
            std::cerr << "--coords needs two comma-separated numbers\n";
            return kExitUsage;
        }
        const causetq::Coordinates c{values[0], values[1]};
        const causetq::Boost boost = causetq::Boost::from_beta(*beta);
        const causetq::Coordinates boosted = causetq::lorentz_transform(c, boost);
        report["coordinates"] = {{"input", {c.t, c.x}},
                                 {"beta", boost.beta},
                                 {"gamma", boost.gamma},
                                 {"boosted", {boosted.t, boosted.x}}};
    }
    if (report.empty()) {
        std::cerr << "nothing to transform: pass --pair or --coords\n";
        return kExitUsage;
    }
    const std::string text = report.dump(1);
    if (!output.empty()) write_text(output, text);
    std::cout << text << "\n";
    return 0;
}

causetq::Frame frame_from_config(const json& cfg, const std::string& key,
                                 const fs::path& base, const causetq::CausalSet& cs) {
    const json& node = cfg.at(key);
    if (node.is_string())
        return causetq::load_frame_json(base / node.get<std::string>(), cs);
    causetq::ObserverChain p(cs, node.at("P").at("events").get<std::vector<causetq::EventId>>(),
                             node.at("P").at("valuations").get<std::vector<long long>>());
    causetq::ObserverChain q(cs, node.at("Q").at("events").get<std::vector<causetq::EventId>>(),
                             node.at("Q").at("valuations").get<std::vector<long long>>());
    return causetq::Frame::make(cs, std::move(p), std::move(q));
}

json pythagoras_report_json(const causetq::PythagorasReport& r) {
    return json{{"dd2", r.dd2},
                {"dx2", r.dx2},
                {"dy2", r.dy2},
                {"residual", r.residual},
                {"ok", r.ok}};
}

int run_pythagoras(const std::string& scenario, double density, const std::string& input,
                   const std::string& config_path, double tolerance,
                   const std::string& output) {
    json report;
    if (!scenario.empty()) {
        if (scenario != "fig7") {
            std::cerr << "pythagoras supports the fig7 scenario\n";
            return kExitUsage;
        }
        causetq::Scenario s = causetq::scenario_fig7(density);
        const double scale = s.params.at("scale");
        const causetq::OrthogonalConfig cfg = causetq::orthogonal_config(s);
        const causetq::PythagorasReport discrete =
            causetq::verify_pythagoras(s.ec.causet(), cfg, tolerance, 1.0);
        auto quantifier = [&s](causetq::EventId e, const causetq::Frame& f) {
            return std::optional<causetq::ProjectionPair>(causetq::ProjectionPair{
                causetq::continuum_valuation(s.ec, s.ec.point(e), f.p_chain()),
                causetq::continuum_valuation(s.ec, s.ec.point(e), f.q_chain())});
        };
        const causetq::PythagorasReport continuum =
            causetq::verify_pythagoras(quantifier, cfg, tolerance, 1e-9);
        report["scale"] = scale;
        report["discrete"] = pythagoras_report_json(discrete);
        report["continuum"] = pythagoras_report_json(continuum);
    } else {
        if (input.empty() || config_path.empty()) {
            std::cerr << "pythagoras needs --scenario fig7 or --input plus --config\n";
            return kExitUsage;
        }
        const causetq::LoadedCauset loaded = causetq::load_causet_json(input);
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open file: " + config_path);
        json cfg_json;
        in >> cfg_json;
        const fs::path base = fs::path(config_path).parent_path();
        causetq::OrthogonalConfig cfg{
            frame_from_config(cfg_json, "D_frame", base, loaded.causet),
            frame_from_config(cfg_json, "X_frame", base, loaded.causet),
            frame_from_config(cfg_json, "Y_frame", base, loaded.causet),
            cfg_json.at("e1").get<causetq::EventId>(),
            cfg_json.at("e2").get<causetq::EventId>(),
            cfg_json.at("e3").get<causetq::EventId>()};
        report = pythagoras_report_json(
            causetq::verify_pythagoras(loaded.causet, cfg, tolerance, 1.0));
    }
    const std::string text = report.dump(1);
    if (!output.empty()) write_text(output, text);
    std::cout << text << "\n";
    return 0;
}

int run_validate(const std::string& only, const std::string& output) {
    std::optional<std::string> filter;
    if (!only.empty()) filter = only;
    std::vector<causetq::CheckResult> results;
    try {
        results = causetq::run_checks(filter);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    bool all_pass = true;
    json suites = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        suites.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    if (!output.empty())
        write_text(output, json{{"suites", suites}, {"all_pass", all_pass}}.dump(1));
    return all_pass ? 0 : kExitValidation;
}

int run_scenario(const std::string& name, const std::string& out_dir, double density) {
    causetq::Scenario s =
        name == "fig7" ? causetq::scenario_fig7(density) : causetq::make_scenario(name);
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    causetq::save_causet_json(dir / (s.name + ".causet.json"), s.ec);
    for (const causetq::NamedFrame& nf : s.frames) {
        causetq::save_frame_json(dir / (s.name + ".frame_" + nf.name + ".json"),
                                 s.ec.chain(nf.p_chain), s.ec.chain(nf.q_chain));
    }
    json events = json::object();
    for (const auto& [event_name, id] : s.events) events[event_name] = id;
    write_text(dir / (s.name + ".events.json"), events.dump(1));
    std::cout << "scenario " << s.name << ": " << s.ec.event_count() << " events, "
              << s.frames.size() << " frames, wrote " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal-set quantification toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "sprinkle a causal set into flat spacetime");
    gen->add_option("--dim", gen_opt.dim, "spacetime dimension (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    gen->add_option("--box", gen_opt.box,
                    "region bounds t0,x0[,y0],t1,x1[,y1]")->required();
    gen->add_option("--density", gen_opt.density, "expected events per unit volume")
        ->required();
    gen->add_option("--seed", gen_opt.seed, "random seed")->required();
    gen->add_option("--output", gen_opt.output, "output causal-set JSON")->required();

    std::string q_input, q_frame, q_output;
    auto* quantify = app.add_subcommand("quantify", "project all events onto a frame");
    quantify->add_option("--input", q_input, "causal-set JSON")->required();
    quantify->add_option("--frame", q_frame, "frame JSON")->required();
    quantify->add_option("--output", q_output, "output CSV")->required();

    std::string f_input, f_frame, f_frame2, f_output;
    double f_tolerance = 0.1;
    auto* frames = app.add_subcommand("frames", "measure the relation between two frames");
    frames->add_option("--input", f_input, "causal-set JSON")->required();
    frames->add_option("--frame", f_frame, "reference frame JSON")->required();
    frames->add_option("--frame2", f_frame2, "observed frame JSON")->required();
    frames->add_option("--tolerance", f_tolerance, "coordination tolerance");
    frames->add_option("--output", f_output, "report JSON path");

    std::string t_pair, t_coords, t_output;
    double t_rho = 1.0, t_sigma = 1.0;
    std::optional<double> t_beta;
    auto* transform = app.add_subcommand("transform", "apply pair or coordinate transforms");
    transform->add_option("--pair", t_pair, "p,q to transform by rho");
    transform->add_option("--rho", t_rho, "frame ratio");
    transform->add_option("--sigma", t_sigma, "scale factor");
    transform->add_option("--coords", t_coords, "t,x to boost");
    transform->add_option("--beta", [&t_beta](const std::vector<std::string>& v) {
        try {
            std::size_t consumed = 0;
            t_beta = std::stod(v.at(0), &consumed);
            return consumed == v.at(0).size();
        } catch (const std::exception&) {
            return false;
        }
    }, "boost speed");
    transform->add_option("--output", t_output, "report JSON path");

    std::string p_scenario, p_input, p_config, p_output;
    double p_density = 4.0, p_tolerance = 8.0;
    auto* pythagoras = app.add_subcommand("pythagoras", "verify the orthogonal decomposition");
    pythagoras->add_option("--scenario", p_scenario, "built-in scenario (fig7)");
    pythagoras->add_option("--density", p_density, "fig7 refinement density");
    pythagoras->add_option("--input", p_input, "causal-set JSON");
    pythagoras->add_option("--config", p_config, "orthogonal config JSON");
    pythagoras->add_option("--tolerance", p_tolerance, "residual tolerance");
    pythagoras->add_option("--output", p_output, "report JSON path");

    std::string v_only, v_output;
    auto* validate = app.add_subcommand("validate", "run the verification suites");
    validate->add_option("--only", v_only, "run a single suite");
    validate->add_option("--output", v_output, "summary JSON path");

    std::string s_name, s_output;
    double s_density = 4.0;
    auto* scenario = app.add_subcommand("scenario", "emit a named standard scenario");
    scenario->add_option("--name,--scenario", s_name, "one of fig2b, fig3, fig5, fig6, fig7")
        ->required()
        ->check(CLI::IsMember(causetq::scenario_names()));
    scenario->add_option("--output", s_output, "output directory")->required();
    scenario->add_option("--density", s_density, "fig7 refinement density");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(gen_opt);
        if (*quantify) return run_quantify(q_input, q_frame, q_output);
        if (*frames) return run_frames(f_input, f_frame, f_frame2, f_tolerance, f_output);
        if (*transform)
            return run_transform(t_pair, t_rho, t_sigma, t_coords, t_beta, t_output);
        if (*pythagoras)
            return run_pythagoras(p_scenario, p_density, p_input, p_config, p_tolerance,
                                  p_output);
        if (*validate) return run_validate(v_only, v_output);
        if (*scenario) return run_scenario(s_name, s_output, s_density);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad input file: " << e.what() << "\n";
        return kExitIo;
    } catch (const causetq::IdRangeError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitIo;
    } catch (const causetq::CycleError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
