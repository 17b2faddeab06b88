#include "causetq/validate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "causetq/frames.hpp"
#include "causetq/io.hpp"
#include "causetq/pythagoras.hpp"
#include "causetq/scenarios.hpp"

namespace causetq {

namespace {

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

CheckResult check_decomposition_identities() {
    CheckResult result{"decomposition", true, ""};
    std::mt19937_64 gen(0xD150);
    const int samples = 10000;
    int failures = 0;
    for (int i = 0; i < samples; ++i) {
        const double p = std::floor(rng::uniform(gen, -1000.0, 1001.0));
        const double q = std::floor(rng::uniform(gen, -1000.0, 1001.0));
        const ProjectionPair pair{p, q};

        // Reconstruction and the product identity are exact on integers.
        const Decomposition d = decompose(pair);
        if (d.symmetric.p + d.antisymmetric.p != p || d.symmetric.q + d.antisymmetric.q != q)
            ++failures;
        const double half_sum = (p + q) / 2.0;
        const double half_diff = (p - q) / 2.0;
        if (p * q != half_sum * half_sum - half_diff * half_diff) ++failures;

        // Powers of the scalar keep the same difference-of-squares form.
        // Relative error is taken against the dominant term: at k = 3 the
        // squares reach 1e18, where the cancelled difference cannot carry
        // more precision than the operands in IEEE double.
        double pk = 1.0, qk = 1.0;
        for (int k = 1; k <= 3; ++k) {
            pk *= p;
            qk *= q;
            const double lhs = pk * qk;
            const double s = (pk + qk) / 2.0;
            const double t = (pk - qk) / 2.0;
            const double scale = std::max({1.0, std::abs(lhs), s * s + t * t});
            if (std::abs(lhs - (s * s - t * t)) > 1e-12 * scale) ++failures;
        }
    }
    result.pass = failures == 0;
    result.detail = std::to_string(samples) + " integer pairs, " +
                    std::to_string(failures) + " identity failures";
    return result;
}

CheckResult check_scalar_audit() {
    CheckResult result{"scalar-audit", true, ""};
    std::mt19937_64 gen(0xA0D1);
    std::vector<std::pair<double, double>> samples;
    while (samples.size() < 1000) {
        const double a = rng::uniform(gen, -10.0, 10.0);
        const double b = rng::uniform(gen, -10.0, 10.0);
        if (std::abs(a) < 0.05 || std::abs(b) < 0.05 || std::abs(a + b) < 0.05 ||
            std::abs(a - b) < 0.05)
            continue;
        samples.emplace_back(a, b);
    }
    const auto table = audit_scalar_candidates(samples, 1e-9);

    std::vector<std::string> survivors;
    std::ostringstream detail;
    bool pass = true;
    for (const auto& row : table) {
        if (!row.passes_decomposition) {
            pass = false;
            detail << row.candidate << " failed decomposition additivity; ";
        }
        if (row.passes_decomposition && row.passes_associativity)
            survivors.push_back(row.candidate);
        if ((row.candidate == "F5" || row.candidate == "F4(n=3)")) {
            if (row.passes_associativity || !row.counterexample) {
                pass = false;
                detail << row.candidate << " should fail associativity with a witness; ";
            } else {
                const auto& w = *row.counterexample;
                detail << row.candidate << " counterexample (a,b,f)=(" << fmt(w[0]) << ","
                       << fmt(w[1]) << "," << fmt(w[2]) << "); ";
            }
        }
    }
    std::sort(survivors.begin(), survivors.end());
    if (survivors != std::vector<std::string>{"F3", "F4(n=1)"}) {
        pass = false;
        detail << "unexpected survivor set; ";
    } else {
        detail << "survivors {F3, F4(n=1)}";
    }
    result.pass = pass;
    result.detail = detail.str();
    return result;
}

CheckResult check_transform_invariance() {
    CheckResult result{"transform-invariance", true, ""};
    std::mt19937_64 gen(0x117A);
    const int samples = 10000;
    int failures = 0;
    int lightlike_failures = 0;
    int mutant_detected = 0;
    int mutant_eligible = 0;
    for (int i = 0; i < samples; ++i) {
        ProjectionPair pair{rng::uniform(gen, -1000.0, 1000.0),
                            rng::uniform(gen, -1000.0, 1000.0)};
        const double rho = rng::uniform(gen, 0.1, 10.0);
        const double sigma = (gen() & 1) ? 1.0 : 2.0;

        if (!invariance_check(pair, rho, sigma).ok) ++failures;

        // Lightlike pairs stay lightlike under every transform.
        ProjectionPair lightlike = pair;
        ((gen() & 1) ? lightlike.p : lightlike.q) = 0.0;
        if (classify(transform_pair(lightlike, rho)) != IntervalClass::Lightlike)
            ++lightlike_failures;

        // Negative control: a transform that scales both components by rho
        // must be caught by the same bound.
        const double s1 = interval_scalar(pair);
        const double mutant_s2 = sigma * sigma * (pair.p * rho) * (pair.q * rho);
        const double expected = sigma * sigma * s1;
        if (std::abs((rho * rho - 1.0) * expected) > 1e-6) {
            ++mutant_eligible;
            if (std::abs(mutant_s2 - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
                ++mutant_detected;
        }
    }
    const bool mutant_ok = mutant_eligible > samples / 2 && mutant_detected == mutant_eligible;
    result.pass = failures == 0 && lightlike_failures == 0 && mutant_ok;
    result.detail = std::to_string(samples) + " samples, " + std::to_string(failures) +
                    " invariance failures, " + std::to_string(lightlike_failures) +
                    " lightlike failures, mutant detected " +
                    std::to_string(mutant_detected) + "/" + std::to_string(mutant_eligible);
    return result;
}

CheckResult check_lorentz_commutation() {
    CheckResult result{"lorentz-commutation", true, ""};
    std::mt19937_64 gen(0x10C0);
    const int samples = 10000;
    int failures = 0;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const ProjectionPair pair{rng::uniform(gen, -1000.0, 1000.0),
                                  rng::uniform(gen, -1000.0, 1000.0)};
        const double rho = rng::uniform(gen, 0.1, 10.0);
        const Boost boost = Boost::from_rho(rho);

        const Coordinates via_pair = coordinates(transform_pair(pair, rho));
        const Coordinates c = coordinates(pair);
        const Coordinates via_boost = lorentz_transform(c, boost);

        const double scale =
            std::max(1.0, boost.gamma * (std::abs(c.t) + std::abs(c.x)));
        const double err = std::max(std::abs(via_pair.t - via_boost.t),
                                    std::abs(via_pair.x - via_boost.x));
        worst = std::max(worst, err / scale);
        if (err > 1e-12 * scale) ++failures;
    }
    result.pass = failures == 0;
    result.detail = std::to_string(samples) + " samples, worst relative deviation " + fmt(worst);
    return result;
}

namespace {

// Independent reachability oracle: depth-first search over the raw edges.
std::vector<std::vector<bool>> brute_force_reach(std::uint32_t n,
                                                 const std::vector<IdPair>& edges) {
    std::vector<std::vector<EventId>> adj(n);
    for (const auto& [a, b] : edges) adj[a].push_back(b);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<EventId> stack;
    for (EventId s = 0; s < n; ++s) {
        stack.assign(1, s);
        while (!stack.empty()) {
            EventId u = stack.back();
            stack.pop_back();
            for (EventId v : adj[u])
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
        }
    }
    return reach;
}

struct RandomDag {
    std::uint32_t n = 0;
    std::vector<IdPair> edges;
};

RandomDag random_dag(std::mt19937_64& gen, std::uint32_t max_n) {
    RandomDag dag;
    dag.n = 2 + static_cast<std::uint32_t>(gen() % (max_n - 1));
    std::vector<EventId> perm(dag.n);
    for (std::uint32_t i = 0; i < dag.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen);
    const double edge_prob = rng::uniform(gen, 0.02, 0.25);
    for (std::uint32_t i = 0; i < dag.n; ++i)
        for (std::uint32_t j = i + 1; j < dag.n; ++j)
            if (rng::uniform01(gen) < edge_prob) dag.edges.emplace_back(perm[i], perm[j]);
    return dag;
}

// Random walk along raw edges; a path is always a chain, possibly singleton.
ObserverChain random_walk_chain(std::mt19937_64& gen, const RandomDag& dag,
                                const CausalSet& cs) {
    std::vector<std::vector<EventId>> adj(dag.n);
    for (const auto& [a, b] : dag.edges) adj[a].push_back(b);
    EventId cur = static_cast<EventId>(gen() % dag.n);
    std::vector<EventId> path{cur};
    while (!adj[cur].empty()) {
        cur = adj[cur][gen() % adj[cur].size()];
        path.push_back(cur);
    }
    std::vector<long long> vals(path.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<long long>(i);
    return ObserverChain(cs, std::move(path), std::move(vals));
}

}  // namespace

CheckResult check_poset_core() {
    CheckResult result{"poset-core", true, ""};
    std::mt19937_64 gen(0x90CE);
    int closure_mismatches = 0;
    int projection_mismatches = 0;
    int monotonicity_failures = 0;
    long long projection_queries = 0;
    long long comparable_pairs = 0;

    for (int trial = 0; trial < 100; ++trial) {
        const RandomDag dag = random_dag(gen, 200);
        const CausalSet cs = CausalSet::build(dag.n, dag.edges);
        const auto reach = brute_force_reach(dag.n, dag.edges);

        for (EventId a = 0; a < dag.n; ++a)
            for (EventId b = 0; b < dag.n; ++b) {
                const bool expected = a == b || reach[a][b];
                if (cs.leq(a, b) != expected) ++closure_mismatches;
            }

        const ObserverChain chain = random_walk_chain(gen, dag, cs);

        for (int query = 0; query < 100; ++query) {
            const EventId x = static_cast<EventId>(gen() % dag.n);
            std::optional<long long> expected;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                const EventId e = chain.event_at(i);
                if (x == e || reach[x][e]) {
                    expected = chain.valuation_at(i);
                    break;
                }
            }
            if (project(cs, x, chain) != expected) ++projection_mismatches;
            ++projection_queries;
        }

        // Projection monotonicity over comparable pairs found by the oracle.
        for (int check = 0; check < 200; ++check) {
            const EventId x = static_cast<EventId>(gen() % dag.n);
            const EventId y = static_cast<EventId>(gen() % dag.n);
            if (!(x == y || reach[x][y])) continue;
            ++comparable_pairs;
            auto px = project(cs, x, chain);
            auto py = project(cs, y, chain);
            if (px && py && *px > *py) ++monotonicity_failures;
        }
    }

    result.pass = closure_mismatches == 0 && projection_mismatches == 0 &&
                  monotonicity_failures == 0 && projection_queries >= 10000;
    std::ostringstream detail;
    detail << "100 random dags; closure mismatches " << closure_mismatches << "; "
           << projection_queries << " projection queries, " << projection_mismatches
           << " mismatches; " << comparable_pairs << " comparable pairs, "
           << monotonicity_failures << " monotonicity failures";
    result.detail = detail.str();
    return result;
}

CheckResult check_oracle_coordinates() {
    CheckResult result{"oracle-coordinates", true, ""};
    SprinkleConfig config;
    config.dimension = 2;
    config.region = {0.0, 64.0, 0.0, 64.0};
    config.density = 4.0;
    config.seed = 0x5EED0A;
    EmbeddedCauset ec = EmbeddedCauset::sprinkle(config);
    ec.embed_observer(WorldlineSpec{28.0, 0, 0, 0, 1.0, 0.0}, "P");
    ec.embed_observer(WorldlineSpec{36.0, 0, 0, 0, 1.0, 0.0}, "Q");
    ec.make_frame("P", "Q");  // validates synchronization

    long long covered = 0;
    double max_err = 0.0;
    double err_sum = 0.0;
    long long err_count = 0;
    for (EventId e = 0; e < ec.sprinkled_count(); ++e) {
        auto rq = maybe_radar_quantify(ec, e, "P", "Q");
        if (!rq) continue;
        ++covered;
        const Coordinates discrete = coordinates(rq->discrete);
        const Coordinates continuum = coordinates(rq->continuum);
        const double et = std::abs(discrete.t - continuum.t);
        const double ex = std::abs(discrete.x - continuum.x);
        max_err = std::max({max_err, et, ex});
        err_sum += et + ex;
        err_count += 2;
    }
    const double mean_err = err_count ? err_sum / static_cast<double>(err_count) : 1e9;
    result.pass = covered >= 500 && max_err < 1.0 && mean_err <= 0.5;
    std::ostringstream detail;
    detail << covered << " covered events, max componentwise error " << fmt(max_err)
           << ", mean " << fmt(mean_err);
    result.detail = detail.str();
    return result;
}

CheckResult check_speed_recovery() {
    CheckResult result{"speed-recovery", true, ""};
    std::ostringstream detail;
    bool pass = true;

    for (double v : {0.0, 0.2, 0.5, 0.8}) {
        Scenario s = scenario_speed(v, 100);
        const Frame rest = s.frame("rest");
        const Frame moving = s.frame("moving");

        int usable = 0;
        for (std::size_t i = 0; i < moving.p_chain().size(); ++i) {
            if (!project(s.ec.causet(), moving.p_chain().event_at(i), rest.p_chain()) ||
                !project(s.ec.causet(), moving.p_chain().event_at(i), rest.q_chain()))
                break;
            ++usable;
        }
        if (usable < 100) pass = false;

        const FrameRelation r = measure_frame_relation(s.ec.causet(), rest, moving);
        const double err = std::abs(r.beta - v);
        if (err > 0.05) pass = false;
        detail << "v=" << fmt(v) << " beta=" << fmt(r.beta) << " (" << usable << " ticks) ";
    }

    // Analytic composition: rho multiplication is velocity addition.
    std::mt19937_64 gen(0x5BEED);
    int analytic_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const double b1 = rng::uniform(gen, -0.99, 0.99);
        const double b2 = rng::uniform(gen, -0.99, 0.99);
        const double rho1 = std::sqrt((1.0 + b1) / (1.0 - b1));
        const double rho2 = std::sqrt((1.0 + b2) / (1.0 - b2));
        const double composed = Boost::from_rho(rho1 * rho2).beta;
        const double expected = (b1 + b2) / (1.0 + b1 * b2);
        if (std::abs(composed - expected) > 1e-12) ++analytic_failures;
    }
    if (analytic_failures > 0) pass = false;
    detail << "analytic failures " << analytic_failures << "; ";

    // Oracle-measured chain of three frames.
    Scenario three = scenario_three_frames();
    const CausalSet& cs = three.ec.causet();
    const Frame fa = three.frame("A");
    const Frame fb = three.frame("B");
    const Frame fc = three.frame("C");
    const FrameRelation rab = measure_frame_relation(cs, fa, fb);
    const FrameRelation rbc = measure_frame_relation(cs, fb, fc);
    const FrameRelation rac = measure_frame_relation(cs, fa, fc);
    const FrameRelation composed = compose_relations(rab, rbc);
    const double comp_err = std::abs(composed.beta - rac.beta);
    if (comp_err > 0.05) pass = false;
    detail << "measured beta_ab=" << fmt(rab.beta) << " beta_bc=" << fmt(rbc.beta)
           << " beta_ac=" << fmt(rac.beta) << " composed=" << fmt(composed.beta);

    result.pass = pass;
    result.detail = detail.str();
    return result;
}

namespace {

PairQuantifier continuum_quantifier(const EmbeddedCauset& ec) {
    return [&ec](EventId e, const Frame& f) -> std::optional<ProjectionPair> {
        return ProjectionPair{continuum_valuation(ec, ec.point(e), f.p_chain()),
                              continuum_valuation(ec, ec.point(e), f.q_chain())};
    };
}

// Mean tick-discretization residual at a given refinement, normalized to the
// unit triangle. Replicas jitter the tick phases and the geometric scale so
// the average is not hostage to where the leg lengths fall between ticks.
double fig7_mean_discrete_residual(double density, int replicas) {
    double sum = 0.0;
    for (int r = 0; r < replicas; ++r) {
        const double phase = std::fmod(0.6180339887498949 * (r + 1), 1.0);
        const double jitter = 1.0 + 0.08 * (std::fmod(0.7548776662466927 * (r + 1), 1.0) - 0.5);
        Scenario s = scenario_fig7(density, phase, jitter);
        const double scale = s.params.at("scale");
        const OrthogonalConfig cfg = orthogonal_config(s);
        const PythagorasReport report =
            verify_pythagoras(s.ec.causet(), cfg, 1e30, 1.0);
        sum += report.residual / (scale * scale);
    }
    return sum / replicas;
}

}  // namespace

CheckResult check_pythagoras() {
    CheckResult result{"pythagoras", true, ""};
    std::ostringstream detail;
    bool pass = true;

    // Continuum route: radar quantification recovers the exact triangle.
    Scenario s = scenario_fig7(4.0);
    const double scale = s.params.at("scale");
    const double norm = 1.0 / (scale * scale);
    const OrthogonalConfig cfg = orthogonal_config(s);
    const PythagorasReport cont =
        verify_pythagoras(continuum_quantifier(s.ec), cfg, 1e-9 * 25.0, 1e-9);
    const double dd2 = cont.dd2 * norm;
    const double dx2 = cont.dx2 * norm;
    const double dy2 = cont.dy2 * norm;
    if (!close_rel(dd2, 25.0, 1e-9) || !close_rel(dx2, 16.0, 1e-9) ||
        !close_rel(dy2, 9.0, 1e-9) || !cont.ok)
        pass = false;
    detail << "continuum dd2=" << fmt(dd2) << " dx2=" << fmt(dx2) << " dy2=" << fmt(dy2)
           << " residual=" << fmt(cont.residual * norm) << "; ";

    // Discrete residual shrinks as the configuration is refined.
    const double r1 = fig7_mean_discrete_residual(1.0, 64);
    const double r4 = fig7_mean_discrete_residual(4.0, 64);
    const double r16 = fig7_mean_discrete_residual(16.0, 64);
    if (!(r1 > r4 && r4 > r16)) pass = false;
    detail << "discrete mean residuals " << fmt(r1) << " > " << fmt(r4) << " > " << fmt(r16);

    result.pass = pass;
    result.detail = detail.str();
    return result;
}

CheckResult check_consistency_flagging() {
    CheckResult result{"consistency-flagging", true, ""};
    Scenario s = scenario_fig5();
    const CausalSet& cs = s.ec.causet();
    const std::vector<Frame> frames{s.frame("PQ"), s.frame("QR"), s.frame("RS")};
    const CrossValidation cv =
        cross_validate(cs, s.event("a"), s.event("b"), frames, 0.0);

    const FrameObservation& pq = cv.frames[0];
    const FrameObservation& qr = cv.frames[1];
    const FrameObservation& rs = cv.frames[2];

    bool pass = true;
    if (!(qr.quantified && qr.bounding && qr.scalar < 0.0)) pass = false;
    for (const FrameObservation* obs : {&pq, &rs}) {
        if (!(obs->quantified && obs->non_bounding && obs->oriented_pair.p > 0.0 &&
              obs->oriented_pair.q > 0.0))
            pass = false;
    }
    if (cv.consensus) pass = false;

    std::ostringstream detail;
    detail << "QR scalar " << fmt(qr.scalar) << " (bounding); PQ pair (" << fmt(pq.pair.p)
           << "," << fmt(pq.pair.q) << ") RS oriented (" << fmt(rs.oriented_pair.p) << ","
           << fmt(rs.oriented_pair.q) << "), both flagged non-bounding";
    result.pass = pass;
    result.detail = detail.str();
    return result;
}

std::vector<std::string> check_names() {
    return {"decomposition",      "scalar-audit",       "transform-invariance",
            "lorentz-commutation", "oracle-coordinates", "speed-recovery",
            "pythagoras",          "consistency-flagging", "poset-core"};
}

std::vector<CheckResult> run_checks(const std::optional<std::string>& only) {
    using CheckFn = CheckResult (*)();
    const std::pair<std::string, CheckFn> checks[] = {
        {"decomposition", check_decomposition_identities},
        {"scalar-audit", check_scalar_audit},
        {"transform-invariance", check_transform_invariance},
        {"lorentz-commutation", check_lorentz_commutation},
        {"oracle-coordinates", check_oracle_coordinates},
        {"speed-recovery", check_speed_recovery},
        {"pythagoras", check_pythagoras},
        {"consistency-flagging", check_consistency_flagging},
        {"poset-core", check_poset_core},
    };
    std::vector<CheckResult> results;
    bool matched = false;
    for (const auto& [name, fn] : checks) {
        if (only && *only != name) continue;
        matched = true;
        results.push_back(fn());
    }
    if (only && !matched) throw std::invalid_argument("unknown suite: " + *only);
    return results;
}

}  // namespace causetq
