#include "eccforge/cli.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "eccforge/fitness.hpp"
#include "eccforge/ga.hpp"
#include "eccforge/pso.hpp"
#include "eccforge/rho_attack.hpp"
#include "eccforge/simnet/entity_a.hpp"
#include "eccforge/simnet/entity_b.hpp"
#include "eccforge/simnet/orders.hpp"
#include "eccforge/simnet/params_file.hpp"

namespace eccforge::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string utc_now()
{
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)));
}

fs::path resolve_out_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("ECCFORGE_OUT"); env && *env)
        return env;
    return "out";
}

std::vector<fs::path> curve_search_dirs(const fs::path& out_dir)
{
    return {out_dir, fs::current_path(), simnet::default_data_dir()};
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw std::runtime_error("cannot write " + path.string());
}

void write_manifest(const fs::path& path, const std::string& subcommand, ordered_json config, std::uint64_t seed,
                    const std::string& started, const std::vector<fs::path>& outputs)
{
    ordered_json m;
    m["subcommand"] = subcommand;
    m["config"] = std::move(config);
    m["seed"] = seed;
    m["started_at"] = started;
    m["finished_at"] = utc_now();
    ordered_json files = ordered_json::array();
    for (const auto& p : outputs)
        files.push_back(p.string());
    m["outputs"] = files;
    write_text(path, m.dump(2) + "\n");
}

struct ProbeFlags {
    fitness::ProbeConfig probe;

    void attach(CLI::App* app)
    {
        app->add_option("--trials", probe.trials, "rho probe trials per candidate");
        app->add_option("--probe-iterations", probe.max_iterations, "rho probe iterations per trial");
        app->add_option("--distinguished-bits", probe.distinguished_bits, "trailing zero bits of a distinguished x");
        app->add_option("--max-time", probe.max_time, "probe time budget in seconds");
        app->add_option("--min-time", probe.min_time, "probe time floor in seconds");
        app->add_flag("--deterministic-timing", probe.deterministic_timing,
                      "score probe time by iteration count instead of the clock");
    }

    ordered_json to_json() const
    {
        return {{"POLLARDS_RHO_TRIALS", probe.trials},
                {"POLLARDS_RHO_MAX_ITER", probe.max_iterations},
                {"DISTINGUISHED_BITS", probe.distinguished_bits},
                {"MAX_TIME", probe.max_time},
                {"MIN_TIME", probe.min_time},
                {"DETERMINISTIC_TIMING", probe.deterministic_timing}};
    }
};

ordered_json ga_config_json(const ga::GaConfig& c, const fitness::ProbeConfig& probe)
{
    ordered_json j = {{"BITS_PRIME_SIZE", c.bits},
                      {"POP_SIZE", c.pop_size},
                      {"CXPB", c.cxpb},
                      {"MUTPB", c.mutpb},
                      {"NGEN", c.ngen},
                      {"MULTIPARENT_CXPB", c.multiparent_cxpb},
                      {"ELITISM_RATE", c.elitism_rate},
                      {"INDPB", c.indpb},
                      {"TOURNAMENT_SIZE", c.tournament_size},
                      {"WORKERS", c.workers}};
    j.update(ProbeFlags{probe}.to_json());
    return j;
}

ordered_json pso_config_json(const pso::PsoConfig& c, const fitness::ProbeConfig& probe)
{
    ordered_json j = {{"BITS_PRIME_SIZE", c.bits},
                      {"SWARM_SIZE", c.swarm_size},
                      {"MAX_ITERATIONS", c.max_iterations},
                      {"C1", c.c1},
                      {"C2", c.c2},
                      {"W_MAX", c.w_max},
                      {"W_MIN", c.w_min},
                      {"MAX_ITERATIONS_WITHOUT_IMPROVEMENT", c.stall_limit},
                      {"WORKERS", c.workers}};
    j.update(ProbeFlags{probe}.to_json());
    return j;
}

// Summary of one optimizer run, shared by optimize and compare.
struct RunSummary {
    std::string algorithm;
    Candidate best;
    GenerationStats last;
    std::vector<Candidate> final_population;
    double wall_seconds = 0.0;
    std::size_t steps = 0;
};

std::size_t probe_hits(const std::vector<Candidate>& population)
{
    std::size_t hits = 0;
    for (const auto& c : population)
        if (c.report && c.report->valid && c.report->attack_resistance_score == 0)
            ++hits;
    return hits;
}

std::size_t valid_count(const std::vector<Candidate>& population)
{
    std::size_t n = 0;
    for (const auto& c : population)
        if (c.report && c.report->valid)
            ++n;
    return n;
}

std::string results_table(const RunSummary& r)
{
    const auto& g = r.best.genome;
    std::string s;
    s += fmt::format("{} Results\n", r.algorithm == "ga" ? "GA" : "PSO");
    s += fmt::format("{:<12} {}\n", "Metric", "Value");
    s += fmt::format("{:<12} {}\n", "Attack", probe_hits(r.final_population));
    s += fmt::format("{:<12} {}\n", "Min", r.last.min);
    s += fmt::format("{:<12} {}\n", "Max", r.last.max);
    s += fmt::format("{:<12} {}\n", "Avg", r.last.avg);
    s += fmt::format("{:<12} {}\n", "Std", r.last.std);
    s += "Best Individual Parameters\n";
    s += fmt::format("Parameter a  {}\n", to_decimal(g.a));
    s += fmt::format("Parameter b  {}\n", to_decimal(g.b));
    s += fmt::format("Parameter p  {}\n", to_decimal(g.p));
    s += fmt::format("Parameter G  {}, {}\n", to_decimal(g.G.x), to_decimal(g.G.y));
    s += fmt::format("Parameter n  {}\n", to_decimal(g.n));
    s += fmt::format("Parameter h  {}\n", to_decimal(g.h));
    s += fmt::format("Best fitness {}\n", r.best.fitness());
    return s;
}

void write_gnuplot(const fs::path& path, const std::vector<GenerationStats>& history)
{
    std::string text = "# index min max avg std\n";
    for (const auto& h : history)
        text += fmt::format("{} {} {} {} {}\n", h.index, h.min, h.max, h.avg, h.std);
    write_text(path, text);
}

RunSummary run_optimizer(const std::string& algorithm, const ga::GaConfig& gcfg, const pso::PsoConfig& pcfg,
                         const fitness::ProbeConfig& probe, const fs::path& dir, std::vector<fs::path>& outputs,
                         std::ostream& out)
{
    fs::create_directories(dir);
    RunSummary summary;
    summary.algorithm = algorithm;
    std::vector<GenerationStats> history;
    const auto start = std::chrono::steady_clock::now();
    auto progress = [&](const GenerationStats& s) {
        out << fmt::format("{} {}: max={} avg={} best={}\n", algorithm == "ga" ? "generation" : "iteration", s.index,
                           s.max, s.avg, s.best_fitness);
    };
    if (algorithm == "ga") {
        Rng rng(gcfg.seed);
        auto res = ga::run_ga(gcfg, probe, rng, progress);
        summary.best = std::move(res.best);
        history = std::move(res.history);
        summary.final_population = std::move(res.final_population);
        summary.steps = gcfg.ngen;
    } else {
        Rng rng(pcfg.seed);
        auto res = pso::run_pso(pcfg, probe, rng, progress);
        summary.best = std::move(res.best);
        history = std::move(res.history);
        summary.final_population = std::move(res.final_positions);
        summary.steps = res.iterations_run;
        if (res.stopped_early)
            out << fmt::format("early stop after {} iterations without improvement\n", pcfg.stall_limit);
    }
    summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    summary.last = history.back();

    const fs::path params = dir / (algorithm + "_ecc_params.txt");
    const fs::path csv = dir / "fitness_history.csv";
    const fs::path dat = dir / "fitness_history.dat";
    simnet::write_params_file(summary.best.genome, params);
    write_history_csv(csv, algorithm == "ga" ? "generation" : "iteration", history);
    write_gnuplot(dat, history);
    outputs.insert(outputs.end(), {params, csv, dat});
    return summary;
}

int cmd_optimize(const std::string& algorithm, ga::GaConfig gcfg, pso::PsoConfig pcfg, const ProbeFlags& probe,
                 bool dry_run, const std::string& out_flag, std::ostream& out)
{
    const std::string started = utc_now();
    const fs::path dir = resolve_out_dir(out_flag);
    gcfg.check();
    pcfg.check();
    probe.probe.check();

    std::vector<fs::path> outputs;
    if (dry_run) {
        fs::create_directories(dir);
    } else {
        const RunSummary r = run_optimizer(algorithm, gcfg, pcfg, probe.probe, dir, outputs, out);
        out << results_table(r);
    }

    const fs::path manifest = dir / "manifest.json";
    outputs.push_back(manifest);
    write_manifest(manifest, "optimize " + algorithm,
                   algorithm == "ga" ? ga_config_json(gcfg, probe.probe) : pso_config_json(pcfg, probe.probe),
                   algorithm == "ga" ? gcfg.seed : pcfg.seed, started, outputs);
    for (const auto& p : outputs)
        out << "wrote " << p.string() << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out)
{
    CurveParams params;
    try {
        params = simnet::read_params_file(path);
    } catch (const simnet::ParamsError& e) {
        throw UsageError(e.what());
    }
    const auto v = fitness::validate_curve(params);
    if (v.valid()) {
        out << "valid: all checks passed\n";
        return kExitOk;
    }
    out << "invalid: " << v.reason() << "\n";
    return kExitDomain;
}

CurveParams load_curve(const std::string& source, const fs::path& out_dir)
{
    try {
        return simnet::load_params(source, curve_search_dirs(out_dir));
    } catch (const simnet::ParamsError& e) {
        throw UsageError(fmt::format("cannot load curve '{}': {}", source, e.what()));
    }
}

struct ServeFlags {
    std::string curve = "secp256k1";
    std::string bind = "127.0.0.1:8080";
    std::uint64_t seed = 0;
    std::string private_key;
    double duration = 0.0;
};

int cmd_serve(const ServeFlags& f, const std::string& out_flag, std::ostream& out)
{
    const std::string started = utc_now();
    const fs::path dir = resolve_out_dir(out_flag);
    const CurveParams params = load_curve(f.curve, dir);

    simnet::EntityBConfig cfg;
    const auto colon = f.bind.rfind(':');
    if (colon == std::string::npos)
        throw UsageError("--bind expects host:port");
    cfg.host = f.bind.substr(0, colon);
    try {
        cfg.port = std::stoi(f.bind.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--bind expects a numeric port");
    }
    cfg.seed = f.seed;
    if (!f.private_key.empty()) {
        try {
            cfg.private_key = parse_decimal(f.private_key);
        } catch (const std::invalid_argument&) {
            throw UsageError("--private-key must be a decimal integer");
        }
    }

    simnet::EntityBServer server(params, cfg);
    out << fmt::format("Entity B listening on {} (curve {})\n", server.url(), f.curve) << std::flush;

    g_interrupted = false;
    auto previous_int = std::signal(SIGINT, on_signal);
    auto previous_term = std::signal(SIGTERM, on_signal);
    const auto end = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                            std::chrono::duration<double>(f.duration));
    while (!g_interrupted && (f.duration <= 0 || std::chrono::steady_clock::now() < end))
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
    std::signal(SIGINT, previous_int);
    std::signal(SIGTERM, previous_term);
    server.stop();
    server.wait();

    fs::create_directories(dir);
    const fs::path log = dir / "received_orders.csv";
    const fs::path manifest = dir / "serve_manifest.json";
    server.dump_orders_csv(log);
    write_manifest(manifest, "serve",
                   {{"curve", f.curve}, {"bind", f.bind}, {"duration", f.duration}}, f.seed, started,
                   {log, manifest});
    out << fmt::format("accepted={} rejected={}\n", server.orders().size(), server.rejected_count());
    return kExitOk;
}

struct ReplayFlags {
    std::string server = "http://127.0.0.1:8080";
    std::string orders;
    double duration = 10.0;
    double interval = 1.0;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::string curve;
};

int cmd_replay(const ReplayFlags& f, const std::string& out_flag, std::ostream& out)
{
    const std::string started = utc_now();
    const fs::path dir = resolve_out_dir(out_flag);
    simnet::EntityAConfig cfg;
    cfg.server_url = f.server;
    cfg.orders_path = f.orders.empty() ? simnet::default_data_dir() / "orders.csv" : fs::path(f.orders);
    if (!fs::exists(cfg.orders_path))
        throw UsageError("orders file not found: " + cfg.orders_path.string());
    cfg.duration = f.duration;
    cfg.interval = f.interval;
    if (f.count > 0)
        cfg.max_orders = f.count;
    if (!f.curve.empty())
        cfg.params_override = load_curve(f.curve, dir);

    Rng rng(f.seed);
    const auto s = simnet::run_entity_a(cfg, rng);
    out << fmt::format("sent={} accepted={} rejected={} failures={} skipped_rows={}\n", s.sent, s.accepted, s.rejected,
                       s.failures, s.skipped_rows);
    out << fmt::format("latency_s min={:.6f} max={:.6f} avg={:.6f}\n", s.latency.min, s.latency.max, s.latency.avg);

    fs::create_directories(dir);
    const fs::path manifest = dir / "replay_manifest.json";
    write_manifest(manifest, "replay",
                   {{"server", f.server},
                    {"orders", cfg.orders_path.string()},
                    {"duration", f.duration},
                    {"interval", f.interval},
                    {"count", f.count},
                    {"curve", f.curve}},
                   f.seed, started, {manifest});
    return s.rejected == 0 && s.failures == 0 && s.accepted > 0 ? kExitOk : kExitDomain;
}

struct AttackFlags {
    std::string server = "http://127.0.0.1:8080";
    unsigned workers = default_workers();
    std::uint64_t step_budget = 1'000'000;
    std::uint64_t seed = 0;
};

int cmd_attack(const AttackFlags& f, std::ostream& out)
{
    const auto report = rho::attack_entity_b(f.server, f.workers, f.step_budget, f.seed);
    out << rho::format_report(report);
    return report.key ? kExitOk : kExitDomain;
}

struct CompareFlags {
    unsigned bits = 256;
    bool budget_small = false;
    std::size_t population = 500;
    std::size_t steps = 40;
    std::uint64_t seed = 0;
    unsigned workers = default_workers();
};

int cmd_compare(CompareFlags f, const ProbeFlags& probe, const CLI::App& app, const std::string& out_flag,
                std::ostream& out)
{
    const std::string started = utc_now();
    const fs::path dir = resolve_out_dir(out_flag);
    if (f.budget_small) {
        if (app.count("--bits") == 0)
            f.bits = 16;
        if (app.count("--pop-size") == 0)
            f.population = 20;
        if (app.count("--generations") == 0)
            f.steps = 10;
    }
    ga::GaConfig gcfg;
    gcfg.bits = f.bits;
    gcfg.pop_size = f.population;
    gcfg.ngen = f.steps;
    gcfg.seed = f.seed;
    gcfg.workers = f.workers;
    pso::PsoConfig pcfg;
    pcfg.bits = f.bits;
    pcfg.swarm_size = f.population;
    pcfg.max_iterations = f.steps;
    pcfg.seed = f.seed;
    pcfg.workers = f.workers;
    gcfg.check();
    pcfg.check();
    probe.probe.check();

    std::vector<fs::path> outputs;
    const RunSummary g = run_optimizer("ga", gcfg, pcfg, probe.probe, dir / "ga", outputs, out);
    const RunSummary p = run_optimizer("pso", gcfg, pcfg, probe.probe, dir / "pso", outputs, out);

    auto row = [](const std::string& name, const std::string& a, const std::string& b) {
        return fmt::format("{:<28} {:>26} {:>26}\n", name, a, b);
    };
    auto rate = [](const RunSummary& r) {
        return fmt::format("{}/{}", valid_count(r.final_population), r.final_population.size());
    };
    const bool ga_valid = fitness::validate_curve(g.best.genome).valid();
    const bool pso_valid = fitness::validate_curve(p.best.genome).valid();

    std::string report;
    report += fmt::format("GA vs PSO at bits={} population={} steps={} seed={}\n", f.bits, f.population, f.steps,
                          f.seed);
    report += row("criterion", "GA", "PSO");
    report += row("wall time (s)", fmt::format("{:.3f}", g.wall_seconds), fmt::format("{:.3f}", p.wall_seconds));
    report += row("generations/iterations run", std::to_string(g.steps), std::to_string(p.steps));
    report += row("best fitness", fmt::format("{:.6e}", g.best.fitness()), fmt::format("{:.6e}", p.best.fitness()));
    report += row("final avg fitness", fmt::format("{:.6e}", g.last.avg), fmt::format("{:.6e}", p.last.avg));
    report += row("final std fitness", fmt::format("{:.6e}", g.last.std), fmt::format("{:.6e}", p.last.std));
    report += row("final population valid", rate(g), rate(p));
    report += row("probe successes (final)", std::to_string(probe_hits(g.final_population)),
                  std::to_string(probe_hits(p.final_population)));
    report += row("best passes validation", ga_valid ? "yes" : "no", pso_valid ? "yes" : "no");
    report += row("efficiency winner", g.wall_seconds <= p.wall_seconds ? "GA" : "",
                  g.wall_seconds <= p.wall_seconds ? "" : "PSO");
    if (f.bits >= 64 && g.wall_seconds >= p.wall_seconds)
        report += "WARN: GA was not faster than PSO on this run\n";

    const fs::path report_path = dir / "compare_report.txt";
    const fs::path csv_path = dir / "compare.csv";
    std::string csv = "algorithm,wall_seconds,steps,best_fitness,final_avg,final_std,valid,population,probe_hits\n";
    for (const RunSummary* r : {&g, &p})
        csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", r->algorithm, r->wall_seconds, r->steps, r->best.fitness(),
                           r->last.avg, r->last.std, valid_count(r->final_population), r->final_population.size(),
                           probe_hits(r->final_population));
    write_text(report_path, report);
    write_text(csv_path, csv);
    const fs::path manifest = dir / "manifest.json";
    outputs.insert(outputs.end(), {report_path, csv_path, manifest});
    ordered_json config = {{"ga", ga_config_json(gcfg, probe.probe)}, {"pso", pso_config_json(pcfg, probe.probe)}};
    write_manifest(manifest, "compare", std::move(config), f.seed, started, outputs);
    out << report;
    return ga_valid && pso_valid ? kExitOk : kExitDomain;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Evolve and exercise elliptic-curve domain parameters", "eccforge"};
    app.require_subcommand(1);
    std::string out_flag;

    // optimize
    auto* optimize = app.add_subcommand("optimize", "run the GA or PSO parameter search");
    std::string algorithm;
    ga::GaConfig gcfg;
    pso::PsoConfig pcfg;
    ProbeFlags opt_probe;
    std::size_t population = 0, steps = 0;
    unsigned bits = 256;
    std::uint64_t seed = 0;
    unsigned workers = default_workers();
    optimize->add_option("algorithm", algorithm, "ga or pso")->required()->check(CLI::IsMember({"ga", "pso"}));
    optimize->add_option("--bits", bits, "prime size in bits");
    optimize->add_option("--pop-size,--swarm-size", population, "population or swarm size");
    optimize->add_option("--generations,--iterations", steps, "generations or iterations");
    optimize->add_option("--cxpb", gcfg.cxpb);
    optimize->add_option("--mutpb", gcfg.mutpb);
    optimize->add_option("--multiparent-cxpb", gcfg.multiparent_cxpb);
    optimize->add_option("--elitism", gcfg.elitism_rate);
    optimize->add_option("--indpb", gcfg.indpb);
    optimize->add_option("--tournament-size", gcfg.tournament_size);
    optimize->add_option("--c1", pcfg.c1);
    optimize->add_option("--c2", pcfg.c2);
    optimize->add_option("--w-max", pcfg.w_max);
    optimize->add_option("--w-min", pcfg.w_min);
    optimize->add_option("--stall-limit", pcfg.stall_limit);
    optimize->add_option("--seed", seed);
    optimize->add_option("--workers", workers)->check(CLI::PositiveNumber);
    optimize->add_option("--out", out_flag, "output directory");
    bool dry_run = false;
    optimize->add_flag("--dry-run", dry_run, "resolve the configuration and write only the manifest");
    opt_probe.attach(optimize);

    // validate
    auto* validate = app.add_subcommand("validate", "check a parameter file");
    std::string validate_path;
    validate->add_option("params_file", validate_path)->required();

    // serve
    auto* serve = app.add_subcommand("serve", "run Entity B");
    ServeFlags serve_flags;
    serve->add_option("--curve", serve_flags.curve, "ga, pso, secp256k1, brainpoolP256r1 or a path");
    serve->add_option("--bind", serve_flags.bind, "host:port, port 0 picks a free one");
    serve->add_option("--seed", serve_flags.seed);
    serve->add_option("--private-key", serve_flags.private_key, "fixed server key (testing)");
    serve->add_option("--duration", serve_flags.duration, "stop after this many seconds (0 = until interrupted)");
    serve->add_option("--out", out_flag, "output directory");

    // replay
    auto* replay = app.add_subcommand("replay", "run Entity A against a server");
    ReplayFlags replay_flags;
    replay->add_option("--server", replay_flags.server);
    replay->add_option("--orders", replay_flags.orders, "orders CSV");
    replay->add_option("--duration", replay_flags.duration, "seconds");
    replay->add_option("--interval", replay_flags.interval, "seconds between orders");
    replay->add_option("--count", replay_flags.count, "stop after this many orders");
    replay->add_option("--seed", replay_flags.seed);
    replay->add_option("--curve", replay_flags.curve, "encrypt under these parameters instead of the server's");
    replay->add_option("--out", out_flag, "output directory");

    // attack
    auto* attack = app.add_subcommand("attack", "Pollard rho against Entity B's public key");
    AttackFlags attack_flags;
    attack->add_option("--server", attack_flags.server);
    attack->add_option("--workers", attack_flags.workers)->check(CLI::PositiveNumber);
    attack->add_option("--step-budget", attack_flags.step_budget);
    attack->add_option("--seed", attack_flags.seed);

    // compare
    auto* compare = app.add_subcommand("compare", "run GA and PSO at matched budgets");
    CompareFlags compare_flags;
    ProbeFlags cmp_probe;
    compare->add_option("--bits", compare_flags.bits);
    compare->add_flag("--budget-small", compare_flags.budget_small, "bits 16, population 20, 10 steps");
    compare->add_option("--pop-size", compare_flags.population);
    compare->add_option("--generations", compare_flags.steps);
    compare->add_option("--seed", compare_flags.seed);
    compare->add_option("--workers", compare_flags.workers)->check(CLI::PositiveNumber);
    compare->add_option("--out", out_flag, "output directory");
    cmp_probe.attach(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*optimize) {
            gcfg.bits = pcfg.bits = bits;
            gcfg.seed = pcfg.seed = seed;
            gcfg.workers = pcfg.workers = workers;
            if (population > 0)
                gcfg.pop_size = pcfg.swarm_size = population;
            if (steps > 0)
                gcfg.ngen = pcfg.max_iterations = steps;
            return cmd_optimize(algorithm, gcfg, pcfg, opt_probe, dry_run, out_flag, out);
        }
        if (*validate)
            return cmd_validate(validate_path, out);
        if (*serve)
            return cmd_serve(serve_flags, out_flag, out);
        if (*replay)
            return cmd_replay(replay_flags, out_flag, out);
        if (*attack)
            return cmd_attack(attack_flags, out);
        if (*compare)
            return cmd_compare(compare_flags, cmp_probe, *compare, out_flag, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eccforge");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace eccforge::cli
