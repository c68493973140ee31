// Command-line front end: scenario catalog, learner runs with regret
// certification, pure-Nash enumeration, optimal-capacity search, technology
// comparison reports, and the acceptance-suite runner.
//
// Exit codes: 0 success, 1 certification/verification failure, 2 usage or
// input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sinrgame/acceptance.hpp"

namespace fs = std::filesystem;
using namespace sinrgame;

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    auto range = spec.find("..");
    if (range != std::string::npos) {
        std::uint64_t lo = std::stoull(spec.substr(0, range));
        std::uint64_t hi = std::stoull(spec.substr(range + 2));
        if (hi < lo) throw std::invalid_argument("bad seed range: " + spec);
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        seeds.push_back(std::stoull(spec.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (seeds.empty()) throw std::invalid_argument("no seeds given");
    return seeds;
}

TechSetting parse_setting(const std::string& name, std::optional<double> beta_override) {
    TechSetting s;
    if (name == "vanilla") s = TechSetting::vanilla();
    else if (name == "ic") s = TechSetting::with_ic();
    else if (name == "pc") s = TechSetting::with_pc();
    else if (name == "pic") s = TechSetting::pic();
    else throw std::invalid_argument("unknown setting '" + name + "' (vanilla|ic|pc|pic)");
    if (beta_override) s = s.at_beta(*beta_override);
    return s;
}

struct SourceOpts {
    std::string scenario;
    std::string network_file;
    int m = 8;

    Network resolve_net() const {
        if (!scenario.empty() && !network_file.empty())
            throw std::invalid_argument("give either --scenario or --network, not both");
        if (!scenario.empty()) return scenario_by_name(scenario, m).net;
        if (!network_file.empty()) return load_network(network_file);
        throw std::invalid_argument("one of --scenario or --network is required");
    }
};

int cmd_scenario_list(bool as_json, int m) {
    auto cat = catalog(m);
    if (as_json) {
        json arr = json::array();
        for (const Scenario& sc : cat) arr.push_back(scenario_to_json(sc));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::printf("%-16s %2s  %-34s  %s\n", "name", "n", "parameters", "claim");
    for (const Scenario& sc : cat) {
        char params[96];
        std::snprintf(params, sizeof params, "alpha=%g beta=%g noise=%g p_max=%d",
                      sc.net.alpha(), sc.net.beta(), sc.net.noise(), sc.net.p_max());
        std::printf("%-16s %2d  %-34s  %s%s\n", sc.name.c_str(), sc.net.n(), params,
                    sc.claim.c_str(), sc.reconstructed ? " [reconstructed]" : "");
    }
    return 0;
}

int cmd_scenario_export(const std::string& name, const std::string& out, int m) {
    Scenario sc = scenario_by_name(name, m);
    save_network(sc.net, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_run(const SourceOpts& src, const std::string& setting_name,
            std::optional<double> beta_override, long long rounds, std::optional<double> eta,
            const std::string& seeds_spec, double epsilon, const std::string& out_dir) {
    Network net = src.resolve_net();
    TechSetting setting = parse_setting(setting_name, beta_override);
    std::vector<std::uint64_t> seeds = parse_seeds(seeds_spec);
    if (rounds < 1) throw std::invalid_argument("--rounds must be at least 1");
    if (!(epsilon > 0)) throw std::invalid_argument("--epsilon must be positive");
    double eta_used = eta ? *eta : hedge_default_eta(strategy_space(net, setting).size(), rounds);

    fs::create_directories(out_dir);
    json summary;
    summary["setting"] = setting.name();
    summary["rounds"] = rounds;
    summary["eta"] = eta_used;
    summary["epsilon"] = epsilon;
    summary["runs"] = json::array();
    bool all_certified = true;
    for (std::uint64_t seed : seeds) {
        History h = hedge_run(net, setting, rounds, eta_used, seed);
        RegretReport rep = certify(net, h, epsilon);
        all_certified = all_certified && rep.certified;

        std::string stem = "seed" + std::to_string(seed) + "_" + setting.name();
        std::ofstream csv(fs::path(out_dir) / (stem + "_history.csv"));
        history_to_csv(net, h, csv);
        json jrep = report_to_json(rep);
        jrep["seed"] = seed;
        std::ofstream jf(fs::path(out_dir) / (stem + "_report.json"));
        jf << jrep.dump(2) << "\n";
        summary["runs"].push_back(jrep);

        std::printf("seed %llu: value %.4f, max regret %.6f, %s\n",
                    static_cast<unsigned long long>(seed), rep.value, rep.max_regret,
                    rep.certified ? "certified" : "NOT certified");
    }
    std::ofstream sf(fs::path(out_dir) / "run_summary.json");
    sf << summary.dump(2) << "\n";
    return all_certified ? 0 : 1;
}

int cmd_nash(const SourceOpts& src, const std::string& setting_name,
             std::optional<double> beta_override, std::uint64_t budget, bool as_json) {
    Network net = src.resolve_net();
    TechSetting setting = parse_setting(setting_name, beta_override);
    auto list = enumerate_pure_nash(net, setting, budget);
    if (as_json) {
        json arr = json::array();
        for (const auto& [profile, value] : list)
            arr.push_back({{"powers", profile.powers}, {"value", value}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::printf("%zu pure Nash profile(s) under %s:\n", list.size(), setting.name().c_str());
    for (const auto& [profile, value] : list) {
        std::printf("  value %d  powers [", value);
        for (std::size_t i = 0; i < profile.powers.size(); ++i)
            std::printf("%s%d", i ? " " : "", profile.powers[i]);
        std::printf("]\n");
    }
    return 0;
}

int cmd_opt(const SourceOpts& src, const std::string& setting_name,
            std::optional<double> beta_override, double budget, bool as_json) {
    Network net = src.resolve_net();
    TechSetting setting = parse_setting(setting_name, beta_override);
    CapacityWitness w = opt_capacity(net, setting, budget);
    if (as_json) {
        json j;
        j["setting"] = setting.name();
        j["size"] = w.size;
        j["subset"] = w.subset;
        j["powers"] = w.profile.powers;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::printf("OPT under %s = %d, subset [", setting.name().c_str(), w.size);
    for (std::size_t i = 0; i < w.subset.size(); ++i)
        std::printf("%s%d", i ? " " : "", w.subset[i]);
    std::printf("], powers [");
    for (std::size_t i = 0; i < w.profile.powers.size(); ++i)
        std::printf("%s%d", i ? " " : "", w.profile.powers[i]);
    std::printf("]\n");
    return 0;
}

int cmd_report(const std::string& scenario_name, int m, const std::vector<std::string>& pair_specs,
               long long rounds, const std::string& seeds_spec, double epsilon, bool as_json,
               const std::string& out_file) {
    Scenario sc = scenario_by_name(scenario_name, m);
    std::vector<std::pair<TechSetting, TechSetting>> pairs;
    for (const std::string& spec : pair_specs) {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("pair must look like better:baseline, got " + spec);
        pairs.emplace_back(parse_setting(spec.substr(0, colon), std::nullopt),
                           parse_setting(spec.substr(colon + 1), std::nullopt));
    }
    RunsConfig cfg;
    cfg.T = rounds;
    cfg.seeds = parse_seeds(seeds_spec);
    cfg.epsilon = epsilon;
    std::vector<LabeledScript> scripted;
    for (const ScriptedHistory& sh : sc.scripted) scripted.push_back({sh.label, sh.history});
    BraessReport rep = braess_report(sc.net, pairs, cfg, scripted);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << braess_to_json(rep).dump(2) << "\n";
    }
    if (as_json)
        std::cout << braess_to_json(rep).dump(2) << "\n";
    else
        braess_print_table(rep, std::cout);
    return 0;
}

int cmd_verify(bool quick, std::optional<long long> rounds, std::optional<double> epsilon,
               const std::optional<std::string>& seeds_spec) {
    AcceptanceConfig cfg = quick ? AcceptanceConfig::quick_mode() : AcceptanceConfig{};
    if (rounds) cfg.T = *rounds;
    if (epsilon) cfg.epsilon = *epsilon;
    if (seeds_spec) cfg.seeds = parse_seeds(*seeds_spec);
    auto results = run_acceptance(cfg, std::cout);
    for (const CriterionResult& r : results)
        if (!r.pass) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"game-theoretic capacity experiments in the SINR physical model"};
    app.require_subcommand(1);

    // scenario list / export
    auto* scen = app.add_subcommand("scenario", "scenario catalog");
    scen->require_subcommand(1);
    bool list_json = false;
    int list_m = 8;
    auto* list = scen->add_subcommand("list", "list the built-in scenarios");
    list->add_flag("--json", list_json, "machine-readable output");
    list->add_option("--m", list_m, "chain size for parameterized scenarios")->capture_default_str();
    std::string export_name, export_out;
    int export_m = 8;
    auto* exp = scen->add_subcommand("export", "write a scenario network as JSON");
    exp->add_option("--name", export_name, "scenario name")->required();
    exp->add_option("--out", export_out, "output file")->required();
    exp->add_option("--m", export_m, "chain size for parameterized scenarios");

    // run
    SourceOpts run_src;
    std::string run_setting = "vanilla", run_seeds = "1..5", run_out = "runs";
    std::optional<double> run_beta, run_eta;
    long long run_rounds = 200000;
    double run_epsilon = 0.01;
    auto* run = app.add_subcommand("run", "learner runs with regret certification");
    run->add_option("--scenario", run_src.scenario, "scenario name");
    run->add_option("--network", run_src.network_file, "network JSON file");
    run->add_option("--m", run_src.m, "chain size for parameterized scenarios");
    run->add_option("--setting", run_setting, "vanilla|ic|pc|pic")->capture_default_str();
    run->add_option("--beta-override", run_beta, "alternate SINR threshold");
    run->add_option("--rounds", run_rounds, "rounds per run")->capture_default_str();
    run->add_option("--eta", run_eta, "learning rate (defaulted from |S| and T)");
    run->add_option("--seeds", run_seeds, "seed list: 1..5 or 1,2,3")->capture_default_str();
    run->add_option("--epsilon", run_epsilon, "certification target")->capture_default_str();
    run->add_option("--out", run_out, "output directory")->capture_default_str();

    // nash / opt
    SourceOpts nash_src;
    std::string nash_setting = "vanilla";
    std::optional<double> nash_beta;
    std::uint64_t nash_budget = 1000000;
    bool nash_json = false;
    auto* nash = app.add_subcommand("nash", "enumerate pure Nash equilibria");
    nash->add_option("--scenario", nash_src.scenario, "scenario name");
    nash->add_option("--network", nash_src.network_file, "network JSON file");
    nash->add_option("--m", nash_src.m, "chain size for parameterized scenarios");
    nash->add_option("--setting", nash_setting, "vanilla|ic|pc|pic")->capture_default_str();
    nash->add_option("--beta-override", nash_beta, "alternate SINR threshold");
    nash->add_option("--budget", nash_budget, "max profiles to enumerate")->capture_default_str();
    nash->add_flag("--json", nash_json, "machine-readable output");

    SourceOpts opt_src;
    std::string opt_setting = "vanilla";
    std::optional<double> opt_beta;
    double opt_budget = 1'000'000;
    bool opt_json = false;
    auto* opt = app.add_subcommand("opt", "maximum feasible set by search");
    opt->add_option("--scenario", opt_src.scenario, "scenario name");
    opt->add_option("--network", opt_src.network_file, "network JSON file");
    opt->add_option("--m", opt_src.m, "chain size for parameterized scenarios");
    opt->add_option("--setting", opt_setting, "vanilla|ic|pc|pic")->capture_default_str();
    opt->add_option("--beta-override", opt_beta, "alternate SINR threshold");
    opt->add_option("--budget", opt_budget, "max candidates to search")->capture_default_str();
    opt->add_flag("--json", opt_json, "machine-readable output");

    // report
    std::string rep_scenario, rep_seeds = "1..3", rep_out;
    std::vector<std::string> rep_pairs;
    long long rep_rounds = 200000;
    double rep_epsilon = 0.01;
    bool rep_json = false;
    int rep_m = 8;
    auto* rep = app.add_subcommand("report", "equilibrium comparison across settings");
    rep->add_option("--scenario", rep_scenario, "scenario name")->required();
    rep->add_option("--m", rep_m, "chain size for parameterized scenarios");
    rep->add_option("--pair", rep_pairs, "setting pair better:baseline (repeatable)")->required();
    rep->add_option("--rounds", rep_rounds, "rounds per run")->capture_default_str();
    rep->add_option("--seeds", rep_seeds, "seed list")->capture_default_str();
    rep->add_option("--epsilon", rep_epsilon, "certification target")->capture_default_str();
    rep->add_flag("--json", rep_json, "machine-readable output");
    rep->add_option("--out", rep_out, "also write the JSON report here");

    // verify
    bool quick = false;
    std::optional<long long> verify_rounds;
    std::optional<double> verify_epsilon;
    std::optional<std::string> verify_seeds;
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_flag("--quick", quick, "shorter runs with relaxed epsilon");
    verify->add_option("--rounds", verify_rounds, "override rounds per run");
    verify->add_option("--epsilon", verify_epsilon, "override certification target");
    verify->add_option("--seeds", verify_seeds, "override seed list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_scenario_list(list_json, list_m);
        if (exp->parsed()) return cmd_scenario_export(export_name, export_out, export_m);
        if (run->parsed())
            return cmd_run(run_src, run_setting, run_beta, run_rounds, run_eta, run_seeds,
                           run_epsilon, run_out);
        if (nash->parsed()) return cmd_nash(nash_src, nash_setting, nash_beta, nash_budget, nash_json);
        if (opt->parsed()) return cmd_opt(opt_src, opt_setting, opt_beta, opt_budget, opt_json);
        if (rep->parsed())
            return cmd_report(rep_scenario, rep_m, rep_pairs, rep_rounds, rep_seeds, rep_epsilon,
                              rep_json, rep_out);
        if (verify->parsed()) return cmd_verify(quick, verify_rounds, verify_epsilon, verify_seeds);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
