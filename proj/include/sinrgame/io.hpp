#pragma once
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sinrgame/scenarios.hpp"

namespace sinrgame {

using nlohmann::json;

// ---------- Network <-> JSON ----------
// Either {n, alpha, noise, beta, p_max, dist: [n*n row-major]} or the same
// scalars with {points: {senders: [[x,y],...], receivers: [[x,y],...]}};
// exactly one of dist/points must be present.

inline json network_to_json(const Network& net) {
    json j;
    j["n"] = net.n();
    j["alpha"] = net.alpha();
    j["noise"] = net.noise();
    j["beta"] = net.beta();
    j["p_max"] = net.p_max();
    if (net.embedded() && net.senders() && net.receivers()) {
        json pts;
        pts["senders"] = json::array();
        pts["receivers"] = json::array();
        for (const auto& p : *net.senders()) pts["senders"].push_back({p[0], p[1]});
        for (const auto& p : *net.receivers()) pts["receivers"].push_back({p[0], p[1]});
        j["points"] = pts;
    } else {
        j["dist"] = net.dist_matrix();
    }
    return j;
}

inline Network network_from_json(const json& j) {
    for (const char* key : {"n", "alpha", "noise", "beta", "p_max"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("network json: missing ") + key);
    bool has_dist = j.contains("dist");
    bool has_points = j.contains("points");
    if (has_dist == has_points)
        throw std::invalid_argument("network json: exactly one of dist/points must be present");
    int n = j.at("n").get<int>();
    double alpha = j.at("alpha").get<double>();
    double noise = j.at("noise").get<double>();
    double beta = j.at("beta").get<double>();
    int p_max = j.at("p_max").get<int>();
    if (has_dist) {
        std::vector<double> dist = j.at("dist").get<std::vector<double>>();
        return Network::from_matrix(n, std::move(dist), alpha, noise, beta, p_max);
    }
    const json& pts = j.at("points");
    std::vector<Network::Point> senders, receivers;
    for (const auto& p : pts.at("senders")) senders.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    for (const auto& p : pts.at("receivers")) receivers.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    if (static_cast<int>(senders.size()) != n || static_cast<int>(receivers.size()) != n)
        throw std::invalid_argument("network json: point counts must equal n");
    return Network::from_points(std::move(senders), std::move(receivers), alpha, noise, beta, p_max);
}

inline void save_network(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << network_to_json(net).dump(2) << "\n";
}

inline Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return network_from_json(j);
}

// ---------- History -> CSV ----------

inline void history_to_csv(const Network& net, const History& history, std::ostream& out) {
    Channel ch(net);
    double beta = history.setting.effective_beta(net);
    bool ic = history.setting.ic;
    out << "round,player,power,success,utility\n";
    for (int t = 0; t < history.T(); ++t) {
        const auto& round = history.rounds[static_cast<std::size_t>(t)];
        for (int i = 0; i < net.n(); ++i) {
            int u = detail::utility(ch, round, i, beta, ic);
            int success = u == 1 ? 1 : 0;
            out << t << ',' << i << ',' << round[static_cast<std::size_t>(i)] << ',' << success
                << ',' << u << '\n';
        }
    }
}

// ---------- RegretReport -> JSON ----------

inline json report_to_json(const RegretReport& rep) {
    json j;
    j["regrets"] = rep.regrets;
    j["attempt_fractions"] = rep.attempts;
    j["success_fractions"] = rep.successes;
    j["value"] = rep.value;
    j["max_regret"] = rep.max_regret;
    j["epsilon"] = rep.epsilon;
    j["certified"] = rep.certified;
    return j;
}

// ---------- BraessReport -> JSON + table ----------

inline json braess_to_json(const BraessReport& rep) {
    json j;
    j["delta"] = rep.delta;
    j["settings"] = json::array();
    for (const auto& s : rep.settings) {
        json js;
        js["setting"] = s.setting.name();
        js["opt"] = s.opt;
        js["min_certified"] = s.min_certified;
        js["max_certified"] = s.max_certified;
        js["worst_eps"] = s.worst_eps;
        js["entries"] = json::array();
        for (const auto& e : s.entries)
            js["entries"].push_back({{"label", e.label},
                                     {"kind", e.scripted ? "scripted (lower bound on best)"
                                                         : "learner run (sample toward worst)"},
                                     {"value", e.value},
                                     {"max_regret", e.max_regret},
                                     {"certified", e.certified}});
        j["settings"].push_back(js);
    }
    j["pairs"] = json::array();
    for (const auto& p : rep.pairs)
        j["pairs"].push_back({{"better", p.better},
                              {"baseline", p.baseline},
                              {"ratio", p.ratio},
                              {"ratio_worst_to_worst", p.ratio_worst},
                              {"paradox_exhibited", p.paradox},
                              {"eps_better", p.eps_better},
                              {"eps_baseline", p.eps_baseline}});
    j["findings"] = rep.findings;
    return j;
}

inline void braess_print_table(const BraessReport& rep, std::ostream& out) {
    char line[256];
    std::snprintf(line, sizeof line, "delta = %.6g\n", rep.delta);
    out << line;
    out << "setting      opt  min_cert  max_cert  worst_eps\n";
    for (const auto& s : rep.settings) {
        std::snprintf(line, sizeof line, "%-12s %3d  %8.4f  %8.4f  %9.2e\n",
                      s.setting.name().c_str(), s.opt, s.min_certified, s.max_certified,
                      s.worst_eps);
        out << line;
        for (const auto& e : s.entries) {
            std::snprintf(line, sizeof line, "    %-28s value %7.4f  eps %9.2e  %s%s\n",
                          e.label.c_str(), e.value, e.max_regret,
                          e.certified ? "certified" : "NOT certified",
                          e.scripted ? " [scripted]" : "");
            out << line;
        }
    }
    for (const auto& p : rep.pairs) {
        std::snprintf(line, sizeof line,
                      "pair %s vs %s: ratio %.4f (worst-to-worst %.4f)  %s\n", p.better.c_str(),
                      p.baseline.c_str(), p.ratio, p.ratio_worst,
                      p.paradox ? "PARADOX EXHIBITED" : "no paradox");
        out << line;
    }
    for (const auto& f : rep.findings) out << "finding: " << f << "\n";
}

// ---------- scenario catalog row ----------

inline json scenario_to_json(const Scenario& sc) {
    json j;
    j["name"] = sc.name;
    j["claim"] = sc.claim;
    j["n"] = sc.net.n();
    j["alpha"] = sc.net.alpha();
    j["noise"] = sc.net.noise();
    j["beta"] = sc.net.beta();
    j["p_max"] = sc.net.p_max();
    j["delta"] = delta(sc.net);
    j["settings"] = json::array();
    for (const auto& s : sc.settings) j["settings"].push_back(s.name());
    j["reconstructed"] = sc.reconstructed;
    j["headline"] = sc.headline;
    return j;
}

} // namespace sinrgame
