// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.
//
// hoytlab CLI: capacity / secrecy / outage sweeps as CSV, a Rice Ie accuracy
// table, Monte Carlo spot checks and the built-in verification suite.
// All user-facing SNR-like quantities are in dB; conversion to linear scale
// happens here and nowhere else.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hoytlab/hoytlab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> sweep_points(double start, double stop, int points) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        out.push_back(start + (stop - start) * i / (points - 1));
    return out;
}

struct GlobalOptions {
    std::string output;
    int nodes = 64;
    int max_nodes = 4096;
    double rel_tol = 1e-10;
    std::uint64_t seed = 20240901;
    std::uint64_t samples = 1'000'000;

    hoytlab::QuadratureSpec quad() const { return {nodes, max_nodes, rel_tol}; }
};

// Streams CSV to --output or stdout.
class OutputFile {
  public:
    explicit OutputFile(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw CLI::ValidationError("--output", "cannot open '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

// ---------------------------------------------------------------------------
// Interferer specs: kind=eta_mu,format=2,eta=0.04,mu=0.5,inr_db=5
//                   kind=kappa_mu,kappa=2,mu=1.5,inr_db=5
// ---------------------------------------------------------------------------

hoytlab::InterfererModel parse_interferer(const std::string& spec) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--interferer", "expected key=value pairs, got '" + item +
                                                           "' in '" + spec + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    auto take = [&](const std::string& key) -> std::optional<double> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        try {
            const double v = std::stod(it->second);
            kv.erase(it);
            return v;
        } catch (const std::exception&) {
            throw CLI::ValidationError("--interferer",
                                       "bad numeric value for '" + key + "' in '" + spec + "'");
        }
    };
    const auto kind_it = kv.find("kind");
    const std::string kind = kind_it == kv.end() ? "" : kind_it->second;
    if (kind_it != kv.end()) kv.erase(kind_it);
    const double inr = db_to_linear(take("inr_db").value_or(5.0));

    auto finish = [&](hoytlab::InterfererModel model) {
        if (!kv.empty())
            throw CLI::ValidationError("--interferer",
                                       "unknown key '" + kv.begin()->first + "' in '" + spec +
                                           "'; accepted: kind, format, eta, mu, kappa, inr_db");
        return model;
    };
    if (kind == "eta_mu") {
        const int format = static_cast<int>(take("format").value_or(2.0));
        const double eta = take("eta").value_or(0.04);
        const double mu = take("mu").value_or(0.5);
        return finish(hoytlab::EtaMuModel(format, eta, mu, inr));
    }
    if (kind == "kappa_mu") {
        const double kappa = take("kappa").value_or(2.0);
        const double mu = take("mu").value_or(1.5);
        return finish(hoytlab::KappaMuModel(kappa, mu, inr));
    }
    throw CLI::ValidationError(
        "--interferer", "kind must be eta_mu or kappa_mu in '" + spec +
                            "'; accepted keys: kind, format, eta, mu, kappa, inr_db");
}

std::string describe_interferer(const hoytlab::InterfererModel& model) {
    char buf[160];
    if (const auto* em = std::get_if<hoytlab::EtaMuModel>(&model)) {
        std::snprintf(buf, sizeof buf, "kind=eta_mu,format=%d,eta=%g,mu=%g,inr_db=%g", em->format,
                      em->eta, em->mu, 10.0 * std::log10(em->gamma_bar));
    } else {
        const auto& km = std::get<hoytlab::KappaMuModel>(model);
        std::snprintf(buf, sizeof buf, "kind=kappa_mu,kappa=%g,mu=%g,inr_db=%g", km.kappa, km.mu,
                      10.0 * std::log10(km.gamma_bar));
    }
    return buf;
}

hoytlab::InterferenceSet build_set(const std::vector<hoytlab::InterfererModel>& models) {
    hoytlab::InterferenceSet set;
    for (const auto& m : models)
        std::visit([&set](const auto& model) { set.add(model); }, m);
    return set;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct CapacityOptions {
    std::vector<double> q_values{0.0, 0.3, 0.5, 0.9, 1.0};
    double snr_db_start = -5.0;
    double snr_db_stop = 40.0;
    int points = 46;
    std::string sweep = "snr";
    double fixed_snr_db = 30.0;
};

int run_capacity(const GlobalOptions& g, const CapacityOptions& o) {
    OutputFile out(g.output);
    hoytlab::CsvWriter csv(out.stream());
    csv.header({"gamma_bar_db", "q", "capacity_bps_hz", "lower_bound", "high_snr_asymptote",
                "mu_hoyt_bps_hz"});
    const hoytlab::QuadratureSpec quad = g.quad();
    auto emit = [&](double snr_db, double q) {
        const hoytlab::HoytChannel ch(db_to_linear(snr_db), q);
        csv.field(snr_db)
            .field(q)
            .field(hoytlab::capacity_ora_hoyt(ch, quad))
            .field(q > 0.0 ? hoytlab::capacity_lower_bound(ch)
                           : std::numeric_limits<double>::quiet_NaN())
            .field(hoytlab::capacity_high_snr_asymptote(ch))
            .field(hoytlab::capacity_loss_mu(q));
        csv.end_row();
    };
    if (o.sweep == "q") {
        for (double q : sweep_points(0.0, 1.0, o.points)) emit(o.fixed_snr_db, q);
    } else {
        for (double q : o.q_values)
            for (double snr_db : sweep_points(o.snr_db_start, o.snr_db_stop, o.points))
                emit(snr_db, q);
    }
    return kExitOk;
}

struct SecrecyOptions {
    std::vector<double> qb_values{0.2, 0.8};
    std::vector<double> qe_values{0.1, 0.5};
    double eve_snr_db = 15.0;
    double rate = 0.1;
    double snr_db_start = 0.0;
    double snr_db_stop = 60.0;
    int points = 61;
};

int run_secrecy(const GlobalOptions& g, const SecrecyOptions& o) {
    OutputFile out(g.output);
    hoytlab::CsvWriter csv(out.stream());
    csv.header({"gamma_bar_b_db", "q_b", "q_e", "p_outage", "p_positive"});
    const hoytlab::QuadratureSpec quad = g.quad();
    const double ge = db_to_linear(o.eve_snr_db);
    for (double qb : o.qb_values) {
        for (double qe : o.qe_values) {
            for (double gb_db : sweep_points(o.snr_db_start, o.snr_db_stop, o.points)) {
                const hoytlab::SecrecyScenario sc({db_to_linear(gb_db), qb}, {ge, qe}, o.rate);
                csv.field(gb_db)
                    .field(qb)
                    .field(qe)
                    .field(hoytlab::secrecy_outage(sc, quad))
                    .field(hoytlab::prob_positive_secrecy(sc, quad));
                csv.end_row();
            }
        }
    }
    return kExitOk;
}

struct OutageOptions {
    std::vector<double> q_values{0.3, 0.8};
    std::vector<std::string> interferer_specs;
    bool interference_limited = false;
    bool no_interference = false;
    double threshold_db = 0.0;
    double sweep_db_start = 0.0;
    double sweep_db_stop = 40.0;
    int points = 41;
};

int run_outage(const GlobalOptions& g, const OutageOptions& o) {
    if (o.no_interference && (o.interference_limited || !o.interferer_specs.empty()))
        throw CLI::ValidationError("--no-interference",
                                   "cannot be combined with interferer options");
    OutputFile out(g.output);
    hoytlab::CsvWriter csv(out.stream());
    csv.header({"sinr_or_sir_db", "q", "interferer", "p_out"});
    const hoytlab::QuadratureSpec quad = g.quad();
    const double gamma_o = db_to_linear(o.threshold_db);

    // Each entry is one curve family: a descriptor plus the interferer list.
    std::vector<std::pair<std::string, std::vector<hoytlab::InterfererModel>>> groups;
    if (o.no_interference) {
        groups.push_back({"none", {}});
    } else if (!o.interferer_specs.empty()) {
        std::vector<hoytlab::InterfererModel> models;
        std::string desc;
        for (const auto& spec : o.interferer_specs) {
            models.push_back(parse_interferer(spec));
            if (!desc.empty()) desc += " + ";
            desc += describe_interferer(models.back());
        }
        groups.push_back({desc, std::move(models)});
    } else {
        // Default curve families: one interferer each, NLOS and LOS flavours
        // in a deep- and a mild-fading variant, all at INR 5 dB.
        for (const auto& spec :
             {"kind=eta_mu,format=2,eta=0.04,mu=0.5,inr_db=5",
              "kind=eta_mu,format=2,eta=0.04,mu=1.5,inr_db=5",
              "kind=kappa_mu,kappa=2,mu=0.5,inr_db=5", "kind=kappa_mu,kappa=2,mu=1.5,inr_db=5"}) {
            groups.push_back({spec, {parse_interferer(spec)}});
        }
    }

    for (const auto& [desc, models] : groups) {
        const double total_inr =
            models.empty() ? 0.0 : build_set(models).total_mean();
        for (double q : o.q_values) {
            for (double x_db : sweep_points(o.sweep_db_start, o.sweep_db_stop, o.points)) {
                const double x = db_to_linear(x_db);
                double p;
                if (models.empty()) {
                    p = hoytlab::outage_probability({x, q}, gamma_o, quad);
                } else if (o.interference_limited) {
                    // x is the SIR: desired mean = SIR * total interference power.
                    const hoytlab::OutageScenario sc({x * total_inr, q}, gamma_o,
                                                     build_set(models), false);
                    p = hoytlab::outage_with_interference(sc, quad);
                } else {
                    // x is the SINR: desired mean = SINR * (1 + total INR).
                    const hoytlab::OutageScenario sc({x * (1.0 + total_inr), q}, gamma_o,
                                                     build_set(models), true);
                    p = hoytlab::outage_with_interference(sc, quad);
                }
                csv.field(x_db).field(q).field(desc).field(p);
                csv.end_row();
            }
        }
    }
    return kExitOk;
}

struct IeTableOptions {
    std::vector<double> k_values{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    std::vector<double> x_values{0.01, 0.1, 1.0, 10.0, 100.0};
};

int run_ie_table(const GlobalOptions& g, const IeTableOptions& o) {
    OutputFile out(g.output);
    hoytlab::CsvWriter csv(out.stream());
    csv.header({"k", "x", "definition_integral", "marcum_difference", "marcum_single",
                "angular_rational", "angular_exponential"});
    const hoytlab::QuadratureSpec quad = g.quad();
    using hoytlab::IeRepresentation;
    for (double k : o.k_values) {
        for (double x : o.x_values) {
            csv.field(k).field(x);
            for (IeRepresentation rep :
                 {IeRepresentation::definition_integral, IeRepresentation::marcum_difference,
                  IeRepresentation::marcum_single, IeRepresentation::angular_rational,
                  IeRepresentation::angular_exponential})
                csv.field(hoytlab::rice_ie(k, x, rep, quad));
            csv.end_row();
        }
    }
    return kExitOk;
}

struct McOptions {
    std::string metric;
    double q = 0.5;
    double snr_db = 10.0;
    double threshold_db = 0.0;
    double qb = 0.5;
    double qe = 0.3;
    double eve_snr_db = 15.0;
    double rate = 0.1;
    double sinr_db = 0.0;
    std::vector<std::string> interferer_specs;
    bool interference_limited = false;
};

int run_mc(const GlobalOptions& g, const McOptions& o) {
    const hoytlab::QuadratureSpec quad = g.quad();
    const std::uint64_t n = g.samples;
    double analytic = 0.0;
    hoytlab::mc::McEstimate est{};
    std::string params;
    char buf[256];

    if (o.metric == "outage") {
        const hoytlab::HoytChannel ch(db_to_linear(o.snr_db), o.q);
        const double gamma_o = db_to_linear(o.threshold_db);
        analytic = hoytlab::outage_probability(ch, gamma_o, quad);
        est = hoytlab::mc::estimate_outage(ch, gamma_o, n, g.seed);
        std::snprintf(buf, sizeof buf, "q=%g,snr_db=%g,threshold_db=%g", o.q, o.snr_db,
                      o.threshold_db);
        params = buf;
    } else if (o.metric == "capacity_ora") {
        const hoytlab::HoytChannel ch(db_to_linear(o.snr_db), o.q);
        analytic = hoytlab::capacity_ora_hoyt(ch, quad);
        est = hoytlab::mc::estimate_capacity_ora(ch, n, g.seed);
        std::snprintf(buf, sizeof buf, "q=%g,snr_db=%g", o.q, o.snr_db);
        params = buf;
    } else if (o.metric == "secrecy_outage" || o.metric == "prob_positive_secrecy") {
        const hoytlab::SecrecyScenario sc({db_to_linear(o.snr_db), o.qb},
                                          {db_to_linear(o.eve_snr_db), o.qe}, o.rate);
        if (o.metric == "secrecy_outage") {
            analytic = hoytlab::secrecy_outage(sc, quad);
            est = hoytlab::mc::estimate_secrecy_outage(sc, n, g.seed);
        } else {
            analytic = hoytlab::prob_positive_secrecy(sc, quad);
            est = hoytlab::mc::estimate_prob_positive_secrecy(sc, n, g.seed);
        }
        std::snprintf(buf, sizeof buf, "qb=%g,qe=%g,snr_db=%g,eve_snr_db=%g,rate=%g", o.qb, o.qe,
                      o.snr_db, o.eve_snr_db, o.rate);
        params = buf;
    } else if (o.metric == "op_interference") {
        std::vector<hoytlab::InterfererModel> models;
        std::string desc;
        const std::vector<std::string> specs =
            o.interferer_specs.empty()
                ? std::vector<std::string>{"kind=eta_mu,format=2,eta=0.04,mu=0.5,inr_db=5"}
                : o.interferer_specs;
        for (const auto& spec : specs) {
            models.push_back(parse_interferer(spec));
            if (!desc.empty()) desc += " + ";
            desc += describe_interferer(models.back());
        }
        const double total_inr = build_set(models).total_mean();
        const double x = db_to_linear(o.sinr_db);
        const double desired =
            o.interference_limited ? x * total_inr : x * (1.0 + total_inr);
        const double gamma_o = db_to_linear(o.threshold_db);
        const hoytlab::OutageScenario sc({desired, o.q}, gamma_o, build_set(models),
                                         !o.interference_limited);
        analytic = hoytlab::outage_with_interference(sc, quad);
        est = hoytlab::mc::estimate_outage_with_interference(sc, n, g.seed);
        std::snprintf(buf, sizeof buf, "q=%g,sinr_db=%g,threshold_db=%g,%s", o.q, o.sinr_db,
                      o.threshold_db, desc.c_str());
        params = buf;
    } else {
        throw CLI::ValidationError("--metric",
                                   "unknown metric '" + o.metric +
                                       "'; accepted: outage, capacity_ora, secrecy_outage, "
                                       "prob_positive_secrecy, op_interference");
    }

    OutputFile out(g.output);
    hoytlab::CsvWriter csv(out.stream());
    csv.header({"metric", "parameters", "analytic", "mc_value", "mc_std_error", "n_samples",
                "seed", "abs_error", "sigmas"});
    csv.field(o.metric)
        .field(params)
        .field(analytic)
        .field(est.value)
        .field(est.std_error)
        .field(static_cast<double>(est.n_samples))
        .field(static_cast<double>(est.seed))
        .field(std::abs(est.value - analytic))
        .field(est.sigmas_from(analytic));
    csv.end_row();
    return kExitOk;
}

struct SelftestOptions {
    std::string level = "fast";
    bool inject_failure = false;
};

int run_selftest(const GlobalOptions& g, const SelftestOptions& o) {
    using hoytlab::selftest::CheckResult;
    std::vector<CheckResult> results = hoytlab::selftest::run_fast_checks(g.quad());
    if (o.level == "full") {
        std::vector<CheckResult> mc_results =
            hoytlab::selftest::run_mc_checks(g.samples >= 1000 ? g.samples : 10'000'000, g.seed,
                                             g.quad());
        results.insert(results.end(), mc_results.begin(), mc_results.end());
    }
    if (o.inject_failure)
        results.push_back({"injected-failure", false, "deliberately failing check"});

    int failed = 0;
    for (const CheckResult& r : results) {
        if (r.passed) {
            std::printf("[PASS] %s\n", r.name.c_str());
        } else {
            ++failed;
            std::printf("[FAIL] %s: %s\n", r.name.c_str(), r.detail.c_str());
        }
    }
    std::printf("selftest (%s): %zu/%zu checks passed\n", o.level.c_str(),
                results.size() - failed, results.size());
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hoytlab: wireless-link performance metrics under Hoyt (Nakagami-q) fading.\n"
                 "Sweep commands print CSV (12 significant digits, byte-stable for a fixed\n"
                 "configuration and seed). All SNR-like inputs are in dB."};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read option defaults from a key=value file");
    // Subcommands inherit this, so global flags are accepted after the
    // subcommand name as well.
    app.fallthrough(true);

    GlobalOptions g;
    app.add_option("--output", g.output, "Write CSV output to this file (default: stdout)")
        ->capture_default_str();
    app.add_option("--nodes", g.nodes, "Initial Gauss-Legendre node count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--max-nodes", g.max_nodes, "Quadrature refinement node cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--rel-tol", g.rel_tol, "Quadrature relative tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--samples", g.samples, "Monte Carlo sample count")
        ->capture_default_str()
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{10'000'000'000}));

    CapacityOptions cap;
    CLI::App* cap_cmd = app.add_subcommand(
        "capacity", "Ergodic (ORA) capacity, closed-form lower bound, high-SNR asymptote and "
                    "capacity-loss constant");
    cap_cmd->add_option("--q", cap.q_values, "Hoyt shape values (default: 0 0.3 0.5 0.9 1)");
    cap_cmd->add_option("--snr-db-start", cap.snr_db_start, "Sweep start")->capture_default_str();
    cap_cmd->add_option("--snr-db-stop", cap.snr_db_stop, "Sweep stop")->capture_default_str();
    cap_cmd->add_option("--points", cap.points, "Sweep point count")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    cap_cmd->add_option("--sweep", cap.sweep, "Sweep variable: snr or q")
        ->capture_default_str()
        ->check(CLI::IsMember({"snr", "q"}));
    cap_cmd->add_option("--snr-db", cap.fixed_snr_db, "Fixed mean SNR for --sweep q")
        ->capture_default_str();

    SecrecyOptions sec;
    CLI::App* sec_cmd = app.add_subcommand(
        "secrecy", "Secrecy outage P(C_S < R_S) and P(C_S > 0) vs the legitimate link's mean "
                   "SNR (defaults: eavesdropper at 15 dB, rate threshold 0.1)");
    sec_cmd->add_option("--qb", sec.qb_values, "Legitimate-link q values (default: 0.2 0.8)");
    sec_cmd->add_option("--qe", sec.qe_values, "Eavesdropper-link q values (default: 0.1 0.5)");
    sec_cmd->add_option("--eve-snr-db", sec.eve_snr_db, "Eavesdropper mean SNR")
        ->capture_default_str();
    sec_cmd->add_option("--rate", sec.rate, "Rate threshold R_S, bits per channel use")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sec_cmd->add_option("--snr-db-start", sec.snr_db_start, "Sweep start")->capture_default_str();
    sec_cmd->add_option("--snr-db-stop", sec.snr_db_stop, "Sweep stop")->capture_default_str();
    sec_cmd->add_option("--points", sec.points, "Sweep point count")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));

    OutageOptions og;
    CLI::App* out_cmd = app.add_subcommand(
        "outage", "Outage probability vs SINR (noise + interference, defaults: INR 5 dB, "
                  "threshold 0 dB), vs SIR (--interference-limited), or vs SNR "
                  "(--no-interference)");
    out_cmd->add_option("--q", og.q_values, "Desired-link q values (default: 0.3 0.8)");
    out_cmd->add_option(
        "--interferer", og.interferer_specs,
        "Repeatable interferer spec, e.g. kind=eta_mu,format=2,eta=0.04,mu=0.5,inr_db=5 or "
        "kind=kappa_mu,kappa=2,mu=1.5,inr_db=5; repeated specs form one product set");
    out_cmd->add_flag("--interference-limited", og.interference_limited,
                      "Neglect noise; sweep variable becomes the SIR");
    out_cmd->add_flag("--no-interference", og.no_interference,
                      "Noise-limited outage only; sweep variable becomes the SNR");
    out_cmd->add_option("--threshold-db", og.threshold_db, "Outage threshold gamma_o")
        ->capture_default_str();
    out_cmd->add_option("--sweep-db-start", og.sweep_db_start, "Sweep start")
        ->capture_default_str();
    out_cmd->add_option("--sweep-db-stop", og.sweep_db_stop, "Sweep stop")->capture_default_str();
    out_cmd->add_option("--points", og.points, "Sweep point count")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));

    IeTableOptions ie;
    CLI::App* ie_cmd = app.add_subcommand(
        "ie-table", "Accuracy table of the Rice Ie-function across all five representations");
    ie_cmd->add_option("--k", ie.k_values, "k grid (default: 0..0.9 step 0.1, plus 0.99)");
    ie_cmd->add_option("--x", ie.x_values, "x grid (default: 0.01 0.1 1 10 100)");

    McOptions mc;
    CLI::App* mc_cmd = app.add_subcommand(
        "mc", "Monte Carlo estimate of one metric next to its analytic value");
    mc_cmd
        ->add_option("--metric", mc.metric,
                     "One of: outage, capacity_ora, secrecy_outage, prob_positive_secrecy, "
                     "op_interference")
        ->required();
    mc_cmd->add_option("--q", mc.q, "Desired-link q")->capture_default_str();
    mc_cmd->add_option("--snr-db", mc.snr_db, "Mean SNR (desired / legitimate link)")
        ->capture_default_str();
    mc_cmd->add_option("--threshold-db", mc.threshold_db, "Outage threshold")
        ->capture_default_str();
    mc_cmd->add_option("--qb", mc.qb, "Legitimate-link q")->capture_default_str();
    mc_cmd->add_option("--qe", mc.qe, "Eavesdropper-link q")->capture_default_str();
    mc_cmd->add_option("--eve-snr-db", mc.eve_snr_db, "Eavesdropper mean SNR")
        ->capture_default_str();
    mc_cmd->add_option("--rate", mc.rate, "Secrecy rate threshold")->capture_default_str();
    mc_cmd->add_option("--sinr-db", mc.sinr_db,
                       "SINR (or SIR with --interference-limited) for op_interference")
        ->capture_default_str();
    mc_cmd->add_option("--interferer", mc.interferer_specs, "Interferer specs, as for 'outage'");
    mc_cmd->add_flag("--interference-limited", mc.interference_limited, "Neglect noise");

    SelftestOptions st;
    CLI::App* st_cmd = app.add_subcommand(
        "selftest", "Run the verification suite: 'fast' = analytic cross-checks, 'full' adds "
                    "the Monte Carlo agreement suite (uses --samples and --seed)");
    st_cmd->add_option("level", st.level, "fast or full")
        ->capture_default_str()
        ->check(CLI::IsMember({"fast", "full"}));
    st_cmd->add_flag("--inject-failure", st.inject_failure, "Add a deliberately failing check")
        ->group(""); // hidden; used to exercise the failure exit path

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cap_cmd->parsed()) return run_capacity(g, cap);
        if (sec_cmd->parsed()) return run_secrecy(g, sec);
        if (out_cmd->parsed()) return run_outage(g, og);
        if (ie_cmd->parsed()) return run_ie_table(g, ie);
        if (mc_cmd->parsed()) return run_mc(g, mc);
        if (st_cmd->parsed()) return run_selftest(g, st);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
