// Command-line front end over the secbc C API: region sweeps, boundary
// allocations, ergodic and outage experiment drivers, the discrete-channel
// evaluator and brute-force cross-checks. Emits plot-ready CSV or JSON.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <secbc.h>

using nlohmann::json;

namespace {

constexpr int kExitInfeasible = 1;
constexpr int kExitConfig = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

void check(sbc_status status, const std::string& context) {
    if (status == SBC_OK)
        return;
    const int code = status == SBC_ERR_INFEASIBLE ? kExitInfeasible : kExitConfig;
    die(code, context + ": " + sbc_last_error());
}

// Fixed formatting keeps identical invocations byte-identical.
std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

double parse_power(const std::string& text, const std::string& flag) {
    std::string body = text;
    bool db = false;
    if (body.size() > 2 && (body.ends_with("dB") || body.ends_with("db") ||
                            body.ends_with("DB"))) {
        db = true;
        body = body.substr(0, body.size() - 2);
    }
    try {
        size_t used = 0;
        const double value = std::stod(body, &used);
        if (used != body.size())
            throw std::invalid_argument(body);
        return db ? std::pow(10.0, value / 10.0) : value;
    } catch (const std::exception&) {
        die(kExitConfig, flag + ": expected a power like '3.16' or '5dB', got '" + text + "'");
    }
}

// "lo:hi:count" with an optional dB suffix; dB grids are spaced in dB.
std::vector<double> parse_power_grid(const std::string& text, const std::string& flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 3)
        die(kExitConfig, flag + ": expected 'lo:hi:count', got '" + text + "'");

    const bool db = parts[0].ends_with("dB") || parts[0].ends_with("db") ||
                    parts[1].ends_with("dB") || parts[1].ends_with("db");
    auto strip = [](std::string s) {
        if (s.size() > 2 && (s.ends_with("dB") || s.ends_with("db")))
            s = s.substr(0, s.size() - 2);
        return s;
    };
    try {
        const double lo = std::stod(strip(parts[0]));
        const double hi = std::stod(strip(parts[1]));
        const long count = std::stol(parts[2]);
        if (count < 1 || hi < lo)
            throw std::invalid_argument(text);
        std::vector<double> grid;
        for (long k = 0; k < count; ++k) {
            const double x = count == 1 ? lo : lo + (hi - lo) * k / (count - 1);
            grid.push_back(db ? std::pow(10.0, x / 10.0) : x);
        }
        return grid;
    } catch (const std::exception&) {
        die(kExitConfig, flag + ": expected 'lo:hi:count', got '" + text + "'");
    }
}

double to_db(double power) { return 10.0 * std::log10(power); }

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        die(kExitConfig, "--out: cannot open '" + out_path + "' for writing");
    file << content;
}

const char* case_name(sbc_case tag) {
    switch (tag) {
        case SBC_CASE_1: return "Case1";
        case SBC_CASE_2: return "Case2";
        default: return "Case3";
    }
}

struct StatesHandle {
    sbc_states* get() const { return ptr.get(); }
    std::shared_ptr<sbc_states> ptr;
};

StatesHandle wrap(sbc_states* raw) {
    return StatesHandle{std::shared_ptr<sbc_states>(raw, sbc_states_free)};
}

json load_json_file(const std::string& path, const std::string& flag) {
    std::ifstream file(path);
    if (!file)
        die(kExitConfig, flag + ": cannot read '" + path + "'");
    json doc;
    try {
        file >> doc;
    } catch (const json::exception& e) {
        die(kExitConfig, flag + ": '" + path + "' is not valid JSON: " + e.what());
    }
    return doc;
}

// Channel files carry either real parallel subchannels
//   {"subchannels": [{"mu_sq": 1.0, "nu_sq": 2.0}, ...]}
// or complex fading states
//   {"mu_sq": 1.0, "nu_sq": 1.0,
//    "states": [{"h1_sq": 1.0, "h2_sq": 0.0, "weight": 0.5}, ...]}.
StatesHandle load_states(const std::string& path, const std::string& flag) {
    const json doc = load_json_file(path, flag);
    sbc_states* raw = nullptr;
    if (doc.contains("subchannels")) {
        std::vector<double> mu, nu;
        for (const json& sc : doc.at("subchannels")) {
            if (!sc.contains("mu_sq") || !sc.contains("nu_sq"))
                die(kExitConfig, flag + ": each subchannel needs mu_sq and nu_sq");
            mu.push_back(sc.at("mu_sq").get<double>());
            nu.push_back(sc.at("nu_sq").get<double>());
        }
        check(sbc_states_from_gaussian(mu.data(), nu.data(), mu.size(), &raw),
              flag + ": subchannels");
    } else if (doc.contains("states")) {
        std::vector<double> h1, h2, w;
        bool any_weight = false;
        for (const json& st : doc.at("states")) {
            if (!st.contains("h1_sq") || !st.contains("h2_sq"))
                die(kExitConfig, flag + ": each state needs h1_sq and h2_sq");
            h1.push_back(st.at("h1_sq").get<double>());
            h2.push_back(st.at("h2_sq").get<double>());
            any_weight = any_weight || st.contains("weight");
            w.push_back(st.value("weight", 0.0));
        }
        check(sbc_states_from_fading(h1.data(), h2.data(), doc.value("mu_sq", 1.0),
                                     doc.value("nu_sq", 1.0), any_weight ? w.data() : nullptr,
                                     h1.size(), &raw),
              flag + ": states");
    } else {
        die(kExitConfig, flag + ": file needs a 'subchannels' or 'states' array");
    }
    return wrap(raw);
}

sbc_correlation parse_correlation(const std::string& text, const std::string& flag) {
    if (text == "independent")
        return SBC_CORR_INDEPENDENT;
    if (text == "identical")
        return SBC_CORR_IDENTICAL;
    if (text == "anti")
        return SBC_CORR_ANTI;
    die(kExitConfig, flag + ": expected independent, identical or anti, got '" + text + "'");
}

// gamma1/gamma0 ratio grid shared by the sweep drivers: the common-only
// endpoint, log-spaced ratios, the confidential-only endpoint.
std::vector<std::pair<double, double>> gamma_grid(size_t size, double ratio_lo,
                                                  double ratio_hi) {
    if (size < 2)
        die(kExitConfig, "--gammas: need at least 2 grid points");
    std::vector<std::pair<double, double>> grid;
    grid.emplace_back(1.0, 0.0);
    for (size_t k = 0; k + 2 < size; ++k) {
        const double f = size == 3 ? 0.5 : static_cast<double>(k) / (size - 3);
        grid.emplace_back(1.0, ratio_lo * std::pow(ratio_hi / ratio_lo, f));
    }
    grid.emplace_back(0.0, 1.0);
    return grid;
}

struct SweepRow {
    double ratio;
    double r0, r1;
    sbc_case tag;
};

std::vector<SweepRow> sweep_rows(const StatesHandle& states, double power, size_t gammas,
                                 double ratio_lo, double ratio_hi) {
    std::vector<SweepRow> rows;
    const size_t n = sbc_states_count(states.get());
    std::vector<double> p0(n), p1(n);
    for (const auto& [g0, g1] : gamma_grid(gammas, ratio_lo, ratio_hi)) {
        SweepRow row{};
        row.ratio = g0 == 0.0 ? INFINITY : g1 / g0;
        double r01 = 0, r02 = 0, r1 = 0;
        check(sbc_optimal_allocation(states.get(), g0, g1, power, p0.data(), p1.data(),
                                     &row.tag, nullptr, nullptr, &r01, &r02, &r1),
              "allocation");
        row.r0 = std::min(r01, r02);
        row.r1 = r1;
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string csv = "gamma_ratio,R0,R1,case\n";
    for (const SweepRow& row : rows)
        csv += fmt(row.ratio) + "," + fmt(row.r0) + "," + fmt(row.r1) + "," +
               case_name(row.tag) + "\n";
    return csv;
}

json sweep_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& row : rows)
        arr.push_back(json{{"gamma_ratio", row.ratio},
                           {"R0", row.r0},
                           {"R1", row.r1},
                           {"case", case_name(row.tag)}});
    return arr;
}

// ---------------------------------------------------------------- region

int run_region(const std::string& sc_path, const std::string& power_text, double prefactor,
               size_t betas, size_t gammas, const std::string& out, const std::string& format,
               double mu2, double nu2, bool have_sc) {
    const double power = parse_power(power_text, "--power");
    std::string csv;
    json arr = json::array();
    if (have_sc) {
        const StatesHandle states = load_states(sc_path, "--subchannels");
        const std::vector<SweepRow> rows = sweep_rows(states, power, gammas, 0.05, 50.0);
        csv = sweep_csv(rows);
        arr = sweep_json(rows);
    } else {
        if (betas < 2)
            die(kExitConfig, "--betas: need at least 2 grid points");
        csv = "beta,R0,R1\n";
        for (size_t k = 0; k < betas; ++k) {
            const double beta = static_cast<double>(k) / (betas - 1);
            double r0 = 0, r1 = 0;
            check(sbc_gaussian_point(power, mu2, nu2, prefactor, beta, &r0, &r1), "--mu2/--nu2");
            csv += fmt(beta) + "," + fmt(r0) + "," + fmt(r1) + "\n";
            arr.push_back(json{{"beta", beta}, {"R0", r0}, {"R1", r1}});
        }
    }
    write_output(out, format == "json" ? arr.dump(2) + "\n" : csv);
    return 0;
}

// ---------------------------------------------------------------- alloc

int run_alloc(const std::string& sc_path, double gamma0, double gamma1,
              const std::string& power_text, const std::string& out,
              const std::string& format) {
    const double power = parse_power(power_text, "--power");
    const StatesHandle states = load_states(sc_path, "--subchannels");
    const size_t n = sbc_states_count(states.get());
    std::vector<double> p0(n), p1(n);
    sbc_case tag;
    double alpha = 0, lambda = 0, r01 = 0, r02 = 0, r1 = 0;
    check(sbc_optimal_allocation(states.get(), gamma0, gamma1, power, p0.data(), p1.data(),
                                 &tag, &alpha, &lambda, &r01, &r02, &r1),
          "allocation");
    json result;
    result["case"] = case_name(tag);
    if (tag == SBC_CASE_3)
        result["alpha"] = alpha;
    result["lambda"] = lambda;
    json alloc = json::array();
    for (size_t i = 0; i < n; ++i)
        alloc.push_back(json::array({p0[i], p1[i]}));
    result["alloc"] = alloc;
    result["rates"] = json{{"r01", r01}, {"r02", r02}, {"r1", r1},
                           {"r0", std::min(r01, r02)}};
    if (format == "csv") {
        std::string csv = "state,p0,p1\n";
        for (size_t i = 0; i < n; ++i)
            csv += std::to_string(i) + "," + fmt(p0[i]) + "," + fmt(p1[i]) + "\n";
        write_output(out, csv);
    } else {
        write_output(out, result.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------- ergodic

int run_ergodic(double sigma1, double sigma2, double mu2, double nu2,
                const std::string& corr_text, const std::string& power_text, size_t samples,
                uint64_t seed, size_t gammas, double ratio_lo, double ratio_hi,
                const std::string& power_grid_text, bool uniform_baseline,
                const std::string& out, const std::string& format) {
    const sbc_correlation corr = parse_correlation(corr_text, "--correlation");
    sbc_states* raw = nullptr;
    check(sbc_states_sample_rayleigh(sigma1, sigma2, mu2, nu2, corr, samples, seed, &raw),
          "--sigma1/--sigma2");
    const StatesHandle states = wrap(raw);

    if (uniform_baseline) {
        // Confidential-only capacity against the flat allocation over A.
        const std::vector<double> grid = parse_power_grid(power_grid_text, "--power-grid");
        std::string csv = "P_dB,capacity,uniform_rate\n";
        json arr = json::array();
        std::vector<double> p1(samples);
        for (double power : grid) {
            double capacity = 0, uniform = 0;
            check(sbc_wiretap_allocation(states.get(), power, p1.data(), &capacity),
                  "wiretap allocation");
            check(sbc_uniform_baseline_rate(states.get(), power, &uniform), "uniform baseline");
            csv += fmt(to_db(power)) + "," + fmt(capacity) + "," + fmt(uniform) + "\n";
            arr.push_back(json{{"P_dB", to_db(power)},
                               {"capacity", capacity},
                               {"uniform_rate", uniform}});
        }
        write_output(out, format == "json" ? arr.dump(2) + "\n" : csv);
        return 0;
    }

    const double power = parse_power(power_text, "--power");
    const std::vector<SweepRow> rows = sweep_rows(states, power, gammas, ratio_lo, ratio_hi);
    write_output(out, format == "json" ? sweep_json(rows).dump(2) + "\n" : sweep_csv(rows));
    return 0;
}

// ---------------------------------------------------------------- outage

int run_outage(double sigma1, double sigma2, double mu2, double nu2, double r0, double r1,
               const std::string& power_grid_text, size_t samples, uint64_t seed,
               const std::string& mode_text, bool equal_baseline, const std::string& out,
               const std::string& format) {
    sbc_plan_mode mode;
    if (mode_text == "joint")
        mode = SBC_PLAN_JOINT;
    else if (mode_text == "confidential")
        mode = SBC_PLAN_CONFIDENTIAL;
    else if (mode_text == "constant-common")
        mode = SBC_PLAN_CONSTANT_COMMON;
    else
        die(kExitConfig, "--mode: expected joint, confidential or constant-common, got '" +
                             mode_text + "'");

    sbc_states* raw = nullptr;
    check(sbc_states_sample_rayleigh(sigma1, sigma2, mu2, nu2, SBC_CORR_INDEPENDENT, samples,
                                     seed, &raw),
          "--sigma1/--sigma2");
    const StatesHandle states = wrap(raw);
    const std::vector<double> grid = parse_power_grid(power_grid_text, "--power-grid");

    std::string csv = equal_baseline ? "P_dB,outage,equal_outage\n" : "P_dB,outage\n";
    json arr = json::array();
    for (double power : grid) {
        sbc_plan* plan = nullptr;
        check(sbc_plan_build(states.get(), r0, r1, mode, power, &plan), "--power-grid");
        double outage = 0;
        sbc_plan_info(plan, nullptr, nullptr, &outage, nullptr);
        sbc_plan_free(plan);
        json row{{"P_dB", to_db(power)}, {"outage", outage}};
        csv += fmt(to_db(power)) + "," + fmt(outage);
        if (equal_baseline) {
            double equal = 0;
            check(sbc_equal_power_outage(states.get(), r0, r1, power, &equal),
                  "equal-power baseline");
            csv += "," + fmt(equal);
            row["equal_outage"] = equal;
        }
        csv += "\n";
        arr.push_back(row);
    }
    write_output(out, format == "json" ? arr.dump(2) + "\n" : csv);
    return 0;
}

// ---------------------------------------------------------------- dm

int run_dm(const std::string& dist_path, const std::string& out, const std::string& format) {
    const json doc = load_json_file(dist_path, "--dist");
    if (!doc.contains("subchannels"))
        die(kExitConfig, "--dist: file needs a 'subchannels' array");

    sbc_dm* dm = nullptr;
    check(sbc_dm_create(&dm), "--dist");
    const std::unique_ptr<sbc_dm, void (*)(sbc_dm*)> guard(dm, sbc_dm_free);
    for (const json& sc : doc.at("subchannels")) {
        for (const char* key : {"q", "u_given_q", "x_given_u", "yz_given_x", "ny", "nz"})
            if (!sc.contains(key))
                die(kExitConfig, std::string("--dist: subchannel is missing '") + key + "'");
        const std::vector<double> pq = sc.at("q").get<std::vector<double>>();
        auto flatten = [&](const char* key) {
            std::vector<double> flat;
            for (const json& row : sc.at(key))
                for (const json& cell : row)
                    flat.push_back(cell.get<double>());
            return flat;
        };
        const std::vector<double> pu = flatten("u_given_q");
        const std::vector<double> px = flatten("x_given_u");
        const std::vector<double> pyz = flatten("yz_given_x");
        const size_t nq = pq.size();
        const size_t nu = nq == 0 ? 0 : pu.size() / nq;
        const size_t nx = nu == 0 ? 0 : px.size() / nu;
        const size_t ny = sc.at("ny").get<size_t>();
        const size_t nz = sc.at("nz").get<size_t>();
        check(sbc_dm_add_subchannel(dm, nq, nu, nx, ny, nz, pq.data(), pu.data(), px.data(),
                                    pyz.data()),
              "--dist");
    }
    double r01 = 0, r02 = 0, r1 = 0;
    check(sbc_dm_rate_point(dm, &r01, &r02, &r1), "--dist");
    if (format == "csv") {
        write_output(out, "r01,r02,r1,r0\n" + fmt(r01) + "," + fmt(r02) + "," + fmt(r1) + "," +
                              fmt(std::min(r01, r02)) + "\n");
    } else {
        const json result{{"r01", r01}, {"r02", r02}, {"r1", r1},
                          {"r0", std::min(r01, r02)}};
        write_output(out, result.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------- oracle

int run_oracle(const std::string& what, const std::string& sc_path,
               const std::string& power_text, double gamma0, double gamma1, double resolution,
               double r0, double r1, const std::string& corr_text, double mu2,
               const std::string& out) {
    const double power = parse_power(power_text, "--power");
    json result;
    if (what == "grid") {
        const StatesHandle states = load_states(sc_path, "--subchannels");
        const size_t n = sbc_states_count(states.get());
        std::vector<double> p0(n), p1(n);
        double oracle_obj = 0;
        check(sbc_oracle_grid_search(states.get(), gamma0, gamma1, power, resolution,
                                     p0.data(), p1.data(), &oracle_obj),
              "--resolution");
        double s01 = 0, s02 = 0, s1 = 0;
        check(sbc_optimal_allocation(states.get(), gamma0, gamma1, power, p0.data(), p1.data(),
                                     nullptr, nullptr, nullptr, &s01, &s02, &s1),
              "allocation");
        const double solver_obj = gamma0 * std::min(s01, s02) + gamma1 * s1;
        result = json{{"check", "grid"},
                      {"solver_objective", solver_obj},
                      {"oracle_objective", oracle_obj},
                      {"solver_minus_oracle", solver_obj - oracle_obj}};
    } else if (what == "plan") {
        const StatesHandle states = load_states(sc_path, "--subchannels");
        sbc_plan* plan = nullptr;
        check(sbc_plan_build(states.get(), r0, r1, SBC_PLAN_JOINT, power, &plan), "--power");
        double outage = 0;
        sbc_plan_info(plan, nullptr, nullptr, &outage, nullptr);
        sbc_plan_free(plan);
        double brute = 0;
        check(sbc_oracle_brute_plan(states.get(), r0, r1, power, &brute), "--power");
        result = json{{"check", "plan"},
                      {"plan_outage", outage},
                      {"oracle_outage", brute},
                      {"difference", outage - brute}};
    } else if (what == "two-state") {
        const bool anti = corr_text == "anti";
        if (!anti && corr_text != "identical")
            die(kExitConfig, "--correlation: expected identical or anti for this check");
        double oracle_rate = 0;
        check(sbc_oracle_two_state(anti ? 1 : 0, power, mu2, &oracle_rate), "--power");
        // The same coupled pair through the regular pipeline.
        const double h1[2] = {anti ? 1.0 : 0.0, anti ? 0.0 : 1.0};
        const double h2[2] = {0.0, 1.0};
        sbc_states* raw = nullptr;
        check(sbc_states_from_fading(h1, h2, mu2, mu2, nullptr, 2, &raw), "--mu2");
        const StatesHandle states = wrap(raw);
        double p1[2], pipeline = 0;
        check(sbc_wiretap_allocation(states.get(), power, p1, &pipeline), "--power");
        result = json{{"check", "two-state"},
                      {"coupling", corr_text},
                      {"oracle_rate", oracle_rate},
                      {"pipeline_rate", pipeline},
                      {"difference", oracle_rate - pipeline}};
    } else {
        die(kExitConfig, "--check: expected grid, plan or two-state, got '" + what + "'");
    }
    write_output(out, result.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"secrecy-capacity regions, boundary power allocations and outage plans "
                 "for broadcast channels with a confidential message"};
    app.require_subcommand(1);

    std::string out, format = "csv";
    std::string power_text = "1";
    uint64_t seed = 1;
    size_t samples = 20000;

    // region
    auto* region = app.add_subcommand(
        "region", "Rate region sweeps: beta curve of one Gaussian channel, or a "
                  "boundary sweep over parallel subchannels (CSV: beta,R0,R1 or "
                  "gamma_ratio,R0,R1,case)");
    double mu2 = 1.0, nu2 = 2.0, prefactor = 0.5;
    size_t betas = 101, gammas = 15;
    std::string sc_path;
    region->add_option("--mu2", mu2, "noise variance at receiver 1");
    region->add_option("--nu2", nu2, "noise variance at receiver 2");
    region->add_option("--prefactor", prefactor, "rate prefactor: 0.5 real, 1 complex")
        ->check(CLI::IsMember({0.5, 1.0}));
    region->add_option("--betas", betas, "number of beta grid points");
    auto* region_sc = region->add_option("--subchannels", sc_path,
                                         "JSON file of parallel subchannels");
    region->add_option("--gammas", gammas, "number of weight grid points");
    region->add_option("--power", power_text, "total power, linear or '5dB'");
    region->add_option("--out", out, "output file (default stdout)");
    region->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // alloc
    auto* alloc = app.add_subcommand(
        "alloc", "Boundary-achieving power allocation for explicit subchannels (JSON)");
    double gamma0 = 1.0, gamma1 = 1.0;
    alloc->add_option("--subchannels", sc_path, "JSON file of subchannels or states")
        ->required();
    alloc->add_option("--gamma0", gamma0, "weight of the common rate");
    alloc->add_option("--gamma1", gamma1, "weight of the confidential rate");
    alloc->add_option("--power", power_text, "total power, linear or '5dB'");
    alloc->add_option("--out", out, "output file (default stdout)");
    auto* alloc_fmt =
        alloc->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // ergodic
    auto* ergodic = app.add_subcommand(
        "ergodic", "Monte Carlo ergodic boundary over Rayleigh fading (CSV: "
                   "gamma_ratio,R0,R1,case), or capacity vs the flat baseline with "
                   "--uniform (CSV: P_dB,capacity,uniform_rate)");
    double sigma1 = 1.0, sigma2 = 1.0;
    double fading_mu2 = 1.0, fading_nu2 = 1.0;
    double ratio_lo = 0.05, ratio_hi = 50.0;
    std::string correlation = "independent", power_grid_text = "0:10dB:11";
    bool uniform_baseline = false;
    ergodic->add_option("--sigma1", sigma1, "mean of |h1|^2");
    ergodic->add_option("--sigma2", sigma2, "mean of |h2|^2");
    ergodic->add_option("--mu2", fading_mu2, "noise variance at receiver 1");
    ergodic->add_option("--nu2", fading_nu2, "noise variance at receiver 2");
    ergodic->add_option("--correlation", correlation,
                        "gain coupling: independent, identical or anti");
    ergodic->add_option("--power", power_text, "total power, linear or '5dB'");
    ergodic->add_option("--samples", samples, "number of fading samples");
    ergodic->add_option("--seed", seed, "sampler seed");
    ergodic->add_option("--gammas", gammas, "number of weight grid points");
    ergodic->add_option("--ratio-min", ratio_lo, "smallest gamma1/gamma0 ratio");
    ergodic->add_option("--ratio-max", ratio_hi, "largest gamma1/gamma0 ratio");
    ergodic->add_flag("--uniform", uniform_baseline,
                      "emit wiretap capacity vs uniform-power baseline over --power-grid");
    ergodic->add_option("--power-grid", power_grid_text, "grid 'lo:hi:count', dB or linear");
    ergodic->add_option("--out", out, "output file (default stdout)");
    ergodic->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // outage
    auto* outage = app.add_subcommand(
        "outage", "Outage probability of the threshold power plan over a budget grid "
                  "(CSV: P_dB,outage[,equal_outage])");
    double target_r0 = 0.0, target_r1 = 1.0;
    std::string mode = "joint";
    bool equal_baseline = false;
    outage->add_option("--sigma1", sigma1, "mean of |h1|^2");
    outage->add_option("--sigma2", sigma2, "mean of |h2|^2");
    outage->add_option("--mu2", fading_mu2, "noise variance at receiver 1");
    outage->add_option("--nu2", fading_nu2, "noise variance at receiver 2");
    outage->add_option("--r0", target_r0, "target common rate (bits/use)");
    outage->add_option("--r1", target_r1, "target confidential rate (bits/use)");
    outage->add_option("--power-grid", power_grid_text, "grid 'lo:hi:count', dB or linear");
    outage->add_option("--samples", samples, "number of fading samples");
    outage->add_option("--seed", seed, "sampler seed");
    outage->add_option("--mode", mode, "joint, confidential or constant-common");
    outage->add_flag("--equal-baseline", equal_baseline,
                     "also emit the equal-power allocation outage");
    outage->add_option("--out", out, "output file (default stdout)");
    outage->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // dm
    auto* dm = app.add_subcommand(
        "dm", "Achievable rate triple of discrete memoryless subchannels from a "
              "distribution file (JSON)");
    std::string dist_path;
    dm->add_option("--dist", dist_path, "JSON distribution file")->required();
    dm->add_option("--out", out, "output file (default stdout)");
    auto* dm_fmt =
        dm->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "Cross-check the solvers against brute-force references (JSON)");
    std::string check_what = "grid";
    double resolution = 1e-3;
    oracle->add_option("--check", check_what, "grid, plan or two-state")->required();
    oracle->add_option("--subchannels", sc_path, "JSON file of subchannels or states");
    oracle->add_option("--gamma0", gamma0, "weight of the common rate");
    oracle->add_option("--gamma1", gamma1, "weight of the confidential rate");
    oracle->add_option("--resolution", resolution, "grid step of the oracle");
    oracle->add_option("--r0", target_r0, "target common rate");
    oracle->add_option("--r1", target_r1, "target confidential rate");
    oracle->add_option("--correlation", correlation, "two-state coupling");
    oracle->add_option("--mu2", mu2, "noise variance for the two-state check");
    oracle->add_option("--power", power_text, "total power, linear or '5dB'");
    oracle->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (region->parsed())
            return run_region(sc_path, power_text, prefactor, betas, gammas, out, format, mu2,
                              nu2, region_sc->count() > 0);
        if (alloc->parsed())
            return run_alloc(sc_path, gamma0, gamma1, power_text, out,
                             alloc_fmt->count() > 0 ? format : "json");
        if (ergodic->parsed())
            return run_ergodic(sigma1, sigma2, fading_mu2, fading_nu2, correlation, power_text,
                               samples, seed, gammas, ratio_lo, ratio_hi, power_grid_text,
                               uniform_baseline, out, format);
        if (outage->parsed())
            return run_outage(sigma1, sigma2, fading_mu2, fading_nu2, target_r0, target_r1,
                              power_grid_text, samples, seed, mode, equal_baseline, out,
                              format);
        if (dm->parsed())
            return run_dm(dist_path, out, dm_fmt->count() > 0 ? format : "json");
        if (oracle->parsed())
            return run_oracle(check_what, sc_path, power_text, gamma0, gamma1, resolution,
                              target_r0, target_r1, correlation, mu2, out);
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
}
