// Copyright 2026 The nonsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "nonsep/entangled.h"
#include "nonsep/error.h"
#include "nonsep/identical.h"
#include "nonsep/scenario_generator.h"

namespace nonsep::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommonKeys = {"mode", "output_path", "precision"};

// overlap_<bra>_<ket> = <bra|ket> over the four absorption modes.
const std::vector<std::pair<std::string, std::pair<std::string_view, std::string_view>>> kOverlapKeys = {
    {"overlap_psi_phi", {identical::kPsi, identical::kPhi}},
    {"overlap_tpsi_tphi", {identical::kTildePsi, identical::kTildePhi}},
    {"overlap_tpsi_phi", {identical::kTildePsi, identical::kPhi}},
    {"overlap_tphi_phi", {identical::kTildePhi, identical::kPhi}},
    {"overlap_psi_tphi", {identical::kPsi, identical::kTildePhi}},
    {"overlap_tpsi_psi", {identical::kTildePsi, identical::kPsi}},
};

struct ModeKeys {
    std::vector<std::string> amplitudes;
    std::vector<std::string> required;
    bool statistics = false;
    bool grid = false;
    bool tilde_overlaps = false;
    bool absorbed_normalization = false;
    bool seed = false;
};

ModeKeys keys_for(const std::string &mode) {
    ModeKeys k;
    if (mode == "entangled-absorption") {
        k.amplitudes = {"alpha", "gamma", "beta", "delta"};
        k.required = {"alpha", "gamma"};
    } else if (mode == "entangled-emission") {
        k.amplitudes = {"tau_a", "tau_b", "m_nt_a", "m_nt_b", "t"};
        k.required = {"tau_a", "tau_b", "t"};
    } else if (mode == "identical-absorption") {
        for (const auto &entry : kOverlapKeys) {
            k.amplitudes.push_back(entry.first);
        }
        k.amplitudes.push_back("internal_amplitude");
        k.statistics = true;
        k.absorbed_normalization = true;
    } else if (mode == "identical-emission") {
        k.amplitudes = {"m_phibar_phi", "m_psibar_psi", "m_phibar_psi", "m_psibar_phi", "initial_overlap",
                        "final_overlap"};
        k.required = {"m_phibar_phi", "m_psibar_psi", "m_phibar_psi", "m_psibar_phi"};
        k.statistics = true;
    } else if (mode == "fig1") {
        k.amplitudes = {"tau_a", "tau_b"};
        k.grid = true;
    } else if (mode == "fig2") {
        k.grid = true;
        k.tilde_overlaps = true;
    } else if (mode == "verify") {
        k.seed = true;
    } else {
        throw ConfigError("unknown mode '" + mode + "'");
    }
    return k;
}

bool contains(const std::vector<std::string> &v, const std::string &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

double json_real(const json &v, const std::string &key) {
    if (!v.is_number()) {
        throw ConfigError("key '" + key + "' must be a number");
    }
    return v.get<double>();
}

Amplitude json_amplitude(const json &v, const std::string &key) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ConfigError("key '" + key + "' must be a number or [re, im]");
}

std::uint64_t json_unsigned(const json &v, const std::string &key) {
    if (!v.is_number_unsigned()) {
        throw ConfigError("key '" + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string json_string(const json &v, const std::string &key) {
    if (!v.is_string()) {
        throw ConfigError("key '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

Statistics statistics_from(std::string_view text) {
    try {
        return parse_statistics(text);
    } catch (const DomainError &) {
        throw ConfigError("statistics must be boson, fermion or distinguishable, got '" + std::string(text) + "'");
    }
}

void check_grid(const Grid &g) {
    if (!std::isfinite(g.start) || !std::isfinite(g.stop)) {
        throw ConfigError("grid bounds must be finite");
    }
    if (g.steps < 1) {
        throw ConfigError("grid steps must be >= 1");
    }
    if (g.start > g.stop) {
        throw ConfigError("grid start must not exceed stop");
    }
}

int check_precision(std::int64_t p) {
    if (p < 0 || p > 17) {
        throw ConfigError("precision must lie in [0, 17]");
    }
    return static_cast<int>(p);
}

template <typename T>
T parse_number(std::string_view text, const char *what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string("malformed ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

class CsvWriter {
   public:
    explicit CsvWriter(int precision) : precision_(precision) {
    }

    void header(const std::vector<std::string> &names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            text_ += (i ? "," : "") + names[i];
        }
        text_ += '\n';
    }
    CsvWriter &cell(double v) {
        return raw(format_value(v, precision_));
    }
    CsvWriter &raw(const std::string &s) {
        if (open_) {
            text_ += ',';
        }
        text_ += s;
        open_ = true;
        return *this;
    }
    void end_row() {
        text_ += '\n';
        open_ = false;
    }
    std::string str() && {
        return std::move(text_);
    }

   private:
    int precision_;
    bool open_ = false;
    std::string text_;
};

RunResult run_entangled_absorption(const ScenarioConfig &c) {
    entangled::AbsorptionParams p{c.amplitude("alpha"), c.amplitude("gamma"), std::nullopt, std::nullopt};
    if (c.has("beta")) {
        p.beta = c.amplitude("beta");
    }
    if (c.has("delta")) {
        p.delta = c.amplitude("delta");
    }
    CsvWriter w(c.precision);
    w.header({"p_one", "p_mixture", "interference"});
    w.cell(entangled::one_absorption_probability(p))
        .cell(entangled::mixture_absorption_probability(p))
        .cell(entangled::absorption_interference(p));
    w.end_row();
    return {std::move(w).str(), {}, kSuccess};
}

RunResult run_entangled_emission(const ScenarioConfig &c) {
    entangled::EmissionParams p;
    p.tau_a = c.real("tau_a");
    p.tau_b = c.real("tau_b");
    p.t = c.real("t");
    if (c.has("m_nt_a")) {
        p.m_nt_a = c.amplitude("m_nt_a");
    }
    if (c.has("m_nt_b")) {
        p.m_nt_b = c.amplitude("m_nt_b");
    }
    CsvWriter w(c.precision);
    w.header({"t", "p_entangled", "p_mixture"});
    w.cell(p.t).cell(entangled::emission_probability(p)).cell(entangled::mixture_emission_probability(p));
    w.end_row();
    return {std::move(w).str(), {}, kSuccess};
}

RunResult run_identical_absorption(const ScenarioConfig &c) {
    identical::AbsorptionScenario s;
    s.stats = *c.statistics;
    for (const auto &[key, modes] : kOverlapKeys) {
        if (c.has(key)) {
            s.overlaps.set_overlap(std::string(modes.first), std::string(modes.second), c.amplitude(key));
        }
    }
    if (c.has("internal_amplitude")) {
        s.internal_amplitude = c.amplitude("internal_amplitude");
    }
    if (!c.absorbed_normalization.empty()) {
        s.normalization = identical::parse_absorbed_normalization(c.absorbed_normalization);
    }
    identical::ProbabilityBreakdown b = identical::one_absorption_probability_identical(s);
    CsvWriter w(c.precision);
    w.header({"statistics", "total", "n_f_squared", "modulus_phi_direct", "modulus_phi_exchange",
              "modulus_psi_direct", "modulus_psi_exchange", "exchange_phi", "exchange_psi", "indist_direct",
              "indist_exchange", "mixed_phi_direct_psi_exchange", "mixed_phi_exchange_psi_direct"});
    w.raw(std::string(to_string(b.stats))).cell(b.total).cell(b.n_f_squared);
    for (double v : b.moduli) {
        w.cell(v);
    }
    for (const auto &pair : {b.exchange_terms, b.indistinguishability_terms, b.mixed_terms}) {
        w.cell(pair[0]).cell(pair[1]);
    }
    w.end_row();
    return {std::move(w).str(), {}, kSuccess};
}

RunResult run_identical_emission(const ScenarioConfig &c) {
    auto opt = [&](const char *key) { return c.has(key) ? c.amplitude(key) : Amplitude{}; };
    identical::EmissionScenario s{*c.statistics,          c.amplitude("m_phibar_phi"), c.amplitude("m_psibar_psi"),
                                  c.amplitude("m_phibar_psi"), c.amplitude("m_psibar_phi"), opt("initial_overlap"),
                                  opt("final_overlap")};
    CsvWriter w(c.precision);
    w.header({"statistics", "p_double"});
    w.raw(std::string(to_string(s.stats))).cell(identical::double_emission_probability(s));
    w.end_row();
    return {std::move(w).str(), {}, kSuccess};
}

RunResult run_fig1(const ScenarioConfig &c) {
    std::vector<double> grid = c.grid->points();
    CsvWriter w(c.precision);
    w.header({"t", "p_entangled", "p_mixture"});
    for (const auto &row : entangled::fig1_curve(grid, c.real("tau_a"), c.real("tau_b"))) {
        w.cell(row.t).cell(row.p_entangled).cell(row.p_mixture);
        w.end_row();
    }
    return {std::move(w).str(), {}, kSuccess};
}

RunResult run_fig2(const ScenarioConfig &c, std::ostream &warn) {
    std::vector<double> grid = c.grid->points();
    std::size_t capped = 0;
    for (double &x : grid) {
        if (x > kFermionGridCap) {
            x = kFermionGridCap;
            ++capped;
        }
    }
    if (capped) {
        warn << "warning: " << capped << " grid point(s) above " << format_value(kFermionGridCap, 0)
             << " capped for the fermion endpoint\n";
    }
    identical::Fig2Table table = identical::fig2_sweep(grid, c.tilde_overlaps);
    std::vector<std::string> names{"x"};
    for (double t : table.tilde_overlaps) {
        names.push_back("p_boson_" + format_value(t, 0));
        names.push_back("p_fermion_" + format_value(t, 0));
    }
    CsvWriter w(c.precision);
    w.header(names);
    for (const auto &row : table.rows) {
        w.cell(row.x);
        for (std::size_t k = 0; k < table.tilde_overlaps.size(); ++k) {
            w.cell(row.p_boson[k]).cell(row.p_fermion[k]);
        }
        w.end_row();
    }
    return {std::move(w).str(), {}, kSuccess};
}

RunResult run_verify(const ScenarioConfig &c) {
    oracle::CampaignReport r = oracle::run_equivalence_campaign(*c.seed, *c.trials);
    CsvWriter w(c.precision);
    w.header({"check", "trial", "closed_form", "brute_force", "abs_err"});
    for (const auto &rec : r.records) {
        w.raw(rec.check).raw(std::to_string(rec.trial)).cell(rec.closed_form).cell(rec.brute_force).cell(rec.abs_err);
        w.end_row();
    }
    RunResult result;
    result.output = std::move(w).str();
    result.report = "trials=" + std::to_string(r.trials) + " max_abs_err=" + format_value(r.max_abs_err, 3);
    result.exit_code = r.max_abs_err < kVerifyTolerance ? kSuccess : kVerificationFailure;
    return result;
}

}  // namespace

std::vector<double> Grid::points() const {
    std::vector<double> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        out.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    out.push_back(stop);
    return out;
}

Grid parse_grid(std::string_view text) {
    const auto a = text.find(':');
    const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
    if (b == std::string_view::npos || text.find(':', b + 1) != std::string_view::npos) {
        throw ConfigError("grid must be start:stop:steps, got '" + std::string(text) + "'");
    }
    Grid g{parse_number<double>(text.substr(0, a), "grid start"),
           parse_number<double>(text.substr(a + 1, b - a - 1), "grid stop"),
           parse_number<std::size_t>(text.substr(b + 1), "grid steps")};
    check_grid(g);
    return g;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_number<double>(text.substr(pos, comma - pos), "list value"));
        if (comma == std::string_view::npos) {
            return out;
        }
        pos = comma + 1;
    }
}

std::string format_value(double value, int precision) {
    if (value == 0.0) {
        value = 0.0;  // drop the sign of negative zero
    }
    char buf[64];
    auto res = precision <= 0 ? std::to_chars(buf, buf + sizeof buf, value)
                              : std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

const std::vector<std::string> &modes() {
    static const std::vector<std::string> all = {"entangled-absorption", "entangled-emission", "identical-absorption",
                                                 "identical-emission",   "fig1",               "fig2",
                                                 "verify"};
    return all;
}

Amplitude ScenarioConfig::amplitude(const std::string &key) const {
    auto it = amplitudes.find(key);
    if (it == amplitudes.end()) {
        throw ConfigError("missing required key '" + key + "' for mode " + mode);
    }
    return it->second;
}

double ScenarioConfig::real(const std::string &key) const {
    Amplitude a = amplitude(key);
    if (a.imag() != 0.0) {
        throw ConfigError("key '" + key + "' must be real");
    }
    return a.real();
}

ScenarioConfig parse_config(std::string_view json_text, const std::string &mode) {
    const ModeKeys keys = keys_for(mode);
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    ScenarioConfig c;
    c.mode = mode;
    for (const auto &[key, value] : doc.items()) {
        if (key == "mode") {
            if (json_string(value, key) != mode) {
                throw ConfigError("config mode '" + value.get<std::string>() + "' does not match subcommand " + mode);
            }
        } else if (key == "output_path") {
            c.output_path = json_string(value, key);
        } else if (key == "precision") {
            c.precision = check_precision(static_cast<std::int64_t>(json_unsigned(value, key)));
        } else if (contains(keys.amplitudes, key)) {
            c.amplitudes[key] = json_amplitude(value, key);
        } else if (keys.statistics && key == "statistics") {
            c.statistics = statistics_from(json_string(value, key));
        } else if (keys.absorbed_normalization && key == "absorbed_normalization") {
            c.absorbed_normalization = json_string(value, key);
            if (c.absorbed_normalization != "explicit-norm" && c.absorbed_normalization != "spatial-overlap") {
                throw ConfigError("absorbed_normalization must be explicit-norm or spatial-overlap");
            }
        } else if (keys.grid && key == "grid") {
            if (!value.is_object()) {
                throw ConfigError("key 'grid' must be an object {start, stop, steps}");
            }
            Grid g;
            std::set<std::string> seen;
            for (const auto &[gk, gv] : value.items()) {
                if (gk == "start") {
                    g.start = json_real(gv, "grid.start");
                } else if (gk == "stop") {
                    g.stop = json_real(gv, "grid.stop");
                } else if (gk == "steps") {
                    g.steps = static_cast<std::size_t>(json_unsigned(gv, "grid.steps"));
                } else {
                    throw ConfigError("unknown key 'grid." + gk + "'");
                }
                seen.insert(gk);
            }
            if (seen.size() != 3) {
                throw ConfigError("grid requires start, stop and steps");
            }
            check_grid(g);
            c.grid = g;
        } else if (keys.tilde_overlaps && key == "tilde_overlaps") {
            if (!value.is_array() || value.empty()) {
                throw ConfigError("key 'tilde_overlaps' must be a non-empty array of numbers");
            }
            c.tilde_overlaps.clear();
            for (const auto &v : value) {
                c.tilde_overlaps.push_back(json_real(v, key));
            }
        } else if (keys.seed && key == "seed") {
            c.seed = json_unsigned(value, key);
        } else if (keys.seed && key == "trials") {
            c.trials = static_cast<std::size_t>(json_unsigned(value, key));
        } else {
            throw ConfigError("unknown key '" + key + "' for mode " + mode);
        }
    }
    return c;
}

ScenarioConfig load_config(const std::string &path, const std::string &mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config '" + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text, mode);
}

void finalize(ScenarioConfig &c) {
    const ModeKeys keys = keys_for(c.mode);
    if (c.mode == "fig1") {
        c.amplitudes.try_emplace("tau_a", 1.0);
        c.amplitudes.try_emplace("tau_b", 0.1);
        if (!c.grid) {
            c.grid = Grid{0.0, 3.0, 301};
        }
    } else if (c.mode == "fig2") {
        if (c.tilde_overlaps.empty()) {
            c.tilde_overlaps = {0.5, 0.9};
        }
        if (!c.grid) {
            c.grid = Grid{0.0, 0.999, 200};
        }
    } else if (c.mode == "verify") {
        if (!c.seed) {
            c.seed = 42;
        }
        if (!c.trials) {
            c.trials = 100;
        }
        if (*c.trials < 1) {
            throw ConfigError("trials must be >= 1");
        }
    }
    if (keys.statistics && !c.statistics) {
        throw ConfigError("missing required key 'statistics' for mode " + c.mode);
    }
    for (const auto &key : keys.required) {
        if (!c.has(key)) {
            throw ConfigError("missing required key '" + key + "' for mode " + c.mode);
        }
    }
}

RunResult evaluate(const ScenarioConfig &c, std::ostream &warn) {
    if (c.mode == "entangled-absorption") {
        return run_entangled_absorption(c);
    }
    if (c.mode == "entangled-emission") {
        return run_entangled_emission(c);
    }
    if (c.mode == "identical-absorption") {
        return run_identical_absorption(c);
    }
    if (c.mode == "identical-emission") {
        return run_identical_emission(c);
    }
    if (c.mode == "fig1") {
        return run_fig1(c);
    }
    if (c.mode == "fig2") {
        return run_fig2(c, warn);
    }
    if (c.mode == "verify") {
        return run_verify(c);
    }
    throw ConfigError("unknown mode '" + c.mode + "'");
}

void write_atomically(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write '" + tmp.string() + "'");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw ConfigError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ConfigError("cannot move output into '" + path + "'");
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-particle interference calculator", "nonsep"};
    app.require_subcommand(1);

    struct Flags {
        std::string config, out, stats, x_grid, t_grid, tilde;
        double tau_a = 0.0, tau_b = 0.0;
        std::uint64_t seed = 0;
        std::size_t trials = 0;
        int precision = kDefaultPrecision;
    } f;
    std::map<std::string, CLI::App *> subs;
    std::map<std::string, std::map<std::string, CLI::Option *>> opts;
    for (const auto &mode : modes()) {
        CLI::App *sub = app.add_subcommand(mode);
        subs[mode] = sub;
        auto &o = opts[mode];
        o["config"] = sub->add_option("--config", f.config, "JSON scenario file");
        o["out"] = sub->add_option("--out", f.out, "output CSV path (default: stdout)");
        o["precision"] = sub->add_option("--precision", f.precision, "significant digits")->check(CLI::Range(0, 17));
        if (mode == "identical-absorption" || mode == "identical-emission") {
            o["stats"] = sub->add_option("--stats", f.stats, "boson|fermion|distinguishable");
        }
        if (mode == "fig1" || mode == "entangled-emission") {
            o["tau_a"] = sub->add_option("--tau-a", f.tau_a, "lifetime of species A");
            o["tau_b"] = sub->add_option("--tau-b", f.tau_b, "lifetime of species B");
        }
        if (mode == "fig1") {
            o["t_grid"] = sub->add_option("--t-grid", f.t_grid, "time grid start:stop:steps");
        }
        if (mode == "fig2") {
            o["x_grid"] = sub->add_option("--x-grid", f.x_grid, "overlap grid start:stop:steps");
            o["tilde"] = sub->add_option("--tilde-overlap", f.tilde, "final-mode overlaps v1,v2,...");
        }
        if (mode == "verify") {
            o["seed"] = sub->add_option("--seed", f.seed, "campaign seed");
            o["trials"] = sub->add_option("--trials", f.trials, "number of random trials");
        }
    }

    std::vector<const char *> argv{"nonsep"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        for (const auto &[mode, sub] : subs) {
            if (sub->parsed()) {
                out << sub->help();
                return kSuccess;
            }
        }
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    std::string mode;
    for (const auto &[name, sub] : subs) {
        if (sub->parsed()) {
            mode = name;
        }
    }
    auto given = [&](const char *name) {
        auto it = opts[mode].find(name);
        return it != opts[mode].end() && it->second->count() > 0;
    };

    try {
        ScenarioConfig c;
        c.mode = mode;
        if (given("config")) {
            c = load_config(f.config, mode);
        }
        if (given("out")) {
            c.output_path = f.out;
        }
        if (given("precision")) {
            c.precision = f.precision;
        }
        if (given("stats")) {
            c.statistics = statistics_from(f.stats);
        }
        if (given("tau_a")) {
            c.amplitudes["tau_a"] = f.tau_a;
        }
        if (given("tau_b")) {
            c.amplitudes["tau_b"] = f.tau_b;
        }
        if (given("t_grid")) {
            c.grid = parse_grid(f.t_grid);
        }
        if (given("x_grid")) {
            c.grid = parse_grid(f.x_grid);
        }
        if (given("tilde")) {
            c.tilde_overlaps = parse_list(f.tilde);
        }
        if (given("seed")) {
            c.seed = f.seed;
        }
        if (given("trials")) {
            c.trials = f.trials;
        }
        finalize(c);

        RunResult r = evaluate(c, err);
        if (!c.output_path.empty()) {
            write_atomically(c.output_path, r.output);
        } else if (r.report.empty()) {
            out << r.output;
        }
        if (!r.report.empty()) {
            out << r.report << '\n';
        }
        if (r.exit_code == kVerificationFailure) {
            err << "error: verification failed, max_abs_err >= " << format_value(kVerifyTolerance, 0) << '\n';
        }
        return r.exit_code;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace nonsep::cli
