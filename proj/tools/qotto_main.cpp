// qotto: spectra, thermal states, Otto-cycle evaluations and (q, delta) sweeps
// for the q-deformed modified Poschl-Teller working substance.
//
// Exit codes: 0 success, 2 invalid parameters/usage, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qotto/deformed_math.hpp"
#include "qotto/otto_cycle.hpp"
#include "qotto/potential.hpp"
#include "qotto/sweep.hpp"
#include "qotto/thermo.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// key=value config files ('#' starts a comment; flags override file values)

const std::set<std::string>& known_config_keys() {
    static const std::set<std::string> keys = {
        "q",         "delta",     "alpha",      "alpha_h",   "alpha_c",     "t_h",
        "t_c",       "temperature", "x_min",    "x_max",     "samples",     "scan",
        "scan_from", "scan_to",   "scan_points", "q_min",    "q_max",       "n_q",
        "delta_min", "delta_max", "n_delta",    "method",    "format",      "out",
        "preset",    "tol_truncation"};
    return keys;
}

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = strip(trimmed.substr(0, eq));
        const std::string value = strip(trimmed.substr(eq + 1));
        if (!known_config_keys().count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

// Pre-scan argv for --config so file values can seed option defaults.
std::map<std::string, std::string> config_from_argv(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return load_config(argv[i + 1]);
        if (a.rfind("--config=", 0) == 0) return load_config(a.substr(9));
    }
    return {};
}

struct ConfigSeeder {
    const std::map<std::string, std::string>* kv;

    void seed(CLI::Option* opt, const std::string& key) const {
        const auto it = kv->find(key);
        if (it == kv->end()) return;
        try {
            opt->default_val(it->second);
        } catch (const CLI::Error&) {
            throw std::invalid_argument("config value for '" + key + "' is invalid: " +
                                        it->second);
        }
    }
};

// ---------------------------------------------------------------------------
// output plumbing

void deliver(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
    f << payload;
    if (!f) throw std::runtime_error("write failed: " + out_path);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // pre-rendered cells

    std::string csv() const {
        std::string s;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) s += ',';
            s += columns[i];
        }
        s += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) s += ',';
                s += row[i];
            }
            s += '\n';
        }
        return s;
    }

    std::string json() const {
        ordered_json doc;
        doc["columns"] = columns;
        ordered_json rws = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r = ordered_json::array();
            for (const auto& cell : row) {
                if (cell.empty()) {
                    r.push_back(nullptr);
                } else {
                    try {
                        std::size_t pos = 0;
                        const double v = std::stod(cell, &pos);
                        if (pos == cell.size()) {
                            r.push_back(v);
                        } else {
                            r.push_back(cell);
                        }
                    } catch (...) {
                        r.push_back(cell);
                    }
                }
            }
            rws.push_back(std::move(r));
        }
        doc["rows"] = std::move(rws);
        return doc.dump(2) + "\n";
    }

    std::string render(const std::string& format) const {
        return format == "json" ? json() : csv();
    }
};

// ---------------------------------------------------------------------------
// subcommand state

struct PotentialArgs {
    double q = 1.0, delta = 1.5, alpha = 1.0;
    std::optional<double> x_min, x_max;
    int samples = 1001;
    std::string preset, out, format = "csv";
};

struct SpectrumArgs {
    double q = 1.0, delta = 2.0, alpha = 1.0;
    std::string scan;  // q | alpha | delta
    std::optional<double> scan_from, scan_to;
    int scan_points = 61;
    std::string preset, out, format = "csv";
};

struct ThermalArgs {
    double q = 1.0, delta = 2.0, alpha = 0.5, temperature = 1.0;
    std::string out, format = "csv";
};

struct CycleArgs {
    double q = 1.0, delta = 2.0;
    double alpha_h = 1.118, alpha_c = 0.5, t_h = 5.0, t_c = 1.0;
    double tol_truncation = 1e-3;
    std::string method = "both", out, format = "csv";
};

struct SweepArgs {
    double q_min = 0.8, q_max = 0.9, delta_min = 3.7, delta_max = 5.0;
    int n_q = 41, n_delta = 41;
    double alpha_h = 1.118, alpha_c = 0.5, t_h = 5.0, t_c = 1.0;
    double tol_truncation = 1e-3;
    std::string preset, method = "closed", out, format = "csv";
};

int run_potential(PotentialArgs& a) {
    struct Series {
        std::string label;
        qotto::PotentialParams params;
    };
    std::vector<Series> series;
    double x_lo, x_hi;
    if (!a.preset.empty()) {
        if (a.preset == "fig1a") {
            for (double al : {0.5, 1.0, 2.0})
                series.push_back({"u_alpha" + fmt_label(al), {1.0, 1.5, al}});
            x_lo = -10.0;
            x_hi = 10.0;
        } else if (a.preset == "fig1b") {
            for (double qv : {0.5, 0.7, 0.9, 1.0})
                series.push_back({"u_q" + fmt_label(qv), {qv, 1.5, 1.0}});
            x_lo = -6.0;
            x_hi = 6.0;
        } else {  // fig1c
            for (double dv : {0.9, 1.8, 2.7, 3.6})
                series.push_back({"u_delta" + fmt_label(dv), {1.0, dv, 1.0}});
            x_lo = -6.0;
            x_hi = 6.0;
        }
    } else {
        qotto::PotentialParams p{a.q, a.delta, a.alpha};
        p.validate();
        const double x0 = qotto::potential_minimum_location(p);
        x_lo = a.x_min.value_or(x0 - 10.0 / a.alpha);
        x_hi = a.x_max.value_or(x0 + 10.0 / a.alpha);
        series.push_back({"u", p});
    }
    if (a.x_min) x_lo = *a.x_min;
    if (a.x_max) x_hi = *a.x_max;
    if (!(x_hi > x_lo)) throw std::invalid_argument("x range must satisfy x_min < x_max");
    if (a.samples < 2) throw std::invalid_argument("samples must be >= 2");

    Table t;
    t.columns.push_back("x");
    for (const auto& s : series) t.columns.push_back(s.label);
    for (int i = 0; i < a.samples; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (a.samples - 1);
        std::vector<std::string> row{fmt17(x)};
        for (const auto& s : series) row.push_back(fmt17(qotto::potential(x, s.params)));
        t.rows.push_back(std::move(row));
    }
    deliver(t.render(a.format), a.out);
    std::cerr << "potential: " << series.size() << " series, " << a.samples << " samples\n";
    return 0;
}

int run_spectrum(SpectrumArgs& a) {
    if (!a.preset.empty()) {
        if (a.preset == "fig2a") {
            a.delta = 2.0;
            a.alpha = 1.5;
            a.scan = "q";
            if (!a.scan_from) a.scan_from = 0.05;
            if (!a.scan_to) a.scan_to = 0.35;
        } else if (a.preset == "fig2b") {
            a.q = 1.0;
            a.delta = 2.0;
            a.scan = "alpha";
            if (!a.scan_from) a.scan_from = 0.1;
            if (!a.scan_to) a.scan_to = 1.5;
        } else {  // fig2c
            a.q = 1.0;
            a.alpha = 0.5;
            a.scan = "delta";
            if (!a.scan_from) a.scan_from = 0.55;
            if (!a.scan_to) a.scan_to = 5.0;
        }
    }
    if (a.scan.empty()) {
        qotto::PotentialParams p{a.q, a.delta, a.alpha};
        const qotto::Spectrum s = qotto::spectrum(p);
        Table t;
        t.columns = {"n", "energy"};
        for (int n = 0; n < s.num_levels(); ++n)
            t.rows.push_back({std::to_string(n), fmt17(s.energies[n])});
        deliver(t.render(a.format), a.out);
        std::cerr << "spectrum: n_max=" << fmt17(s.n_max_real) << " levels=" << s.num_levels()
                  << "\n";
        return 0;
    }
    if (a.scan != "q" && a.scan != "alpha" && a.scan != "delta")
        throw std::invalid_argument("--scan must be one of q, alpha, delta");
    if (!a.scan_from || !a.scan_to)
        throw std::invalid_argument("--scan requires --scan-from and --scan-to");
    if (a.scan_points < 2) throw std::invalid_argument("scan points must be >= 2");
    Table t;
    t.columns = {"q", "delta", "alpha", "n", "energy"};
    for (int i = 0; i < a.scan_points; ++i) {
        const double v = *a.scan_from + (*a.scan_to - *a.scan_from) * i / (a.scan_points - 1);
        qotto::PotentialParams p{a.q, a.delta, a.alpha};
        if (a.scan == "q") p.q = v;
        if (a.scan == "alpha") p.alpha = v;
        if (a.scan == "delta") p.delta = v;
        const qotto::Spectrum s = qotto::spectrum(p);
        for (int n = 0; n < s.num_levels(); ++n)
            t.rows.push_back({fmt17(p.q), fmt17(p.delta), fmt17(p.alpha), std::to_string(n),
                              fmt17(s.energies[n])});
    }
    deliver(t.render(a.format), a.out);
    std::cerr << "spectrum scan over " << a.scan << ": " << a.scan_points << " points\n";
    return 0;
}

int run_thermal(ThermalArgs& a) {
    qotto::PotentialParams p{a.q, a.delta, a.alpha};
    const qotto::Spectrum s = qotto::spectrum(p);
    const qotto::ThermalState st = qotto::thermal_state(s, a.temperature);
    Table t;
    t.columns = {"n", "energy", "probability"};
    for (int n = 0; n < s.num_levels(); ++n)
        t.rows.push_back({std::to_string(n), fmt17(s.energies[n]), fmt17(st.probs[n])});
    deliver(t.render(a.format), a.out);
    const double log_zc = qotto::log_partition_closed(p, a.temperature);
    std::cerr << "thermal: T=" << fmt17(a.temperature) << " log_Z_sum=" << fmt17(st.log_z)
              << " log_Z_closed=" << fmt17(log_zc)
              << " free_energy_gap=" << fmt17(std::fabs(log_zc - st.log_z) / std::fabs(st.log_z))
              << "\n";
    return 0;
}

void summarize_cycle(const qotto::CycleResult& r) {
    std::cerr << "[" << qotto::to_string(r.method) << "] Q_h=" << fmt17(r.q_hot)
              << " Q_c=" << fmt17(r.q_cold) << " W=" << fmt17(r.work)
              << " regime=" << qotto::to_string(r.regime);
    if (r.efficiency) std::cerr << " eta=" << fmt17(*r.efficiency);
    if (r.cop) std::cerr << " cop=" << fmt17(*r.cop);
    if (r.method == qotto::Method::DiscreteSum)
        std::cerr << " truncation_loss=" << fmt17(r.truncation_loss);
    std::cerr << "\n";
}

void append_cycle_row(Table& t, const qotto::CycleConfig& c, const qotto::CycleResult& r) {
    t.rows.push_back({fmt17(c.q), fmt17(c.delta), fmt17(c.alpha_h), fmt17(c.alpha_c),
                      fmt17(c.t_h), fmt17(c.t_c), qotto::to_string(r.method), fmt17(r.q_hot),
                      fmt17(r.q_cold), fmt17(r.work),
                      r.efficiency ? fmt17(*r.efficiency) : std::string(),
                      r.cop ? fmt17(*r.cop) : std::string(), qotto::to_string(r.regime),
                      fmt17(r.truncation_loss)});
}

int run_cycle(CycleArgs& a) {
    qotto::CycleConfig c{a.q, a.delta, a.alpha_h, a.alpha_c, a.t_h, a.t_c, a.tol_truncation};
    c.validate();
    Table t;
    t.columns = {"q",     "delta", "alpha_h", "alpha_c",    "t_h", "t_c",    "method",
                 "q_hot", "q_cold", "work",   "efficiency", "cop", "regime", "truncation_loss"};
    const bool closed = a.method == "closed" || a.method == "both";
    const bool sum = a.method == "sum" || a.method == "both";
    if (!closed && !sum) throw std::invalid_argument("--method must be closed, sum or both");

    std::optional<qotto::CycleResult> rc, rs;
    if (closed) {
        rc = qotto::evaluate_cycle(c, qotto::Method::ClosedForm);
        summarize_cycle(*rc);
        append_cycle_row(t, c, *rc);
    }
    std::optional<qotto::TruncationError> sum_failure;
    if (sum) {
        try {
            rs = qotto::evaluate_cycle(c, qotto::Method::DiscreteSum);
            summarize_cycle(*rs);
            append_cycle_row(t, c, *rs);
        } catch (const qotto::TruncationError& e) {
            sum_failure = e;
            std::cerr << "[sum] failed: " << e.what() << " (loss=" << fmt17(e.loss) << ")\n";
        }
    }
    if (rc && rs) {
        const double gap_h = std::fabs(rc->q_hot - rs->q_hot) / std::fabs(rs->q_hot);
        const double gap_c = std::fabs(rc->q_cold - rs->q_cold) / std::fabs(rs->q_cold);
        std::cerr << "closed-vs-sum relative gaps: q_hot=" << fmt17(gap_h)
                  << " q_cold=" << fmt17(gap_c) << "\n";
    }
    deliver(t.render(a.format), a.out);
    if (sum_failure) throw *sum_failure;  // exit 3: requested route unavailable
    return 0;
}

int run_sweep_cmd(SweepArgs& a, const std::vector<CLI::Option*>& explicit_opts) {
    if (!a.preset.empty()) {
        auto untouched = [&](int idx) { return explicit_opts[idx]->count() == 0; };
        // indices: 0 q_min, 1 q_max, 2 delta_min, 3 delta_max, 4 n_q, 5 n_delta
        if (a.preset == "fig4") {
            if (untouched(0)) a.q_min = 0.8;
            if (untouched(1)) a.q_max = 0.9;
            if (untouched(2)) a.delta_min = 3.7;
            if (untouched(3)) a.delta_max = 5.0;
        } else if (a.preset == "fig5") {
            if (untouched(0)) a.q_min = 0.8;
            if (untouched(1)) a.q_max = 1.0;
            if (untouched(2)) a.delta_min = 0.9;
            if (untouched(3)) a.delta_max = 1.0;
        } else {
            throw std::invalid_argument("unknown sweep preset: " + a.preset);
        }
    }
    qotto::SweepSpec spec;
    spec.q_min = a.q_min;
    spec.q_max = a.q_max;
    spec.delta_min = a.delta_min;
    spec.delta_max = a.delta_max;
    spec.n_q = a.n_q;
    spec.n_delta = a.n_delta;
    spec.base = qotto::CycleConfig{a.q_min, a.delta_min, a.alpha_h, a.alpha_c,
                                   a.t_h,   a.t_c,       a.tol_truncation};
    if (a.method == "closed") {
        spec.method = qotto::SweepMethod::ClosedForm;
    } else if (a.method == "sum") {
        spec.method = qotto::SweepMethod::DiscreteSum;
    } else if (a.method == "both") {
        spec.method = qotto::SweepMethod::Both;
    } else {
        throw std::invalid_argument("--method must be closed, sum or both");
    }

    const qotto::SweepGrid grid = qotto::run_sweep(spec);
    const std::string payload =
        a.format == "json" ? qotto::to_json_string(grid) : qotto::to_csv(grid);
    deliver(payload, a.out);

    const auto fails = grid.failures();
    std::cerr << "sweep: " << grid.cells.size() << " cells, " << fails.size() << " failures\n";
    for (qotto::Metric metric :
         {qotto::Metric::Efficiency, qotto::Metric::COP, qotto::Metric::Work}) {
        try {
            const qotto::Optimum opt = qotto::find_optimum(grid, metric);
            const qotto::CycleConfig at = spec.config_at(opt.i_delta, opt.i_q);
            std::cerr << "optimum " << qotto::to_string(metric) << ": " << fmt17(opt.value)
                      << " at delta=" << fmt17(at.delta) << " q=" << fmt17(at.q) << " [i_delta="
                      << opt.i_delta << ", i_q=" << opt.i_q << "]\n";
        } catch (const std::domain_error&) {
            // metric undefined on this grid; nothing to report
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Otto machine with a q-deformed Poschl-Teller working substance"};
    app.require_subcommand(1);

    std::map<std::string, std::string> cfg;
    try {
        cfg = config_from_argv(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    ConfigSeeder seed{&cfg};

    PotentialArgs pa;
    SpectrumArgs sa;
    ThermalArgs ta;
    CycleArgs ca;
    SweepArgs wa;
    std::vector<CLI::Option*> sweep_grid_opts;

    try {
        std::string config_path;  // documented; value consumed by the pre-scan
        const char* config_help = "key=value config file (flags override)";
        app.add_option("--config", config_path, config_help);

        auto* pot = app.add_subcommand("potential", "tabulate U_q(x)");
        pot->add_option("--config", config_path, config_help);
        seed.seed(pot->add_option("--q", pa.q, "deformation"), "q");
        seed.seed(pot->add_option("--delta", pa.delta, "well depth parameter"), "delta");
        seed.seed(pot->add_option("--alpha", pa.alpha, "width parameter"), "alpha");
        seed.seed(pot->add_option("--x-min", pa.x_min, "left end of the x range"), "x_min");
        seed.seed(pot->add_option("--x-max", pa.x_max, "right end of the x range"), "x_max");
        seed.seed(pot->add_option("--samples", pa.samples, "number of rows"), "samples");
        seed.seed(pot->add_option("--preset", pa.preset, "fig1a|fig1b|fig1c")
                      ->check(CLI::IsMember({"fig1a", "fig1b", "fig1c"})),
                  "preset");
        seed.seed(pot->add_option("--out", pa.out, "output path (default stdout)"), "out");
        seed.seed(pot->add_option("--format", pa.format, "csv|json")
                      ->check(CLI::IsMember({"csv", "json"})),
                  "format");

        auto* spc = app.add_subcommand("spectrum", "bound-state energies");
        spc->add_option("--config", config_path, config_help);
        seed.seed(spc->add_option("--q", sa.q, "deformation"), "q");
        seed.seed(spc->add_option("--delta", sa.delta, "well depth parameter"), "delta");
        seed.seed(spc->add_option("--alpha", sa.alpha, "width parameter"), "alpha");
        seed.seed(spc->add_option("--scan", sa.scan, "scan one of: q, alpha, delta"), "scan");
        seed.seed(spc->add_option("--scan-from", sa.scan_from, "scan start"), "scan_from");
        seed.seed(spc->add_option("--scan-to", sa.scan_to, "scan end"), "scan_to");
        seed.seed(spc->add_option("--scan-points", sa.scan_points, "scan resolution"),
                  "scan_points");
        seed.seed(spc->add_option("--preset", sa.preset, "fig2a|fig2b|fig2c")
                      ->check(CLI::IsMember({"fig2a", "fig2b", "fig2c"})),
                  "preset");
        seed.seed(spc->add_option("--out", sa.out, "output path"), "out");
        seed.seed(spc->add_option("--format", sa.format, "csv|json")
                      ->check(CLI::IsMember({"csv", "json"})),
                  "format");

        auto* thm = app.add_subcommand("thermal", "occupation probabilities at temperature T");
        thm->add_option("--config", config_path, config_help);
        seed.seed(thm->add_option("--q", ta.q, "deformation"), "q");
        seed.seed(thm->add_option("--delta", ta.delta, "well depth parameter"), "delta");
        seed.seed(thm->add_option("--alpha", ta.alpha, "width parameter"), "alpha");
        seed.seed(thm->add_option("--temperature,-T", ta.temperature, "temperature"),
                  "temperature");
        seed.seed(thm->add_option("--out", ta.out, "output path"), "out");
        seed.seed(thm->add_option("--format", ta.format, "csv|json")
                      ->check(CLI::IsMember({"csv", "json"})),
                  "format");

        auto* cyc = app.add_subcommand("cycle", "evaluate one Otto cycle");
        cyc->add_option("--config", config_path, config_help);
        seed.seed(cyc->add_option("--q", ca.q, "deformation"), "q");
        seed.seed(cyc->add_option("--delta", ca.delta, "well depth parameter"), "delta");
        seed.seed(cyc->add_option("--alpha-h", ca.alpha_h, "width on the hot isochore"),
                  "alpha_h");
        seed.seed(cyc->add_option("--alpha-c", ca.alpha_c, "width on the cold isochore"),
                  "alpha_c");
        seed.seed(cyc->add_option("--t-h", ca.t_h, "hot reservoir temperature"), "t_h");
        seed.seed(cyc->add_option("--t-c", ca.t_c, "cold reservoir temperature"), "t_c");
        seed.seed(cyc->add_option("--method", ca.method, "closed|sum|both")
                      ->check(CLI::IsMember({"closed", "sum", "both"})),
                  "method");
        seed.seed(cyc->add_option("--tol-truncation", ca.tol_truncation,
                                  "max dropped probability mass (sum route)"),
                  "tol_truncation");
        seed.seed(cyc->add_option("--out", ca.out, "output path"), "out");
        seed.seed(cyc->add_option("--format", ca.format, "csv|json")
                      ->check(CLI::IsMember({"csv", "json"})),
                  "format");

        auto* swp = app.add_subcommand("sweep", "(q, delta) grid sweep");
        swp->add_option("--config", config_path, config_help);
        sweep_grid_opts.push_back(swp->add_option("--q-min", wa.q_min, "grid q lower bound"));
        sweep_grid_opts.push_back(swp->add_option("--q-max", wa.q_max, "grid q upper bound"));
        sweep_grid_opts.push_back(
            swp->add_option("--delta-min", wa.delta_min, "grid delta lower bound"));
        sweep_grid_opts.push_back(
            swp->add_option("--delta-max", wa.delta_max, "grid delta upper bound"));
        sweep_grid_opts.push_back(swp->add_option("--n-q", wa.n_q, "grid q resolution"));
        sweep_grid_opts.push_back(
            swp->add_option("--n-delta", wa.n_delta, "grid delta resolution"));
        seed.seed(sweep_grid_opts[0], "q_min");
        seed.seed(sweep_grid_opts[1], "q_max");
        seed.seed(sweep_grid_opts[2], "delta_min");
        seed.seed(sweep_grid_opts[3], "delta_max");
        seed.seed(sweep_grid_opts[4], "n_q");
        seed.seed(sweep_grid_opts[5], "n_delta");
        seed.seed(swp->add_option("--alpha-h", wa.alpha_h, "width on the hot isochore"),
                  "alpha_h");
        seed.seed(swp->add_option("--alpha-c", wa.alpha_c, "width on the cold isochore"),
                  "alpha_c");
        seed.seed(swp->add_option("--t-h", wa.t_h, "hot reservoir temperature"), "t_h");
        seed.seed(swp->add_option("--t-c", wa.t_c, "cold reservoir temperature"), "t_c");
        seed.seed(swp->add_option("--method", wa.method, "closed|sum|both")
                      ->check(CLI::IsMember({"closed", "sum", "both"})),
                  "method");
        seed.seed(swp->add_option("--tol-truncation", wa.tol_truncation,
                                  "max dropped probability mass (sum route)"),
                  "tol_truncation");
        seed.seed(swp->add_option("--preset", wa.preset, "fig4|fig5")
                      ->check(CLI::IsMember({"fig4", "fig5"})),
                  "preset");
        seed.seed(swp->add_option("--out", wa.out, "output path"), "out");
        seed.seed(swp->add_option("--format", wa.format, "csv|json")
                      ->check(CLI::IsMember({"csv", "json"})),
                  "format");

        app.parse(argc, argv);

        if (pot->parsed()) return run_potential(pa);
        if (spc->parsed()) return run_spectrum(sa);
        if (thm->parsed()) return run_thermal(ta);
        if (cyc->parsed()) return run_cycle(ca);
        if (swp->parsed()) return run_sweep_cmd(wa, sweep_grid_opts);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qotto::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}
