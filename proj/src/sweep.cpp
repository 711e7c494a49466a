#include "qotto/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace qotto {

const char* to_string(SweepMethod m) {
    switch (m) {
        case SweepMethod::ClosedForm: return "closed";
        case SweepMethod::DiscreteSum: return "sum";
        case SweepMethod::Both: return "both";
    }
    return "unknown";
}

const char* to_string(Metric m) {
    switch (m) {
        case Metric::Efficiency: return "efficiency";
        case Metric::COP: return "cop";
        case Metric::Work: return "work";
        case Metric::QCold: return "q_cold";
    }
    return "unknown";
}

void SweepSpec::validate() const {
    if (!(q_min < q_max) || !(delta_min < delta_max))
        throw std::invalid_argument("sweep bounds must satisfy min < max");
    if (n_q < 2 || n_delta < 2)
        throw std::invalid_argument("sweep resolution must be at least 2 per axis");
    if (!(q_min > 0.0)) throw std::invalid_argument("q_min must be positive");
    if (!(delta_min > 0.5)) throw std::invalid_argument("delta_min must exceed 1/2");
    CycleConfig probe = base;
    probe.q = q_min;
    probe.delta = delta_min;
    probe.validate();
}

CycleConfig SweepSpec::config_at(int i_delta, int i_q) const {
    CycleConfig c = base;
    c.delta = delta_min + (delta_max - delta_min) * (static_cast<double>(i_delta) / (n_delta - 1));
    c.q = q_min + (q_max - q_min) * (static_cast<double>(i_q) / (n_q - 1));
    return c;
}

namespace {

CellOutcome evaluate_outcome(const CycleConfig& c, Method m) {
    CellOutcome out;
    try {
        out.result = evaluate_cycle(c, m);
    } catch (const TruncationError& e) {
        out.error = "TruncationTooLarge";
        out.failure_loss = e.loss;
    } catch (const OverflowError&) {
        out.error = "Overflow";
    } catch (const NumericalError&) {
        out.error = "NumericalBreakdown";
    } catch (const std::invalid_argument&) {
        out.error = "InvalidParams";
    } catch (const std::domain_error&) {
        out.error = "NoBoundStates";
    }
    return out;
}

unsigned thread_budget(std::size_t n_cells) {
    unsigned t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (const char* env = std::getenv("QOTTO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 1024) t = static_cast<unsigned>(v);
    }
    if (static_cast<std::size_t>(t) > n_cells) t = static_cast<unsigned>(n_cells);
    return t;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SweepGrid run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepGrid grid;
    grid.spec = spec;
    const std::size_t n_cells = static_cast<std::size_t>(spec.n_delta) * spec.n_q;
    grid.cells.resize(n_cells);

    const bool want_closed =
        spec.method == SweepMethod::ClosedForm || spec.method == SweepMethod::Both;
    const bool want_sum =
        spec.method == SweepMethod::DiscreteSum || spec.method == SweepMethod::Both;

    auto evaluate_cell = [&](std::size_t idx) {
        SweepCell& cell = grid.cells[idx];
        cell.i_delta = static_cast<int>(idx) / spec.n_q;
        cell.i_q = static_cast<int>(idx) % spec.n_q;
        const CycleConfig c = spec.config_at(cell.i_delta, cell.i_q);
        cell.q = c.q;
        cell.delta = c.delta;
        if (want_closed) cell.closed = evaluate_outcome(c, Method::ClosedForm);
        if (want_sum) cell.sum = evaluate_outcome(c, Method::DiscreteSum);
    };

    const unsigned n_threads = thread_budget(n_cells);
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n_cells; ++i) evaluate_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_cells; i = next.fetch_add(1))
                    evaluate_cell(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

std::vector<SweepFailure> SweepGrid::failures() const {
    std::vector<SweepFailure> out;
    const bool want_closed =
        spec.method == SweepMethod::ClosedForm || spec.method == SweepMethod::Both;
    const bool want_sum =
        spec.method == SweepMethod::DiscreteSum || spec.method == SweepMethod::Both;
    for (const SweepCell& cell : cells) {
        if (want_closed && !cell.closed.ok())
            out.push_back({cell.i_delta, cell.i_q, Method::ClosedForm, cell.closed.error});
        if (want_sum && !cell.sum.ok())
            out.push_back({cell.i_delta, cell.i_q, Method::DiscreteSum, cell.sum.error});
    }
    return out;
}

Optimum find_optimum(const SweepGrid& grid, Metric metric, std::optional<Method> method) {
    Method m;
    if (method) {
        m = *method;
    } else {
        m = grid.spec.method == SweepMethod::DiscreteSum ? Method::DiscreteSum
                                                         : Method::ClosedForm;
    }
    std::optional<Optimum> best;
    for (const SweepCell& cell : grid.cells) {
        const CellOutcome& oc = m == Method::ClosedForm ? cell.closed : cell.sum;
        if (!oc.ok()) continue;
        const CycleResult& r = *oc.result;
        std::optional<double> v;
        switch (metric) {
            case Metric::Efficiency: v = r.efficiency; break;
            case Metric::COP: v = r.cop; break;
            case Metric::Work: v = r.work; break;
            case Metric::QCold: v = r.q_cold; break;
        }
        if (!v) continue;
        if (!best || *v > best->value) best = Optimum{cell.i_delta, cell.i_q, *v};
    }
    if (!best) throw std::domain_error("metric undefined on every cell");
    return *best;
}

namespace {

void append_row(std::string& out, const SweepGrid& grid, const SweepCell& cell, Method m) {
    const CycleConfig base = grid.spec.base;
    out += fmt17(cell.q);
    out += ',';
    out += fmt17(cell.delta);
    out += ',';
    out += fmt17(base.alpha_h);
    out += ',';
    out += fmt17(base.alpha_c);
    out += ',';
    out += fmt17(base.t_h);
    out += ',';
    out += fmt17(base.t_c);
    out += ',';
    out += to_string(m);
    out += ',';
    const CellOutcome& oc = m == Method::ClosedForm ? cell.closed : cell.sum;
    if (oc.ok()) {
        const CycleResult& r = *oc.result;
        out += fmt17(r.q_hot);
        out += ',';
        out += fmt17(r.q_cold);
        out += ',';
        out += fmt17(r.work);
        out += ',';
        if (r.efficiency) out += fmt17(*r.efficiency);
        out += ',';
        if (r.cop) out += fmt17(*r.cop);
        out += ',';
        out += to_string(r.regime);
        out += ',';
        out += fmt17(r.truncation_loss);
    } else {
        out += ",,,,,";  // q_hot..cop empty
        out += oc.error;
        out += ',';
        if (oc.error == "TruncationTooLarge") out += fmt17(oc.failure_loss);
    }
    out += '\n';
}

}  // namespace

std::string to_csv(const SweepGrid& grid) {
    std::string out =
        "q,delta,alpha_h,alpha_c,t_h,t_c,method,q_hot,q_cold,work,efficiency,cop,regime,"
        "truncation_loss\n";
    const bool want_closed =
        grid.spec.method == SweepMethod::ClosedForm || grid.spec.method == SweepMethod::Both;
    const bool want_sum =
        grid.spec.method == SweepMethod::DiscreteSum || grid.spec.method == SweepMethod::Both;
    for (const SweepCell& cell : grid.cells) {
        if (want_closed) append_row(out, grid, cell, Method::ClosedForm);
        if (want_sum) append_row(out, grid, cell, Method::DiscreteSum);
    }
    return out;
}

void write_csv(const SweepGrid& grid, std::ostream& out) { out << to_csv(grid); }

std::string to_json_string(const SweepGrid& grid) {
    using json = nlohmann::ordered_json;
    const SweepSpec& s = grid.spec;
    json doc;
    doc["spec"] = {{"q_min", s.q_min},         {"q_max", s.q_max},
                   {"delta_min", s.delta_min}, {"delta_max", s.delta_max},
                   {"n_q", s.n_q},             {"n_delta", s.n_delta},
                   {"alpha_h", s.base.alpha_h}, {"alpha_c", s.base.alpha_c},
                   {"t_h", s.base.t_h},         {"t_c", s.base.t_c},
                   {"truncation_bound", s.base.truncation_bound},
                   {"method", to_string(s.method)}};
    json records = json::array();
    json failures = json::array();
    const bool want_closed = s.method == SweepMethod::ClosedForm || s.method == SweepMethod::Both;
    const bool want_sum = s.method == SweepMethod::DiscreteSum || s.method == SweepMethod::Both;
    auto emit = [&](const SweepCell& cell, Method m) {
        const CellOutcome& oc = m == Method::ClosedForm ? cell.closed : cell.sum;
        json rec;
        rec["i_delta"] = cell.i_delta;
        rec["i_q"] = cell.i_q;
        rec["q"] = cell.q;
        rec["delta"] = cell.delta;
        rec["alpha_h"] = s.base.alpha_h;
        rec["alpha_c"] = s.base.alpha_c;
        rec["t_h"] = s.base.t_h;
        rec["t_c"] = s.base.t_c;
        rec["method"] = to_string(m);
        if (oc.ok()) {
            const CycleResult& r = *oc.result;
            rec["q_hot"] = r.q_hot;
            rec["q_cold"] = r.q_cold;
            rec["work"] = r.work;
            rec["efficiency"] = r.efficiency ? json(*r.efficiency) : json(nullptr);
            rec["cop"] = r.cop ? json(*r.cop) : json(nullptr);
            rec["regime"] = to_string(r.regime);
            rec["truncation_loss"] = r.truncation_loss;
        } else {
            rec["error"] = oc.error;
            if (oc.error == "TruncationTooLarge") rec["truncation_loss"] = oc.failure_loss;
            failures.push_back({{"i_delta", cell.i_delta},
                                {"i_q", cell.i_q},
                                {"method", to_string(m)},
                                {"error", oc.error}});
        }
        records.push_back(std::move(rec));
    };
    for (const SweepCell& cell : grid.cells) {
        if (want_closed) emit(cell, Method::ClosedForm);
        if (want_sum) emit(cell, Method::DiscreteSum);
    }
    doc["records"] = std::move(records);
    doc["failures"] = std::move(failures);
    return doc.dump(2) + "\n";
}

void write_json(const SweepGrid& grid, std::ostream& out) { out << to_json_string(grid); }

namespace {

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << payload;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_csv_file(const SweepGrid& grid, const std::string& path) {
    write_file(path, to_csv(grid));
}

void write_json_file(const SweepGrid& grid, const std::string& path) {
    write_file(path, to_json_string(grid));
}

}  // namespace qotto
