#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qotto/otto_cycle.hpp"

namespace qotto {

enum class SweepMethod { ClosedForm, DiscreteSum, Both };

const char* to_string(SweepMethod m);

/// Rectangular inclusive (q, delta) grid over a base cycle configuration.
struct SweepSpec {
    double q_min, q_max;
    double delta_min, delta_max;
    int n_q = 41;
    int n_delta = 41;
    CycleConfig base;  // supplies alpha_h, alpha_c, t_h, t_c, truncation_bound
    SweepMethod method = SweepMethod::ClosedForm;

    void validate() const;
    /// Node (i_delta, i_q) as a full cycle configuration.
    CycleConfig config_at(int i_delta, int i_q) const;
};

/// Per-cell, per-method outcome; failures are data, never aborts.
struct CellOutcome {
    std::optional<CycleResult> result;
    std::string error;        // stable tag, empty on success
    double failure_loss = 0;  // truncation loss when error == "TruncationTooLarge"

    bool ok() const { return result.has_value(); }
};

struct SweepCell {
    int i_delta, i_q;
    double q, delta;
    CellOutcome closed;  // populated when the spec requests ClosedForm/Both
    CellOutcome sum;     // populated when the spec requests DiscreteSum/Both
};

struct SweepFailure {
    int i_delta, i_q;
    Method method;
    std::string error;
};

struct SweepGrid {
    SweepSpec spec;
    std::vector<SweepCell> cells;  // row-major by (i_delta, i_q), always n_delta*n_q

    std::vector<SweepFailure> failures() const;
};

/// Evaluates every node. Cells are independent; evaluation is parallel over
/// up to QOTTO_THREADS threads (default: hardware concurrency) and the result
/// is a function of the spec alone, independent of thread count.
SweepGrid run_sweep(const SweepSpec& spec);

enum class Metric { Efficiency, COP, Work, QCold };

const char* to_string(Metric m);

struct Optimum {
    int i_delta, i_q;
    double value;
};

/// Argmax of the metric over cells where it is defined; ties broken by lowest
/// (i_delta, i_q). Method defaults to ClosedForm when the grid carries it.
/// Throws std::domain_error when the metric is defined nowhere.
Optimum find_optimum(const SweepGrid& grid, Metric metric,
                     std::optional<Method> method = std::nullopt);

/// CSV emission: header
///   q,delta,alpha_h,alpha_c,t_h,t_c,method,q_hot,q_cold,work,efficiency,cop,regime,truncation_loss
/// then one row per cell per requested method in grid order; floats in 17
/// significant-digit round-trip form; empty fields where a value is undefined;
/// failed evaluations carry the error tag in the regime column.
void write_csv(const SweepGrid& grid, std::ostream& out);

/// JSON mirror: {"spec": {...}, "records": [...], "failures": [...]}.
void write_json(const SweepGrid& grid, std::ostream& out);

std::string to_csv(const SweepGrid& grid);
std::string to_json_string(const SweepGrid& grid);

/// File variants; I/O failures raise std::runtime_error naming the path.
void write_csv_file(const SweepGrid& grid, const std::string& path);
void write_json_file(const SweepGrid& grid, const std::string& path);

}  // namespace qotto
