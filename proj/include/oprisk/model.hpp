#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oprisk {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape/structure problems (wrong matrix dimensions, window too narrow).
/// Distinct from rule violations, which are reported, not thrown.
struct DimensionError : Error {
    using Error::Error;
};

/// Full parameter set of the interacting loss-process model.
///
/// couplings(i, j) is the potential loss induced on process i by one
/// active step of process j; lags(i, j) is the memory depth of that
/// coupling. theta is the per-step control spending (negative), and
/// noise_rate the rate of the exponential noise, per process.
struct ModelParams {
    Eigen::MatrixXd couplings;   // J, N x N, nonnegative
    Eigen::MatrixXi lags;        // t*, N x N, >= 1 wherever J > 0
    Eigen::VectorXd theta;       // length N
    Eigen::VectorXd noise_rate;  // lambda, length N, > 0

    int n() const { return static_cast<int>(theta.size()); }

    /// Widest memory depth over coupled pairs; 0 if there are no couplings.
    int max_lag() const;

    /// Zero out lag entries where the coupling is zero, so (J, t*) pairs
    /// have one canonical form.
    void canonicalize();

    /// N isolated processes with J = 0, t* = 0, theta = -1, lambda = 1.
    static ModelParams isolated(int n);
};

struct ValidationIssue {
    std::string field;    // e.g. "theta[2]"
    std::string rule;     // e.g. "theta must be negative"
    std::string message;  // human-readable detail
};

struct ValidationReport {
    std::vector<ValidationIssue> violations;
    std::vector<ValidationIssue> warnings;

    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Check every ModelParams invariant. Structural problems (mismatched
/// dimensions) throw DimensionError; rule violations are returned in the
/// report. With strict_bound off, the feasibility bound
/// theta_i + sum_j J_ij t*_ij < 0 is downgraded to a warning.
ValidationReport validate_params(const ModelParams& params, bool strict_bound = true);

/// Directed graph with edge j -> i wherever couplings(i, j) > 0.
struct CouplingGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;    // (from, to)
    std::vector<std::vector<int>> successors;  // successors[j] = targets of j
};

CouplingGraph coupling_graph(const ModelParams& params);

/// True iff the graph has a directed cycle (self-loops included).
bool has_causal_loops(const CouplingGraph& graph);

/// Realized per-step losses of N processes over T steps; entries are
/// nonnegative amounts of money. Column t holds step t+1 of the model
/// (time is 1-based in the model and in file formats, 0-based here).
class Trajectory {
  public:
    explicit Trajectory(Eigen::MatrixXd losses);

    int n() const { return static_cast<int>(losses_.rows()); }
    int horizon() const { return static_cast<int>(losses_.cols()); }
    const Eigen::MatrixXd& losses() const { return losses_; }

  private:
    Eigen::MatrixXd losses_;  // N x T
};

/// z(i, t) = sum of losses of process i over steps 0..t.
Eigen::MatrixXd cumulative(const Trajectory& trajectory);

}  // namespace oprisk
