#include "oprisk/model.hpp"

#include <sstream>

namespace oprisk {

int ModelParams::max_lag() const {
    int w = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j)
            if (couplings(i, j) > 0.0) w = std::max(w, lags(i, j));
    return w;
}

void ModelParams::canonicalize() {
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j)
            if (couplings(i, j) == 0.0) lags(i, j) = 0;
}

ModelParams ModelParams::isolated(int n) {
    ModelParams p;
    p.couplings = Eigen::MatrixXd::Zero(n, n);
    p.lags = Eigen::MatrixXi::Zero(n, n);
    p.theta = Eigen::VectorXd::Constant(n, -1.0);
    p.noise_rate = Eigen::VectorXd::Ones(n);
    return p;
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    for (const auto& v : violations) out << "violation: " << v.field << ": " << v.message << "\n";
    for (const auto& w : warnings) out << "warning: " << w.field << ": " << w.message << "\n";
    if (violations.empty() && warnings.empty()) out << "ok\n";
    return out.str();
}

namespace {

void check_dimensions(const ModelParams& p) {
    const auto n = p.theta.size();
    if (n < 1) throw DimensionError("params: need at least one process");
    if (p.couplings.rows() != n || p.couplings.cols() != n)
        throw DimensionError("params: couplings matrix must be N x N");
    if (p.lags.rows() != n || p.lags.cols() != n)
        throw DimensionError("params: lags matrix must be N x N");
    if (p.noise_rate.size() != n) throw DimensionError("params: noise_rate must have length N");
}

std::string entry(const char* name, int i, int j) {
    return std::string(name) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

std::string entry(const char* name, int i) {
    return std::string(name) + "[" + std::to_string(i + 1) + "]";
}

}  // namespace

ValidationReport validate_params(const ModelParams& params, bool strict_bound) {
    check_dimensions(params);
    ValidationReport report;
    const int n = params.n();

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double J = params.couplings(i, j);
            if (!(J >= 0.0))
                report.violations.push_back({entry("J", i, j), "couplings must be nonnegative",
                                             "J = " + std::to_string(J)});
            if (J > 0.0 && params.lags(i, j) < 1)
                report.violations.push_back({entry("t_star", i, j),
                                             "lag must be >= 1 where coupling is positive",
                                             "t* = " + std::to_string(params.lags(i, j))});
            if (params.lags(i, j) < 0)
                report.violations.push_back(
                    {entry("t_star", i, j), "lags must be nonnegative",
                     "t* = " + std::to_string(params.lags(i, j))});
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!(params.noise_rate(i) > 0.0))
            report.violations.push_back({entry("lambda", i), "noise rate must be positive",
                                         "lambda = " + std::to_string(params.noise_rate(i))});
        if (!(params.theta(i) < 0.0))
            report.violations.push_back({entry("theta", i), "theta must be negative",
                                         "theta = " + std::to_string(params.theta(i))});
    }
    for (int i = 0; i < n; ++i) {
        double reach = params.theta(i);
        for (int j = 0; j < n; ++j)
            if (params.couplings(i, j) > 0.0)
                reach += params.couplings(i, j) * params.lags(i, j);
        if (!(reach < 0.0)) {
            ValidationIssue issue{entry("theta", i),
                                  "interactions alone must not generate a loss",
                                  "theta + sum_j J t* = " + std::to_string(reach)};
            if (strict_bound)
                report.violations.push_back(issue);
            else
                report.warnings.push_back(issue);
        }
    }
    return report;
}

CouplingGraph coupling_graph(const ModelParams& params) {
    check_dimensions(params);
    CouplingGraph g;
    g.n = params.n();
    g.successors.resize(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (params.couplings(i, j) > 0.0) {
                g.edges.emplace_back(j, i);
                g.successors[j].push_back(i);
            }
    return g;
}

bool has_causal_loops(const CouplingGraph& graph) {
    // Iterative three-color DFS.
    enum : uint8_t { white, grey, black };
    std::vector<uint8_t> color(graph.n, white);
    std::vector<std::pair<int, size_t>> stack;
    for (int root = 0; root < graph.n; ++root) {
        if (color[root] != white) continue;
        color[root] = grey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < graph.successors[v].size()) {
                const int w = graph.successors[v][next++];
                if (color[w] == grey) return true;
                if (color[w] == white) {
                    color[w] = grey;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = black;
                stack.pop_back();
            }
        }
    }
    return false;
}

Trajectory::Trajectory(Eigen::MatrixXd losses) : losses_(std::move(losses)) {
    if (losses_.rows() < 1 || losses_.cols() < 1)
        throw DimensionError("trajectory: need at least one process and one step");
    if ((losses_.array() < 0.0).any() || !losses_.allFinite())
        throw Error("trajectory: losses must be finite and nonnegative");
}

Eigen::MatrixXd cumulative(const Trajectory& trajectory) {
    Eigen::MatrixXd z = trajectory.losses();
    for (int t = 1; t < z.cols(); ++t) z.col(t) += z.col(t - 1);
    return z;
}

}  // namespace oprisk
