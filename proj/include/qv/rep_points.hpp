#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qv/quiver_core.hpp"

namespace qv {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RowVec = Eigen::RowVectorXcd;

struct QuiverSetting {
    int m = 0;
    ParamVector tau;  // (lambda_inf, lambda)
    DimVector beta;   // (1, alpha)

    std::int64_t alpha(int i) const { return beta.at(i); }
    std::int64_t total() const { return beta.total(); }
    const std::vector<cplx>& lambda() const { return tau.lambda; }

    // Validates shape, tau . beta = 0 and genericity.
    static QuiverSetting make(std::vector<cplx> lambda, const std::vector<std::int64_t>& alpha, bool require_generic = true);
    bool same_as(const QuiverSetting& o, double tol = 1e-12) const;
};

// Letter X_t : t+1 -> t or Y_t : t -> t+1 (indices mod m).
struct Arrow {
    char kind = 'X';
    int t = 0;

    int source(int m) const { return kind == 'X' ? (t + 1) % m : t; }
    int target(int m) const { return kind == 'X' ? t : (t + 1) % m; }
    bool operator==(const Arrow&) const = default;
    auto operator<=>(const Arrow&) const = default;
};

// Written order a_n ... a_1: the last element acts first.
using ArrowWord = std::vector<Arrow>;

struct QuiverPoint {
    QuiverSetting setting;
    std::vector<Mat> X;  // X_i : alpha_i x alpha_{i+1}
    std::vector<Mat> Y;  // Y_i : alpha_{i+1} x alpha_i
    Vec v;               // alpha_0
    RowVec w;            // alpha_0

    int m() const { return setting.m; }
    int dim(int i) const { return static_cast<int>(setting.alpha(((i % m()) + m()) % m())); }
    const Mat& arrow(const Arrow& a) const { return a.kind == 'X' ? X.at(a.t) : Y.at(a.t); }
    void check_shapes() const;
};

struct BlockPoint {
    Mat X_big, Y_big, Lambda_big;
    Vec v_big;
    RowVec w_big;
    std::vector<int> offset;  // row offset of each block
};

QuiverPoint zero_point(const QuiverSetting& s);

// Matrix of the path; start is the source vertex, needed when the word is empty.
Mat path_matrix(const QuiverPoint& p, const ArrowWord& word, int start);

double moment_residual(const QuiverPoint& p);
QuiverPoint base_point_n1(const QuiverSetting& s);

struct SolveOptions {
    int restarts = 5;
    int max_iter = 200;
    double tol = 1e-10;
};
struct SolveReport {
    int restarts_used = 0;
    int iterations = 0;
    double residual = 0.0;
};
QuiverPoint solve_point(const QuiverSetting& s, std::uint64_t seed, SolveReport* report = nullptr,
                        const SolveOptions& opt = {});

QuiverPoint gauge_apply(const std::vector<Mat>& g, const QuiverPoint& p);
// Scalar gauge at each vertex reducing the total squared norm of the maps; invariants are unchanged.
QuiverPoint balance_gauge(const QuiverPoint& p, int sweeps = 30);
std::vector<Mat> random_gauge(const QuiverSetting& s, std::uint64_t seed);

BlockPoint block_form(const QuiverPoint& p);
double block_residual(const QuiverPoint& p);

// Jacobian of the stacked moment map residual with respect to all entries.
Mat moment_jacobian(const QuiverPoint& p);
struct TangentReport {
    int unknowns = 0;
    int rank = 0;
    int gauge_dim = 0;
    int tangent_dim = 0;
    std::int64_t expected = 0;  // 2 p(beta)
};
TangentReport tangent_dimension(const QuiverPoint& p, double rank_tol = 1e-7);

}  // namespace qv
