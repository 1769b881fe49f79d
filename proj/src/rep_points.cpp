#include "qv/rep_points.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qv {

namespace {

int wrap(int i, int m) { return ((i % m) + m) % m; }

Mat identity(int n) { return Mat::Identity(n, n); }

// Stacked residual of (qv1)-(qv3) as a complex vector.
Vec stacked_residual(const QuiverPoint& p)
{
    const int m = p.m();
    std::vector<Mat> blocks;
    int len = 1;
    for (int i = 0; i < m; ++i) {
        const int im1 = wrap(i - 1, m);
        Mat r = p.X[i] * p.Y[i] - p.Y[im1] * p.X[im1] - p.setting.tau.lambda[i] * identity(p.dim(i));
        if (i == 0) r += p.v * p.w;
        len += static_cast<int>(r.size());
        blocks.push_back(std::move(r));
    }
    Vec out(len);
    int at = 0;
    for (const auto& b : blocks) {
        out.segment(at, b.size()) = Eigen::Map<const Vec>(b.data(), b.size());
        at += static_cast<int>(b.size());
    }
    out(at) = -(p.w * p.v)(0, 0) - p.setting.tau.lambda_inf;
    return out;
}

int unknown_count(const QuiverPoint& p)
{
    int n = 0;
    for (const auto& x : p.X) n += static_cast<int>(x.size());
    for (const auto& y : p.Y) n += static_cast<int>(y.size());
    return n + static_cast<int>(p.v.size() + p.w.size());
}

Vec pack(const QuiverPoint& p)
{
    Vec z(unknown_count(p));
    int at = 0;
    auto put = [&](const auto& M) {
        for (Eigen::Index c = 0; c < M.cols(); ++c)
            for (Eigen::Index r = 0; r < M.rows(); ++r) z(at++) = M(r, c);
    };
    for (const auto& x : p.X) put(x);
    for (const auto& y : p.Y) put(y);
    put(p.v);
    put(p.w);
    return z;
}

void unpack(const Vec& z, QuiverPoint& p)
{
    int at = 0;
    auto get = [&](auto& M) {
        for (Eigen::Index c = 0; c < M.cols(); ++c)
            for (Eigen::Index r = 0; r < M.rows(); ++r) M(r, c) = z(at++);
    };
    for (auto& x : p.X) get(x);
    for (auto& y : p.Y) get(y);
    get(p.v);
    get(p.w);
}

Mat jacobian_at(QuiverPoint q, const Vec& z)
{
    // the residual is quadratic, so the central difference is exact up to rounding
    unpack(z, q);
    const Eigen::Index nf = stacked_residual(q).size();
    Mat J(nf, z.size());
    Vec zz = z;
    for (Eigen::Index k = 0; k < z.size(); ++k) {
        zz(k) = z(k) + 1.0;
        unpack(zz, q);
        Vec fp = stacked_residual(q);
        zz(k) = z(k) - 1.0;
        unpack(zz, q);
        Vec fm = stacked_residual(q);
        zz(k) = z(k);
        J.col(k) = 0.5 * (fp - fm);
    }
    return J;
}

void fill_gaussian(Mat& M, std::mt19937_64& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    for (Eigen::Index c = 0; c < M.cols(); ++c)
        for (Eigen::Index r = 0; r < M.rows(); ++r) {
            const double re = nd(rng);
            const double im = nd(rng);
            M(r, c) = cplx(re, im);
        }
}

}  // namespace

QuiverSetting QuiverSetting::make(std::vector<cplx> lambda, const std::vector<std::int64_t>& alpha, bool require_generic)
{
    if (alpha.empty() || lambda.size() != alpha.size()) throw QuiverError("setting: lambda and alpha must have length m >= 1");
    for (auto a : alpha)
        if (a < 0) throw QuiverError("setting: negative dimension");
    QuiverSetting s;
    s.m = static_cast<int>(alpha.size());
    s.beta = DimVector::framed(alpha);
    s.tau = ParamVector::for_dim(std::move(lambda), s.beta);
    if (require_generic && !is_generic(s.tau)) throw QuiverError("setting: lambda is not generic");
    return s;
}

bool QuiverSetting::same_as(const QuiverSetting& o, double tol) const
{
    if (m != o.m || !(beta == o.beta)) return false;
    if (std::abs(tau.lambda_inf - o.tau.lambda_inf) > tol * (1 + std::abs(tau.lambda_inf))) return false;
    for (int i = 0; i < m; ++i)
        if (std::abs(tau.lambda[i] - o.tau.lambda[i]) > tol * (1 + std::abs(tau.lambda[i]))) return false;
    return true;
}

void QuiverPoint::check_shapes() const
{
    const int mm = m();
    if (mm < 1 || static_cast<int>(X.size()) != mm || static_cast<int>(Y.size()) != mm)
        throw QuiverError("point: expected m matrices X and Y");
    for (int i = 0; i < mm; ++i) {
        if (X[i].rows() != dim(i) || X[i].cols() != dim(i + 1))
            throw QuiverError("point: X_" + std::to_string(i) + " has the wrong shape");
        if (Y[i].rows() != dim(i + 1) || Y[i].cols() != dim(i))
            throw QuiverError("point: Y_" + std::to_string(i) + " has the wrong shape");
    }
    if (v.size() != dim(0) || w.size() != dim(0)) throw QuiverError("point: v, w must have length alpha_0");
}

QuiverPoint zero_point(const QuiverSetting& s)
{
    QuiverPoint p;
    p.setting = s;
    for (int i = 0; i < s.m; ++i) {
        p.X.push_back(Mat::Zero(p.dim(i), p.dim(i + 1)));
        p.Y.push_back(Mat::Zero(p.dim(i + 1), p.dim(i)));
    }
    p.v = Vec::Zero(p.dim(0));
    p.w = RowVec::Zero(p.dim(0));
    return p;
}

Mat path_matrix(const QuiverPoint& p, const ArrowWord& word, int start)
{
    const int m = p.m();
    int at = wrap(start, m);
    Mat acc = identity(p.dim(at));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->source(m) != at) throw QuiverError("path_matrix: word is not composable");
        acc = p.arrow(*it) * acc;
        at = it->target(m);
    }
    return acc;
}

double moment_residual(const QuiverPoint& p)
{
    p.check_shapes();
    const int m = p.m();
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        const int im1 = wrap(i - 1, m);
        Mat r = p.X[i] * p.Y[i] - p.Y[im1] * p.X[im1] - p.setting.tau.lambda[i] * identity(p.dim(i));
        if (i == 0) r += p.v * p.w;
        worst = std::max(worst, r.norm());
    }
    const cplx wv = p.dim(0) > 0 ? (p.w * p.v)(0, 0) : cplx{0.0, 0.0};
    return std::max(worst, std::abs(-wv - p.setting.tau.lambda_inf));
}

QuiverPoint base_point_n1(const QuiverSetting& s)
{
    for (int i = 0; i < s.m; ++i)
        if (s.alpha(i) != 1) throw QuiverError("base_point_n1: alpha must be all ones");
    QuiverPoint p = zero_point(s);
    if (s.m == 1) {
        p.v(0) = 1.0;
        p.w(0) = s.tau.lambda[0];
        return p;
    }
    cplx partial{0.0, 0.0};
    for (int i = 0; i < s.m; ++i) {
        p.Y[i](0, 0) = 1.0;
        if (i > 0) partial += s.tau.lambda[i];
        p.X[i](0, 0) = (i == 0) ? cplx{0.0, 0.0} : partial;
    }
    p.v(0) = 1.0;
    p.w(0) = s.tau.sum();
    return p;
}

QuiverPoint solve_point(const QuiverSetting& s, std::uint64_t seed, SolveReport* report, const SolveOptions& opt)
{
    if (!in_sigma_tau(s.tau, s.beta)) throw QuiverError("solve_point: beta is not a positive root, no simple representation");
    double best = std::numeric_limits<double>::infinity();
    QuiverPoint best_point;
    int total_iter = 0;
    for (int attempt = 0; attempt < opt.restarts; ++attempt) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
        QuiverPoint p = zero_point(s);
        for (auto& x : p.X) fill_gaussian(x, rng);
        for (auto& y : p.Y) fill_gaussian(y, rng);
        Mat vv(p.v.size(), 1), ww(1, p.w.size());
        fill_gaussian(vv, rng);
        fill_gaussian(ww, rng);
        p.v = vv.col(0);
        p.w = ww.row(0);

        Vec z = pack(p);
        Vec f = stacked_residual(p);
        double fn = f.norm();
        for (int it = 0; it < opt.max_iter; ++it) {
            ++total_iter;
            if (moment_residual(p) <= opt.tol * 1e-3) break;
            Mat J = jacobian_at(p, z);
            Vec dz = J.completeOrthogonalDecomposition().solve(-f);
            double t = 1.0;
            bool moved = false;
            for (int h = 0; h < 40; ++h) {
                QuiverPoint q = p;
                unpack(z + t * dz, q);
                Vec fq = stacked_residual(q);
                if (fq.norm() < fn) {
                    z += t * dz;
                    p = std::move(q);
                    f = std::move(fq);
                    fn = f.norm();
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
            if (!moved) break;
        }
        const double r = moment_residual(p);
        if (r < best) {
            best = r;
            best_point = p;
        }
        if (r <= opt.tol) {
            if (report) *report = {attempt + 1, total_iter, r};
            return p;
        }
    }
    if (report) *report = {opt.restarts, total_iter, best};
    throw QuiverError("solve_point: no convergence within the restart budget, best residual " + std::to_string(best));
}

QuiverPoint gauge_apply(const std::vector<Mat>& g, const QuiverPoint& p)
{
    const int m = p.m();
    if (static_cast<int>(g.size()) != m) throw QuiverError("gauge_apply: need m matrices");
    std::vector<Mat> inv(m);
    for (int i = 0; i < m; ++i) {
        if (g[i].rows() != p.dim(i) || g[i].cols() != p.dim(i)) throw QuiverError("gauge_apply: g_i has the wrong size");
        if (p.dim(i) == 0) {
            inv[i] = g[i];
            continue;
        }
        Eigen::JacobiSVD<Mat> svd(g[i]);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) throw QuiverError("gauge_apply: singular g_i");
        inv[i] = g[i].inverse();
    }
    QuiverPoint q = p;
    for (int i = 0; i < m; ++i) {
        const int ip1 = wrap(i + 1, m);
        q.X[i] = g[i] * p.X[i] * inv[ip1];
        q.Y[i] = g[ip1] * p.Y[i] * inv[i];
    }
    q.v = g[0] * p.v;
    q.w = p.w * inv[0];
    return q;
}

QuiverPoint balance_gauge(const QuiverPoint& p, int sweeps)
{
    const int m = p.m();
    QuiverPoint q = p;
    if (m == 1) {
        // X_0, Y_0 are loops; only the v, w scale can be balanced by a scalar
        const double sv = q.v.squaredNorm(), sw = q.w.squaredNorm();
        if (sv > 0.0 && sw > 0.0) {
            const double g = std::pow(sw / sv, 0.25);
            q.v *= g;
            q.w /= g;
        }
        return q;
    }
    // coordinate descent: at vertex j the cost is t * up + down / t with t = |g_j|^2
    for (int sweep = 0; sweep < sweeps; ++sweep)
        for (int j = 0; j < m; ++j) {
            if (q.dim(j) == 0) continue;
            const int jm1 = wrap(j - 1, m);
            double up = q.X[j].squaredNorm() + q.Y[jm1].squaredNorm();
            double down = q.X[jm1].squaredNorm() + q.Y[j].squaredNorm();
            if (j == 0) {
                up += q.v.squaredNorm();
                down += q.w.squaredNorm();
            }
            if (!(up > 0.0 && down > 0.0)) continue;
            const double g = std::pow(down / up, 0.25);
            q.X[j] *= g;
            q.Y[jm1] *= g;
            q.X[jm1] /= g;
            q.Y[j] /= g;
            if (j == 0) {
                q.v *= g;
                q.w /= g;
            }
        }
    return q;
}

std::vector<Mat> random_gauge(const QuiverSetting& s, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Mat> g;
    for (int i = 0; i < s.m; ++i) {
        const int n = static_cast<int>(s.alpha(i));
        Mat G(n, n);
        fill_gaussian(G, rng);
        g.push_back(identity(n) + (n > 0 ? 0.5 / std::sqrt(static_cast<double>(n)) : 0.0) * G);
    }
    return g;
}

BlockPoint block_form(const QuiverPoint& p)
{
    p.check_shapes();
    const int m = p.m();
    BlockPoint b;
    b.offset.resize(m + 1, 0);
    for (int i = 0; i < m; ++i) b.offset[i + 1] = b.offset[i] + p.dim(i);
    const int N = b.offset[m];
    b.X_big = Mat::Zero(N, N);
    b.Y_big = Mat::Zero(N, N);
    b.Lambda_big = Mat::Zero(N, N);
    for (int i = 0; i < m; ++i) {
        const int ip1 = wrap(i + 1, m);
        b.X_big.block(b.offset[i], b.offset[ip1], p.dim(i), p.dim(ip1)) += p.X[i];
        b.Y_big.block(b.offset[ip1], b.offset[i], p.dim(ip1), p.dim(i)) += p.Y[i];
        b.Lambda_big.block(b.offset[i], b.offset[i], p.dim(i), p.dim(i)) = p.setting.tau.lambda[i] * identity(p.dim(i));
    }
    b.v_big = Vec::Zero(N);
    b.w_big = RowVec::Zero(N);
    b.v_big.head(p.dim(0)) = p.v;
    b.w_big.head(p.dim(0)) = p.w;
    return b;
}

double block_residual(const QuiverPoint& p)
{
    const BlockPoint b = block_form(p);
    const int m = p.m();
    const Mat R = b.X_big * b.Y_big - b.Y_big * b.X_big + b.v_big * b.w_big - b.Lambda_big;
    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        worst = std::max(worst, R.block(b.offset[i], b.offset[i], p.dim(i), p.dim(i)).norm());
    const cplx wv = R.size() > 0 ? (b.w_big * b.v_big)(0, 0) : cplx{0.0, 0.0};
    return std::max(worst, std::abs(-wv - p.setting.tau.lambda_inf));
}

Mat moment_jacobian(const QuiverPoint& p) { return jacobian_at(p, pack(p)); }

TangentReport tangent_dimension(const QuiverPoint& p, double rank_tol)
{
    TangentReport t;
    const Mat J = moment_jacobian(p);
    t.unknowns = static_cast<int>(J.cols());
    Eigen::JacobiSVD<Mat> svd(J);
    const auto& sv = svd.singularValues();
    const double top = sv.size() ? sv(0) : 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > rank_tol * std::max(1.0, top)) ++t.rank;
    for (int i = 0; i < p.m(); ++i) t.gauge_dim += p.dim(i) * p.dim(i);
    t.tangent_dim = t.unknowns - t.rank - t.gauge_dim;
    t.expected = 2 * ringel_p(p.setting.beta, p.setting.beta).p_of_beta;
    return t;
}

}  // namespace qv
