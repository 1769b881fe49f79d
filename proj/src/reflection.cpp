#include "qv/reflection.hpp"

#include <algorithm>
#include <initializer_list>

namespace qv {

namespace {

int wrap(int i, int m) { return ((i % m) + m) % m; }

Mat vstack(std::initializer_list<Mat> parts)
{
    Eigen::Index rows = 0, cols = -1;
    for (const auto& b : parts) {
        rows += b.rows();
        if (cols < 0) cols = b.cols();
        if (b.cols() != cols) throw QuiverError("vstack: column mismatch");
    }
    Mat out(rows, std::max<Eigen::Index>(cols, 0));
    Eigen::Index at = 0;
    for (const auto& b : parts) {
        if (b.rows() > 0 && b.cols() > 0) out.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return out;
}

Mat hstack(std::initializer_list<Mat> parts)
{
    Eigen::Index rows = -1, cols = 0;
    for (const auto& b : parts) {
        cols += b.cols();
        if (rows < 0) rows = b.rows();
        if (b.rows() != rows) throw QuiverError("hstack: row mismatch");
    }
    Mat out(std::max<Eigen::Index>(rows, 0), cols);
    Eigen::Index at = 0;
    for (const auto& b : parts) {
        if (b.rows() > 0 && b.cols() > 0) out.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return out;
}

// Im(1 - mu pi) = ker(pi) because pi mu = 1, which also forces rank(pi) = dim V_i, so no
// threshold is needed. The kernel from an SVD of pi avoids the cancellation in 1 - mu pi.
Mat kernel_basis(const Mat& pi, int expected)
{
    const Eigen::Index amb = pi.cols();
    const int dim = static_cast<int>(amb - pi.rows());
    if (dim != expected)
        throw QuiverError("reflect_vertex: image of 1 - mu pi has dimension " + std::to_string(dim) + ", expected " +
                          std::to_string(expected));
    if (amb == 0) return Mat(0, 0);
    if (pi.rows() == 0) return Mat::Identity(amb, amb);
    Eigen::JacobiSVD<Mat> svd(pi, Eigen::ComputeFullV);
    return svd.matrixV().rightCols(dim);
}

cplx h_value(const QuiverPoint& p, int i, int j, int k)
{
    if (i < 0 || j < 0) return {0.0, 0.0};
    if (p.dim(0) == 0) return {0.0, 0.0};
    return (p.w * path_matrix(p, word_cycle(p.m(), {i, j, k}), 0) * p.v)(0, 0);
}

}  // namespace

QuiverPoint reflect_vertex(int i, const QuiverPoint& p_in, ReflectionScaffold* scaffold)
{
    const int m = p_in.m();
    if (m < 2) throw QuiverError("reflect_vertex: no loop-free cyclic vertex for m = 1");
    if (i < 0 || i >= m) throw QuiverError("reflect_vertex: vertex out of range");
    const cplx lam = p_in.setting.tau.lambda[i];
    if (std::abs(lam) < 1e-12) throw QuiverError("reflect_vertex: lambda_i = 0");

    const QuiverPoint p = balance_gauge(p_in);
    QuiverSetting ns = p_in.setting;
    ns.beta = simple_reflection(i, p.setting.beta);
    ns.tau = dual_reflection(i, p.setting.tau);
    if (ns.beta.at(i) < 0) throw QuiverError("reflect_vertex: negative target dimension");
    const int newdim = static_cast<int>(ns.beta.at(i));

    ReflectionScaffold sc;
    QuiverPoint q = p;
    q.setting = ns;
    const int ni = p.dim(i);
    if (i != 0) {
        const int ip1 = wrap(i + 1, m), im1 = wrap(i - 1, m);
        const int a = p.dim(ip1), b = p.dim(im1);
        sc.mu_map = vstack({p.Y[i], -p.X[im1]});
        sc.pi_map = hstack({p.X[i], p.Y[im1]}) / lam;
        sc.projector = Mat::Identity(a + b, a + b) - sc.mu_map * sc.pi_map;
        sc.basis = kernel_basis(sc.pi_map, newdim);
        const Mat& Q = sc.basis;
        const Mat QH = Q.adjoint();

        const Mat xi = vstack({-lam * Mat::Identity(a, a) + p.Y[i] * p.X[i], -p.X[im1] * p.X[i]});
        const Mat yim1 = vstack({p.Y[i] * p.Y[im1], -lam * Mat::Identity(b, b) - p.X[im1] * p.Y[im1]});
        Mat sel1 = Mat::Zero(a, a + b), sel2 = Mat::Zero(b, a + b);
        sel1.leftCols(a) = Mat::Identity(a, a);
        sel2.rightCols(b) = Mat::Identity(b, b);

        q.X[i] = QH * xi;
        q.X[im1] = -sel2 * Q;
        q.Y[im1] = QH * yim1;
        q.Y[i] = sel1 * Q;
    } else {
        const int a = p.dim(1 % m), b = p.dim(m - 1);
        const int amb = 1 + a + b;
        sc.mu_map = vstack({Mat(p.w), p.Y[0], -p.X[m - 1]});
        sc.pi_map = hstack({Mat(p.v), p.X[0], p.Y[m - 1]}) / lam;
        sc.projector = Mat::Identity(amb, amb) - sc.mu_map * sc.pi_map;
        sc.basis = kernel_basis(sc.pi_map, newdim);
        const Mat& Q = sc.basis;
        const Mat QH = Q.adjoint();

        const Mat x0 = vstack({p.w * p.X[0], -lam * Mat::Identity(a, a) + p.Y[0] * p.X[0], -p.X[m - 1] * p.X[0]});
        const Mat ym1 =
            vstack({p.w * p.Y[m - 1], p.Y[0] * p.Y[m - 1], -lam * Mat::Identity(b, b) - p.X[m - 1] * p.Y[m - 1]});
        Mat top(1, 1);
        top(0, 0) = -lam + (p.dim(0) ? (p.w * p.v)(0, 0) : cplx{0.0, 0.0});
        const Mat vv = vstack({top, p.Y[0] * p.v, -p.X[m - 1] * p.v});
        Mat s_inf = Mat::Zero(1, amb), s1 = Mat::Zero(a, amb), s3 = Mat::Zero(b, amb);
        s_inf(0, 0) = 1.0;
        s1.block(0, 1, a, a) = Mat::Identity(a, a);
        s3.block(0, 1 + a, b, b) = Mat::Identity(b, b);

        q.X[0] = QH * x0;
        q.X[m - 1] = -s3 * Q;
        q.Y[m - 1] = QH * ym1;
        q.Y[0] = s1 * Q;
        q.v = (QH * vv).col(0);
        q.w = (s_inf * Q).row(0);
    }
    sc.pi_mu_defect = (sc.pi_map * sc.mu_map - Mat::Identity(ni, ni)).norm();
    const Mat mp = sc.mu_map * sc.pi_map;
    sc.idempotency_defect = (mp * mp - mp).norm();
    if (scaffold) *scaffold = std::move(sc);
    q.check_shapes();
    return balance_gauge(q);
}

QuiverPoint reflect_word(const WeylWord& s, const QuiverPoint& p)
{
    QuiverPoint q = p;
    for (int i : s) q = reflect_vertex(i, q);
    return q;
}

LemmaHReport check_lemmaH(int l, const QuiverPoint& p)
{
    const int m = p.m();
    const QuiverPoint r = reflect_vertex(l, p);
    const cplx lam = p.setting.tau.lambda[l];
    LemmaHReport rep;
    rep.l = l;
    const int affected = wrap(m - l, m);
    for (const auto& idx : admissible_indices(m, p.setting.total())) {
        ++rep.entries;
        const cplx h = h_value(p, idx.i, idx.j, idx.k);
        const cplx hr = h_value(r, idx.i, idx.j, idx.k);

        // unshifted: correction at k = l with H^{i-1,j-1}_{l-1}
        cplx lit = h;
        bool lit_boundary = false;
        if (idx.k == l) {
            lit -= lam * h_value(p, idx.i - 1, idx.j - 1, wrap(l - 1, m));
            lit_boundary = idx.i == 0 || idx.j == 0;
        }
        double& lslot = lit_boundary ? rep.literal_boundary : rep.literal;
        lslot = std::max(lslot, rel_dev(hr, lit));

        cplx uni = h;
        bool uni_boundary = false;
        if (idx.k == affected) {
            if (l == 0) {
                // H^{-1,-1}_{m-1} is the empty path: w'v' = wv - lambda_0 from the parameter update
                const bool empty = idx.i == 0 && idx.j == 0;
                uni -= lam * (empty ? cplx{1.0, 0.0} : h_value(p, idx.i - 1, idx.j - 1, m - 1));
                uni_boundary = idx.i == 0 || idx.j == 0;
            } else {
                uni -= lam * h_value(p, idx.i, idx.j, affected - 1);
            }
        }
        double& uslot = uni_boundary ? rep.unified_boundary : rep.unified;
        uslot = std::max(uslot, rel_dev(hr, uni));
    }
    return rep;
}

bool check_equivariance(const WeylWord& s, const GroupWord& sigma, const QuiverPoint& p, double rel_tol,
                        double* deviation)
{
    const QuiverPoint a = reflect_word(s, apply_word(sigma, p));
    const QuiverPoint b = apply_word(sigma, reflect_word(s, p));
    const double d = max_rel_deviation(invariant_vector(a), invariant_vector(b));
    if (deviation) *deviation = d;
    return d <= rel_tol;
}

}  // namespace qv
