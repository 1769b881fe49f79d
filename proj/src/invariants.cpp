#include "qv/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace qv {

std::string key_string(const InvariantKey& key)
{
    std::ostringstream os;
    os << (key.family == Family::G ? 'G' : 'H') << ':' << key.idx.i << ':' << key.idx.j << ':' << key.idx.k;
    return os.str();
}

InvariantKey parse_key(const std::string& s)
{
    InvariantKey key;
    char fam = 0, c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(s);
    if (!(is >> fam >> c1 >> key.idx.i >> c2 >> key.idx.j >> c3 >> key.idx.k) || c1 != ':' || c2 != ':' || c3 != ':' ||
        (fam != 'G' && fam != 'H'))
        throw QuiverError("bad invariant key: " + s);
    key.family = fam == 'G' ? Family::G : Family::H;
    return key;
}

ArrowWord word_A(int m)
{
    ArrowWord w;
    for (int t = m - 1; t >= 0; --t) w.push_back({'Y', t});
    return w;
}

ArrowWord word_B(int m)
{
    ArrowWord w;
    for (int t = 0; t < m; ++t) w.push_back({'X', t});
    return w;
}

ArrowWord word_C(int m, int k)
{
    ArrowWord w;
    for (int t = m - 1; t >= m - k; --t) w.push_back({'Y', t});
    for (int t = m - k; t < m; ++t) w.push_back({'X', t});
    return w;
}

ArrowWord word_cycle(int m, const InvariantIndex& idx)
{
    ArrowWord w;
    const ArrowWord a = word_A(m), b = word_B(m), c = word_C(m, idx.k);
    for (int r = 0; r < idx.i; ++r) w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), c.begin(), c.end());
    for (int r = 0; r < idx.j; ++r) w.insert(w.end(), b.begin(), b.end());
    return w;
}

CycleMatrices cycle_matrices(const QuiverPoint& p)
{
    const int m = p.m();
    CycleMatrices c;
    c.A = path_matrix(p, word_A(m), 0);
    c.B = path_matrix(p, word_B(m), 0);
    for (int k = 0; k < m; ++k) c.C.push_back(path_matrix(p, word_C(m, k), 0));
    return c;
}

bool admissible(int m, std::int64_t N, const InvariantIndex& idx)
{
    if (idx.i < 0 || idx.j < 0 || idx.k < 0 || idx.k >= m) return false;
    return std::max<std::int64_t>(std::int64_t{m} * idx.i + idx.k, std::int64_t{m} * idx.j + idx.k) <= N;
}

std::vector<InvariantIndex> admissible_indices(int m, std::int64_t N)
{
    std::vector<InvariantIndex> out;
    for (int k = 0; k < m; ++k)
        for (int i = 0; std::int64_t{m} * i + k <= N; ++i)
            for (int j = 0; std::int64_t{m} * j + k <= N; ++j) out.push_back({i, j, k});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

cplx eval_family(const QuiverPoint& p, Family f, const Mat& M)
{
    if (f == Family::G) return M.trace();
    if (M.rows() == 0) return {0.0, 0.0};
    return (p.w * M * p.v)(0, 0);
}

}  // namespace

cplx invariant(const QuiverPoint& p, Family f, const InvariantIndex& idx)
{
    if (!admissible(p.m(), p.setting.total(), idx)) throw QuiverError("invariant: index outside the admissible box");
    return eval_family(p, f, path_matrix(p, word_cycle(p.m(), idx), 0));
}

InvariantVector invariant_vector(const QuiverPoint& p)
{
    const int m = p.m();
    const auto N = p.setting.total();
    const CycleMatrices c = cycle_matrices(p);
    const int n0 = p.dim(0);
    std::vector<Mat> Ap{Mat::Identity(n0, n0)}, Bp{Mat::Identity(n0, n0)};
    InvariantVector out;
    out.setting = p.setting;
    for (const auto& idx : admissible_indices(m, N)) {
        while (static_cast<int>(Ap.size()) <= idx.i) Ap.push_back(Ap.back() * c.A);
        while (static_cast<int>(Bp.size()) <= idx.j) Bp.push_back(Bp.back() * c.B);
        const Mat M = Ap[idx.i] * c.C[idx.k] * Bp[idx.j];
        out.entries[{Family::G, idx}] = eval_family(p, Family::G, M);
        out.entries[{Family::H, idx}] = eval_family(p, Family::H, M);
    }
    return out;
}

double rel_dev(cplx a, cplx b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double max_rel_deviation(const InvariantVector& a, const InvariantVector& b)
{
    if (a.entries.size() != b.entries.size()) throw QuiverError("invariant vectors have different index sets");
    double worst = 0.0;
    for (const auto& [key, va] : a.entries) {
        auto it = b.entries.find(key);
        if (it == b.entries.end()) throw QuiverError("invariant vectors have different index sets");
        worst = std::max(worst, rel_dev(va, it->second));
    }
    return worst;
}

double block_consistency(const QuiverPoint& p)
{
    const int m = p.m();
    const BlockPoint b = block_form(p);
    const InvariantVector iv = invariant_vector(p);
    const int n0 = p.dim(0);
    const auto N = p.setting.total();
    std::vector<Mat> Yp{Mat::Identity(N, N)}, Xp{Mat::Identity(N, N)};
    double worst = 0.0;
    for (const auto& idx : admissible_indices(m, N)) {
        const int q = m * idx.i + idx.k, r = m * idx.j + idx.k;
        while (static_cast<int>(Yp.size()) <= q) Yp.push_back(Yp.back() * b.Y_big);
        while (static_cast<int>(Xp.size()) <= r) Xp.push_back(Xp.back() * b.X_big);
        const Mat P = Yp[q] * Xp[r];
        const cplx g = P.topLeftCorner(n0, n0).trace();
        const cplx h = N > 0 ? (b.w_big * P * b.v_big)(0, 0) : cplx{0.0, 0.0};
        worst = std::max(worst, rel_dev(g, iv.entries.at({Family::G, idx})));
        worst = std::max(worst, rel_dev(h, iv.entries.at({Family::H, idx})));
    }
    return worst;
}

bool points_equal(const QuiverPoint& p, const QuiverPoint& q, double rel_tol)
{
    if (!p.setting.same_as(q.setting, 1e-9)) throw QuiverError("points_equal: settings differ");
    return max_rel_deviation(invariant_vector(p), invariant_vector(q)) <= rel_tol;
}

}  // namespace qv
