#include "qv/quiver_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qv {

namespace {

struct Edge {
    int tail;
    int head;
};

// a_i : i+1 -> i for cyclic i, a_inf : inf -> 0
std::vector<Edge> edges(int m)
{
    std::vector<Edge> out;
    for (int i = 0; i < m; ++i) out.push_back({(i + 1) % m, i});
    out.push_back({kInf, 0});
    return out;
}

void check_same(const DimVector& a, const DimVector& b)
{
    if (a.entries.size() != b.entries.size() || a.entries.size() < 2)
        throw QuiverError("dimension vectors have mismatched lengths");
}

void check_vertex(int m, int v)
{
    if (v != kInf && (v < 0 || v >= m)) throw QuiverError("vertex index out of range: " + std::to_string(v));
    if (!is_loop_free(m, v)) throw QuiverError("vertex " + vertex_name(v) + " carries a loop");
}

bool near_integer(cplx z)
{
    constexpr double tol = 1e-9;
    if (std::abs(z.imag()) > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

}  // namespace

DimVector DimVector::framed(const std::vector<std::int64_t>& alpha)
{
    DimVector d(static_cast<int>(alpha.size()));
    d.at(kInf) = 1;
    for (size_t i = 0; i < alpha.size(); ++i) d.at(static_cast<int>(i)) = alpha[i];
    return d;
}

std::int64_t DimVector::total() const
{
    return std::accumulate(entries.begin() + 1, entries.end(), std::int64_t{0});
}

cplx ParamVector::sum() const
{
    return std::accumulate(lambda.begin(), lambda.end(), cplx{0.0, 0.0});
}

ParamVector ParamVector::for_dim(std::vector<cplx> lambda, const DimVector& beta)
{
    if (static_cast<int>(lambda.size()) != beta.m()) throw QuiverError("lambda length does not match m");
    ParamVector t;
    t.lambda = std::move(lambda);
    cplx s{0.0, 0.0};
    for (int i = 0; i < beta.m(); ++i) s += t.lambda[i] * static_cast<double>(beta.at(i));
    t.lambda_inf = -s / static_cast<double>(beta.at(kInf) == 0 ? 1 : beta.at(kInf));
    return t;
}

std::string to_string(RootTag t)
{
    switch (t) {
    case RootTag::real: return "real";
    case RootTag::imaginary: return "imaginary";
    default: return "not_a_root";
    }
}

std::string vertex_name(int v) { return v == kInf ? std::string("inf") : std::to_string(v); }

std::int64_t ringel_form(const DimVector& beta, const DimVector& gamma)
{
    check_same(beta, gamma);
    std::int64_t s = 0;
    for (size_t i = 0; i < beta.entries.size(); ++i) s += beta.entries[i] * gamma.entries[i];
    for (const auto& e : edges(beta.m())) s -= beta.at(e.tail) * gamma.at(e.head);
    return s;
}

std::int64_t symmetric_form(const DimVector& beta, const DimVector& gamma)
{
    return ringel_form(beta, gamma) + ringel_form(gamma, beta);
}

RingelValues ringel_p(const DimVector& beta, const DimVector& gamma)
{
    RingelValues r;
    r.bilinear = ringel_form(beta, gamma);
    r.symmetric = symmetric_form(beta, gamma);
    r.p_of_beta = 1 - ringel_form(beta, beta);
    return r;
}

std::int64_t cartan(int m, int i, int j)
{
    DimVector a(m), b(m);
    a.at(i) = 1;
    b.at(j) = 1;
    return symmetric_form(a, b);
}

bool is_loop_free(int m, int v)
{
    if (v == kInf) return true;
    return m >= 2;
}

DimVector simple_reflection(int i, const DimVector& beta)
{
    const int m = beta.m();
    check_vertex(m, i);
    DimVector e(m);
    e.at(i) = 1;
    DimVector out = beta;
    out.at(i) -= symmetric_form(beta, e);
    return out;
}

ParamVector dual_reflection(int i, const ParamVector& tau)
{
    const int m = tau.m();
    check_vertex(m, i);
    ParamVector out = tau;
    const cplx ti = tau.at(i);
    for (int j = kInf; j < m; ++j) out.at(j) = tau.at(j) - static_cast<double>(cartan(m, i, j)) * ti;
    return out;
}

cplx pairing(const ParamVector& tau, const DimVector& beta)
{
    if (tau.m() != beta.m()) throw QuiverError("pairing: mismatched m");
    cplx s = tau.lambda_inf * static_cast<double>(beta.at(kInf));
    for (int i = 0; i < beta.m(); ++i) s += tau.lambda[i] * static_cast<double>(beta.at(i));
    return s;
}

bool is_generic(const std::vector<cplx>& lambda)
{
    const int m = static_cast<int>(lambda.size());
    if (m < 1) return false;
    const cplx s = std::accumulate(lambda.begin(), lambda.end(), cplx{0.0, 0.0});
    if (std::abs(s) <= 1e-9) return false;
    for (int a = 1; a < m; ++a) {
        cplx part{0.0, 0.0};
        for (int b = a; b < m; ++b) {
            part += lambda[b];
            if (near_integer(part / s)) return false;
        }
    }
    return true;
}

RootClass classify_root(const DimVector& beta)
{
    const int m = beta.m();
    if (std::all_of(beta.entries.begin(), beta.entries.end(), [](auto x) { return x == 0; }))
        throw QuiverError("classify_root: zero vector");
    DimVector b = beta;
    if (std::all_of(b.entries.begin(), b.entries.end(), [](auto x) { return x <= 0; }))
        for (auto& x : b.entries) x = -x;
    RootClass rc;
    auto mixed = [](const DimVector& d) {
        bool pos = false, neg = false;
        for (auto x : d.entries) {
            pos |= x > 0;
            neg |= x < 0;
        }
        return pos && neg;
    };
    if (mixed(b)) return rc;

    std::vector<int> verts;
    verts.push_back(kInf);
    for (int i = 0; i < m; ++i) verts.push_back(i);

    for (int step = 0; step < 10000; ++step) {
        int nonzero = 0, single = kInf - 1;
        for (int v : verts)
            if (b.at(v) != 0) {
                ++nonzero;
                single = v;
            }
        if (nonzero == 1 && b.at(single) == 1 && is_loop_free(m, single)) {
            rc.tag = RootTag::real;
            return rc;
        }
        int pick = kInf - 1;
        for (int v : verts) {
            if (!is_loop_free(m, v)) continue;
            DimVector e(m);
            e.at(v) = 1;
            if (symmetric_form(b, e) > 0) {
                pick = v;
                break;
            }
        }
        if (pick == kInf - 1) {
            // fundamental region: (b, e_i) <= 0 everywhere and connected support
            for (int v : verts) {
                DimVector e(m);
                e.at(v) = 1;
                if (symmetric_form(b, e) > 0) return rc;
            }
            std::vector<int> supp;
            for (int v : verts)
                if (b.at(v) != 0) supp.push_back(v);
            std::vector<int> seen{supp.front()};
            for (size_t q = 0; q < seen.size(); ++q)
                for (const auto& e : edges(m)) {
                    int other = kInf - 1;
                    if (e.tail == seen[q]) other = e.head;
                    if (e.head == seen[q]) other = e.tail;
                    if (other != kInf - 1 && b.at(other) != 0 &&
                        std::find(seen.begin(), seen.end(), other) == seen.end())
                        seen.push_back(other);
                }
            if (seen.size() == supp.size()) rc.tag = RootTag::imaginary;
            return rc;
        }
        b = simple_reflection(pick, b);
        rc.witness.push_back(pick);
        if (std::any_of(b.entries.begin(), b.entries.end(), [](auto x) { return x < 0; })) {
            rc.tag = RootTag::not_a_root;
            return rc;
        }
    }
    throw QuiverError("classify_root: reflection cap exceeded");
}

bool in_sigma_tau(const ParamVector& tau, const DimVector& beta)
{
    const cplx pr = pairing(tau, beta);
    double scale = std::abs(tau.lambda_inf);
    for (auto l : tau.lambda) scale = std::max(scale, std::abs(l));
    if (std::abs(pr) > 1e-12 * std::max(1.0, scale) * std::max<double>(1.0, static_cast<double>(beta.total())))
        throw QuiverError("in_sigma_tau: tau . beta != 0");
    if (!is_generic(tau.lambda)) throw QuiverError("in_sigma_tau: lambda is not generic");
    if (std::any_of(beta.entries.begin(), beta.entries.end(), [](auto x) { return x < 0; })) return false;
    if (std::all_of(beta.entries.begin(), beta.entries.end(), [](auto x) { return x == 0; })) return false;
    return classify_root(beta).tag != RootTag::not_a_root;
}

Reduction reduce_to_cm(const DimVector& beta)
{
    const int m = beta.m();
    if (beta.at(kInf) != 1) throw QuiverError("reduce_to_cm: expected beta = (1, alpha)");
    Reduction r;
    if (m == 1) {
        r.n = beta.at(0);
        return r;
    }
    DimVector b = beta;
    auto mx = *std::max_element(b.entries.begin() + 1, b.entries.end());
    const std::int64_t cap = 64 * (m + std::max<std::int64_t>(mx, 0));
    for (std::int64_t it = 0; it <= cap; ++it) {
        auto alpha = b.alpha();
        if (std::all_of(alpha.begin(), alpha.end(), [&](auto x) { return x == alpha[0]; })) {
            r.n = alpha[0];
            return r;
        }
        // largest alpha_k among the height-lowering vertices, smallest index on ties
        int pick = -1;
        for (int k = 0; k < m; ++k) {
            DimVector e(m);
            e.at(k) = 1;
            if (symmetric_form(b, e) <= 0) continue;
            if (pick < 0 || alpha[k] > alpha[pick]) pick = k;
        }
        if (pick < 0) throw QuiverError("reduce_to_cm: no height-lowering reflection (input is not a root of the expected shape)");
        b = simple_reflection(pick, b);
        r.word.push_back(pick);
        if (std::any_of(b.entries.begin(), b.entries.end(), [](auto x) { return x < 0; }))
            throw QuiverError("reduce_to_cm: negative entry reached");
    }
    throw QuiverError("reduce_to_cm: iteration cap exceeded");
}

DimVector apply_weyl(const WeylWord& w, DimVector beta)
{
    for (int i : w) beta = simple_reflection(i, beta);
    return beta;
}

ParamVector apply_weyl(const WeylWord& w, ParamVector tau)
{
    for (int i : w) tau = dual_reflection(i, tau);
    return tau;
}

}  // namespace qv
