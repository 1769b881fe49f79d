#include "qv/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qv/reflection.hpp"

namespace qv {

namespace {

constexpr double kEquivTol = 1e-6;
constexpr double kLemmaTol = 1e-8;
constexpr double kRewriteTol = 1e-7;
constexpr double kSpecialTol = 1e-8;
constexpr double kIdempotencyTol = 1e-9;
constexpr double kResidualTol = 1e-8;
constexpr double kGrowthCap = 1e8;

double squared_norm(const QuiverPoint& p)
{
    double s = p.v.squaredNorm() + p.w.squaredNorm();
    for (int i = 0; i < p.m(); ++i) s += p.X[i].squaredNorm() + p.Y[i].squaredNorm();
    return s;
}

double scaled(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

SuiteReport skipped_m1(const std::string& suite, double tol)
{
    SuiteReport r;
    r.suite = suite;
    r.tolerance = tol;
    r.pass = true;
    r.notes.push_back("skipped: m = 1 has no loop-free cyclic vertex");
    return r;
}

void bump(SuiteReport& r, const std::string& key, double d)
{
    auto& slot = r.details[key];
    slot = std::max(slot, d);
}

}  // namespace

std::vector<cplx> random_generic_lambda(int m, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> rad(0.5, 1.5), ang(0.0, 6.283185307179586);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<cplx> l;
        for (int i = 0; i < m; ++i) l.push_back(std::polar(rad(rng), ang(rng)));
        if (is_generic(l)) return l;
    }
    throw QuiverError("random_generic_lambda: no generic draw");
}

QuiverPoint trial_point(int m, int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto s = QuiverSetting::make(random_generic_lambda(m, rng), std::vector<std::int64_t>(m, n));
    return solve_point(s, seed);
}

PathWord random_closed_path(int m, int max_len, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len(1, max_len), coin(0, 1);
    const int L = len(rng);
    // built in application order, reversed at the end
    std::vector<Arrow> applied;
    int cur = 0;
    auto step = [&](bool x) {
        const Arrow a = x ? Arrow{'X', ((cur - 1) % m + m) % m} : Arrow{'Y', cur};
        applied.push_back(a);
        cur = a.target(m);
    };
    for (int q = 0; q < L; ++q) step(coin(rng));
    // close with the shorter way home
    const bool home_by_x = cur != 0 && cur <= m - cur;
    while (cur != 0) step(home_by_x);
    return PathWord(applied.rbegin(), applied.rend());
}

GeneratorG random_generator(std::mt19937_64& rng, int max_k, double max_abs)
{
    std::uniform_int_distribution<int> kind(0, 1), k(1, max_k);
    std::uniform_real_distribution<double> rad(0.05, max_abs), ang(0.0, 6.283185307179586);
    GeneratorG g;
    g.kind = kind(rng) ? GenKind::psi : GenKind::phi;
    g.k = k(rng);
    g.coeff = std::polar(rad(rng), ang(rng));
    return g;
}

PathWord c_ik(int m, int i, int k)
{
    PathWord w;
    if (i + k < m) {
        for (int t = m - i - 1; t >= m - i - k; --t) w.push_back({'Y', t});
        for (int t = m - i - k; t <= m - i - 1; ++t) w.push_back({'X', t});
        return w;
    }
    for (int t = m - i - 1; t >= 0; --t) w.push_back({'Y', t});
    const PathWord inner = word_C(m, i + k - m);
    w.insert(w.end(), inner.begin(), inner.end());
    for (int t = 0; t <= m - i - 1; ++t) w.push_back({'X', t});
    return w;
}

SuiteReport suite_equivariance(const VerifyConfig& c)
{
    if (c.m < 2) return skipped_m1("equivariance", kEquivTol);
    SuiteReport r;
    r.suite = "equivariance";
    r.tolerance = kEquivTol;
    for (int t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = c.seed + t;
        const QuiverPoint p = trial_point(c.m, c.n, seed);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int i = 0; i < c.m; ++i)
            for (GenKind kind : {GenKind::psi, GenKind::phi})
                for (int k = 1; k <= 2; ++k) {
                    GeneratorG g = random_generator(rng, 2, 1.0);
                    g.kind = kind;
                    g.k = k;
                    double d = 0.0;
                    check_equivariance({i}, canonicalize({g}), p, kEquivTol, &d);
                    bump(r, "single", d);
                    ++r.trials;
                }
    }
    // composite words |s| <= 3, |sigma| <= 3
    const int composite = std::max(1, c.trials / 2);
    for (int t = 0; t < composite; ++t) {
        const std::uint64_t seed = c.seed + 7919 + t;
        const QuiverPoint p = trial_point(c.m, c.n, seed);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> len(1, 3), vert(0, c.m - 1);
        WeylWord s;
        for (int q = len(rng); q > 0; --q) s.push_back(vert(rng));
        // stacked k = 2 substitutions reach degree (2m-1)^3; redraw words that blow the point up
        // beyond what double precision can compare, and report how often that happened
        GroupWord sigma;
        for (int attempt = 0;; ++attempt) {
            std::vector<GeneratorG> letters;
            for (int q = len(rng); q > 0; --q) letters.push_back(random_generator(rng, 2, 1.0));
            sigma = canonicalize(letters);
            if (squared_norm(apply_word(sigma, p)) <= kGrowthCap * squared_norm(p)) break;
            r.details["composite_redraws"] += 1.0;
            if (attempt > 100) throw QuiverError("equivariance: no well-conditioned composite word found");
        }
        double d = 0.0;
        check_equivariance(s, sigma, p, kEquivTol, &d);
        bump(r, "composite", d);
        ++r.trials;
    }
    r.max_deviation = std::max(r.details["single"], r.details["composite"]);
    r.pass = r.max_deviation <= r.tolerance;
    return r;
}

SuiteReport suite_lemmaH(const VerifyConfig& c)
{
    if (c.m < 2) return skipped_m1("lemmaH", kLemmaTol);
    SuiteReport r;
    r.suite = "lemmaH";
    r.tolerance = kLemmaTol;
    for (int t = 0; t < c.trials; ++t) {
        const QuiverPoint p = trial_point(c.m, c.n, c.seed + t);
        for (int l = 0; l < c.m; ++l) {
            const LemmaHReport h = check_lemmaH(l, p);
            bump(r, "interior", h.unified);
            bump(r, "boundary", h.unified_boundary);
            bump(r, "unshifted_interior", h.literal);
            bump(r, "unshifted_boundary", h.literal_boundary);
            ++r.trials;
        }
    }
    r.max_deviation = std::max(r.details["interior"], r.details["boundary"]);
    r.pass = r.max_deviation <= r.tolerance;
    std::ostringstream os;
    os << "pass/fail uses the index-shifted law over the full box (boundary max " << r.details["boundary"]
       << "); the unshifted law (correction at k = l) deviates by up to "
       << std::max(r.details["unshifted_interior"], r.details["unshifted_boundary"]);
    r.notes.push_back(os.str());
    return r;
}

SuiteReport suite_rewrite(const VerifyConfig& c)
{
    SuiteReport r;
    r.suite = "rewrite";
    r.tolerance = kRewriteTol;
    RewriteEngine eng(c.m);
    for (int t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = c.seed + t;
        const QuiverPoint p = trial_point(c.m, c.n, seed);
        std::mt19937_64 rng(seed * 31 + 17);
        const PathWord w = random_closed_path(c.m, 10, rng);
        const Mat M = path_matrix(p, w, 0);
        const cplx direct_wv = (p.w * M * p.v)(0, 0), direct_tr = M.trace();
        bump(r, "wv", scaled(eval_expr(eng.normalize_wv(w), p), direct_wv));
        bump(r, "trace", scaled(eval_expr(eng.normalize_trace(w), p), direct_tr));
        bump(r, "wv_second_route", scaled(eval_expr(eng.normalize_wv_leftmost(w), p), direct_wv));
        ++r.trials;
    }
    for (const auto& [k, d] : r.details) r.max_deviation = std::max(r.max_deviation, d);
    r.pass = r.max_deviation <= r.tolerance;
    return r;
}

SuiteReport suite_trantrwv(const VerifyConfig& c)
{
    SuiteReport r;
    r.suite = "trantrwv";
    r.tolerance = kSpecialTol;
    const int m = c.m;
    RewriteEngine eng(m);
    bool exact_ok = true;
    bool lemma_ok = true;
    const int top = static_cast<int>((1 + static_cast<std::int64_t>(m) * c.n) / m);
    for (int t = 0; t < c.trials; ++t) {
        const QuiverPoint p = trial_point(m, c.n, c.seed + t);
        const cplx S = p.setting.tau.sum();
        const CycleMatrices cm = cycle_matrices(p);
        Mat Ai = Mat::Identity(p.dim(0), p.dim(0)), Bj = Ai;
        for (int e = 1; e <= top; ++e) {
            Ai = Ai * cm.A;
            Bj = Bj * cm.B;
            bump(r, "wAv", rel_dev((p.w * Ai * p.v)(0, 0), S * Ai.trace()));
            bump(r, "wBv", rel_dev((p.w * Bj * p.v)(0, 0), S * Bj.trace()));
        }
        // the trace lemma for C_{i,k}: the difference only involves lower C-symbols
        for (int i = 0; i < m; ++i)
            for (int k = 1; k < m; ++k) {
                const PathWord w = c_ik(m, i, k);
                const int base = (m - i) % m;
                const Mat M = path_matrix(p, w, base);
                const Mat Ck = path_matrix(p, word_C(m, k), 0);
                const cplx direct = M.trace() - Ck.trace();
                const NCExpr diff = expr_sub(eng.normalize_trace_at(w, base), eng.normalize_trace(word_C(m, k)));
                bump(r, "trace_lemma", scaled(eval_expr(diff, p), direct));
                for (const auto& [mono, coef] : diff.terms)
                    for (const auto& s : mono)
                        if (s.vertex != 0 || s.fam != Sym::WV || s.a != s.b || s.a >= k) lemma_ok = false;
            }
    }
    // exact symbolic forms
    for (int e = 1; e <= top; ++e) {
        PathWord a, b;
        for (int q = 0; q < e; ++q) {
            const PathWord wa = word_A(m), wb = word_B(m);
            a.insert(a.end(), wa.begin(), wa.end());
            b.insert(b.end(), wb.begin(), wb.end());
        }
        const NCExpr ta = eng.normalize_trace(a), tb = eng.normalize_trace(b);
        auto is_over_sum = [&](const NCExpr& x, const Sym& s) {
            if (x.terms.size() != 1) return false;
            const auto& [mono, coef] = *x.terms.begin();
            if (mono.size() != 1 || !(mono[0] == s) || coef.den != 1 || coef.num.terms.size() != 1) return false;
            const auto& [exps, q] = *coef.num.terms.begin();
            return q == 1 && std::all_of(exps.begin(), exps.end(), [](int v) { return v == 0; });
        };
        if (!is_over_sum(ta, wv_symbol(m, e, 0, 0)) || !is_over_sum(tb, wv_symbol(m, 0, e, 0))) exact_ok = false;
    }
    r.trials = c.trials;
    for (const auto& [k, d] : r.details) r.max_deviation = std::max(r.max_deviation, d);
    if (!exact_ok) r.notes.push_back("symbolic Tr(A^i), Tr(B^j) not of the form WV/(sum lambda)");
    if (!lemma_ok) r.notes.push_back("trace lemma: reduced form involves symbols beyond C_k");
    r.details["symbolic_forms_exact"] = exact_ok ? 0.0 : 1.0;
    r.pass = exact_ok && lemma_ok && r.max_deviation <= r.tolerance;
    return r;
}

SuiteReport suite_bookkeeping(const VerifyConfig& c)
{
    if (c.m < 2) return skipped_m1("bookkeeping", kIdempotencyTol);
    SuiteReport r;
    r.suite = "bookkeeping";
    r.tolerance = kIdempotencyTol;
    bool exact_ok = true;
    for (int t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = c.seed + t;
        const QuiverPoint p = trial_point(c.m, c.n, seed);
        std::mt19937_64 rng(seed);
        const int i = std::uniform_int_distribution<int>(0, c.m - 1)(rng);
        ReflectionScaffold sc;
        const QuiverPoint q = reflect_vertex(i, p, &sc);
        const DimVector want_beta = simple_reflection(i, p.setting.beta);
        const ParamVector want_tau = dual_reflection(i, p.setting.tau);
        if (!(q.setting.beta == want_beta)) exact_ok = false;
        for (int v = 0; v < c.m; ++v)
            if (q.setting.tau.lambda[v] != want_tau.lambda[v]) exact_ok = false;
        if (q.setting.tau.lambda_inf != want_tau.lambda_inf) exact_ok = false;
        bump(r, "idempotency", sc.idempotency_defect);
        bump(r, "pi_mu", sc.pi_mu_defect);
        bump(r, "reflected_residual", moment_residual(q));
        ++r.trials;
    }
    r.details["exact_bookkeeping"] = exact_ok ? 0.0 : 1.0;
    r.max_deviation = std::max(r.details["idempotency"], r.details["pi_mu"]);
    r.pass = exact_ok && r.max_deviation <= r.tolerance && r.details["reflected_residual"] <= kResidualTol;
    if (!exact_ok) r.notes.push_back("reflected setting differs from (r_i tau, s_i beta)");
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"bookkeeping", "lemmaH", "equivariance", "rewrite", "trantrwv"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyConfig& c)
{
    auto one = [&](const std::string& s) -> SuiteReport {
        try {
            if (s == "equivariance") return suite_equivariance(c);
            if (s == "lemmaH") return suite_lemmaH(c);
            if (s == "rewrite") return suite_rewrite(c);
            if (s == "trantrwv") return suite_trantrwv(c);
            if (s == "bookkeeping") return suite_bookkeeping(c);
        } catch (const QuiverError& e) {
            SuiteReport r;
            r.suite = s;
            r.pass = false;
            r.notes.push_back(std::string("error: ") + e.what());
            return r;
        }
        throw QuiverError("unknown suite '" + s + "'");
    };
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& s : suite_names()) out.push_back(one(s));
        return out;
    }
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw QuiverError("unknown suite '" + name + "'");
    return {one(name)};
}

}  // namespace qv
