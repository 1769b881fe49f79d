#include "qv/path_rewrite.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "qv/invariants.hpp"

namespace qv {

namespace {

int wrap(int i, int m) { return ((i % m) + m) % m; }

// ---- QPoly

void add_term(QPoly& p, const std::vector<int>& e, const Rational& c)
{
    if (c == 0) return;
    auto& slot = p.terms[e];
    slot += c;
    if (slot == 0) p.terms.erase(e);
}

QPoly padd(const QPoly& a, const QPoly& b, int sign = 1)
{
    QPoly out = a;
    for (const auto& [e, c] : b.terms) add_term(out, e, sign > 0 ? c : Rational(-c));
    return out;
}

QPoly pmul(const QPoly& a, const QPoly& b)
{
    QPoly out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (size_t q = 0; q < e.size(); ++q) e[q] = ea[q] + eb[q];
            add_term(out, e, ca * cb);
        }
    return out;
}

QPoly pconst(int m, const Rational& c)
{
    QPoly p;
    add_term(p, std::vector<int>(2 * m, 0), c);
    return p;
}

QPoly pvar(int m, int idx)
{
    std::vector<int> e(2 * m, 0);
    e[idx] = 1;
    QPoly p;
    add_term(p, e, 1);
    return p;
}

QPoly lambda_sum(int m)
{
    QPoly s;
    for (int i = 0; i < m; ++i) s = padd(s, pvar(m, i));
    return s;
}

// Exact division by lambda_0 + ... + lambda_{m-1}; false if not divisible.
bool divide_by_sum(const QPoly& p, int m, QPoly& quotient)
{
    QPoly r = p;
    QPoly q;
    const QPoly S = lambda_sum(m);
    while (true) {
        const std::vector<int>* lead = nullptr;
        const Rational* lc = nullptr;
        for (const auto& [e, c] : r.terms)
            if (e[0] > 0 && (!lead || e[0] > (*lead)[0])) {
                lead = &e;
                lc = &c;
            }
        if (!lead) break;
        std::vector<int> e = *lead;
        e[0] -= 1;
        QPoly t;
        add_term(t, e, *lc);
        q = padd(q, t);
        r = padd(r, pmul(t, S), -1);
    }
    if (!r.zero()) return false;
    quotient = std::move(q);
    return true;
}

// ---- Coef

Coef cconst(int m, const Rational& c) { return {pconst(m, c), 0}; }

bool czero(const Coef& c) { return c.num.zero(); }

QPoly sum_power(int m, int e)
{
    QPoly out = pconst(m, 1);
    const QPoly S = lambda_sum(m);
    for (int r = 0; r < e; ++r) out = pmul(out, S);
    return out;
}

Coef cnormalize(Coef c, int m)
{
    if (c.num.zero()) return {QPoly{}, 0};
    while (c.den > 0) {
        QPoly q;
        if (!divide_by_sum(c.num, m, q)) break;
        c.num = std::move(q);
        --c.den;
    }
    return c;
}

Coef cadd(const Coef& a, const Coef& b, int m)
{
    const int d = std::max(a.den, b.den);
    Coef out;
    out.den = d;
    out.num = padd(pmul(a.num, sum_power(m, d - a.den)), pmul(b.num, sum_power(m, d - b.den)));
    if (out.num.zero()) out.den = 0;
    return out;
}

Coef cmul(const Coef& a, const Coef& b, int m)
{
    return cnormalize({pmul(a.num, b.num), a.den + b.den}, m);
}

Coef cneg(const Coef& a)
{
    Coef out = a;
    for (auto& [e, c] : out.num.terms) c = -c;
    return out;
}

bool cis_one(const Coef& c, int m)
{
    Coef n = cnormalize(c, m);
    return n.den == 0 && n.num.terms.size() == 1 && n.num.terms.begin()->second == 1 &&
           std::all_of(n.num.terms.begin()->first.begin(), n.num.terms.begin()->first.end(), [](int x) { return x == 0; });
}

// Inverse of q * S^t / S^d with q rational; throws otherwise.
Coef cinverse(const Coef& c, int m)
{
    Coef n = cnormalize(c, m);
    QPoly rest = n.num;
    int t = 0;
    QPoly q;
    while (divide_by_sum(rest, m, q) && !rest.zero()) {
        rest = q;
        ++t;
    }
    if (rest.terms.size() != 1 ||
        !std::all_of(rest.terms.begin()->first.begin(), rest.terms.begin()->first.end(), [](int x) { return x == 0; }))
        throw QuiverError("trace elimination: pivot is not a rational multiple of a power of the lambda sum");
    const Rational inv = Rational(1) / rest.terms.begin()->second;
    const int e = n.den - t;
    if (e >= 0) return {pmul(pconst(m, inv), sum_power(m, e)), 0};
    return {pconst(m, inv), -e};
}

// ---- NCExpr

void eadd(NCExpr& e, const std::vector<Sym>& mono, const Coef& c)
{
    if (czero(c)) return;
    auto it = e.terms.find(mono);
    if (it == e.terms.end()) {
        e.terms.emplace(mono, c);
        return;
    }
    it->second = cadd(it->second, c, e.m);
    if (czero(it->second)) e.terms.erase(it);
}

NCExpr eplus(const NCExpr& a, const NCExpr& b)
{
    NCExpr out = a;
    for (const auto& [mono, c] : b.terms) eadd(out, mono, c);
    return out;
}

NCExpr escale(const NCExpr& a, const Coef& k)
{
    NCExpr out{a.m, {}};
    for (const auto& [mono, c] : a.terms) eadd(out, mono, cmul(c, k, a.m));
    return out;
}

NCExpr etimes(const NCExpr& a, const NCExpr& b)
{
    NCExpr out{a.m, {}};
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<Sym> mono = ma;
            mono.insert(mono.end(), mb.begin(), mb.end());
            std::sort(mono.begin(), mono.end());
            eadd(out, mono, cmul(ca, cb, a.m));
        }
    return out;
}

NCExpr esym(int m, const Sym& s)
{
    NCExpr e{m, {}};
    eadd(e, {s}, cconst(m, 1));
    return e;
}

NCExpr econst(int m, const Coef& c)
{
    NCExpr e{m, {}};
    eadd(e, {}, c);
    return e;
}

NCExpr elambda(int m, int t) { return econst(m, {pvar(m, t), 0}); }

template <class F>
NCExpr esubstitute(const NCExpr& e, F&& image)
{
    NCExpr out{e.m, {}};
    for (const auto& [mono, c] : e.terms) {
        NCExpr term = econst(e.m, c);
        for (const auto& s : mono) term = etimes(term, image(s));
        out = eplus(out, term);
    }
    return out;
}

// Coefficient of the single-symbol monomial {s}, removed from e.
Coef extract_linear(NCExpr& e, const Sym& s)
{
    auto it = e.terms.find({s});
    if (it == e.terms.end()) return {QPoly{}, 0};
    Coef c = it->second;
    e.terms.erase(it);
    for (const auto& [mono, cc] : e.terms)
        if (std::find(mono.begin(), mono.end(), s) != mono.end())
            throw QuiverError("trace elimination: unknown appears non-linearly");
    return c;
}

int rightmost_inversion(const PathWord& w)
{
    for (int p = static_cast<int>(w.size()) - 2; p >= 0; --p)
        if (w[p].kind == 'X' && w[p + 1].kind == 'Y') return p;
    return -1;
}

int leftmost_inversion(const PathWord& w)
{
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
        if (w[p].kind == 'X' && w[p + 1].kind == 'Y') return p;
    return -1;
}

PathWord slice(const PathWord& w, int from, int to)
{
    return PathWord(w.begin() + from, w.begin() + to);
}

PathWord join(const PathWord& a, const PathWord& b)
{
    PathWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Sym symbol_of_normal(int fam, int vertex, const PathWord& w)
{
    Sym s;
    s.fam = fam;
    s.vertex = vertex;
    for (const auto& a : w) (a.kind == 'Y' ? s.a : s.b) += 1;
    return s;
}

std::string rational_string(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string poly_string(const QPoly& p, int m)
{
    // higher total degree first, then by exponent vector
    std::vector<std::pair<std::vector<int>, Rational>> ts(p.terms.begin(), p.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        int dx = 0, dy = 0;
        for (int e : x.first) dx += e;
        for (int e : y.first) dy += e;
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        for (int q = 0; q < 2 * m; ++q) {
            if (e[q] == 0) continue;
            std::string v = (q < m ? "l" : "n") + std::to_string(q % m);
            if (e[q] > 1) v += "^" + std::to_string(e[q]);
            factors.push_back(v);
        }
        const bool unit = mag == 1;
        if (!unit || factors.empty()) {
            os << rational_string(mag);
            if (!factors.empty()) os << '*';
        }
        for (size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
    return first ? "0" : os.str();
}

std::string sum_string(int m)
{
    std::string s = "(";
    for (int i = 0; i < m; ++i) s += (i ? " + l" : "l") + std::to_string(i);
    return s + ")";
}

std::string sym_string(const Sym& s, int m)
{
    std::ostringstream os;
    if (s.vertex == 0 && s.a % m == s.b % m) {
        const int k = s.a % m;
        os << (s.fam == Sym::WV ? "WV(" : "Tr(") << s.a / m << ',' << s.b / m << ',' << k << ')';
    } else {
        os << (s.fam == Sym::WV ? "WV@" : "Tr@") << s.vertex << "(Y^" << s.a << " X^" << s.b << ')';
    }
    return os.str();
}

std::tuple<int, int, int, int> order_key(const Sym& s, int m)
{
    return {s.fam == Sym::Tr ? 0 : 1, s.a / m, s.b / m, s.a % m + s.vertex * 1000};
}

}  // namespace

// ---- parsing and printing

PathWord parse_path(const std::string& text, int m)
{
    if (m < 1) throw QuiverError("parse_path: m must be positive");
    static const std::regex tok(R"(^([XY])_?([0-9]+)$)");
    std::istringstream is(text);
    std::string t;
    PathWord w;
    int pos = 0;
    while (is >> t) {
        std::smatch mt;
        if (!std::regex_match(t, mt, tok)) throw QuiverError("parse_path: unknown token '" + t + "' at index " + std::to_string(pos));
        const int idx = std::stoi(mt[2]);
        if (idx >= m) throw QuiverError("parse_path: arrow index out of range in '" + t + "' at index " + std::to_string(pos));
        w.push_back({mt[1].str()[0], idx});
        ++pos;
    }
    if (w.empty()) throw QuiverError("parse_path: empty path");
    // report every defect: a path can both break and fail to close
    std::vector<std::string> defects;
    for (size_t q = 0; q + 1 < w.size(); ++q)
        if (w[q].source(m) != w[q + 1].target(m))
            defects.push_back("composability break between index " + std::to_string(q) + " and " + std::to_string(q + 1) +
                              " (" + format_path({w[q + 1]}) + " ends at " + std::to_string(w[q + 1].target(m)) + ", " +
                              format_path({w[q]}) + " starts at " + std::to_string(w[q].source(m)) + ")");
    if (w.back().source(m) != 0 || w.front().target(m) != 0)
        defects.push_back("path is not closed at vertex 0 (starts at " + std::to_string(w.back().source(m)) +
                          ", ends at " + std::to_string(w.front().target(m)) + ")");
    if (!defects.empty()) {
        std::string msg = "parse_path: " + defects[0];
        for (size_t q = 1; q < defects.size(); ++q) msg += "; " + defects[q];
        throw QuiverError(msg);
    }
    return w;
}

std::string format_path(const PathWord& p)
{
    std::string s;
    for (size_t q = 0; q < p.size(); ++q) s += (q ? " " : "") + std::string(1, p[q].kind) + std::to_string(p[q].t);
    return s;
}

int base_vertex(const PathWord& p, int m) { return p.empty() ? 0 : p.back().source(m); }

std::string to_string(const NCExpr& e)
{
    const int m = e.m;
    using Key = std::pair<int, std::vector<std::tuple<int, int, int, int>>>;
    std::vector<std::pair<Key, const std::pair<const std::vector<Sym>, Coef>*>> order;
    for (const auto& t : e.terms) {
        Key k{static_cast<int>(t.first.size()), {}};
        for (const auto& s : t.first) k.second.push_back(order_key(s, m));
        order.push_back({k, &t});
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (order.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, term] : order) {
        const auto& mono = term->first;
        const Coef c = cnormalize(term->second, m);
        std::string cs = poly_string(c.num, m);
        bool neg = false;
        if (c.num.terms.size() == 1 && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        const bool plain_one = cs == "1" && c.den == 0;
        if (c.num.terms.size() > 1 || (c.den > 0 && cs.find('/') != std::string::npos)) cs = "(" + cs + ")";
        if (c.den > 0) cs += "/" + sum_string(m) + (c.den > 1 ? "^" + std::to_string(c.den) : "");
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string syms;
        for (size_t q = 0; q < mono.size(); ++q) syms += (q ? "*" : "") + sym_string(mono[q], m);
        if (mono.empty()) os << cs;
        else if (plain_one) os << syms;
        else os << cs << '*' << syms;
    }
    return os.str();
}

Sym wv_symbol(int m, int i, int j, int k) { return {Sym::WV, 0, m * i + k, m * j + k}; }
Sym tr_symbol(int m, int i, int j, int k) { return {Sym::Tr, 0, m * i + k, m * j + k}; }

int symbol_count(const NCExpr& e)
{
    int n = 0;
    for (const auto& [mono, c] : e.terms) n += static_cast<int>(mono.size());
    return n;
}

bool is_single_symbol(const NCExpr& e, const Sym& s)
{
    if (e.terms.size() != 1) return false;
    const auto& [mono, c] = *e.terms.begin();
    return mono.size() == 1 && mono[0] == s && cis_one(c, e.m);
}

bool only_wv(const NCExpr& e)
{
    for (const auto& [mono, c] : e.terms)
        for (const auto& s : mono)
            if (s.fam != Sym::WV || s.vertex != 0) return false;
    return true;
}

NCExpr expr_sub(const NCExpr& a, const NCExpr& b)
{
    if (a.m != b.m) throw QuiverError("expr_sub: different m");
    return eplus(a, escale(b, cconst(a.m, -1)));
}

cplx eval_coef(const Coef& c, const QuiverPoint& p)
{
    const int m = p.m();
    cplx total{0.0, 0.0};
    for (const auto& [e, r] : c.num.terms) {
        cplx t = r.convert_to<double>();
        for (int q = 0; q < 2 * m; ++q) {
            const cplx base = q < m ? p.setting.tau.lambda[q] : cplx(static_cast<double>(p.setting.alpha(q - m)), 0.0);
            for (int r2 = 0; r2 < e[q]; ++r2) t *= base;
        }
        total += t;
    }
    const cplx S = p.setting.tau.sum();
    if (c.den > 0 && std::abs(S) == 0.0) throw QuiverError("eval: lambda sum vanishes");
    for (int r = 0; r < c.den; ++r) total /= S;
    return total;
}

cplx eval_expr(const NCExpr& e, const QuiverPoint& p)
{
    if (e.m != p.m()) throw QuiverError("eval: expression and point have different m");
    std::map<Sym, cplx> cache;
    auto value = [&](const Sym& s) {
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
        const int m = p.m();
        // normal word Y^a X^b based at s.vertex
        PathWord w;
        const int r = s.vertex;
        for (int q = s.a - 1; q >= 0; --q) w.push_back({'Y', wrap(r - s.b + q, m)});
        for (int q = s.b; q >= 1; --q) w.push_back({'X', wrap(r - q, m)});
        const Mat M = path_matrix(p, w, r);
        cplx val;
        if (s.fam == Sym::Tr) val = M.trace();
        else val = p.dim(0) ? (p.w * M * p.v)(0, 0) : cplx{0.0, 0.0};
        cache[s] = val;
        return val;
    };
    cplx total{0.0, 0.0};
    for (const auto& [mono, c] : e.terms) {
        cplx t = eval_coef(c, p);
        for (const auto& s : mono) t *= value(s);
        total += t;
    }
    return total;
}

// ---- engine

RewriteEngine::RewriteEngine(int m) : m_(m)
{
    if (m < 1) throw QuiverError("RewriteEngine: m must be positive");
}

PathWord RewriteEngine::normal_word(int vertex, int a, int b) const
{
    PathWord w;
    for (int q = a - 1; q >= 0; --q) w.push_back({'Y', wrap(vertex - b + q, m_)});
    for (int q = b; q >= 1; --q) w.push_back({'X', wrap(vertex - q, m_)});
    return w;
}

NCExpr RewriteEngine::wv(const PathWord& w)
{
    auto it = wv_memo_.find(w);
    if (it != wv_memo_.end()) return it->second;
    NCExpr res{m_, {}};
    const int p = rightmost_inversion(w);
    if (p < 0) {
        res = esym(m_, symbol_of_normal(Sym::WV, 0, w));
    } else {
        const int t = w[p].t;
        const int tm = wrap(t - 1, m_);
        const PathWord left = slice(w, 0, p), right = slice(w, p + 2, static_cast<int>(w.size()));
        const PathWord main = join(join(left, {{'Y', tm}, {'X', tm}}), right);
        res = eplus(wv(main), etimes(elambda(m_, t), wv(join(left, right))));
        if (t == 0) res = eplus(res, escale(etimes(wv(left), wv(right)), cconst(m_, -1)));
    }
    wv_memo_.emplace(w, res);
    return res;
}

NCExpr RewriteEngine::wv_left(const PathWord& w)
{
    auto it = wvl_memo_.find(w);
    if (it != wvl_memo_.end()) return it->second;
    NCExpr res{m_, {}};
    const int p = leftmost_inversion(w);
    if (p < 0) {
        res = esym(m_, symbol_of_normal(Sym::WV, 0, w));
    } else {
        const int t = w[p].t;
        const int tm = wrap(t - 1, m_);
        const PathWord left = slice(w, 0, p), right = slice(w, p + 2, static_cast<int>(w.size()));
        const PathWord main = join(join(left, {{'Y', tm}, {'X', tm}}), right);
        res = eplus(wv_left(main), etimes(elambda(m_, t), wv_left(join(left, right))));
        if (t == 0) res = eplus(res, escale(etimes(wv_left(left), wv_left(right)), cconst(m_, -1)));
    }
    wvl_memo_.emplace(w, res);
    return res;
}

NCExpr RewriteEngine::tr(const PathWord& w, int vertex)
{
    const auto key = std::make_pair(vertex, w);
    auto it = tr_memo_.find(key);
    if (it != tr_memo_.end()) return it->second;
    NCExpr res{m_, {}};
    const int p = rightmost_inversion(w);
    if (w.empty()) {
        res = econst(m_, {pvar(m_, m_ + vertex), 0});
    } else if (p < 0) {
        res = esym(m_, symbol_of_normal(Sym::Tr, vertex, w));
    } else {
        const int t = w[p].t;
        const int tm = wrap(t - 1, m_);
        const PathWord left = slice(w, 0, p), right = slice(w, p + 2, static_cast<int>(w.size()));
        const PathWord main = join(join(left, {{'Y', tm}, {'X', tm}}), right);
        res = eplus(tr(main, vertex), etimes(elambda(m_, t), tr(join(left, right), vertex)));
        // Tr(P vw Q) = w Q P v
        if (t == 0) res = eplus(res, escale(wv(join(right, left)), cconst(m_, -1)));
    }
    tr_memo_.emplace(key, res);
    return res;
}

// Rotates the normal word at `vertex` one letter so that it is based at vertex-1.
static PathWord rotate_down(const PathWord& w, bool move_x)
{
    PathWord out;
    if (move_x) {
        out.push_back(w.back());
        out.insert(out.end(), w.begin(), w.end() - 1);
    } else {
        out.insert(out.end(), w.begin() + 1, w.end());
        out.push_back(w.front());
    }
    return out;
}

NCExpr RewriteEngine::to_base(const Sym& s)
{
    if (s.a == 0 && s.b == 0) return econst(m_, {pvar(m_, m_ + s.vertex), 0});
    if (s.vertex == 0) return esym(m_, s);
    auto it = base_memo_.find(s);
    if (it != base_memo_.end()) return it->second;
    const int down = wrap(s.vertex - 1, m_);
    NCExpr e = tr(rotate_down(normal_word(s.vertex, s.a, s.b), s.b > 0), down);
    const Sym next{Sym::Tr, down, s.a, s.b};
    const Coef c = extract_linear(e, next);
    if (!cis_one(c, m_)) throw QuiverError("trace elimination: rotation did not reproduce the normal word");
    NCExpr res = eplus(to_base(next), reduce_all(e));
    base_memo_.emplace(s, res);
    return res;
}

NCExpr RewriteEngine::solve0(int a, int b)
{
    if (a == 0 && b == 0) return econst(m_, {pvar(m_, m_), 0});
    const Sym target{Sym::Tr, 0, a, b};
    auto it = solved_memo_.find(target);
    if (it != solved_memo_.end()) return it->second;

    // One full turn around the cycle at counts (a+1, b+1): sum of the corrections vanishes.
    const bool move_x = a <= b;
    NCExpr total{m_, {}};
    int cur = 0;
    for (int step = 0; step < m_; ++step) {
        const int down = wrap(cur - 1, m_);
        NCExpr e = tr(rotate_down(normal_word(cur, a + 1, b + 1), move_x), down);
        const Coef c = extract_linear(e, {Sym::Tr, down, a + 1, b + 1});
        if (!cis_one(c, m_)) throw QuiverError("trace elimination: rotation did not reproduce the normal word");
        total = eplus(total, e);
        cur = down;
    }
    NCExpr reduced = reduce_except(total, target);
    const Coef pivot = extract_linear(reduced, target);
    if (czero(pivot)) throw QuiverError("trace elimination: vanishing pivot");
    NCExpr res = escale(reduced, cneg(cinverse(pivot, m_)));
    solved_memo_.emplace(target, res);
    return res;
}

NCExpr RewriteEngine::reduce_all(const NCExpr& e)
{
    return esubstitute(e, [&](const Sym& s) {
        if (s.fam == Sym::WV) return esym(m_, s);
        NCExpr base = to_base(s);
        const Sym t0{Sym::Tr, 0, s.a, s.b};
        return esubstitute(base, [&](const Sym& u) { return u == t0 ? solve0(s.a, s.b) : esym(m_, u); });
    });
}

NCExpr RewriteEngine::reduce_except(const NCExpr& e, const Sym& keep)
{
    return esubstitute(e, [&](const Sym& s) {
        if (s.fam == Sym::WV || s == keep) return esym(m_, s);
        if (s.a == keep.a && s.b == keep.b) return to_base(s);
        return reduce_all(esym(m_, s));
    });
}

NCExpr RewriteEngine::normalize_wv(const PathWord& p)
{
    if (!p.empty() && (p.back().source(m_) != 0 || p.front().target(m_) != 0))
        throw QuiverError("normalize_wv: path is not closed at vertex 0");
    return wv(p);
}

NCExpr RewriteEngine::normalize_wv_leftmost(const PathWord& p) { return wv_left(p); }

NCExpr RewriteEngine::normalize_trace_at(const PathWord& p, int vertex) { return reduce_all(tr(p, vertex)); }

NCExpr RewriteEngine::normalize_trace(const PathWord& p)
{
    if (!p.empty() && (p.back().source(m_) != 0 || p.front().target(m_) != 0))
        throw QuiverError("normalize_trace: path is not closed at vertex 0");
    NCExpr out = normalize_trace_at(p, 0);
    for (auto& [mono, c] : out.terms) c = cnormalize(c, m_);
    return out;
}

}  // namespace qv
