#pragma once

#include <map>
#include <string>
#include <vector>

#include "qv/g_action.hpp"
#include "qv/rep_points.hpp"

namespace qv {

using PathWord = ArrowWord;

// Tr or w(.)v of the normal word Y^a X^b based at `vertex`. At vertex 0 this is A^i C_k B^j with
// a = mi+k, b = mj+k. Trace symbols at other vertices only occur inside the engine.
struct Sym {
    enum Fam { Tr = 0, WV = 1 };
    int fam = WV;
    int vertex = 0;
    int a = 0;
    int b = 0;
    auto operator<=>(const Sym&) const = default;
};

// Polynomial over Q in lambda_0..lambda_{m-1}, n_0..n_{m-1}.
struct QPoly {
    std::map<std::vector<int>, Rational> terms;
    bool zero() const { return terms.empty(); }
};

// num / (lambda_0 + ... + lambda_{m-1})^den
struct Coef {
    QPoly num;
    int den = 0;
};

struct NCExpr {
    int m = 1;
    std::map<std::vector<Sym>, Coef> terms;
    bool zero() const { return terms.empty(); }
};

PathWord parse_path(const std::string& text, int m);
std::string format_path(const PathWord& p);
int base_vertex(const PathWord& p, int m);  // source of the first-applied arrow

std::string to_string(const NCExpr& e);
cplx eval_expr(const NCExpr& e, const QuiverPoint& p);
cplx eval_coef(const Coef& c, const QuiverPoint& p);

// Exact-structure helpers used by tests.
int symbol_count(const NCExpr& e);
bool is_single_symbol(const NCExpr& e, const Sym& s);  // exactly one term, coefficient 1
Sym wv_symbol(int m, int i, int j, int k);
Sym tr_symbol(int m, int i, int j, int k);
bool only_wv(const NCExpr& e);
NCExpr expr_sub(const NCExpr& a, const NCExpr& b);

class RewriteEngine {
public:
    explicit RewriteEngine(int m);

    int m() const { return m_; }
    NCExpr normalize_wv(const PathWord& p);
    // Requires a closed path at 0; output contains WV symbols only.
    NCExpr normalize_trace(const PathWord& p);
    // Trace of a closed path at any vertex, reduced to WV symbols.
    NCExpr normalize_trace_at(const PathWord& p, int vertex);
    // Second route: swaps the leftmost X-before-Y pair first. Used to cross-check normalize_wv.
    NCExpr normalize_wv_leftmost(const PathWord& p);

    std::size_t cache_size() const { return wv_memo_.size() + tr_memo_.size(); }

private:
    int m_;
    std::map<PathWord, NCExpr> wv_memo_;
    std::map<PathWord, NCExpr> wvl_memo_;
    std::map<std::pair<int, PathWord>, NCExpr> tr_memo_;
    std::map<Sym, NCExpr> base_memo_;
    std::map<Sym, NCExpr> solved_memo_;

    NCExpr wv(const PathWord& w);
    NCExpr wv_left(const PathWord& w);
    NCExpr tr(const PathWord& w, int vertex);
    NCExpr to_base(const Sym& s);
    NCExpr solve0(int a, int b);
    NCExpr reduce_all(const NCExpr& e);
    NCExpr reduce_except(const NCExpr& e, const Sym& keep);
    PathWord normal_word(int vertex, int a, int b) const;
};

}  // namespace qv
