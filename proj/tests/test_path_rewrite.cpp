#include <doctest.h>

#include "qv/invariants.hpp"
#include "qv/path_rewrite.hpp"
#include "qv/verify.hpp"

using namespace qv;

namespace {

cplx direct_wv(const QuiverPoint& p, const PathWord& w) { return (p.w * path_matrix(p, w, 0) * p.v)(0, 0); }

cplx direct_tr(const QuiverPoint& p, const PathWord& w) { return path_matrix(p, w, 0).trace(); }

}  // namespace

TEST_CASE("path parsing")
{
    const PathWord c1a = parse_path("Y1 X1 Y1 Y0", 2);
    REQUIRE(c1a.size() == 4);
    CHECK(c1a[0] == Arrow{'Y', 1});
    CHECK(c1a[3] == Arrow{'Y', 0});
    CHECK(format_path(c1a) == "Y1 X1 Y1 Y0");
    CHECK(parse_path("Y_1 X_1", 2) == parse_path("Y1 X1", 2));

    CHECK_THROWS_WITH_AS(parse_path("", 2), doctest::Contains("empty"), QuiverError);
    CHECK_THROWS_WITH_AS(parse_path("X0 Y1", 3), doctest::Contains("not closed at vertex 0"), QuiverError);
    CHECK_THROWS_WITH_AS(parse_path("X0 Y1", 3), doctest::Contains("composability"), QuiverError);
    CHECK_THROWS_AS(parse_path("Z0", 2), QuiverError);
    CHECK_THROWS_AS(parse_path("X5", 2), QuiverError);
}

TEST_CASE("normal words are fixed")
{
    for (int m = 1; m <= 3; ++m) {
        RewriteEngine eng(m);
        for (const auto& idx : admissible_indices(m, 7)) {
            if (idx.i == 0 && idx.j == 0 && idx.k == 0) continue;
            const NCExpr e = eng.normalize_wv(word_cycle(m, idx));
            CHECK(is_single_symbol(e, wv_symbol(m, idx.i, idx.j, idx.k)));
        }
        CHECK(is_single_symbol(eng.normalize_wv(word_A(m)), wv_symbol(m, 1, 0, 0)));
    }
}

TEST_CASE("hand-rewritten example for m = 2")
{
    RewriteEngine eng(2);
    const NCExpr e = eng.normalize_wv(parse_path("Y1 X1 Y1 Y0", 2));
    CHECK(to_string(e) == "(l0 + l1)*WV(1,0,0) + WV(1,0,1) - WV(0,0,0)*WV(1,0,0)");
    CHECK(only_wv(e));
    for (std::uint64_t t = 0; t < 5; ++t) {
        const QuiverPoint p = trial_point(2, 2, 40 + t);
        const cplx d = direct_wv(p, parse_path("Y1 X1 Y1 Y0", 2));
        CHECK(std::abs(eval_expr(e, p) - d) <= 1e-9 * (1 + std::abs(d)));
    }
}

TEST_CASE("traces of powers of A and B")
{
    RewriteEngine eng(2);
    CHECK(to_string(eng.normalize_trace(parse_path("Y1 Y0 Y1 Y0", 2))) == "1/(l0 + l1)*WV(2,0,0)");
    for (int m = 1; m <= 3; ++m) {
        RewriteEngine e(m);
        for (int i = 1; i <= 3; ++i) {
            PathWord a, b;
            for (int r = 0; r < i; ++r) {
                const auto wa = word_A(m), wb = word_B(m);
                a.insert(a.end(), wa.begin(), wa.end());
                b.insert(b.end(), wb.begin(), wb.end());
            }
            const NCExpr ta = e.normalize_trace(a), tb = e.normalize_trace(b);
            CHECK(only_wv(ta));
            CHECK(only_wv(tb));
            CHECK(symbol_count(ta) == 1);
            CHECK(symbol_count(tb) == 1);
            const QuiverPoint p = trial_point(m, 3, 9);
            CHECK(std::abs(eval_expr(ta, p) - direct_tr(p, a)) <= 1e-8 * (1 + std::abs(direct_tr(p, a))));
            CHECK(std::abs(eval_expr(tb, p) - direct_tr(p, b)) <= 1e-8 * (1 + std::abs(direct_tr(p, b))));
        }
    }
}

TEST_CASE("random paths match direct evaluation")
{
    std::mt19937_64 rng(5);
    for (int m = 1; m <= 3; ++m) {
        RewriteEngine eng(m);
        const QuiverPoint p = trial_point(m, 2, 100 + m);
        for (int t = 0; t < 15; ++t) {
            const PathWord w = random_closed_path(m, 8, rng);
            const NCExpr e = eng.normalize_wv(w);
            const cplx d = direct_wv(p, w);
            CHECK(std::abs(eval_expr(e, p) - d) <= 1e-7 * (1 + std::abs(d)));
            CHECK(to_string(e) == to_string(eng.normalize_wv_leftmost(w)));
            const NCExpr tr = eng.normalize_trace(w);
            CHECK(only_wv(tr));
            const cplx dt = direct_tr(p, w);
            CHECK(std::abs(eval_expr(tr, p) - dt) <= 1e-7 * (1 + std::abs(dt)));
        }
    }
}
