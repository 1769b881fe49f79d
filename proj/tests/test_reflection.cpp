#include <doctest.h>

#include "qv/g_action.hpp"
#include "qv/invariants.hpp"
#include "qv/reflection.hpp"

using namespace qv;

namespace {

std::vector<cplx> lambdas(int m)
{
    std::vector<cplx> lam;
    for (int i = 0; i < m; ++i) lam.push_back({0.7 + 0.3 * i, 0.2 - 0.15 * i});
    return lam;
}

QuiverPoint solved(const std::vector<std::int64_t>& alpha, std::uint64_t seed)
{
    return solve_point(QuiverSetting::make(lambdas(static_cast<int>(alpha.size())), alpha), seed);
}

}  // namespace

TEST_CASE("reflecting the m = 2 base point at 0")
{
    const QuiverPoint p = base_point_n1(QuiverSetting::make(lambdas(2), {1, 1}));
    ReflectionScaffold sc;
    const QuiverPoint q = reflect_vertex(0, p, &sc);
    CHECK(q.setting.beta == DimVector::framed({2, 1}));
    const ParamVector want = dual_reflection(0, p.setting.tau);
    for (int i = 0; i < 2; ++i) CHECK(q.setting.tau.lambda[i] == want.lambda[i]);
    CHECK(q.setting.tau.lambda_inf == want.lambda_inf);
    CHECK(moment_residual(q) <= 1e-10);
    CHECK(sc.pi_mu_defect <= 1e-12);
    CHECK(sc.idempotency_defect <= 1e-12);
}

TEST_CASE("reflections keep the moment relations")
{
    for (int m = 2; m <= 4; ++m)
        for (std::int64_t n = 1; n <= 2; ++n) {
            const QuiverPoint p = solved(std::vector<std::int64_t>(m, n), 7);
            for (int i = 0; i < m; ++i) {
                const QuiverPoint q = reflect_vertex(i, p);
                CHECK(q.setting.beta == simple_reflection(i, p.setting.beta));
                CHECK(moment_residual(q) <= 1e-8);
            }
        }
}

TEST_CASE("reflection at a vertex with lambda_i = 0 is refused")
{
    const QuiverPoint p = base_point_n1(QuiverSetting::make({{0, 0}, {1, 0}, {0.5, 0.5}}, {1, 1, 1}, false));
    CHECK_THROWS_AS(reflect_vertex(0, p), QuiverError);
    CHECK_THROWS_AS(reflect_vertex(1, base_point_n1(QuiverSetting::make({{0.5, 0}}, {1}))), QuiverError);
}

TEST_CASE("reflection squared returns the point")
{
    const QuiverPoint p = solved({2, 2, 2}, 3);
    CHECK(points_equal(reflect_word({1, 1}, p), p, 1e-8));
    CHECK(points_equal(reflect_word({0, 0}, p), p, 1e-8));
}

TEST_CASE("reduction word lands in the Calogero-Moser setting")
{
    const QuiverPoint p = solved({2, 1, 1}, 1);
    const Reduction r = reduce_to_cm(p.setting.beta);
    const QuiverPoint q = reflect_word(r.word, p);
    CHECK(q.setting.beta == DimVector::framed({1, 1, 1}));
    CHECK(moment_residual(q) <= 1e-8);
}

TEST_CASE("invariants after a reflection")
{
    // m = 2, l = 0, i = j = 1, k = 0: H'_0 = H_0 - lambda_0 H^{0,0}_1
    const QuiverPoint p = solved({2, 2}, 11);
    const QuiverPoint r = reflect_vertex(0, p);
    const cplx lhs = invariant(r, Family::H, {1, 1, 0});
    const cplx rhs = invariant(p, Family::H, {1, 1, 0}) - p.setting.tau.lambda[0] * invariant(p, Family::H, {0, 0, 1});
    CHECK(rel_dev(lhs, rhs) <= 1e-8);

    for (int m = 2; m <= 3; ++m)
        for (std::int64_t n = 1; n <= 2; ++n) {
            const QuiverPoint q = solved(std::vector<std::int64_t>(m, n), 5);
            for (int l = 0; l < m; ++l) {
                const LemmaHReport rep = check_lemmaH(l, q);
                CHECK(rep.entries > 0);
                CHECK(rep.unified <= 1e-8);
                CHECK(rep.unified_boundary <= 1e-8);
            }
        }
}

TEST_CASE("reflections commute with the group action")
{
    const QuiverPoint p2 = solved({1, 1}, 2);
    const GroupWord s = canonicalize({{GenKind::psi, 1, {0.4, 0.2}}});
    double dev = 0;
    CHECK(check_equivariance({0}, s, p2, 1e-6, &dev));
    CHECK(check_equivariance({0}, GroupWord{}, p2, 1e-12));

    const QuiverPoint p3 = solved({1, 1, 1}, 2);
    const GroupWord f = canonicalize({{GenKind::phi, 1, {-0.3, 0.25}}});
    CHECK(check_equivariance({1, 0}, f, p3, 1e-6, &dev));
}
