#include <doctest.h>

#include "qv/rep_points.hpp"

using namespace qv;

namespace {

QuiverSetting cm(std::vector<cplx> lambda, std::int64_t n)
{
    const auto m = lambda.size();
    return QuiverSetting::make(std::move(lambda), std::vector<std::int64_t>(m, n));
}

}  // namespace

TEST_CASE("base point for m = 2")
{
    const cplx l0{0.7, 0.2}, l1{1.3, -0.4};
    const QuiverPoint p = base_point_n1(cm({l0, l1}, 1));
    CHECK(std::abs(p.X[0](0, 0)) < 1e-15);
    CHECK(std::abs(p.X[1](0, 0) - l1) < 1e-15);
    CHECK(std::abs(p.Y[0](0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(p.Y[1](0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(p.v(0) - 1.0) < 1e-15);
    CHECK(std::abs(p.w(0) - (l0 + l1)) < 1e-15);
    CHECK(moment_residual(p) <= 1e-14);

    const BlockPoint b = block_form(p);
    REQUIRE(b.X_big.rows() == 2);
    CHECK(std::abs(b.X_big(0, 1)) < 1e-15);
    CHECK(std::abs(b.X_big(1, 0) - l1) < 1e-15);
    CHECK(std::abs((b.w_big * b.v_big)(0, 0) + p.setting.tau.lambda_inf) < 1e-14);
    CHECK(block_residual(p) <= 1e-14);
}

TEST_CASE("base point for m = 1")
{
    const QuiverPoint p = base_point_n1(cm({{0.9, 0.3}}, 1));
    CHECK(std::abs(p.X[0](0, 0)) < 1e-15);
    CHECK(std::abs(p.Y[0](0, 0)) < 1e-15);
    CHECK(std::abs((p.w * p.v)(0, 0) - cplx(0.9, 0.3)) < 1e-15);
    const BlockPoint b = block_form(p);
    CHECK((b.X_big - p.X[0]).norm() < 1e-15);
    CHECK((b.Y_big - p.Y[0]).norm() < 1e-15);
}

TEST_CASE("base point residual for m up to 6")
{
    for (int m = 1; m <= 6; ++m) {
        std::vector<cplx> lam;
        for (int i = 0; i < m; ++i) lam.push_back({0.6 + 0.17 * i, 0.11 * (i % 3) - 0.05});
        const QuiverPoint p = base_point_n1(cm(lam, 1));
        CHECK(moment_residual(p) <= 1e-14);
        CHECK(std::abs((p.w * p.v)(0, 0) - p.setting.tau.sum()) < 1e-14);
    }
}

TEST_CASE("zero point residual is max |lambda_i|")
{
    const QuiverSetting s = cm({{1.0, 0}, {2.0, 0}, {-0.5, 0}}, 1);
    CHECK(moment_residual(zero_point(s)) == doctest::Approx(std::abs(s.tau.lambda_inf)).epsilon(1e-12));
}

TEST_CASE("solver certifies small settings")
{
    const QuiverSetting s2 = cm({{0.8, 0.1}, {1.1, -0.3}}, 1);
    SolveReport rep;
    const QuiverPoint p = solve_point(s2, 0, &rep);
    CHECK(rep.residual <= 1e-10);
    CHECK(moment_residual(p) <= 1e-10);

    const QuiverSetting s3 = cm({{0.8, 0.1}, {1.1, -0.3}, {0.6, 0.5}}, 2);
    const QuiverPoint q = solve_point(s3, 4, &rep);
    CHECK(rep.residual <= 1e-10);
    CHECK(q.X[0].rows() == 2);
    CHECK(q.X[0].cols() == 2);
}

TEST_CASE("settings outside Sigma_tau are refused")
{
    CHECK_THROWS_AS(QuiverSetting::make({{0.8, 0.1}, {1.1, -0.3}, {0.6, 0.5}}, {1, -1, 0}), QuiverError);
    CHECK_THROWS_AS(QuiverSetting::make({{1.0, 0}, {-1.0, 0}}, {1, 1}), QuiverError);
}

TEST_CASE("gauge action keeps the residual")
{
    const QuiverSetting s = cm({{0.8, 0.1}, {1.1, -0.3}, {0.6, 0.5}}, 2);
    const QuiverPoint p = solve_point(s, 2);
    const QuiverPoint q = gauge_apply(random_gauge(s, 9), p);
    CHECK(moment_residual(q) <= 1e-8);
    const QuiverPoint r = balance_gauge(q);
    CHECK(moment_residual(r) <= 1e-8);

    std::vector<Mat> ones;
    for (int i = 0; i < 3; ++i) ones.push_back(Mat::Identity(2, 2));
    const QuiverPoint same = gauge_apply(ones, p);
    for (int i = 0; i < 3; ++i) CHECK((same.X[i] - p.X[i]).norm() < 1e-15);
}

TEST_CASE("tangent dimension is 2 p(beta)")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n) {
            std::vector<cplx> lam;
            for (int i = 0; i < m; ++i) lam.push_back({0.7 + 0.3 * i, 0.2 - 0.1 * i});
            const QuiverPoint p = solve_point(cm(lam, n), 1);
            const TangentReport t = tangent_dimension(p);
            CHECK(t.expected == 2 * n);
            CHECK(t.tangent_dim == t.expected);
        }
}
