#include <doctest.h>

#include "qv/g_action.hpp"
#include "qv/invariants.hpp"

using namespace qv;

namespace {

const cplx l0{0.7, 0.2}, l1{1.3, -0.4};

QuiverPoint m2_base() { return base_point_n1(QuiverSetting::make({l0, l1}, {1, 1})); }

QuiverPoint solved(int m, std::int64_t n, std::uint64_t seed)
{
    std::vector<cplx> lam;
    for (int i = 0; i < m; ++i) lam.push_back({0.7 + 0.3 * i, 0.2 - 0.15 * i});
    return solve_point(QuiverSetting::make(lam, std::vector<std::int64_t>(m, n)), seed);
}

}  // namespace

TEST_CASE("cycle matrices on the m = 2 base point")
{
    const CycleMatrices c = cycle_matrices(m2_base());
    CHECK(std::abs(c.A(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(c.B(0, 0)) < 1e-15);
    CHECK(std::abs(c.C[1](0, 0) - l1) < 1e-15);
    CHECK((c.C[0] - Mat::Identity(1, 1)).norm() < 1e-15);
}

TEST_CASE("m = 1 cycle matrices")
{
    const QuiverPoint p = solved(1, 2, 3);
    const CycleMatrices c = cycle_matrices(p);
    CHECK((c.A - p.Y[0]).norm() < 1e-15);
    CHECK((c.B - p.X[0]).norm() < 1e-15);
    CHECK(c.C.size() == 1);
}

TEST_CASE("invariant values on base points")
{
    const QuiverPoint p = m2_base();
    CHECK(std::abs(invariant(p, Family::H, {0, 0, 0}) - (l0 + l1)) < 1e-14);
    CHECK(std::abs(invariant(p, Family::G, {0, 0, 1}) - l1) < 1e-14);
    CHECK(std::abs(invariant(p, Family::G, {0, 0, 0}) - 1.0) < 1e-15);

    const QuiverPoint q = base_point_n1(QuiverSetting::make({{0.9, 0.3}}, {1}));
    CHECK(std::abs(invariant(q, Family::H, {0, 0, 0}) - cplx(0.9, 0.3)) < 1e-15);
    CHECK(std::abs(invariant(q, Family::G, {1, 0, 0})) < 1e-15);

    const QuiverPoint r = solved(3, 2, 1);
    CHECK(std::abs(invariant(r, Family::G, {0, 0, 0}) - 2.0) < 1e-12);
}

TEST_CASE("admissible index count")
{
    for (int m = 1; m <= 4; ++m)
        for (std::int64_t N = 0; N <= 9; ++N) {
            std::size_t count = 0;
            for (int i = 0; i <= N; ++i)
                for (int j = 0; j <= N; ++j)
                    for (int k = 0; k < m; ++k)
                        if (std::max(m * i + k, m * j + k) <= N) ++count;
            CHECK(admissible_indices(m, N).size() == count);
        }
    const QuiverPoint p = solved(3, 2, 1);
    CHECK(invariant_vector(p).entries.size() == 2 * admissible_indices(3, 6).size());
}

TEST_CASE("keys round trip")
{
    const InvariantKey k{Family::H, {2, 0, 1}};
    CHECK(key_string(k) == "H:2:0:1");
    CHECK(parse_key("H:2:0:1") == k);
    CHECK_THROWS(parse_key("Q:1:2"));
}

TEST_CASE("gauge invariance and point equality")
{
    for (int m = 1; m <= 3; ++m) {
        const QuiverPoint p = solved(m, 2, 5);
        const QuiverPoint g = gauge_apply(random_gauge(p.setting, 17), p);
        CHECK(max_rel_deviation(invariant_vector(p), invariant_vector(g)) <= 1e-10);
        CHECK(points_equal(p, g, 1e-10));
        CHECK(points_equal(p, p, 1e-10));
        CHECK(block_consistency(p) <= 1e-10);
    }
    const QuiverPoint b = m2_base();
    CHECK(points_equal(b, gauge_apply(random_gauge(b.setting, 2), b), 1e-10));
    const QuiverPoint moved = apply_generator({GenKind::psi, 1, {0.5, 0.1}}, b);
    CHECK_FALSE(points_equal(b, moved, 1e-10));
    CHECK(std::abs(invariant(moved, Family::H, {0, 1, 0}) - invariant(b, Family::H, {0, 1, 0})) > 1e-3);
}
