#include <doctest.h>

#include "qv/g_action.hpp"
#include "qv/invariants.hpp"

using namespace qv;

namespace {

const cplx l0{0.7, 0.2}, l1{1.3, -0.4};

GeneratorG psi(int k, cplx c) { return {GenKind::psi, k, c}; }
GeneratorG phi(int k, cplx c) { return {GenKind::phi, k, c}; }

QuiverPoint solved(int m, std::int64_t n, std::uint64_t seed)
{
    std::vector<cplx> lam;
    for (int i = 0; i < m; ++i) lam.push_back({0.7 + 0.3 * i, 0.2 - 0.15 * i});
    return solve_point(QuiverSetting::make(lam, std::vector<std::int64_t>(m, n)), seed);
}

}  // namespace

TEST_CASE("canonical words")
{
    const cplx mu{0.3, 0.1}, nu{-0.2, 0.4};
    GroupWord w = canonicalize({psi(1, mu), psi(1, nu)});
    REQUIRE(w.blocks.size() == 1);
    CHECK(w.blocks[0].kind == GenKind::psi);
    CHECK(std::abs(w.blocks[0].coeffs.at(1) - (mu + nu)) < 1e-15);

    CHECK(canonicalize({psi(1, mu), psi(1, -mu)}).empty());
    CHECK(canonicalize({phi(2, mu), psi(1, nu), phi(2, -mu)}).blocks.size() == 3);
    CHECK(canonicalize({psi(1, mu), phi(1, {0, 0}), psi(2, nu)}).blocks.size() == 1);

    const GroupWord x = canonicalize({phi(2, mu), psi(1, nu), phi(1, mu)});
    CHECK(concat(x, inverse(x)).empty());
    CHECK(inverse(inverse(x)).blocks.size() == x.blocks.size());
}

TEST_CASE("word text")
{
    const auto letters = parse_group_word("psi(1,0.5,0); phi(2,0,-1)");
    REQUIRE(letters.size() == 2);
    CHECK(letters[1].kind == GenKind::phi);
    CHECK(letters[1].k == 2);
    CHECK(letters[1].coeff == cplx(0, -1));
    CHECK_THROWS(parse_group_word("psi(0,1,0)"));
    CHECK_THROWS(parse_group_word("chi(1,1,0)"));
    const GroupWord w = canonicalize(letters);
    CHECK(canonicalize(parse_group_word(format_group_word(w))).blocks.size() == 2);
}

TEST_CASE("psi on the m = 2 base point")
{
    const QuiverPoint p = base_point_n1(QuiverSetting::make({l0, l1}, {1, 1}));
    const cplx mu{0.4, -0.25};
    const QuiverPoint q = apply_generator(psi(1, mu), p);
    CHECK(std::abs(q.X[0](0, 0) - mu) < 1e-15);
    CHECK(std::abs(q.X[1](0, 0) - (l1 + mu)) < 1e-15);
    CHECK(moment_residual(q) <= 1e-12);

    const QuiverPoint z = apply_generator(psi(1, {0, 0}), p);
    CHECK((z.X[1] - p.X[1]).norm() == 0.0);
}

TEST_CASE("per-arm action agrees with the block form")
{
    for (int m = 1; m <= 3; ++m) {
        const QuiverPoint p = solved(m, 2, 3);
        for (int k = 1; k <= 2; ++k)
            for (const GeneratorG& g : {psi(k, {0.3, 0.2}), phi(k, {-0.4, 0.1})}) {
                const QuiverPoint a = apply_generator(g, p);
                const QuiverPoint b = apply_generator_block(g, p);
                for (int i = 0; i < m; ++i) {
                    CHECK((a.X[i] - b.X[i]).norm() < 1e-12);
                    CHECK((a.Y[i] - b.Y[i]).norm() < 1e-12);
                }
                CHECK(moment_residual(a) <= 1e-9);
            }
    }
}

TEST_CASE("group relations on points")
{
    const QuiverPoint p = solved(3, 1, 2);
    const cplx mu{0.3, 0.1}, nu{-0.2, 0.4};
    CHECK(points_equal(apply_word(canonicalize({}), p), p, 1e-12));
    const GroupWord w = canonicalize({phi(1, mu), psi(2, nu), phi(2, mu), psi(1, nu)});
    CHECK(points_equal(apply_word(inverse(w), apply_word(w, p)), p, 1e-10));
    CHECK(points_equal(apply_letters({psi(1, mu), psi(1, nu)}, p), apply_generator(psi(1, mu + nu), p), 1e-10));
}

TEST_CASE("free algebra check")
{
    FreeCheck f = free_algebra_check(2, psi(1, {0.5, 0.25}), 4);
    CHECK(f.fixes_omega);
    CHECK(f.nontrivial);
    f = free_algebra_check(3, phi(1, {-1, 0.5}), 6);
    CHECK(f.fixes_omega);
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k * m <= 12; ++k)
            for (const GeneratorG& g : {psi(k, {0.5, 0.25}), phi(k, {-0.75, 1})}) {
                const FreeCheck c = free_algebra_check(m, g, 12);
                CHECK(c.cap_ok);
                CHECK(c.fixes_omega);
                CHECK(c.nontrivial);
            }
    const GroupWord w = canonicalize({psi(1, {1, 0}), phi(1, {1, 0}), psi(1, {0.5, 0})});
    f = free_algebra_check(3, w, 12);
    CHECK(f.fixes_omega);
    CHECK(f.nontrivial);
}
