#include <doctest.h>

#include <random>

#include "qv/quiver_core.hpp"

using namespace qv;

namespace {

DimVector uniform(int m, std::int64_t n)
{
    return DimVector::framed(std::vector<std::int64_t>(m, n));
}

}  // namespace

TEST_CASE("ringel form on (1, delta) for m = 3")
{
    const DimVector b = uniform(3, 1);
    const RingelValues r = ringel_p(b, b);
    CHECK(r.bilinear == 0);
    CHECK(r.p_of_beta == 1);
}

TEST_CASE("simple root eps_0")
{
    DimVector e(3);
    e.at(0) = 1;
    const RingelValues r = ringel_p(e, e);
    CHECK(r.bilinear == 1);
    CHECK(r.symmetric == 2);
    CHECK(r.p_of_beta == 0);
    CHECK(classify_root(e).tag == RootTag::real);
}

TEST_CASE("p of the Calogero-Moser vector is n")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const DimVector b = uniform(m, n);
            CHECK(ringel_p(b, b).p_of_beta == n);
        }
}

TEST_CASE("simple reflections")
{
    CHECK(simple_reflection(1, DimVector::framed({2, 1, 1})) == DimVector::framed({2, 2, 1}));
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n) {
            std::vector<std::int64_t> want(m, n);
            want[0] = n + 1;
            CHECK(simple_reflection(0, uniform(m, n)) == DimVector::framed(want));
        }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(0, 5);
    for (int t = 0; t < 50; ++t) {
        const int m = 2 + t % 3;
        std::vector<std::int64_t> a(m);
        for (auto& x : a) x = d(rng);
        const DimVector b = DimVector::framed(a);
        for (int i = -1; i < m; ++i) CHECK(simple_reflection(i, simple_reflection(i, b)) == b);
    }
}

TEST_CASE("dual reflections")
{
    ParamVector tau;
    tau.lambda = {{1, 0}, {2, 0}, {3, 0}};
    tau.lambda_inf = {5, 0};
    const ParamVector r = dual_reflection(0, tau);
    CHECK(r.lambda[0] == cplx(-1, 0));
    CHECK(r.lambda[1] == cplx(3, 0));
    CHECK(r.lambda[2] == cplx(4, 0));
    CHECK(r.lambda_inf == cplx(6, 0));

    ParamVector t2;
    t2.lambda = {{1, 0}, {2, 0}};
    CHECK(dual_reflection(0, t2).lambda[1] == cplx(4, 0));

    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> d(0, 4);
    for (int t = 0; t < 40; ++t) {
        const int m = 2 + t % 3;
        ParamVector tau_r;
        for (int i = 0; i < m; ++i) tau_r.lambda.push_back({g(rng), g(rng)});
        tau_r.lambda_inf = {g(rng), g(rng)};
        std::vector<std::int64_t> a(m);
        for (auto& x : a) x = d(rng);
        const DimVector b = DimVector::framed(a);
        for (int i = -1; i < m; ++i)
            CHECK(std::abs(pairing(dual_reflection(i, tau_r), b) - pairing(tau_r, simple_reflection(i, b))) < 1e-12);
    }
}

TEST_CASE("genericity")
{
    // eps_0 - eps_1 is not a root of the double-edge quiver; pairings 1 + 2k never vanish
    CHECK(is_generic(std::vector<cplx>{{1, 0}, {1, 0}}));
    CHECK(is_generic(std::vector<cplx>{{1, 0}, {2, 0}}));
    CHECK_FALSE(is_generic(std::vector<cplx>{{1, 0}, {-1, 0}}));
    CHECK_FALSE(is_generic(std::vector<cplx>{{2, 0}, {-1, 0}}));    // eps_0 - 2 delta
    CHECK_FALSE(is_generic(std::vector<cplx>{{1, 0}, {1, 0}, {-3, 0}}));  // eps_1 + delta
    CHECK(is_generic(std::vector<cplx>{{1, 0}, {2, 0}, {0.5, 0.25}}));
    CHECK_FALSE(is_generic(std::vector<cplx>{{0, 0}}));
}

TEST_CASE("root classification")
{
    DimVector delta = uniform(3, 1);
    delta.at(kInf) = 0;
    CHECK(classify_root(delta).tag == RootTag::imaginary);
    CHECK(classify_root(uniform(3, 1)).tag == RootTag::imaginary);
    CHECK(classify_root(uniform(2, 3)).tag == RootTag::imaginary);
    DimVector neg = DimVector::framed({1, -1});
    CHECK(classify_root(neg).tag == RootTag::not_a_root);
}

TEST_CASE("sigma tau membership")
{
    const std::vector<cplx> lam{{1, 0}, {2, 0}, {0.5, 0.25}};
    for (int n = 1; n <= 4; ++n) {
        const DimVector b = uniform(3, n);
        CHECK(in_sigma_tau(ParamVector::for_dim(lam, b), b));
    }
    const DimVector neg = DimVector::framed({1, -1, 0});
    CHECK_FALSE(in_sigma_tau(ParamVector::for_dim(lam, neg), neg));
}

TEST_CASE("reduction to the Calogero-Moser vector")
{
    Reduction r = reduce_to_cm(DimVector::framed({2, 1, 1}));
    CHECK(r.word == WeylWord{0});
    CHECK(r.n == 1);
    r = reduce_to_cm(DimVector::framed({2, 1}));
    CHECK(r.word == WeylWord{0});
    CHECK(r.n == 1);
    for (int n = 1; n <= 3; ++n) {
        r = reduce_to_cm(uniform(3, n));
        CHECK(r.word.empty());
        CHECK(r.n == n);
    }
    const DimVector b = DimVector::framed({3, 2, 1, 2});
    r = reduce_to_cm(b);
    CHECK(apply_weyl(r.word, b) == uniform(4, r.n));
}
