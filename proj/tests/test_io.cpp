#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "qv/io.hpp"

using namespace qv;

namespace {

QuiverPoint sample()
{
    return solve_point(QuiverSetting::make({{0.7, 0.2}, {1.0, -0.1}, {1.3, 0.4}}, {2, 1, 2}), 3);
}

}  // namespace

TEST_CASE("point round trip")
{
    const QuiverPoint p = sample();
    const QuiverPoint q = point_from_json(json::parse(point_to_json(p).dump()));
    CHECK(q.setting.beta == p.setting.beta);
    for (int i = 0; i < 3; ++i) {
        CHECK((q.X[i] - p.X[i]).norm() == 0.0);
        CHECK((q.Y[i] - p.Y[i]).norm() == 0.0);
        CHECK(q.setting.tau.lambda[i] == p.setting.tau.lambda[i]);
    }
    CHECK((q.v - p.v).norm() == 0.0);
    CHECK((q.w - p.w).norm() == 0.0);

    const auto path = (std::filesystem::temp_directory_path() / "qv_io_roundtrip.json").string();
    write_point(path, p);
    CHECK(points_equal(read_point(path), p, 1e-14));
    std::remove(path.c_str());
    CHECK_THROWS(read_point(path));
}

TEST_CASE("malformed points are rejected")
{
    const json good = point_to_json(sample());

    json j = good;
    j["format_version"] = kFormatVersion + 1;
    CHECK_THROWS_AS(point_from_json(j), QuiverError);

    j = good;
    j.erase("format_version");
    CHECK_THROWS(point_from_json(j));

    j = good;
    j["alpha"] = json::array({2, 2, 2});
    CHECK_THROWS(point_from_json(j));

    j = good;
    j["lambda"].erase(0);
    CHECK_THROWS(point_from_json(j));
}

TEST_CASE("invariants and reports")
{
    const QuiverPoint p = sample();
    const json inv = invariants_to_json(invariant_vector(p));
    CHECK(inv["m"] == 3);
    CHECK(inv["entries"].contains("H:0:0:0"));
    CHECK(inv["entries"].size() == invariant_vector(p).entries.size());

    SuiteReport a{"lemmaH", 4, 1e-14, 1e-8, true, {{"interior", 1e-14}}, {}};
    SuiteReport b{"rewrite", 4, 1.0, 1e-7, false, {}, {"note"}};
    const json r = reports_to_json({a, b});
    CHECK(r["pass"] == false);
    CHECK(r["reports"].size() == 2);
    CHECK(r["reports"][0]["details"]["interior"] == doctest::Approx(1e-14));
    CHECK(reports_to_json({a})["pass"] == true);
}

TEST_CASE("number lists")
{
    const auto z = parse_complex_list("1.5, 2-0.5j,0.3+1e-2j, j, -2j");
    REQUIRE(z.size() == 5);
    CHECK(z[0] == cplx(1.5, 0));
    CHECK(z[1] == cplx(2, -0.5));
    CHECK(z[2] == cplx(0.3, 0.01));
    CHECK(z[3] == cplx(0, 1));
    CHECK(z[4] == cplx(0, -2));
    CHECK_THROWS(parse_complex_list("1+"));
    CHECK_THROWS(parse_complex_list("abc"));
    CHECK(parse_int_list("2,1,1") == std::vector<std::int64_t>{2, 1, 1});
    CHECK_THROWS(parse_int_list("2,x"));
}
