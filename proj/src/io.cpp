#include "qv/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace qv {

namespace {

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from(const json& j, const std::string& what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw QuiverError("point file: " + what + " entry is not [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json mat_json(const Mat& M)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(cplx_json(M(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from(const json& j, int rows, int cols, const std::string& what)
{
    if (!j.is_array()) throw QuiverError("point file: " + what + " is not an array of rows");
    // a matrix with zero columns serialises as rows of empty arrays, zero rows as []
    if (static_cast<int>(j.size()) != rows)
        throw QuiverError("point file: " + what + " has " + std::to_string(j.size()) + " rows, expected " +
                          std::to_string(rows));
    Mat M(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw QuiverError("point file: " + what + " row " + std::to_string(r) + " has the wrong length, expected " +
                              std::to_string(cols));
        for (int c = 0; c < cols; ++c) M(r, c) = cplx_from(j[r][c], what);
    }
    return M;
}

json vec_json(const Eigen::VectorXcd& v)
{
    json out = json::array();
    for (Eigen::Index r = 0; r < v.size(); ++r) out.push_back(cplx_json(v(r)));
    return out;
}

Vec vec_from(const json& j, int n, const std::string& what)
{
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw QuiverError("point file: " + what + " must have length " + std::to_string(n));
    Vec v(n);
    for (int r = 0; r < n; ++r) v(r) = cplx_from(j[r], what);
    return v;
}

const json& field(const json& j, const char* name)
{
    if (!j.contains(name)) throw QuiverError(std::string("point file: missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

json point_to_json(const QuiverPoint& p)
{
    json j;
    j["format_version"] = kFormatVersion;
    j["m"] = p.m();
    json lam = json::array();
    for (const auto& l : p.setting.tau.lambda) lam.push_back(cplx_json(l));
    j["lambda"] = lam;
    json alpha = json::array();
    for (int i = 0; i < p.m(); ++i) alpha.push_back(p.setting.alpha(i));
    j["alpha"] = alpha;
    json X = json::array(), Y = json::array();
    for (int i = 0; i < p.m(); ++i) {
        X.push_back(mat_json(p.X[i]));
        Y.push_back(mat_json(p.Y[i]));
    }
    j["X"] = X;
    j["Y"] = Y;
    j["v"] = vec_json(p.v);
    j["w"] = vec_json(p.w.transpose());
    return j;
}

QuiverPoint point_from_json(const json& j)
{
    if (!j.is_object()) throw QuiverError("point file: top level is not an object");
    const json& ver = field(j, "format_version");
    if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion)
        throw QuiverError("point file: unsupported format_version " + ver.dump());
    const json& jm = field(j, "m");
    if (!jm.is_number_integer() || jm.get<int>() < 1) throw QuiverError("point file: m must be a positive integer");
    const int m = jm.get<int>();

    const json& jl = field(j, "lambda");
    const json& ja = field(j, "alpha");
    if (!jl.is_array() || static_cast<int>(jl.size()) != m) throw QuiverError("point file: lambda must have length m");
    if (!ja.is_array() || static_cast<int>(ja.size()) != m) throw QuiverError("point file: alpha must have length m");
    std::vector<cplx> lambda;
    for (const auto& e : jl) lambda.push_back(cplx_from(e, "lambda"));
    std::vector<std::int64_t> alpha;
    for (const auto& e : ja) {
        if (!e.is_number_integer()) throw QuiverError("point file: alpha entries must be integers");
        alpha.push_back(e.get<std::int64_t>());
    }

    QuiverPoint p;
    p.setting = QuiverSetting::make(lambda, alpha, false);
    const json& jx = field(j, "X");
    const json& jy = field(j, "Y");
    if (!jx.is_array() || static_cast<int>(jx.size()) != m || !jy.is_array() || static_cast<int>(jy.size()) != m)
        throw QuiverError("point file: X and Y must hold m matrices");
    for (int i = 0; i < m; ++i) {
        p.X.push_back(mat_from(jx[i], p.dim(i), p.dim(i + 1), "X_" + std::to_string(i)));
        p.Y.push_back(mat_from(jy[i], p.dim(i + 1), p.dim(i), "Y_" + std::to_string(i)));
    }
    p.v = vec_from(field(j, "v"), p.dim(0), "v");
    p.w = vec_from(field(j, "w"), p.dim(0), "w").transpose();
    p.check_shapes();
    return p;
}

void write_point(const std::string& path, const QuiverPoint& p)
{
    std::ofstream os(path);
    if (!os) throw QuiverError("cannot open '" + path + "' for writing");
    os << point_to_json(p).dump(1) << '\n';
}

QuiverPoint read_point(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw QuiverError("cannot open '" + path + "'");
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw QuiverError("point file: " + std::string(e.what()));
    }
    return point_from_json(j);
}

json invariants_to_json(const InvariantVector& v)
{
    json j;
    j["format_version"] = kFormatVersion;
    j["m"] = v.setting.m;
    json alpha = json::array();
    for (int i = 0; i < v.setting.m; ++i) alpha.push_back(v.setting.alpha(i));
    j["alpha"] = alpha;
    json entries = json::object();
    for (const auto& [k, z] : v.entries) entries[key_string(k)] = cplx_json(z);
    j["entries"] = entries;
    return j;
}

json report_to_json(const SuiteReport& r)
{
    json j;
    j["format_version"] = kFormatVersion;
    j["suite"] = r.suite;
    j["trials"] = r.trials;
    j["max_deviation"] = r.max_deviation;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    if (!r.details.empty()) j["details"] = r.details;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

json reports_to_json(const std::vector<SuiteReport>& rs)
{
    json j;
    j["format_version"] = kFormatVersion;
    json arr = json::array();
    bool all = true;
    for (const auto& r : rs) {
        arr.push_back(report_to_json(r));
        all = all && r.pass;
    }
    j["reports"] = arr;
    j["pass"] = all;
    return j;
}

std::vector<cplx> parse_complex_list(const std::string& text)
{
    static const std::regex lit(
        R"(^\s*([-+]?(?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?|[0-9]+\.))?\s*(?:([-+])\s*((?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?|[0-9]+\.)?)\s*j)?\s*$)");
    static const std::regex pure_imag(R"(^\s*([-+]?)\s*((?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?|[0-9]+\.)?)\s*j\s*$)");
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch mt;
        if (std::regex_match(part, mt, pure_imag)) {
            const double mag = mt[2].length() ? std::stod(mt[2]) : 1.0;
            out.emplace_back(0.0, mt[1] == "-" ? -mag : mag);
            continue;
        }
        if (!std::regex_match(part, mt, lit) || (!mt[1].matched && !mt[2].matched))
            throw QuiverError("cannot parse complex literal '" + part + "'");
        const double re = mt[1].matched ? std::stod(mt[1]) : 0.0;
        double im = 0.0;
        if (mt[2].matched) {
            im = mt[3].length() ? std::stod(mt[3]) : 1.0;
            if (mt[2] == "-") im = -im;
        }
        out.emplace_back(re, im);
    }
    if (out.empty()) throw QuiverError("empty complex list");
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw QuiverError("cannot parse integer '" + part + "'");
        }
        if (part.find_first_not_of(" \t", used) != std::string::npos) throw QuiverError("cannot parse integer '" + part + "'");
        out.push_back(v);
    }
    if (out.empty()) throw QuiverError("empty integer list");
    return out;
}

}  // namespace qv
