#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qv/io.hpp"
#include "qv/reflection.hpp"
#include "qv/verify.hpp"

using namespace qv;

namespace {

constexpr double kCertify = 1e-10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << j.dump(1) << '\n';
        return;
    }
    std::ofstream os(out);
    if (!os) throw UsageError("cannot open '" + out + "' for writing");
    os << j.dump(1) << '\n';
}

WeylWord parse_weyl(const std::string& text, int m)
{
    WeylWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("bad reflection letter '" + tok + "'");
        }
        if (used != tok.size() || v < 0 || v >= m) throw UsageError("bad reflection letter '" + tok + "'");
        w.push_back(v);
    }
    return w;
}

std::string format_weyl(const WeylWord& w)
{
    std::string s;
    for (std::size_t q = 0; q < w.size(); ++q) s += (q ? " " : "") + std::to_string(w[q]);
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic quiver varieties: points, group action, reflections, invariants"};
    app.require_subcommand(1);

    int m = 0;
    std::string lambda_text, alpha_text, out, in, word, path, suite = "all";
    std::uint64_t seed = 1;
    int n = 1, trials = 20;
    bool trace = false;

    auto* gen = app.add_subcommand("gen", "solve for a certified point");
    gen->add_option("--m", m, "number of cyclic vertices")->required();
    gen->add_option("--lambda", lambda_text, "comma-separated re+imj literals (random generic if omitted)");
    gen->add_option("--alpha", alpha_text, "comma-separated dimensions")->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    auto* act = app.add_subcommand("act", "apply a group word");
    act->add_option("--word", word, "psi(k,re,im); phi(k,re,im); ...")->required();
    act->add_option("--in", in)->required();
    act->add_option("--out", out);

    auto* refl = app.add_subcommand("reflect", "apply reflection functors, letters left to right");
    refl->add_option("--word", word, "vertices, e.g. \"0 1\"")->required();
    refl->add_option("--in", in)->required();
    refl->add_option("--out", out);

    auto* inv = app.add_subcommand("inv", "print the invariant vector");
    inv->add_option("--in", in)->required();

    auto* red = app.add_subcommand("reduce", "reduce a dimension vector to (1, n, ..., n)");
    red->add_option("--m", m);
    red->add_option("--alpha", alpha_text)->required();

    auto* rw = app.add_subcommand("rewrite", "normal form of w P v or Tr P");
    rw->add_option("--m", m)->required();
    rw->add_option("--path", path)->required();
    rw->add_flag("--trace", trace);

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite)->check(
        CLI::IsMember({"equivariance", "lemmaH", "rewrite", "trantrwv", "bookkeeping", "all"}));
    ver->add_option("--m", m)->required();
    ver->add_option("--n", n);
    ver->add_option("--trials", trials);
    ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            const auto alpha = parse_int_list(alpha_text);
            if (static_cast<int>(alpha.size()) != m) throw UsageError("alpha must have m entries");
            std::vector<cplx> lambda;
            if (lambda_text.empty()) {
                std::mt19937_64 rng(seed);
                lambda = random_generic_lambda(m, rng);
            } else {
                lambda = parse_complex_list(lambda_text);
            }
            const auto s = QuiverSetting::make(lambda, alpha);
            SolveReport rep;
            const QuiverPoint p = solve_point(s, seed, &rep);
            std::cerr << "residual " << rep.residual << " after " << rep.restarts_used << " restart(s)\n";
            if (rep.residual > kCertify) {
                std::cerr << "not certified: residual above " << kCertify << '\n';
                return 1;
            }
            emit(point_to_json(p), out);
            return 0;
        }
        if (*act) {
            const QuiverPoint p = read_point(in);
            const QuiverPoint q = apply_word(canonicalize(parse_group_word(word)), p);
            const double res = moment_residual(q);
            std::cerr << "residual " << res << '\n';
            emit(point_to_json(q), out);
            return res <= 1e-6 ? 0 : 1;
        }
        if (*refl) {
            const QuiverPoint p = read_point(in);
            const QuiverPoint q = reflect_word(parse_weyl(word, p.m()), p);
            const double res = moment_residual(q);
            std::cerr << "residual " << res << '\n';
            emit(point_to_json(q), out);
            return res <= 1e-8 ? 0 : 1;
        }
        if (*inv) {
            emit(invariants_to_json(invariant_vector(read_point(in))), "");
            return 0;
        }
        if (*red) {
            auto alpha = parse_int_list(alpha_text);
            if (m != 0 && static_cast<int>(alpha.size()) != m) throw UsageError("alpha must have m entries");
            const Reduction r = reduce_to_cm(DimVector::framed(alpha));
            json j;
            j["format_version"] = kFormatVersion;
            j["word"] = format_weyl(r.word);
            j["n"] = r.n;
            emit(j, "");
            return 0;
        }
        if (*rw) {
            RewriteEngine eng(m);
            const PathWord p = parse_path(path, m);
            std::cout << to_string(trace ? eng.normalize_trace(p) : eng.normalize_wv(p)) << '\n';
            return 0;
        }
        if (*ver) {
            if (n < 1 || trials < 1 || m < 1) throw UsageError("m, n and trials must be positive");
            VerifyConfig c{m, n, trials, seed};
            const auto reports = run_suite(suite, c);
            const json j = reports_to_json(reports);
            emit(j, "");
            return j["pass"].get<bool>() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const QuiverError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
