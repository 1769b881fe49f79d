#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qv/io.hpp"
#include "qv/path_rewrite.hpp"

namespace qv {

struct VerifyConfig {
    int m = 2;
    int n = 1;
    int trials = 20;
    std::uint64_t seed = 1;
};

// Entries uniform in the annulus 0.5 <= |z| <= 1.5, redrawn until generic.
std::vector<cplx> random_generic_lambda(int m, std::mt19937_64& rng);

// Point in (1, (n, ..., n)) for trial t; lambda and solver both seeded from seed + t.
QuiverPoint trial_point(int m, int n, std::uint64_t seed);

// Random closed path at 0 with 1 <= length <= max_len (one extra letter may be needed to close).
PathWord random_closed_path(int m, int max_len, std::mt19937_64& rng);

GeneratorG random_generator(std::mt19937_64& rng, int max_k, double max_abs);

// Y_{m-i-1} .. Y_{m-i-k} X_{m-i-k} .. X_{m-i-1}, wrapping through C_{i+k-m}; based at vertex m - i.
PathWord c_ik(int m, int i, int k);

SuiteReport suite_equivariance(const VerifyConfig& c);
SuiteReport suite_lemmaH(const VerifyConfig& c);
SuiteReport suite_rewrite(const VerifyConfig& c);
SuiteReport suite_trantrwv(const VerifyConfig& c);
SuiteReport suite_bookkeeping(const VerifyConfig& c);

const std::vector<std::string>& suite_names();  // fixed order used by "all"
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyConfig& c);

}  // namespace qv
