#pragma once

#include <map>
#include <string>
#include <vector>

#include "qv/rep_points.hpp"

namespace qv {

enum class Family { G, H };

struct InvariantIndex {
    int i = 0;
    int j = 0;
    int k = 0;
    auto operator<=>(const InvariantIndex&) const = default;
};

struct InvariantKey {
    Family family = Family::G;
    InvariantIndex idx;
    auto operator<=>(const InvariantKey&) const = default;
};

std::string key_string(const InvariantKey& key);  // "G:i:j:k"
InvariantKey parse_key(const std::string& s);

struct InvariantVector {
    std::map<InvariantKey, cplx> entries;
    QuiverSetting setting;
};

struct CycleMatrices {
    Mat A, B;
    std::vector<Mat> C;  // C_0 .. C_{m-1}
};

ArrowWord word_A(int m);
ArrowWord word_B(int m);
ArrowWord word_C(int m, int k);
ArrowWord word_cycle(int m, const InvariantIndex& idx);  // A^i C_k B^j

CycleMatrices cycle_matrices(const QuiverPoint& p);

// (i,j,k) with max(mi+k, mj+k) <= N
std::vector<InvariantIndex> admissible_indices(int m, std::int64_t N);
bool admissible(int m, std::int64_t N, const InvariantIndex& idx);

cplx invariant(const QuiverPoint& p, Family f, const InvariantIndex& idx);
InvariantVector invariant_vector(const QuiverPoint& p);

double rel_dev(cplx a, cplx b);
double max_rel_deviation(const InvariantVector& a, const InvariantVector& b);

// Compares per-arm G, H with the block-form expressions (G against the V_0 diagonal block).
double block_consistency(const QuiverPoint& p);

bool points_equal(const QuiverPoint& p, const QuiverPoint& q, double rel_tol);

}  // namespace qv
