#pragma once

#include <string>
#include <vector>

#include "qv/g_action.hpp"
#include "qv/invariants.hpp"

namespace qv {

struct ReflectionScaffold {
    Mat mu_map;     // V_i -> ambient
    Mat pi_map;     // ambient -> V_i
    Mat projector;  // 1 - mu pi
    Mat basis;      // orthonormal columns spanning Im(1 - mu pi)
    double pi_mu_defect = 0.0;
    double idempotency_defect = 0.0;
};

// Letters act left to right.
QuiverPoint reflect_vertex(int i, const QuiverPoint& p, ReflectionScaffold* scaffold = nullptr);
QuiverPoint reflect_word(const WeylWord& s, const QuiverPoint& p);

struct LemmaHReport {
    int l = 0;
    double literal = 0.0;           // unshifted law (correction at k = l), interior indices
    double literal_boundary = 0.0;  // i = 0 or j = 0 at the corrected entry, negative index -> 0
    double unified = 0.0;           // affected index k = m - l, correction H^{i,j}_{m-l-1} (l = 0: H^{i-1,j-1}_{m-1})
    double unified_boundary = 0.0;  // i = 0 or j = 0 with l = 0; H^{-1,-1}_{m-1} := 1, other negative indices -> 0
    int entries = 0;
};

// Index box: max(mi+k, mj+k) <= N, N the dimension total of p.
LemmaHReport check_lemmaH(int l, const QuiverPoint& p);

bool check_equivariance(const WeylWord& s, const GroupWord& sigma, const QuiverPoint& p, double rel_tol,
                        double* deviation = nullptr);

}  // namespace qv
