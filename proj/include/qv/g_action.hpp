#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "qv/rep_points.hpp"

namespace qv {

enum class GenKind { psi, phi };

struct GeneratorG {
    GenKind kind = GenKind::psi;
    int k = 1;
    cplx coeff{0.0, 0.0};
};

struct GroupBlock {
    GenKind kind = GenKind::psi;
    std::map<int, cplx> coeffs;  // k -> coefficient
};

struct GroupWord {
    std::vector<GroupBlock> blocks;
    bool empty() const { return blocks.empty(); }
    std::vector<GeneratorG> letters() const;
};

GroupWord canonicalize(const std::vector<GeneratorG>& raw);
GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);

// "psi(k,re,im); phi(k,re,im)"
std::vector<GeneratorG> parse_group_word(const std::string& text);
std::string format_group_word(const GroupWord& w);

QuiverPoint apply_generator(const GeneratorG& g, const QuiverPoint& p);
QuiverPoint apply_generator_block(const GeneratorG& g, const QuiverPoint& p);
QuiverPoint apply_word(const GroupWord& w, const QuiverPoint& p);
QuiverPoint apply_letters(const std::vector<GeneratorG>& letters, const QuiverPoint& p);

// Exact Gaussian rationals for the free-algebra check.
using Rational = boost::multiprecision::cpp_rational;
struct ExactComplex {
    Rational re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};
ExactComplex exact_from(cplx z);

struct FreeCheck {
    bool fixes_omega = false;
    bool nontrivial = false;
    bool cap_ok = true;
    std::string message;
};

FreeCheck free_algebra_check(int m, const GeneratorG& g, int degree_cap);
FreeCheck free_algebra_check(int m, const GroupWord& w, int degree_cap);

}  // namespace qv
