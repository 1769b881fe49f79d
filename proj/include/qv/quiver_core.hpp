#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qv {

using cplx = std::complex<double>;

// Vertex label. Cyclic vertices are 0..m-1, the framing vertex is kInf.
constexpr int kInf = -1;

class QuiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Entries indexed by {inf, 0, ..., m-1}; storage slot 0 holds inf.
struct DimVector {
    std::vector<std::int64_t> entries;

    DimVector() = default;
    explicit DimVector(int m) : entries(m + 1, 0) {}
    static DimVector framed(const std::vector<std::int64_t>& alpha);

    int m() const { return static_cast<int>(entries.size()) - 1; }
    std::int64_t& at(int v) { return entries.at(v + 1); }
    std::int64_t at(int v) const { return entries.at(v + 1); }
    std::vector<std::int64_t> alpha() const { return {entries.begin() + 1, entries.end()}; }
    std::int64_t total() const;  // sum over cyclic vertices

    bool operator==(const DimVector&) const = default;
};

struct ParamVector {
    std::vector<cplx> lambda;
    cplx lambda_inf{0.0, 0.0};

    int m() const { return static_cast<int>(lambda.size()); }
    cplx at(int v) const { return v == kInf ? lambda_inf : lambda.at(v); }
    cplx& at(int v) { return v == kInf ? lambda_inf : lambda.at(v); }
    cplx sum() const;

    // tau = (lambda_inf, lambda) with lambda_inf = -lambda . alpha
    static ParamVector for_dim(std::vector<cplx> lambda, const DimVector& beta);
};

using WeylWord = std::vector<int>;

enum class RootTag { real, imaginary, not_a_root };

struct RootClass {
    RootTag tag = RootTag::not_a_root;
    WeylWord witness;
};

struct RingelValues {
    std::int64_t bilinear = 0;
    std::int64_t symmetric = 0;
    std::int64_t p_of_beta = 0;
};

std::string to_string(RootTag t);
std::string vertex_name(int v);

// <beta,gamma>, (beta,gamma) and p(beta) = 1 - <beta,beta>
RingelValues ringel_p(const DimVector& beta, const DimVector& gamma);
std::int64_t ringel_form(const DimVector& beta, const DimVector& gamma);
std::int64_t symmetric_form(const DimVector& beta, const DimVector& gamma);
std::int64_t cartan(int m, int i, int j);  // (eps_i, eps_j)

bool is_loop_free(int m, int v);
DimVector simple_reflection(int i, const DimVector& beta);
ParamVector dual_reflection(int i, const ParamVector& tau);
cplx pairing(const ParamVector& tau, const DimVector& beta);

bool is_generic(const std::vector<cplx>& lambda);
inline bool is_generic(const ParamVector& tau) { return is_generic(tau.lambda); }

RootClass classify_root(const DimVector& beta);
bool in_sigma_tau(const ParamVector& tau, const DimVector& beta);

struct Reduction {
    WeylWord word;  // application order
    std::int64_t n = 0;
};
Reduction reduce_to_cm(const DimVector& beta);

// Applies letters left to right.
DimVector apply_weyl(const WeylWord& w, DimVector beta);
ParamVector apply_weyl(const WeylWord& w, ParamVector tau);

}  // namespace qv
