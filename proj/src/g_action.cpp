#include "qv/g_action.hpp"

#include <regex>
#include <sstream>

namespace qv {

namespace {

const char* kind_name(GenKind k) { return k == GenKind::psi ? "psi" : "phi"; }

int wrap(int i, int m) { return ((i % m) + m) % m; }

// Y_{i-1}..Y_0 A^{k-1} Y_{m-1}..Y_{i+1}, a path i+1 -> i of length km-1
ArrowWord psi_path(int m, int k, int i)
{
    ArrowWord w;
    for (int t = i - 1; t >= 0; --t) w.push_back({'Y', t});
    for (int r = 0; r < k - 1; ++r)
        for (int t = m - 1; t >= 0; --t) w.push_back({'Y', t});
    for (int t = m - 1; t >= i + 1; --t) w.push_back({'Y', t});
    return w;
}

// X_{i+1}..X_{m-1} B^{k-1} X_0..X_{i-1}, a path i -> i+1 of length km-1
ArrowWord phi_path(int m, int k, int i)
{
    ArrowWord w;
    for (int t = i + 1; t <= m - 1; ++t) w.push_back({'X', t});
    for (int r = 0; r < k - 1; ++r)
        for (int t = 0; t < m; ++t) w.push_back({'X', t});
    for (int t = 0; t <= i - 1; ++t) w.push_back({'X', t});
    return w;
}

// ---- truncated free algebra on {x, y}; a monomial is (length, bits), x = 0, y = 1, first letter highest
struct Mono {
    int len = 0;
    std::uint32_t bits = 0;
    auto operator<=>(const Mono&) const = default;
};

using Poly = std::map<Mono, ExactComplex>;

ExactComplex mul(const ExactComplex& a, const ExactComplex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

void add_to(Poly& p, const Mono& mo, const ExactComplex& c)
{
    auto& slot = p[mo];
    slot.re += c.re;
    slot.im += c.im;
    if (slot.is_zero()) p.erase(mo);
}

Poly times(const Poly& a, const Poly& b, int cap)
{
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma.len + mb.len > cap) continue;
            add_to(out, {ma.len + mb.len, (ma.bits << mb.len) | mb.bits}, mul(ca, cb));
        }
    return out;
}

Poly plus(Poly a, const Poly& b, int sign = 1)
{
    for (const auto& [mo, c] : b) add_to(a, mo, {sign * c.re, sign * c.im});
    return a;
}

Poly letter(int which) { return {{Mono{1, static_cast<std::uint32_t>(which)}, ExactComplex{1, 0}}}; }

Poly power(int which, int e, int cap)
{
    Poly out{{Mono{0, 0}, ExactComplex{1, 0}}};
    for (int r = 0; r < e; ++r) out = times(out, letter(which), cap);
    return out;
}

Poly substitute(const Poly& p, const Poly& gx, const Poly& gy, int cap)
{
    Poly out;
    for (const auto& [mo, c] : p) {
        Poly term{{Mono{0, 0}, c}};
        for (int pos = mo.len - 1; pos >= 0; --pos) {
            const bool is_y = (mo.bits >> pos) & 1U;
            term = times(term, is_y ? gy : gx, cap);
        }
        out = plus(out, term);
    }
    return out;
}

FreeCheck run_check(int m, const std::vector<GeneratorG>& letters, int cap)
{
    FreeCheck fc;
    if (cap > 30) {
        fc.cap_ok = false;
        fc.message = "degree cap above 30 is not supported";
        return fc;
    }
    for (const auto& g : letters)
        if (g.k * m > cap) {
            fc.cap_ok = false;
            fc.message = "degree cap " + std::to_string(cap) + " below k*m = " + std::to_string(g.k * m);
            return fc;
        }
    Poly sx = letter(0), sy = letter(1);
    for (const auto& g : letters) {
        Poly gx = letter(0), gy = letter(1);
        const ExactComplex c = exact_from(g.coeff);
        Poly add;
        for (auto& [mo, one] : power(g.kind == GenKind::psi ? 1 : 0, g.k * m - 1, cap)) add_to(add, mo, mul(one, c));
        if (g.kind == GenKind::psi) gx = plus(gx, add);
        else gy = plus(gy, add);
        Poly nx = substitute(sx, gx, gy, cap);
        Poly ny = substitute(sy, gx, gy, cap);
        sx = std::move(nx);
        sy = std::move(ny);
    }
    const Poly lhs = plus(times(sx, sy, cap), times(sy, sx, cap), -1);
    const Poly omega = plus(times(letter(0), letter(1), cap), times(letter(1), letter(0), cap), -1);
    fc.fixes_omega = plus(lhs, omega, -1).empty();
    fc.nontrivial = !plus(sx, letter(0), -1).empty() || !plus(sy, letter(1), -1).empty();
    fc.message = fc.fixes_omega ? "omega fixed" : "omega not fixed";
    return fc;
}

}  // namespace

std::vector<GeneratorG> GroupWord::letters() const
{
    std::vector<GeneratorG> out;
    for (const auto& b : blocks)
        for (const auto& [k, c] : b.coeffs) out.push_back({b.kind, k, c});
    return out;
}

GroupWord canonicalize(const std::vector<GeneratorG>& raw)
{
    GroupWord w;
    for (const auto& g : raw) {
        if (g.k < 1) throw QuiverError("generator with k < 1");
        if (g.coeff == cplx{0.0, 0.0}) continue;
        if (w.blocks.empty() || w.blocks.back().kind != g.kind) w.blocks.push_back({g.kind, {}});
        auto& blk = w.blocks.back();
        blk.coeffs[g.k] += g.coeff;
        if (blk.coeffs[g.k] == cplx{0.0, 0.0}) blk.coeffs.erase(g.k);
        if (blk.coeffs.empty()) {
            w.blocks.pop_back();
            // the neighbours may now be of equal kind and merge
            if (w.blocks.size() >= 2 && w.blocks[w.blocks.size() - 2].kind == w.blocks.back().kind) {
                auto last = w.blocks.back();
                w.blocks.pop_back();
                for (const auto& [k, c] : last.coeffs) {
                    auto& slot = w.blocks.back().coeffs[k];
                    slot += c;
                    if (slot == cplx{0.0, 0.0}) w.blocks.back().coeffs.erase(k);
                }
                if (w.blocks.back().coeffs.empty()) w.blocks.pop_back();
            }
        }
    }
    return w;
}

GroupWord inverse(const GroupWord& w)
{
    GroupWord out;
    for (auto it = w.blocks.rbegin(); it != w.blocks.rend(); ++it) {
        GroupBlock b{it->kind, {}};
        for (const auto& [k, c] : it->coeffs) b.coeffs[k] = -c;
        out.blocks.push_back(std::move(b));
    }
    return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b)
{
    auto l = a.letters();
    auto r = b.letters();
    l.insert(l.end(), r.begin(), r.end());
    return canonicalize(l);
}

std::vector<GeneratorG> parse_group_word(const std::string& text)
{
    static const std::regex item(R"(^\s*(psi|phi)\s*\(\s*([0-9]+)\s*,\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*\)\s*$)");
    std::vector<GeneratorG> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        std::smatch mt;
        if (!std::regex_match(part, mt, item)) throw QuiverError("cannot parse group generator: '" + part + "'");
        GeneratorG g;
        g.kind = mt[1] == "psi" ? GenKind::psi : GenKind::phi;
        g.k = std::stoi(mt[2]);
        g.coeff = {std::stod(mt[3]), std::stod(mt[4])};
        if (g.k < 1) throw QuiverError("generator with k < 1");
        out.push_back(g);
    }
    return out;
}

std::string format_group_word(const GroupWord& w)
{
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& g : w.letters()) {
        if (!first) os << "; ";
        first = false;
        os << kind_name(g.kind) << '(' << g.k << ',' << g.coeff.real() << ',' << g.coeff.imag() << ')';
    }
    return os.str();
}

QuiverPoint apply_generator(const GeneratorG& g, const QuiverPoint& p)
{
    if (g.k < 1) throw QuiverError("generator with k < 1");
    const int m = p.m();
    QuiverPoint q = p;
    if (g.coeff == cplx{0.0, 0.0}) return q;
    for (int i = 0; i < m; ++i) {
        if (g.kind == GenKind::psi) q.X[i] = p.X[i] + g.coeff * path_matrix(p, psi_path(m, g.k, i), wrap(i + 1, m));
        else q.Y[i] = p.Y[i] + g.coeff * path_matrix(p, phi_path(m, g.k, i), i);
    }
    return q;
}

QuiverPoint apply_generator_block(const GeneratorG& g, const QuiverPoint& p)
{
    const int m = p.m();
    const BlockPoint b = block_form(p);
    const int N = static_cast<int>(b.X_big.rows());
    Mat P = Mat::Identity(N, N);
    const Mat& base = g.kind == GenKind::psi ? b.Y_big : b.X_big;
    for (int r = 0; r < g.k * m - 1; ++r) P = P * base;
    const Mat Xn = g.kind == GenKind::psi ? Mat(b.X_big + g.coeff * P) : b.X_big;
    const Mat Yn = g.kind == GenKind::phi ? Mat(b.Y_big + g.coeff * P) : b.Y_big;
    QuiverPoint q = p;
    for (int i = 0; i < m; ++i) {
        const int ip1 = wrap(i + 1, m);
        q.X[i] = Xn.block(b.offset[i], b.offset[ip1], p.dim(i), p.dim(ip1));
        q.Y[i] = Yn.block(b.offset[ip1], b.offset[i], p.dim(ip1), p.dim(i));
    }
    return q;
}

QuiverPoint apply_letters(const std::vector<GeneratorG>& letters, const QuiverPoint& p)
{
    QuiverPoint q = p;
    for (const auto& g : letters) q = apply_generator(g, q);
    return q;
}

QuiverPoint apply_word(const GroupWord& w, const QuiverPoint& p) { return apply_letters(w.letters(), p); }

ExactComplex exact_from(cplx z) { return {Rational(z.real()), Rational(z.imag())}; }

FreeCheck free_algebra_check(int m, const GeneratorG& g, int degree_cap) { return run_check(m, {g}, degree_cap); }

FreeCheck free_algebra_check(int m, const GroupWord& w, int degree_cap) { return run_check(m, w.letters(), degree_cap); }

}  // namespace qv
