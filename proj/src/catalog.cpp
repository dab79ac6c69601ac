#include "recmat/catalog.hpp"

#include <array>
#include <functional>
#include <map>

#include "recmat/binom.hpp"

namespace recmat::catalog {

namespace {

struct Term {
    int state;  // 1-based target state
    const char* coeff;
};
using ShiftSpec = std::vector<std::vector<Term>>;  // [column j] = terms of rho A_j

Presentation build(const Field& f, std::vector<std::string> names,
                   const std::vector<const char*>& init,
                   const std::array<ShiftSpec, 4>& spec) {
    int d = static_cast<int>(names.size());
    std::vector<Scalar> iv;
    iv.reserve(d);
    for (auto* s : init) iv.push_back(Scalar::parse(s, f));
    std::array<DenseMatrix, 4> sh{DenseMatrix(f, d, d), DenseMatrix(f, d, d),
                                  DenseMatrix(f, d, d), DenseMatrix(f, d, d)};
    for (int st = 0; st < 4; ++st)
        for (int j = 0; j < d; ++j)
            for (const Term& t : spec[st][j])
                sh[st].at(t.state - 1, j) = Scalar::parse(t.coeff, f);
    std::vector<Scalar> sel(d, Scalar::zero(f));
    sel[0] = Scalar::one(f);
    return Presentation(f, d, std::move(iv), std::move(sh), std::move(sel),
                        std::move(names));
}

const Field Q = Field::rational();
const Field Qi = Field::gaussian();

Presentation preset_P() {
    return build(Q, {"P"}, {"1"},
                 {ShiftSpec{{{1, "1"}}}, ShiftSpec{{{1, "1"}}}, ShiftSpec{{{1, "1"}}},
                  ShiftSpec{{}}});
}

Presentation preset_L_P() {
    return build(Q, {"L"}, {"1"},
                 {ShiftSpec{{{1, "1"}}}, ShiftSpec{{}}, ShiftSpec{{{1, "1"}}},
                  ShiftSpec{{{1, "1"}}}});
}

Presentation preset_D_P() {
    return build(Q, {"D"}, {"1"},
                 {ShiftSpec{{{1, "1"}}}, ShiftSpec{{}}, ShiftSpec{{}},
                  ShiftSpec{{{1, "-1"}}}});
}

Presentation preset_Linv_P() {
    return build(Q, {"Li"}, {"1"},
                 {ShiftSpec{{{1, "1"}}}, ShiftSpec{{}}, ShiftSpec{{{1, "-1"}}},
                  ShiftSpec{{{1, "1"}}}});
}

Presentation preset_V() {
    return build(Qi, {"V1", "V2"}, {"1", "1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{{2, "1"}}, {{1, "0-1i"}, {2, "1+1i"}}},
                  ShiftSpec{{{2, "1"}}, {{1, "0-1i"}, {2, "1+1i"}}},
                  ShiftSpec{{{1, "0+1i"}}, {{1, "-1"}}}});
}

Presentation preset_L_V() {
    return build(Qi, {"L1", "L2", "L3", "L4"}, {"1", "0", "1", "1"},
                 {ShiftSpec{{{1, "1"}}, {}, {{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{}, {{2, "0-1i"}}, {{2, "1"}}, {}},
                  ShiftSpec{{{3, "1"}},
                            {{1, "-1"}, {3, "1"}},
                            {{1, "0-1i"}, {3, "1+1i"}},
                            {{1, "1-1i"}, {3, "0+1i"}}},
                  ShiftSpec{{{4, "1"}},
                            {{2, "0-1i"}, {4, "0-1i"}},
                            {{2, "1"}, {4, "1+1i"}},
                            {{4, "1"}}}});
}

Presentation preset_D_V() {
    return build(Qi, {"D1", "D2", "D3"}, {"1", "-1+1i", "-1+1i"},
                 {ShiftSpec{{{1, "1"}}, {{3, "1"}}, {{3, "1"}}},
                  ShiftSpec{{}, {}, {}},
                  ShiftSpec{{}, {}, {}},
                  ShiftSpec{{{2, "1"}}, {{1, "2"}, {2, "-1"}, {3, "2"}}, {{2, "-1"}}}});
}

Presentation preset_Z() {
    return build(Q, {"Z1", "Z2", "Z3"}, {"1", "1", "1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{{2, "1"}}, {{2, "1"}}, {{2, "-1"}}},
                  ShiftSpec{{{3, "1"}}, {{3, "-1"}}, {{3, "1"}}},
                  ShiftSpec{{}, {}, {}}});
}

Presentation preset_L_Z() {
    return build(Q, {"L1", "L2", "L3", "L4"}, {"1", "2", "1", "1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "-2/3"}}, {{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{}, {{2, "2"}}, {{2, "1"}}, {}},
                  ShiftSpec{{{3, "1"}}, {{3, "2/3"}}, {{3, "1"}}, {{3, "1/3"}}},
                  ShiftSpec{{{4, "1"}}, {{4, "2"}}, {{4, "1"}}, {{4, "1"}}}});
}

Presentation preset_D_Z() {
    return build(Q, {"D1", "D2"}, {"1", "-1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "3"}}}, ShiftSpec{{}, {}},
                  ShiftSpec{{}, {}}, ShiftSpec{{{2, "1"}}, {{2, "1/3"}}}});
}

Presentation preset_M_Z() {
    return build(Q, {"M1", "M2", "M3", "M4"}, {"1", "-2", "-1", "1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "2"}}, {{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{}, {{2, "2"}}, {{2, "1"}}, {}},
                  ShiftSpec{{{3, "1"}}, {{3, "2"}}, {{3, "1/3"}}, {{3, "1/3"}}},
                  ShiftSpec{{{4, "1"}}, {{4, "2"}}, {{4, "-1/3"}}, {{4, "1"}}}});
}

Presentation preset_E_Z() {
    return build(Q, {"E1", "E2"}, {"1", "-1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "1/3"}}}, ShiftSpec{{}, {}},
                  ShiftSpec{{}, {}}, ShiftSpec{{{2, "1"}}, {{2, "3"}}}});
}

Presentation preset_U_Z() {
    return build(Q, {"U1", "U2", "U3"}, {"1", "1", "1"},
                 {ShiftSpec{{}, {}, {}},
                  ShiftSpec{{{2, "1"}}, {{2, "1"}}, {{2, "-1"}}},
                  ShiftSpec{{{3, "1"}}, {{3, "-1"}}, {{3, "1"}}},
                  ShiftSpec{{{1, "1"}, {2, "-1"}, {3, "-1"}},
                            {{1, "-1"}, {2, "1"}, {3, "1"}},
                            {{1, "-1"}, {2, "1"}, {3, "1"}}}});
}

// states: J1 J2 J2t J3 J3t J4 J4t J5 J5t
Presentation preset_J() {
    return build(
        Q, {"J1", "J2", "J2t", "J3", "J3t", "J4", "J4t", "J5", "J5t"},
        {"1", "1", "1", "1", "1", "1", "1", "-1", "-1"},
        {ShiftSpec{{{1, "1"}},
                   {{4, "1"}},
                   {{5, "1"}},
                   {{1, "1"}},
                   {{1, "1"}},
                   {{4, "1"}},
                   {{5, "1"}},
                   {{5, "1"}},
                   {{4, "1"}}},
         ShiftSpec{{{2, "1"}},
                   {{6, "1"}},
                   {{9, "1"}},
                   {{2, "1"}},
                   {{2, "-1"}},
                   {{6, "1"}},
                   {{9, "-1"}},
                   {{9, "1"}},
                   {{6, "-1"}}},
         ShiftSpec{{{3, "1"}},
                   {{8, "1"}},
                   {{7, "1"}},
                   {{3, "-1"}},
                   {{3, "1"}},
                   {{8, "-1"}},
                   {{7, "1"}},
                   {{7, "-1"}},
                   {{8, "1"}}},
         ShiftSpec{{}, {}, {}, {}, {}, {}, {}, {}, {}}});
}

Presentation preset_L_J() {
    std::vector<std::string> names;
    for (int i = 1; i <= 20; ++i) names.push_back("L" + std::to_string(i));
    return build(
        Q, std::move(names),
        {"1", "1", "1", "1", "2", "1", "1", "1", "1/3", "1",
         "2", "4/3", "4", "0", "2", "-2/3", "2/3", "2", "8/3", "-4"},
        {ShiftSpec{{{1, "1"}},
                   {{4, "1"}},
                   {{8, "1"}},
                   {{1, "1"}},
                   {{12, "1"}},
                   {{4, "1"}},
                   {{8, "1"}, {12, "-1"}},
                   {{1, "1"}},
                   {{4, "1"}},
                   {{8, "1"}},
                   {{16, "1"}},
                   {{19, "1"}},
                   {{12, "2/3"}},
                   {{12, "1"}, {16, "1"}},
                   {{12, "-2/3"}, {16, "1"}},
                   {{1, "-2/3"}},
                   {{4, "-2/3"}},
                   {{8, "-2/3"}, {12, "-2/3"}},
                   {{19, "2"}},
                   {{12, "4/3"}, {16, "-2/3"}}},
         ShiftSpec{{},
                   {{5, "1"}},
                   {},
                   {{11, "1"}},
                   {{13, "1"}},
                   {{14, "1"}},
                   {{15, "1"}},
                   {},
                   {{5, "3"}},
                   {},
                   {{13, "1"}},
                   {{5, "4"}},
                   {{13, "2"}},
                   {{20, "1"}},
                   {{13, "1"}},
                   {{11, "2"}},
                   {{5, "-4"}, {14, "2"}},
                   {{15, "2"}},
                   {{5, "8/3"}},
                   {{13, "-2"}, {20, "2"}}},
         ShiftSpec{{{2, "1"}},
                   {{6, "1"}},
                   {{9, "1"}},
                   {{2, "1"}},
                   {},
                   {{6, "1"}},
                   {{9, "1"}},
                   {{2, "1/3"}},
                   {{6, "1/3"}},
                   {{9, "1/3"}},
                   {{17, "1"}},
                   {},
                   {},
                   {{17, "1"}},
                   {{17, "1/3"}},
                   {{2, "2/3"}},
                   {{6, "2/3"}},
                   {{9, "2/3"}},
                   {},
                   {{17, "2/3"}}},
         ShiftSpec{{{3, "1"}},
                   {{7, "1"}},
                   {{10, "1"}},
                   {{3, "1"}},
                   {},
                   {{7, "1"}},
                   {{10, "1"}},
                   {{3, "1"}},
                   {{7, "1"}},
                   {{10, "1"}},
                   {{18, "1"}},
                   {},
                   {},
                   {{18, "1"}},
                   {{18, "1"}},
                   {{3, "2"}},
                   {{7, "2"}},
                   {{10, "2"}},
                   {},
                   {{18, "2"}}}});
}

Presentation preset_D_J() {
    return build(Q, {"D1", "D2", "D3", "D4"}, {"1", "-1", "3", "-1/3"},
                 {ShiftSpec{{{1, "1"}}, {{3, "1"}}, {{1, "3"}}, {{3, "3"}}},
                  ShiftSpec{{}, {}, {}, {}},
                  ShiftSpec{{}, {}, {}, {}},
                  ShiftSpec{{{2, "1"}}, {{4, "1"}}, {{2, "1/3"}}, {{4, "1/3"}}}});
}

Presentation preset_T() {
    return build(Q, {"L1", "L2", "L3"}, {"1", "1", "1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{}, {}, {}},
                  ShiftSpec{{{2, "1"}}, {{2, "1"}}, {{2, "-1"}}},
                  ShiftSpec{{{3, "1"}}, {{3, "-1"}}, {{3, "1"}}}});
}

// M = M1 - M2 - M3 appears in the (1,0) blocks
Presentation preset_Minv_T() {
    return build(Q, {"M1", "M2", "M3"}, {"1", "1", "1"},
                 {ShiftSpec{{{1, "1"}}, {{1, "1"}}, {{1, "1"}}},
                  ShiftSpec{{}, {}, {}},
                  ShiftSpec{{{1, "1"}, {2, "-1"}, {3, "-1"}},
                            {{1, "-1"}, {2, "1"}, {3, "1"}},
                            {{1, "-1"}, {2, "1"}, {3, "1"}}},
                  ShiftSpec{{{3, "1"}}, {{3, "-1"}}, {{3, "1"}}}});
}

Presentation select_state(const Presentation& p, int state, const char* lambda = nullptr) {
    std::vector<Scalar> sel(p.dim(), Scalar::zero(p.field()));
    sel[state] = lambda ? Scalar::parse(lambda, p.field()) : Scalar::one(p.field());
    return p.with_select(std::move(sel));
}

using Builder = std::function<Presentation()>;

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> reg = {
        {"P", preset_P},
        {"L_P", preset_L_P},
        {"D_P", preset_D_P},
        {"Linv_P", preset_Linv_P},
        {"Id", [] { return Presentation::identity(Q); }},
        {"V", preset_V},
        {"L_V", preset_L_V},
        {"D_V", preset_D_V},
        {"Z", preset_Z},
        {"L_Z", preset_L_Z},
        {"D_Z", preset_D_Z},
        {"M_Z", preset_M_Z},
        {"U_Z", preset_U_Z},
        {"E_Z", preset_E_Z},
        {"J", preset_J},
        {"L_J", preset_L_J},
        {"D_J", preset_D_J},
        {"T", preset_T},
        {"Minv_T", preset_Minv_T},
        // normalized Gamma_L generators a = L1, b = L2/2, c = L3, d = L4 and
        // inverses a^-1 = M1, b^-1 = -M3, c^-1 = -M2/2, d^-1 = M4
        {"gammaL.a", [] { return select_state(preset_L_Z(), 0); }},
        {"gammaL.b", [] { return select_state(preset_L_Z(), 1, "1/2"); }},
        {"gammaL.c", [] { return select_state(preset_L_Z(), 2); }},
        {"gammaL.d", [] { return select_state(preset_L_Z(), 3); }},
        {"gammaL.a.inv", [] { return select_state(preset_M_Z(), 0); }},
        {"gammaL.b.inv", [] { return select_state(preset_M_Z(), 2, "-1"); }},
        {"gammaL.c.inv", [] { return select_state(preset_M_Z(), 1, "-1/2"); }},
        {"gammaL.d.inv", [] { return select_state(preset_M_Z(), 3); }},
        {"gammaZ.a", [] { return select_state(preset_Z(), 0); }},
        {"gammaZ.b", [] { return select_state(preset_Z(), 1); }},
        {"gammaZ.c", [] { return select_state(preset_Z(), 2); }},
        {"gammaZ.a.inv", [] { return select_state(preset_U_Z(), 0); }},
        {"gammaZ.b.inv", [] { return select_state(preset_U_Z(), 2); }},
        {"gammaZ.c.inv", [] { return select_state(preset_U_Z(), 1); }},
        {"tri.L1", [] { return select_state(preset_T(), 0); }},
        {"tri.L2", [] { return select_state(preset_T(), 1); }},
        {"tri.L3", [] { return select_state(preset_T(), 2); }},
        {"tri.L1.inv", [] { return select_state(preset_Minv_T(), 0); }},
        {"tri.L2.inv", [] { return select_state(preset_Minv_T(), 1); }},
        {"tri.L3.inv", [] { return select_state(preset_Minv_T(), 2); }},
    };
    return reg;
}

}  // namespace

Presentation preset(const std::string& id) {
    auto it = registry().find(id);
    if (it == registry().end()) throw UnknownPresetError(id);
    return it->second();
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

namespace {

DenseMatrix mat2(const Field& f, const char* a, const char* b, const char* c,
                 const char* d) {
    DenseMatrix m(f, 2, 2);
    m.at(0, 0) = Scalar::parse(a, f);
    m.at(0, 1) = Scalar::parse(b, f);
    m.at(1, 0) = Scalar::parse(c, f);
    m.at(1, 1) = Scalar::parse(d, f);
    return m;
}

}  // namespace

TensorElement zprime() {
    return tensor_const(preset_Z(), mat2(Q, "1", "1", "1", "0"));
}

TensorElement zprime_lower() {
    return tensor_const(preset_L_Z(), mat2(Q, "1", "0", "1", "1"));
}

TensorElement zprime_diag() {
    return tensor_const(preset_D_Z(), mat2(Q, "1", "0", "0", "-1"));
}

namespace {

void check_specialization(const Scalar& x, const Scalar& y) {
    const Field f = x.field();
    Scalar disc = x * x - (x + x) + y;  // x^2 - 2x + y
    if (y == Scalar::one(f))
        throw SingularSpecializationError("y = 1 makes the second pivot vanish");
    if (disc.is_zero())
        throw SingularSpecializationError("x^2 - 2x + y = 0 makes the third pivot vanish");
    if (x.is_zero())
        throw SingularSpecializationError("x = 0 makes the fourth pivot vanish");
}

DenseMatrix mprime_factor(const Scalar& x, const Scalar& y) {
    const Field f = x.field();
    DenseMatrix m(f, 4, 4);
    Scalar one = Scalar::one(f);
    for (int i = 0; i < 4; ++i) m.at(i, 0) = m.at(0, i) = one;
    m.at(1, 1) = y;
    m.at(1, 2) = m.at(2, 1) = x;
    return m;
}

}  // namespace

TensorElement mprime(const Scalar& x, const Scalar& y, GammaKind gamma) {
    check_specialization(x, y);
    Presentation base = gamma == GammaKind::ChiB ? preset_Z() : preset_P();
    return tensor_const(base, mprime_factor(x, y));
}

TensorElement mprime_lower(const Scalar& x, const Scalar& y, GammaKind gamma) {
    check_specialization(x, y);
    const Field f = x.field();
    Scalar one = Scalar::one(f);
    Scalar disc = x * x - (x + x) + y;
    DenseMatrix l = DenseMatrix::identity(f, 4);
    l.at(1, 0) = l.at(2, 0) = l.at(3, 0) = one;
    l.at(2, 1) = (one - x) / (one - y);
    l.at(3, 1) = one / (one - y);
    l.at(3, 2) = (y - x) / disc;
    Presentation base = gamma == GammaKind::ChiB ? preset_L_Z() : preset_L_P();
    return tensor_const(base, l);
}

TensorElement mprime_diag(const Scalar& x, const Scalar& y, GammaKind gamma) {
    check_specialization(x, y);
    const Field f = x.field();
    Scalar one = Scalar::one(f);
    Scalar disc = x * x - (x + x) + y;
    DenseMatrix d(f, 4, 4);
    d.at(0, 0) = one;
    d.at(1, 1) = y - one;
    d.at(2, 2) = disc / (one - y);
    d.at(3, 3) = -(x * x) / disc;
    Presentation base = gamma == GammaKind::ChiB ? preset_D_Z() : preset_D_P();
    return tensor_const(base, d);
}

namespace {

Scalar psi_reduce(const Scalar& value, const Scalar& x, const Scalar& y,
                  GammaKind gamma) {
    // value = C(s+t,s)_i in N, iN or (1+i)N; reduce the integer part and tag
    const Field f = x.field();
    mpz_class n;
    Scalar tag = Scalar::one(f);
    if (sgn(value.im()) == 0) {
        n = value.re().get_num();
    } else if (sgn(value.re()) == 0) {
        n = value.im().get_num();
        tag = x;
    } else {
        n = value.re().get_num();  // re == im on the (1+i) ray
        tag = y;
    }
    int g = gamma == GammaKind::ChiB ? binom::chi_B(n)
                                     : static_cast<int>(mpz_class(n % 2).get_ui());
    return Scalar::integer(g, f) * tag;
}

}  // namespace

DenseMatrix brute_matrix(BruteKind kind, int n, const BruteParams& params) {
    if (n < 1) throw OutOfRangeError("brute_matrix requires n >= 1");
    switch (kind) {
        case BruteKind::Mod2: {
            DenseMatrix m(Q, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    // C(s+t,s) is odd iff the binary digits of s and t are disjoint
                    m.at(s, t) = Scalar::integer((s & t) == 0 ? 1 : 0, Q);
            return m;
        }
        case BruteKind::Valuation: {
            DenseMatrix m(Qi, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    int v = binom::kummer_valuation(s, t, 2) & 3;
                    static const int re[4] = {1, 0, -1, 0}, im[4] = {0, 1, 0, -1};
                    m.at(s, t) = Scalar::gaussian(re[v], im[v]);
                }
            return m;
        }
        case BruteKind::Beeblebrox: {
            DenseMatrix m(Q, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    m.at(s, t) = Scalar::integer(binom::chi_B_binomial(s + t, s), Q);
            return m;
        }
        case BruteKind::Jacobi: {
            DenseMatrix m(Q, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    m.at(s, t) =
                        Scalar::integer(binom::chi_J(binom::binomial(s + t, s)), Q);
            return m;
        }
        case BruteKind::Fermat: {
            DenseMatrix m(Q, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    m.at(s, t) = Scalar::rational(mpq_class(binom::binomial(s + t, s)));
            return m;
        }
        case BruteKind::PascalQ: {
            const Field f = params.q.field();
            DenseMatrix m(f, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = s; t < n; ++t) {
                    Scalar v = binom::qbinomial_poly(s + t, s).eval(params.q);
                    m.at(s, t) = v;
                    m.at(t, s) = v;
                }
            return m;
        }
        case BruteKind::ZPrime: {
            DenseMatrix m(Q, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = s; t < n; ++t) {
                    Scalar v = binom::qbinomial_eval_root(s + t, s, 2);
                    Scalar r = Scalar::integer(binom::chi_B(v.re().get_num()), Q);
                    m.at(s, t) = r;
                    m.at(t, s) = r;
                }
            return m;
        }
        case BruteKind::MPrime: {
            check_specialization(params.x, params.y);
            const Field f = params.x.field();
            DenseMatrix m(f, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = s; t < n; ++t) {
                    Scalar v = binom::qbinomial_eval_root(s + t, s, 4);
                    Scalar r = psi_reduce(v, params.x, params.y, params.gamma);
                    m.at(s, t) = r;
                    m.at(t, s) = r;
                }
            return m;
        }
        case BruteKind::TriangularBeeblebrox: {
            DenseMatrix m(Q, n, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t <= s; ++t)
                    m.at(s, t) = Scalar::integer(binom::chi_B_binomial(s, t), Q);
            return m;
        }
    }
    throw UnknownKindError("brute_matrix kind");
}

Scalar brute_det(BruteKind kind, int n, const BruteParams& params) {
    return det(brute_matrix(kind, n, params));
}

std::vector<Scalar> brute_leading_dets(BruteKind kind, int n, const BruteParams& params) {
    return leading_minors(brute_matrix(kind, n, params));
}

RowCheck triangular_row_check(std::uint64_t n) {
    RowCheck rc;
    rc.row = n;
    for (std::uint64_t k = 0; k <= n; ++k) {
        int c = binom::chi_B_binomial(n, k);
        if (c > 0)
            ++rc.plus_count;
        else if (c < 0)
            ++rc.minus_count;
    }
    rc.ok = rc.minus_count == 0 ||
            (rc.plus_count == rc.minus_count &&
             (rc.minus_count & (rc.minus_count - 1)) == 0);
    return rc;
}

Presentation bidiagonal_fp(std::int64_t omega, std::int64_t p) {
    const Field f = Field::prime(p);
    std::array<DenseMatrix, 4> sh{DenseMatrix(f, 2, 2), DenseMatrix(f, 2, 2),
                                  DenseMatrix(f, 2, 2), DenseMatrix(f, 2, 2)};
    Scalar one = Scalar::one(f);
    sh[0].at(0, 0) = one;  // rho(0,0): A1 -> A1
    sh[1].at(1, 1) = one;  // rho(0,1): A2 -> A2
    sh[2].at(1, 0) = one;  // rho(1,0): A1 -> A2
    sh[3].at(0, 0) = one;  // rho(1,1): A1 -> A1
    return Presentation(f, 2, {one, Scalar::prime(-omega, f)}, std::move(sh),
                        {one, Scalar::zero(f)}, {"A1", "A2"});
}

}  // namespace recmat::catalog
