#include "recmat/groups.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <array>
#include <set>
#include <sstream>

#include "recmat/catalog.hpp"

namespace recmat::groups {

namespace {

struct Alphabet {
    std::vector<char> symbols;
    std::string preset_prefix;
};

const Alphabet& alphabet(GroupTag g) {
    static const Alphabet gl{{'a', 'b', 'c', 'd'}, "gammaL."};
    static const Alphabet gz{{'a', 'b', 'c'}, "gammaZ."};
    static const Alphabet tri{{'1', '2', '3'}, "tri.L"};
    switch (g) {
        case GroupTag::GammaL: return gl;
        case GroupTag::GammaZ: return gz;
        case GroupTag::Triangular: return tri;
    }
    throw Error("bad group tag");
}

std::string symbol_name(GroupTag g, char c) {
    return g == GroupTag::Triangular ? "L" + std::string(1, c) : std::string(1, c);
}

const Presentation& generator(GroupTag g, char symbol, int exponent) {
    static std::map<std::string, Presentation> cache;
    const Alphabet& al = alphabet(g);
    if (std::find(al.symbols.begin(), al.symbols.end(), symbol) == al.symbols.end())
        throw UnknownGeneratorError(symbol_name(g, symbol));
    std::string key = al.preset_prefix + std::string(1, symbol) +
                      (exponent < 0 ? ".inv" : "");
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, catalog::preset(key)).first;
    return it->second;
}

}  // namespace

std::string GroupWord::str() const {
    std::string out;
    for (const auto& [c, e] : letters) {
        if (!out.empty()) out += ' ';
        out += symbol_name(group, c);
        if (e < 0) out += "^-1";
    }
    return out;
}

GroupWord parse_word(GroupTag group, const std::string& text) {
    GroupWord w;
    w.group = group;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int exp = 1;
        if (tok.size() >= 3 && tok.substr(tok.size() - 3) == "^-1") {
            exp = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (group == GroupTag::Triangular) {
            if (tok.size() != 2 || tok[0] != 'L') throw UnknownGeneratorError(tok);
            tok = tok.substr(1);
        }
        if (tok.size() != 1) throw UnknownGeneratorError(tok);
        w.letters.emplace_back(tok[0], exp);
    }
    return w;
}

Presentation evaluate_word(const GroupWord& w) {
    Presentation acc = Presentation::identity(Field::rational());
    for (const auto& [c, e] : w.letters) acc = mul(acc, generator(w.group, c, e));
    return minimize(acc);
}

RelationCertificate verify_relation(const GroupWord& w) {
    Presentation p = evaluate_word(w);
    Presentation id = Presentation::identity(p.field());
    RelationCertificate rc;
    rc.certificate = is_zero(add(p, scale(id, -Scalar::one(p.field()))));
    rc.holds = rc.certificate.zero;
    return rc;
}

namespace {

struct Letter {
    char symbol;
    int exp;
    std::vector<DenseMatrix> windows;  // levels 0..depth
};

bool inverse_of(const Letter& x, const Letter& y) {
    return x.symbol == y.symbol && x.exp == -y.exp;
}

// canonical encoding up to cyclic rotation and inversion
std::vector<int> canonical_cycle(const std::vector<int>& enc) {
    auto best = enc;
    auto consider = [&best](std::vector<int> v) {
        for (std::size_t r = 0; r < v.size(); ++r) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
            if (v < best) best = v;
        }
    };
    consider(enc);
    std::vector<int> inv(enc.rbegin(), enc.rend());
    for (int& x : inv) x ^= 1;  // flip exponent bit
    consider(inv);
    return best;
}

}  // namespace

std::vector<GroupWord> enumerate_relations(GroupTag group, int max_len,
                                           const EnumerationCaps& caps) {
    if (max_len > caps.max_len_bound) throw CapExceededError("relator length");
    const Alphabet& al = alphabet(group);
    const int depth = caps.fingerprint_depth;
    std::vector<Letter> letters;
    for (char c : al.symbols)
        for (int e : {1, -1}) {
            Letter l{c, e, {}};
            const Presentation& p = generator(group, c, e);
            for (int lev = 0; lev <= depth; ++lev) l.windows.push_back(materialize(p, lev));
            letters.push_back(std::move(l));
        }
    std::vector<DenseMatrix> idw;
    for (int lev = 0; lev <= depth; ++lev)
        idw.push_back(DenseMatrix::identity(Field::rational(), 1 << lev));

    std::set<std::vector<int>> seen;
    std::vector<GroupWord> out;
    std::vector<int> stack;
    std::vector<std::vector<DenseMatrix>> prod{idw};

    std::function<void()> dfs = [&]() {
        int len = static_cast<int>(stack.size());
        if (len > 0) {
            // candidate when cyclically reduced and all fingerprint windows match
            bool cyc = !inverse_of(letters[stack.front()], letters[stack.back()]) ||
                       len == 1;
            if (cyc) {
                bool id = true;
                for (int lev = 0; lev <= depth && id; ++lev)
                    id = prod.back()[lev] == idw[lev];
                if (id) {
                    std::vector<int> enc = canonical_cycle(stack);
                    if (seen.insert(enc).second) {
                        GroupWord w;
                        w.group = group;
                        for (int li : enc)
                            w.letters.emplace_back(letters[li].symbol, letters[li].exp);
                        if (verify_relation(w).holds) out.push_back(std::move(w));
                    }
                }
            }
        }
        if (len == max_len) return;
        for (std::size_t li = 0; li < letters.size(); ++li) {
            if (!stack.empty() && inverse_of(letters[stack.back()], letters[li])) continue;
            stack.push_back(static_cast<int>(li));
            std::vector<DenseMatrix> next;
            next.reserve(depth + 1);
            for (int lev = 0; lev <= depth; ++lev)
                next.push_back(prod.back()[lev].mul(letters[li].windows[lev]));
            prod.push_back(std::move(next));
            dfs();
            prod.pop_back();
            stack.pop_back();
        }
    };
    dfs();
    std::sort(out.begin(), out.end(), [](const GroupWord& x, const GroupWord& y) {
        if (x.letters.size() != y.letters.size())
            return x.letters.size() < y.letters.size();
        return x.str() < y.str();
    });
    return out;
}

// --- mu_1 machinery --------------------------------------------------------

RelationPoly RelationPoly::monomial(const std::string& word, mpq_class coeff) {
    RelationPoly p;
    coeff.canonicalize();
    if (sgn(coeff) != 0) p.terms[word] = coeff;
    return p;
}

RelationPoly RelationPoly::one() { return monomial("", 1); }

RelationPoly RelationPoly::add(const RelationPoly& o) const {
    RelationPoly r = *this;
    for (const auto& [w, c] : o.terms) {
        auto it = r.terms.find(w);
        if (it == r.terms.end()) {
            r.terms[w] = c;
        } else {
            it->second += c;
            if (sgn(it->second) == 0) r.terms.erase(it);
        }
    }
    return r;
}

RelationPoly RelationPoly::sub(const RelationPoly& o) const {
    return add(o.scaled(-1));
}

RelationPoly RelationPoly::mul(const RelationPoly& o) const {
    RelationPoly r;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) {
            std::string w = w1 + w2;
            mpq_class c = c1 * c2;
            auto it = r.terms.find(w);
            if (it == r.terms.end()) {
                if (sgn(c) != 0) r.terms[w] = c;
            } else {
                it->second += c;
                if (sgn(it->second) == 0) r.terms.erase(it);
            }
        }
    return r;
}

RelationPoly RelationPoly::scaled(const mpq_class& c) const {
    RelationPoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [w, c0] : terms) r.terms[w] = c0 * c;
    return r;
}

bool RelationPoly::is_signed_pair() const {
    if (terms.size() != 2) return false;
    auto it = terms.begin();
    int s1 = sgn(it->second);
    ++it;
    return s1 * sgn(it->second) < 0;
}

std::string RelationPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms) {
        std::string coeff = c.get_str();
        bool neg = coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string word;
        for (char ch : w) {
            if (!word.empty()) word += ' ';
            if (std::isupper(static_cast<unsigned char>(ch)))
                word += ch;
            else
                word += std::string(1, std::toupper(static_cast<unsigned char>(ch))) + "^-1";
        }
        if (word.empty()) word = "1";
        if (coeff == "1")
            out += word;
        else
            out += coeff + " " + word;
    }
    return out;
}

namespace {

using PolyMat = std::array<std::array<RelationPoly, 2>, 2>;

PolyMat poly_mat(const char* a00, const char* a01, const char* a10, const char* a11) {
    auto cell = [](const char* spec) {
        // "coeff:word" with coeff a rational, word possibly empty
        std::string s(spec);
        auto colon = s.find(':');
        mpq_class c(s.substr(0, colon));
        c.canonicalize();
        return RelationPoly::monomial(s.substr(colon + 1), c);
    };
    return PolyMat{{{cell(a00), cell(a01)}, {cell(a10), cell(a11)}}};
}

// Block table of the shift maps on the normalized generators; uppercase are
// the generators, lowercase their inverses.
const std::map<char, PolyMat>& mu1_table() {
    static const std::map<char, PolyMat> t = {
        {'A', poly_mat("1:A", "0:", "1:C", "1:D")},
        {'a', poly_mat("1:a", "0:", "-1:b", "1:d")},
        {'B', poly_mat("-1/3:A", "2:B", "1/3:C", "1:D")},
        {'b', poly_mat("-1:a", "2:c", "1/3:b", "1/3:d")},
        {'C', poly_mat("1:A", "2:B", "1:C", "1:D")},
        {'c', poly_mat("-1:a", "2:c", "1:b", "-1:d")},
        {'D', poly_mat("1:A", "0:", "1/3:C", "1:D")},
        {'d', poly_mat("1:a", "0:", "-1/3:b", "1:d")},
    };
    return t;
}

PolyMat mat_mul(const PolyMat& x, const PolyMat& y) {
    PolyMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][0].mul(y[0][j]).add(x[i][1].mul(y[1][j]));
    return r;
}

}  // namespace

std::vector<RelationPoly> mu1_expand(const RelationPoly& r) {
    PolyMat acc;  // zero
    for (const auto& [word, coeff] : r.terms) {
        PolyMat m{{{RelationPoly::one(), RelationPoly()},
                   {RelationPoly(), RelationPoly::one()}}};
        for (char ch : word) {
            auto it = mu1_table().find(ch);
            if (it == mu1_table().end())
                throw UnknownGeneratorError(std::string(1, ch));
            m = mat_mul(m, it->second);
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                acc[i][j] = acc[i][j].add(m[i][j].scaled(coeff));
    }
    std::set<RelationPoly> uniq;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!acc[i][j].is_zero()) uniq.insert(acc[i][j]);
    return {uniq.begin(), uniq.end()};
}

Presentation evaluate_relation_poly(const RelationPoly& r) {
    const Field q = Field::rational();
    Presentation acc = Presentation::zero(q);
    for (const auto& [word, coeff] : r.terms) {
        Presentation m = Presentation::identity(q);
        for (char ch : word) {
            char sym = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            int exp = std::isupper(static_cast<unsigned char>(ch)) ? 1 : -1;
            m = mul(m, generator(GroupTag::GammaL, sym, exp));
        }
        acc = add(acc, scale(m, Scalar::rational(coeff)));
    }
    return minimize(acc);
}

bool Prop52Report::all_pass() const {
    for (const auto& i : items)
        if (!i.pass) return false;
    return !items.empty();
}

Prop52Report prop52_checks() {
    Prop52Report rep;
    const Presentation t1 = generator(GroupTag::Triangular, '1', 1);
    const Presentation t2 = generator(GroupTag::Triangular, '2', 1);
    const Presentation t3 = generator(GroupTag::Triangular, '3', 1);
    rep.items.push_back({"L1 and L3 commute", equal(mul(t1, t3), mul(t3, t1))});
    rep.items.push_back({"L2^2 = L1 L3", equal(mul(t2, t2), mul(t1, t3))});
    rep.items.push_back({"L2 L3 = L1 L2", equal(mul(t2, t3), mul(t1, t2))});
    rep.items.push_back({"L2 L1 = L3 L2", equal(mul(t2, t1), mul(t3, t2))});

    // 4x4 window checks: <pi_2(L1), pi_2(L3)> is free abelian of rank 2 on the
    // exponent box [-10, 10]^2 and misses pi_2(L2)
    const int box = 10;
    DenseMatrix a = materialize(t1, 2), b = materialize(t3, 2), w2 = materialize(t2, 2);
    DenseMatrix id4 = DenseMatrix::identity(a.field(), 4);
    auto powers = [&](const DenseMatrix& m) {
        std::vector<DenseMatrix> pw(2 * box + 1, id4);
        DenseMatrix minv = *inverse(m);
        for (int e = 1; e <= box; ++e) {
            pw[box + e] = pw[box + e - 1].mul(m);
            pw[box - e] = pw[box - e + 1].mul(minv);
        }
        return pw;
    };
    auto pa = powers(a), pb = powers(b);
    bool free_rank2 = true, misses_l2 = true;
    for (int e1 = -box; e1 <= box; ++e1)
        for (int e2 = -box; e2 <= box; ++e2) {
            DenseMatrix prod = pa[box + e1].mul(pb[box + e2]);
            if (prod == id4 && !(e1 == 0 && e2 == 0)) free_rank2 = false;
            if (prod == w2) misses_l2 = false;
        }
    rep.items.push_back({"pi_2(L1), pi_2(L3) free abelian of rank 2 (box 10)", free_rank2});
    rep.items.push_back({"pi_2(L2) outside the abelian window box", misses_l2});
    return rep;
}

}  // namespace recmat::groups
