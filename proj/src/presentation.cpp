#include "recmat/presentation.hpp"

#include <algorithm>

#include "recmat/detail/linear_span.hpp"

namespace recmat {

namespace {

constexpr int kShiftOrder[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

using detail::SpanBasis;
using detail::dot;
using detail::matvec;

// Shift action on a coordinate space, possibly structured (products avoid
// materializing dim(p)*dim(q) square matrices).
struct ShiftOp {
    Field field;
    int n = 0;
    std::function<std::vector<Scalar>(int st, const std::vector<Scalar>&)> apply;
};

ShiftOp explicit_op(const Presentation& p) {
    ShiftOp op;
    op.field = p.field();
    op.n = p.dim();
    op.apply = [&p](int st, const std::vector<Scalar>& v) {
        return matvec(p.shift_matrix(kShiftOrder[st][0], kShiftOrder[st][1]), v);
    };
    return op;
}

// Pair space of p x q: vector v indexed (i, j) -> i * dim(q) + j. The image
// under rho(s,t) is sum_u A(s,u) V B(u,t)^t with V the dim(p) x dim(q)
// reshape of v.
ShiftOp product_op(const Presentation& p, const Presentation& q) {
    ShiftOp op;
    op.field = p.field();
    const int a = p.dim(), b = q.dim();
    op.n = a * b;
    const Field f = p.field();
    op.apply = [&p, &q, a, b, f](int st, const std::vector<Scalar>& v) {
        int s = kShiftOrder[st][0], t = kShiftOrder[st][1];
        std::vector<Scalar> out(static_cast<std::size_t>(a) * b, Scalar::zero(f));
        for (int u = 0; u < 2; ++u) {
            const DenseMatrix& A = p.shift_matrix(s, u);
            const DenseMatrix& B = q.shift_matrix(u, t);
            // tmp = A . V  (a x b)
            std::vector<Scalar> tmp(static_cast<std::size_t>(a) * b, Scalar::zero(f));
            for (int i = 0; i < a; ++i)
                for (int k = 0; k < a; ++k) {
                    const Scalar& c = A.at(k, i);
                    if (c.is_zero()) continue;
                    for (int j = 0; j < b; ++j) {
                        const Scalar& x = v[static_cast<std::size_t>(i) * b + j];
                        if (x.is_zero()) continue;
                        tmp[static_cast<std::size_t>(k) * b + j] =
                            tmp[static_cast<std::size_t>(k) * b + j] + c * x;
                    }
                }
            // out += tmp . B^t
            for (int j = 0; j < b; ++j)
                for (int l = 0; l < b; ++l) {
                    const Scalar& c = B.at(l, j);
                    if (c.is_zero()) continue;
                    for (int k = 0; k < a; ++k) {
                        const Scalar& x = tmp[static_cast<std::size_t>(k) * b + j];
                        if (x.is_zero()) continue;
                        out[static_cast<std::size_t>(k) * b + l] =
                            out[static_cast<std::size_t>(k) * b + l] + c * x;
                    }
                }
        }
        return out;
    };
    return op;
}

struct Closure {
    SpanBasis basis;
    int depth = 0;                          // BFS rounds until stabilization
    std::vector<std::vector<int>> words;    // generating shift word per basis vector
};

Closure forward_closure(const ShiftOp& op, const std::vector<Scalar>& select) {
    Closure c{SpanBasis(op.field, select.size()), 0, {}};
    if (!c.basis.try_add(select)) return c;
    c.words.push_back({});
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        ++c.depth;
        std::vector<int> next;
        for (int idx : frontier) {
            std::vector<Scalar> v = c.basis.original(idx);
            for (int st = 0; st < 4; ++st) {
                std::vector<Scalar> w = op.apply(st, v);
                if (c.basis.try_add(w)) {
                    auto word = c.words[idx];
                    word.push_back(st);
                    c.words.push_back(word);
                    next.push_back(c.basis.dim() - 1);
                }
            }
        }
        frontier = std::move(next);
    }
    return c;
}

// Presentation on the closure basis of `select`; the element itself is
// state 1. init_vec gives pi_0 of the ambient coordinates.
Presentation presentation_on_closure(const ShiftOp& op, const std::vector<Scalar>& init_vec,
                                     const Closure& c) {
    const Field f = op.field;
    int d = c.basis.dim();
    if (d == 0) return Presentation::zero(f);
    std::array<DenseMatrix, 4> sh{DenseMatrix(f, d, d), DenseMatrix(f, d, d),
                                  DenseMatrix(f, d, d), DenseMatrix(f, d, d)};
    for (int st = 0; st < 4; ++st)
        for (int j = 0; j < d; ++j) {
            std::vector<Scalar> img = op.apply(st, c.basis.original(j));
            auto cs = c.basis.coords(img);
            // the orbit span is recursively closed, so coords always exist
            for (int k = 0; k < d; ++k) sh[st].at(k, j) = (*cs)[k];
        }
    std::vector<Scalar> init(d, Scalar::zero(f));
    for (int j = 0; j < d; ++j) init[j] = dot(f, init_vec, c.basis.original(j));
    std::vector<Scalar> sel(d, Scalar::zero(f));
    sel[0] = Scalar::one(f);
    return Presentation(f, d, std::move(init), std::move(sh), std::move(sel));
}

// Kernel filtration of the state span, as a span of functionals: R_0 = <pi_0>,
// R_{l+1} = R_l + R_l . shift. Stabilization dim gives the saturation level;
// the common kernel of the final functionals is K_{<=N}.
struct Filtration {
    int saturation = 0;
    std::vector<std::vector<Scalar>> functionals;  // spanning rows, reduced
};

Filtration kernel_filtration(const Presentation& p) {
    const Field f = p.field();
    const int d = p.dim();
    SpanBasis rows(f, d);
    std::vector<std::vector<Scalar>> current;
    if (rows.try_add(p.init())) current.push_back(p.init());
    int level = 0;
    while (true) {
        std::vector<std::vector<Scalar>> fresh;
        for (const auto& r : current) {
            for (int st = 0; st < 4; ++st) {
                const DenseMatrix& m = p.shift_matrix(kShiftOrder[st][0], kShiftOrder[st][1]);
                // functional v -> r . (M v) = (r^t M) . v
                std::vector<Scalar> rr(d, Scalar::zero(f));
                for (int j = 0; j < d; ++j) {
                    Scalar acc = Scalar::zero(f);
                    for (int k = 0; k < d; ++k)
                        if (!r[k].is_zero() && !m.at(k, j).is_zero())
                            acc = acc + r[k] * m.at(k, j);
                    rr[j] = acc;
                }
                if (rows.try_add(rr)) fresh.push_back(std::move(rr));
            }
        }
        if (fresh.empty()) break;
        current = std::move(fresh);
        ++level;
    }
    Filtration out;
    out.saturation = level;
    for (int i = 0; i < rows.dim(); ++i) out.functionals.push_back(rows.original(i));
    return out;
}

// Nullspace basis of the row span (functionals), reduced row echelon style.
std::vector<std::vector<Scalar>> nullspace(const Field& f, int d,
                                           std::vector<std::vector<Scalar>> rows) {
    int m = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < d && r < m; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (!rows[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        Scalar inv = rows[r][c].inverse();
        for (int j = 0; j < d; ++j) rows[r][j] = rows[r][j] * inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar fct = rows[i][c];
            for (int j = 0; j < d; ++j) rows[i][j] = rows[i][j] - fct * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(d, Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

// ---------------------------------------------------------------------------

Presentation::Presentation(Field f, int dim, std::vector<Scalar> init,
                           std::array<DenseMatrix, 4> shift, std::vector<Scalar> select,
                           std::vector<std::string> state_names)
    : field_(f), dim_(dim), init_(std::move(init)), shift_(std::move(shift)),
      select_(std::move(select)), names_(std::move(state_names)) {
    if (static_cast<int>(init_.size()) != dim_ || static_cast<int>(select_.size()) != dim_)
        throw Error("presentation: init/select length must equal dim");
    for (const auto& m : shift_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw Error("presentation: shift matrices must be dim x dim");
    if (!names_.empty() && static_cast<int>(names_.size()) != dim_)
        throw Error("presentation: state_names length must equal dim");
}

Presentation Presentation::zero(const Field& f) {
    std::array<DenseMatrix, 4> sh{DenseMatrix(f, 0, 0), DenseMatrix(f, 0, 0),
                                  DenseMatrix(f, 0, 0), DenseMatrix(f, 0, 0)};
    return Presentation(f, 0, {}, std::move(sh), {});
}

Presentation Presentation::identity(const Field& f) {
    DenseMatrix one(f, 1, 1), nil(f, 1, 1);
    one.at(0, 0) = Scalar::one(f);
    std::array<DenseMatrix, 4> sh{one, nil, nil, one};
    return Presentation(f, 1, {Scalar::one(f)}, std::move(sh), {Scalar::one(f)}, {"Id"});
}

Presentation Presentation::with_select(int state) const {
    std::vector<Scalar> sel(dim_, Scalar::zero(field_));
    sel.at(state) = Scalar::one(field_);
    return with_select(std::move(sel));
}

Presentation Presentation::with_select(std::vector<Scalar> sel) const {
    return Presentation(field_, dim_, init_, shift_, std::move(sel), names_);
}

void TruncatedSequence::validate() const {
    for (std::size_t k = 0; k < levels.size(); ++k) {
        int n = 1 << k;
        if (levels[k].rows() != n || levels[k].cols() != n)
            throw Error("truncated sequence: level " + std::to_string(k) +
                        " must be " + std::to_string(n) + "x" + std::to_string(n));
        if (levels[k].field() != levels[0].field()) throw FieldMismatchError();
    }
}

DenseMatrix materialize(const Presentation& p, int level) {
    const Field f = p.field();
    if (p.dim() == 0) return DenseMatrix(f, 1 << level, 1 << level);
    std::vector<DenseMatrix> cur;
    cur.reserve(p.dim());
    for (int j = 0; j < p.dim(); ++j) {
        DenseMatrix m(f, 1, 1);
        m.at(0, 0) = p.init()[j];
        cur.push_back(std::move(m));
    }
    for (int l = 0; l < level; ++l) {
        int sz = 1 << l;
        std::vector<DenseMatrix> next;
        next.reserve(p.dim());
        for (int j = 0; j < p.dim(); ++j) {
            DenseMatrix m(f, 2 * sz, 2 * sz);
            for (int st = 0; st < 4; ++st) {
                int s = kShiftOrder[st][0], t = kShiftOrder[st][1];
                const DenseMatrix& sh = p.shift_matrix(s, t);
                for (int k = 0; k < p.dim(); ++k) {
                    const Scalar& c = sh.at(k, j);
                    if (c.is_zero()) continue;
                    for (int r = 0; r < sz; ++r)
                        for (int q = 0; q < sz; ++q) {
                            const Scalar& x = cur[k].at(r, q);
                            if (x.is_zero()) continue;
                            Scalar& dst = m.at(s * sz + r, t * sz + q);
                            dst = dst + c * x;
                        }
                }
            }
            next.push_back(std::move(m));
        }
        cur = std::move(next);
    }
    int sz = 1 << level;
    DenseMatrix out(f, sz, sz);
    for (int j = 0; j < p.dim(); ++j) {
        const Scalar& c = p.select()[j];
        if (c.is_zero()) continue;
        for (int r = 0; r < sz; ++r)
            for (int q = 0; q < sz; ++q) {
                const Scalar& x = cur[j].at(r, q);
                if (x.is_zero()) continue;
                out.at(r, q) = out.at(r, q) + c * x;
            }
    }
    return out;
}

Scalar entry(const Presentation& p, int level, std::uint64_t i, std::uint64_t j) {
    std::uint64_t n = std::uint64_t{1} << level;
    if (i >= n || j >= n) throw IndexOutOfRangeError("entry index exceeds 2^level");
    if (p.dim() == 0) return Scalar::zero(p.field());
    std::vector<Scalar> v = p.select();
    for (int b = level - 1; b >= 0; --b) {
        int s = static_cast<int>((i >> b) & 1);
        int t = static_cast<int>((j >> b) & 1);
        v = matvec(p.shift_matrix(s, t), v);
    }
    return dot(p.field(), p.init(), v);
}

Presentation shift(const Presentation& p, int s, int t) {
    if (p.dim() == 0) return p;
    return p.with_select(matvec(p.shift_matrix(s, t), p.select()));
}

Presentation scale(const Presentation& p, const Scalar& lambda) {
    if (lambda.field() != p.field()) throw FieldMismatchError();
    std::vector<Scalar> init = p.init();
    for (auto& x : init) x = x * lambda;
    return Presentation(p.field(), p.dim(), std::move(init),
                        {p.shift_matrix(0, 0), p.shift_matrix(0, 1), p.shift_matrix(1, 0),
                         p.shift_matrix(1, 1)},
                        p.select(), p.state_names());
}

Presentation add(const Presentation& p, const Presentation& q) {
    if (p.field() != q.field()) throw FieldMismatchError();
    const Field f = p.field();
    int a = p.dim(), b = q.dim();
    int d = a + b;
    std::array<DenseMatrix, 4> sh{DenseMatrix(f, d, d), DenseMatrix(f, d, d),
                                  DenseMatrix(f, d, d), DenseMatrix(f, d, d)};
    for (int st = 0; st < 4; ++st) {
        int s = kShiftOrder[st][0], t = kShiftOrder[st][1];
        for (int k = 0; k < a; ++k)
            for (int j = 0; j < a; ++j) sh[st].at(k, j) = p.shift_matrix(s, t).at(k, j);
        for (int k = 0; k < b; ++k)
            for (int j = 0; j < b; ++j)
                sh[st].at(a + k, a + j) = q.shift_matrix(s, t).at(k, j);
    }
    std::vector<Scalar> init = p.init();
    init.insert(init.end(), q.init().begin(), q.init().end());
    std::vector<Scalar> sel = p.select();
    sel.insert(sel.end(), q.select().begin(), q.select().end());
    std::vector<std::string> names;
    if (!p.state_names().empty() && !q.state_names().empty()) {
        names = p.state_names();
        names.insert(names.end(), q.state_names().begin(), q.state_names().end());
    }
    return Presentation(f, d, std::move(init), std::move(sh), std::move(sel),
                        std::move(names));
}

Presentation mul(const Presentation& p, const Presentation& q) {
    if (p.field() != q.field()) throw FieldMismatchError();
    const Field f = p.field();
    if (p.dim() == 0 || q.dim() == 0) return Presentation::zero(f);
    int a = p.dim(), b = q.dim();
    ShiftOp op = product_op(p, q);
    std::vector<Scalar> sel(static_cast<std::size_t>(a) * b, Scalar::zero(f));
    std::vector<Scalar> init(static_cast<std::size_t>(a) * b, Scalar::zero(f));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            sel[static_cast<std::size_t>(i) * b + j] = p.select()[i] * q.select()[j];
            init[static_cast<std::size_t>(i) * b + j] = p.init()[i] * q.init()[j];
        }
    Closure c = forward_closure(op, sel);
    return presentation_on_closure(op, init, c);
}

Presentation transpose(const Presentation& p) {
    if (p.dim() == 0) return p;
    return Presentation(p.field(), p.dim(), p.init(),
                        {p.shift_matrix(0, 0), p.shift_matrix(1, 0), p.shift_matrix(0, 1),
                         p.shift_matrix(1, 1)},
                        p.select(), p.state_names());
}

Presentation minimize(const Presentation& p) {
    const Field f = p.field();
    if (p.dim() == 0) return p;
    // forward: basis of the orbit of select
    ShiftOp op = explicit_op(p);
    Closure c = forward_closure(op, p.select());
    Presentation fwd = presentation_on_closure(op, p.init(), c);
    if (fwd.dim() == 0) return fwd;
    // backward: quotient by the stabilized kernel filtration
    Filtration fil = kernel_filtration(fwd);
    auto kernel = nullspace(f, fwd.dim(), fil.functionals);
    // kernel here is the nullspace of the row span, i.e. K_{<=N}; quotient out
    if (kernel.empty()) return fwd;
    int d = fwd.dim();
    SpanBasis kb(f, d);
    for (const auto& v : kernel) kb.try_add(v);
    // complement coordinates: those not reachable as pivots of the kernel rows
    // project by reducing against kernel rows and reading surviving coords
    std::vector<std::vector<Scalar>> krows;
    for (int i = 0; i < kb.dim(); ++i) krows.push_back(kb.original(i));
    // row echelon of kernel rows
    std::vector<int> kpiv;
    {
        int m = static_cast<int>(krows.size());
        int r = 0;
        for (int cidx = 0; cidx < d && r < m; ++cidx) {
            int pr = -1;
            for (int i = r; i < m; ++i)
                if (!krows[i][cidx].is_zero()) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(krows[r], krows[pr]);
            Scalar inv = krows[r][cidx].inverse();
            for (int j = 0; j < d; ++j) krows[r][j] = krows[r][j] * inv;
            for (int i = 0; i < m; ++i) {
                if (i == r || krows[i][cidx].is_zero()) continue;
                Scalar fct = krows[i][cidx];
                for (int j = 0; j < d; ++j) krows[i][j] = krows[i][j] - fct * krows[r][j];
            }
            kpiv.push_back(cidx);
            ++r;
        }
    }
    std::vector<bool> is_kpiv(d, false);
    for (int cdx : kpiv) is_kpiv[cdx] = true;
    std::vector<int> comp;
    for (int cdx = 0; cdx < d; ++cdx)
        if (!is_kpiv[cdx]) comp.push_back(cdx);
    auto project = [&](const std::vector<Scalar>& vin) {
        std::vector<Scalar> v = vin;
        for (std::size_t r = 0; r < kpiv.size(); ++r) {
            const Scalar& lead = v[kpiv[r]];
            if (lead.is_zero()) continue;
            Scalar fct = lead;  // krows are normalized
            for (int j = 0; j < d; ++j) v[j] = v[j] - fct * krows[r][j];
        }
        std::vector<Scalar> out;
        out.reserve(comp.size());
        for (int cdx : comp) out.push_back(v[cdx]);
        return out;
    };
    int m = static_cast<int>(comp.size());
    std::array<DenseMatrix, 4> sh{DenseMatrix(f, m, m), DenseMatrix(f, m, m),
                                  DenseMatrix(f, m, m), DenseMatrix(f, m, m)};
    for (int st = 0; st < 4; ++st) {
        const DenseMatrix& big = fwd.shift_matrix(kShiftOrder[st][0], kShiftOrder[st][1]);
        for (int j = 0; j < m; ++j) {
            std::vector<Scalar> e(d, Scalar::zero(f));
            e[comp[j]] = Scalar::one(f);
            auto img = project(matvec(big, e));
            for (int k = 0; k < m; ++k) sh[st].at(k, j) = img[k];
        }
    }
    // pi_0 vanishes on the kernel, so initial values factor through the quotient
    std::vector<Scalar> init;
    init.reserve(m);
    for (int j = 0; j < m; ++j) init.push_back(fwd.init()[comp[j]]);
    std::vector<Scalar> sel = project(fwd.select());
    return Presentation(f, m, std::move(init), std::move(sh), std::move(sel));
}

ZeroCertificate is_zero(const Presentation& p) {
    ZeroCertificate cert;
    if (p.dim() == 0) {
        cert.zero = true;
        return cert;
    }
    const Field f = p.field();
    ShiftOp op = explicit_op(p);
    Closure c = forward_closure(op, p.select());
    cert.closure_dim = c.basis.dim();
    cert.depth = c.depth;
    for (int i = 0; i < c.basis.dim(); ++i) {
        Scalar v = dot(f, p.init(), c.basis.original(i));
        if (!v.is_zero()) {
            cert.zero = false;
            const auto& word = c.words[i];
            cert.witness_level = static_cast<int>(word.size());
            std::uint64_t row = 0, col = 0;
            for (int st : word) {
                row = (row << 1) | static_cast<unsigned>(kShiftOrder[st][0]);
                col = (col << 1) | static_cast<unsigned>(kShiftOrder[st][1]);
            }
            cert.witness_row = row;
            cert.witness_col = col;
            return cert;
        }
    }
    cert.zero = true;
    return cert;
}

bool equal(const Presentation& p, const Presentation& q) {
    if (p.field() != q.field()) throw FieldMismatchError();
    return is_zero(add(p, scale(q, -Scalar::one(q.field())))).zero;
}

int saturation_level(const Presentation& p) {
    if (p.dim() == 0) return 0;
    return kernel_filtration(p).saturation;
}

DenseMatrix left_shift_window(const DenseMatrix& w, int s, int t) {
    if (w.rows() != w.cols()) throw IndexOutOfRangeError("left shift needs a square window");
    if (w.rows() % 2 != 0) throw OddSizeError();
    int h = w.rows() / 2;
    DenseMatrix out(w.field(), h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) out.at(i, j) = w.at(2 * i + s, 2 * j + t);
    return out;
}

bool is_diagonal(const Presentation& p, int depth) {
    for (int l = 0; l <= depth; ++l)
        if (!materialize(p, l).is_diagonal()) return false;
    return true;
}

Scalar diag_entry(const Presentation& p, std::uint64_t k) {
    if (!is_diagonal(p)) throw NotDiagonalError();
    if (p.dim() == 0) return Scalar::zero(p.field());
    std::vector<Scalar> v = p.select();
    int bits = 0;
    while ((std::uint64_t{1} << bits) <= k) ++bits;
    for (int b = bits - 1; b >= 0; --b) {
        int bit = static_cast<int>((k >> b) & 1);
        v = matvec(p.shift_matrix(bit, bit), v);
    }
    return dot(p.field(), p.init(), v);
}

namespace {

void diag_dfs(const Presentation& p, int depth, std::uint64_t base, std::uint64_t count,
              const std::vector<Scalar>& v,
              const std::function<void(std::uint64_t, const Scalar&)>& fn) {
    if (base >= count) return;
    if (depth == 0) {
        fn(base, dot(p.field(), p.init(), v));
        return;
    }
    for (int bit = 0; bit < 2; ++bit) {
        std::uint64_t child = base | (static_cast<std::uint64_t>(bit) << (depth - 1));
        if (child >= count) break;
        diag_dfs(p, depth - 1, child, count, matvec(p.shift_matrix(bit, bit), v), fn);
    }
}

}  // namespace

void for_each_diag_entry(const Presentation& p, std::uint64_t count,
                         const std::function<void(std::uint64_t, const Scalar&)>& fn,
                         bool check) {
    if (count == 0) return;
    if (check && !is_diagonal(p)) throw NotDiagonalError();
    if (p.dim() == 0) {
        Scalar z = Scalar::zero(p.field());
        for (std::uint64_t k = 0; k < count; ++k) fn(k, z);
        return;
    }
    int depth = 0;
    while ((std::uint64_t{1} << depth) < count) ++depth;
    diag_dfs(p, depth, 0, count, p.select(), fn);
}

// --- tensor ----------------------------------------------------------------

DenseMatrix TensorElement::materialize(int level) const {
    if (level < factor_level)
        throw IndexOutOfRangeError("tensor element undefined below the factor level");
    return recmat::materialize(base, level - factor_level).kron(factor);
}

TensorElement tensor_const(const Presentation& p, const DenseMatrix& x) {
    if (x.rows() != x.cols()) throw NonDyadicSizeError();
    int n = x.rows(), k = 0;
    while ((1 << k) < n) ++k;
    if ((1 << k) != n) throw NonDyadicSizeError();
    if (x.field() != p.field()) throw FieldMismatchError();
    return TensorElement{p, x, k};
}

TensorElement mul(const TensorElement& a, const TensorElement& b) {
    if (a.factor_level != b.factor_level) throw NonDyadicSizeError();
    return TensorElement{mul(a.base, b.base), a.factor.mul(b.factor), a.factor_level};
}

TensorElement add(const TensorElement& a, const TensorElement& b) {
    if (a.factor_level != b.factor_level || a.factor != b.factor)
        throw Error("tensor add requires identical constant factors");
    return TensorElement{add(a.base, b.base), a.factor, a.factor_level};
}

}  // namespace recmat
