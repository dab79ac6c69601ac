#include "recmat/dense_matrix.hpp"

namespace recmat {

DenseMatrix DenseMatrix::identity(const Field& f, int n) {
    DenseMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

DenseMatrix DenseMatrix::mul(const DenseMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
    DenseMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

DenseMatrix DenseMatrix::add(const DenseMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
    DenseMatrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

DenseMatrix DenseMatrix::sub(const DenseMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
    DenseMatrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

DenseMatrix DenseMatrix::scaled(const Scalar& c) const {
    DenseMatrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
    DenseMatrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l) {
                    const Scalar& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                }
        }
    return r;
}

DenseMatrix DenseMatrix::window(int n) const { return block(0, 0, n, n); }

DenseMatrix DenseMatrix::block(int i0, int j0, int h, int w) const {
    if (i0 + h > rows_ || j0 + w > cols_)
        throw IndexOutOfRangeError("block exceeds matrix bounds");
    DenseMatrix r(field_, h, w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

bool DenseMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool DenseMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination (Bareiss). After step k the diagonal entry at
// (k,k) equals the determinant of the (k+1)-st leading principal minor, so
// one pass yields all of them. Works over any integral domain with exact
// division; three instantiations below.

namespace {

struct MpzRing {
    using Elem = mpz_class;
    static bool is_zero(const Elem& x) { return sgn(x) == 0; }
    static Elem one() { return mpz_class(1); }
    static void fused(Elem& out, const Elem& a, const Elem& d, const Elem& b,
                      const Elem& c, const Elem& prev) {
        // out = (a*d - b*c) / prev, division exact
        mpz_class t = a * d - b * c;
        mpz_divexact(out.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    }
};

struct GaussIntRing {
    struct Elem {
        mpz_class re, im;
    };
    static bool is_zero(const Elem& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
    static Elem one() { return Elem{1, 0}; }
    static void fused(Elem& out, const Elem& a, const Elem& d, const Elem& b,
                      const Elem& c, const Elem& prev) {
        mpz_class tre = a.re * d.re - a.im * d.im - (b.re * c.re - b.im * c.im);
        mpz_class tim = a.re * d.im + a.im * d.re - (b.re * c.im + b.im * c.re);
        // divide by prev in Z[i]: multiply by conjugate, divide by norm
        mpz_class norm = prev.re * prev.re + prev.im * prev.im;
        mpz_class rre = tre * prev.re + tim * prev.im;
        mpz_class rim = tim * prev.re - tre * prev.im;
        mpz_divexact(out.re.get_mpz_t(), rre.get_mpz_t(), norm.get_mpz_t());
        mpz_divexact(out.im.get_mpz_t(), rim.get_mpz_t(), norm.get_mpz_t());
    }
};

struct ScalarRing {
    using Elem = Scalar;
    static bool is_zero(const Elem& x) { return x.is_zero(); }
    static void fused(Elem& out, const Elem& a, const Elem& d, const Elem& b,
                      const Elem& c, const Elem& prev) {
        out = (a * d - b * c) / prev;
    }
};

template <class Ring>
std::vector<typename Ring::Elem> bareiss_minors(std::vector<typename Ring::Elem> a,
                                                int n) {
    using Elem = typename Ring::Elem;
    std::vector<Elem> minors;
    minors.reserve(n);
    auto at = [&](int i, int j) -> Elem& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k < n; ++k) {
        if (k > 0 && Ring::is_zero(at(k - 1, k - 1))) throw SingularMinorAtError(k - 1);
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Elem out;
                if (k == 0) {
                    Ring::fused(out, at(i, j), at(k, k), at(i, k), at(k, j),
                                Ring::one());
                } else {
                    Ring::fused(out, at(i, j), at(k, k), at(i, k), at(k, j),
                                at(k - 1, k - 1));
                }
                at(i, j) = out;
            }
        minors.push_back(at(k, k));
    }
    return minors;
}

// ScalarRing needs one() with a field; specialize the loop instead.
std::vector<Scalar> bareiss_minors_scalar(const DenseMatrix& m) {
    int n = m.rows();
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, Scalar::zero(m.field()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> Scalar& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::vector<Scalar> minors;
    minors.reserve(n);
    Scalar prev = Scalar::one(m.field());
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            if (at(k - 1, k - 1).is_zero()) throw SingularMinorAtError(k - 1);
            prev = at(k - 1, k - 1);
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        minors.push_back(at(k, k));
    }
    return minors;
}

bool all_integral(const DenseMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_integral()) return false;
    return true;
}

}  // namespace

std::vector<Scalar> leading_minors(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw IndexOutOfRangeError("leading_minors needs a square matrix");
    int n = m.rows();
    if (n == 0) return {};
    const Field f = m.field();
    if (f.kind == FieldKind::Rational && all_integral(m)) {
        std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).rat().get_num();
        auto mz = bareiss_minors<MpzRing>(std::move(a), n);
        std::vector<Scalar> out;
        out.reserve(n);
        for (auto& z : mz) out.push_back(Scalar::rational(mpq_class(z)));
        return out;
    }
    if (f.kind == FieldKind::Gaussian && all_integral(m)) {
        std::vector<GaussIntRing::Elem> a(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] =
                    GaussIntRing::Elem{m.at(i, j).re().get_num(), m.at(i, j).im().get_num()};
        auto mz = bareiss_minors<GaussIntRing>(std::move(a), n);
        std::vector<Scalar> out;
        out.reserve(n);
        for (auto& z : mz)
            out.push_back(Scalar::gaussian(mpq_class(z.re), mpq_class(z.im)));
        return out;
    }
    return bareiss_minors_scalar(m);
}

Scalar det(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw IndexOutOfRangeError("det needs a square matrix");
    int n = m.rows();
    const Field f = m.field();
    if (n == 0) return Scalar::one(f);
    // pivoted field-arithmetic elimination; robust default
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, Scalar::zero(f));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> Scalar& { return a[static_cast<std::size_t>(i) * n + j]; };
    Scalar d = Scalar::one(f);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!at(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar::zero(f);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
            d = -d;
        }
        d = d * at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (at(i, k).is_zero()) continue;
            Scalar fct = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) at(i, j) = at(i, j) - fct * at(k, j);
        }
    }
    return d;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw IndexOutOfRangeError("inverse needs a square matrix");
    int n = m.rows();
    const Field f = m.field();
    DenseMatrix a = m;
    DenseMatrix inv = DenseMatrix::identity(f, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(piv, j));
                std::swap(inv.at(c, j), inv.at(piv, j));
            }
        Scalar pv = a.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) = a.at(c, j) * pv;
            inv.at(c, j) = inv.at(c, j) * pv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            Scalar fct = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - fct * a.at(c, j);
                inv.at(r, j) = inv.at(r, j) - fct * inv.at(c, j);
            }
        }
    }
    return inv;
}

LdltFactors symmetric_ldlt(const DenseMatrix& m) {
    // L[i][j] = B[i][j] / d_j and D[j] = d_j / d_{j-1}, with B the Bareiss
    // table of bordered minors and d_j the leading minors.
    int n = m.rows();
    const Field f = m.field();
    if (f.kind == FieldKind::Prime) {
        // plain elimination; no growth to control in a finite field
        DenseMatrix a = m;
        LdltFactors r{DenseMatrix::identity(f, n), {}};
        for (int k = 0; k < n; ++k) {
            Scalar piv = a.at(k, k);
            if (piv.is_zero()) throw SingularMinorAtError(k);
            r.diag.push_back(piv);
            for (int i = k + 1; i < n; ++i) {
                Scalar fct = a.at(i, k) / piv;
                r.lower.at(i, k) = fct;
                if (fct.is_zero()) continue;
                for (int j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - fct * a.at(k, j);
            }
        }
        return r;
    }
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, Scalar::zero(f));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> Scalar& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::vector<Scalar> lead;  // d_0..d_{n-1}
    Scalar prev = Scalar::one(f);
    for (int k = 0; k < n; ++k) {
        if (k > 0) prev = at(k - 1, k - 1);
        if (at(k, k).is_zero()) throw SingularMinorAtError(k);
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        lead.push_back(at(k, k));
    }
    LdltFactors r{DenseMatrix::identity(f, n), {}};
    r.diag.reserve(n);
    for (int j = 0; j < n; ++j) {
        Scalar dj = lead[j];
        Scalar dprev = j == 0 ? Scalar::one(f) : lead[j - 1];
        if (dj.is_zero()) throw SingularMinorAtError(j);
        r.diag.push_back(dj / dprev);
        for (int i = j + 1; i < n; ++i)
            r.lower.at(i, j) = at(i, j) / dj;
    }
    return r;
}

std::pair<DenseMatrix, DenseMatrix> lu_unipotent(const DenseMatrix& m) {
    int n = m.rows();
    const Field f = m.field();
    DenseMatrix u = m;
    DenseMatrix l = DenseMatrix::identity(f, n);
    for (int k = 0; k < n; ++k) {
        Scalar piv = u.at(k, k);
        if (piv.is_zero()) throw SingularMinorAtError(k);
        for (int i = k + 1; i < n; ++i) {
            Scalar fct = u.at(i, k) / piv;
            l.at(i, k) = fct;
            if (fct.is_zero()) continue;
            for (int j = k; j < n; ++j) u.at(i, j) = u.at(i, j) - fct * u.at(k, j);
        }
    }
    return {l, u};
}

}  // namespace recmat
