#include "recmat/solve.hpp"

#include <map>
#include <memory>

#include "recmat/detail/linear_span.hpp"

namespace recmat::solve {

namespace {

using detail::SpanBasis;

constexpr int kShiftOrder[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

DenseMatrix quarter(const DenseMatrix& m, int s, int t) {
    int h = m.rows() / 2;
    return m.block(s * h, t * h, h, h);
}

class Engine {
  public:
    Engine(const TruncationProvider& provider, Field field, const InferenceCaps& caps)
        : provider_(provider), field_(field), caps_(caps) {}

    InferredPresentation run(int start_level) {
        int n = start_level, m = 1;
        while (true) {
            if (n + 1 > caps_.max_level) throw CapExceededError("truncation level");
            Span s_nm = span(n, m);
            if (s_nm.basis.dim() > caps_.max_dim) throw CapExceededError("dimension");
            if (span(n + 1, m).basis.dim() > s_nm.basis.dim()) {
                ++n;
                continue;
            }
            if (m + 1 > caps_.max_word_len) throw CapExceededError("word length");
            if (span(n, m + 1).basis.dim() > s_nm.basis.dim()) {
                ++m;
                continue;
            }
            auto guess = read_off(s_nm, n);
            if (guess && validate(*guess, n + m + 2))
                return InferredPresentation{std::move(*guess), n, m};
            ++n;
        }
    }

  private:
    struct Span {
        SpanBasis basis;
        std::vector<std::vector<int>> words;  // shift word per basis vector
    };

    const DenseMatrix& level(int l) {
        if (l > caps_.max_level) throw CapExceededError("truncation level");
        auto it = cache_.find(l);
        if (it == cache_.end()) {
            DenseMatrix w = provider_(l);
            if (w.rows() != (1 << l) || w.cols() != (1 << l))
                throw Error("provider returned a window of the wrong size");
            it = cache_.emplace(l, std::move(w)).first;
        }
        return it->second;
    }

    // pi_{<=n} of the word-shifted truncation, flattened levels 0..n.
    // Words act leftmost-last: extending word w by letter st yields the
    // element rho(st)(w . T).
    std::vector<Scalar> flat_projection(const std::vector<int>& word, int n) {
        std::vector<Scalar> out;
        for (int l = 0; l <= n; ++l) {
            DenseMatrix w = level(l + static_cast<int>(word.size()));
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                w = quarter(w, kShiftOrder[*it][0], kShiftOrder[*it][1]);
            for (int i = 0; i < w.rows(); ++i)
                for (int j = 0; j < w.cols(); ++j) out.push_back(w.at(i, j));
        }
        return out;
    }

    // Breadth-first span of pi_{<=n}(X . T) over words |X| <= m, pruning
    // extensions of words that already fell inside the span.
    Span span(int n, int m) {
        std::size_t veclen = 0;
        for (int l = 0; l <= n; ++l) veclen += std::size_t{1} << (2 * l);
        Span sp{SpanBasis(field_, veclen), {}};
        std::vector<int> root;
        if (!sp.basis.try_add(flat_projection(root, n))) return sp;
        sp.words.push_back(root);
        std::vector<int> frontier{0};
        int len = 0;
        while (!frontier.empty() && len < m) {
            ++len;
            std::vector<int> next;
            for (int idx : frontier)
                for (int st = 0; st < 4; ++st) {
                    std::vector<int> w = sp.words[idx];
                    w.push_back(st);
                    if (sp.basis.try_add(flat_projection(w, n))) {
                        sp.words.push_back(w);
                        next.push_back(static_cast<int>(sp.words.size()) - 1);
                    }
                }
            frontier = std::move(next);
        }
        return sp;
    }

    // Shift maps from the inclusions rho(s,t) V(N, M+1) c V(N, M), read in the
    // stabilized basis; nullopt when some image falls outside the span (the
    // guess is then inconsistent and N must grow).
    std::optional<Presentation> read_off(Span& sp, int n) {
        int d = sp.basis.dim();
        if (d == 0) return Presentation::zero(field_);
        std::array<DenseMatrix, 4> sh{DenseMatrix(field_, d, d), DenseMatrix(field_, d, d),
                                      DenseMatrix(field_, d, d), DenseMatrix(field_, d, d)};
        for (int st = 0; st < 4; ++st)
            for (int j = 0; j < d; ++j) {
                std::vector<int> w = sp.words[j];
                w.push_back(st);
                auto cs = sp.basis.coords(flat_projection(w, n));
                if (!cs) return std::nullopt;
                for (int k = 0; k < d; ++k) sh[st].at(k, j) = (*cs)[k];
            }
        std::vector<Scalar> init;
        init.reserve(d);
        for (int j = 0; j < d; ++j) {
            DenseMatrix w0 = level(static_cast<int>(sp.words[j].size()));
            for (auto it = sp.words[j].rbegin(); it != sp.words[j].rend(); ++it)
                w0 = quarter(w0, kShiftOrder[*it][0], kShiftOrder[*it][1]);
            init.push_back(w0.at(0, 0));
        }
        std::vector<Scalar> sel(d, Scalar::zero(field_));
        sel[0] = Scalar::one(field_);
        return Presentation(field_, d, std::move(init), std::move(sh), std::move(sel));
    }

    // Compare materializations with the data, one level past everything that
    // informed the guess; tolerate the provider running out above that.
    bool validate(const Presentation& p, int through_level) {
        for (int l = 0; l <= through_level; ++l) {
            const DenseMatrix* data = nullptr;
            try {
                data = &level(l);
            } catch (const InsufficientDataError&) {
                break;
            } catch (const CapExceededError&) {
                break;
            }
            if (materialize(p, l) != *data) return false;
        }
        return true;
    }

    const TruncationProvider& provider_;
    Field field_;
    InferenceCaps caps_;
    std::map<int, DenseMatrix> cache_;
};

}  // namespace

InferredPresentation infer(const TruncationProvider& provider, const Field& field,
                           const InferenceCaps& caps, int start_level) {
    Engine e(provider, field, caps);
    return e.run(start_level);
}

Presentation infer_from_truncation(const TruncatedSequence& t, const InferenceCaps& caps) {
    t.validate();
    if (t.levels.size() < 3)
        throw InsufficientDataError(static_cast<int>(t.levels.size()));
    TruncationProvider provider = [&t](int level) {
        if (level >= static_cast<int>(t.levels.size())) throw InsufficientDataError(level);
        return t.levels[level];
    };
    return infer(provider, t.levels[0].field(), caps).pres;
}

Presentation infer_from_oracle(
    const std::function<Scalar(std::uint64_t, std::uint64_t)>& oracle, int depth,
    const Field& field, const InferenceCaps& caps) {
    if (depth < 3) throw OutOfRangeError("infer_from_oracle requires depth >= 3");
    TruncationProvider provider = [&oracle, &field](int level) {
        int n = 1 << level;
        DenseMatrix w(field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                w.at(i, j) = oracle(static_cast<std::uint64_t>(i),
                                    static_cast<std::uint64_t>(j));
        return w;
    };
    Presentation p = infer(provider, field, caps).pres;
    DenseMatrix got = materialize(p, depth);
    int n = 1 << depth;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (got.at(i, j) != oracle(i, j))
                throw ValidationMismatchError(depth, i, j);
    return p;
}

InvertResult invert(const Presentation& a, const InferenceCaps& caps) {
    const Field f = a.field();
    TruncationProvider provider = [&a](int level) {
        auto inv = inverse(materialize(a, level));
        if (!inv) throw SingularAtLevelError(level);
        return *inv;
    };
    Presentation id = Presentation::identity(f);
    int start = 1;
    while (start <= caps.max_level) {
        InferredPresentation guess = infer(provider, f, caps, start);
        ZeroCertificate right = is_zero(add(mul(a, guess.pres), scale(id, -Scalar::one(f))));
        if (right.zero) {
            ZeroCertificate left =
                is_zero(add(mul(guess.pres, a), scale(id, -Scalar::one(f))));
            if (left.zero)
                return InvertResult{minimize(guess.pres), left, right};
        }
        start = guess.stabilized_level + 1;
    }
    throw CapExceededError("no certified inverse within caps");
}

LuResult lu_decompose(const Presentation& a, bool symmetric, const InferenceCaps& caps) {
    const Field f = a.field();
    if (!equal(shift(a, 0, 0), a)) throw NotConvergentError();
    // one dense factorization per level, shared between the two providers
    auto factors = std::make_shared<std::map<int, std::pair<DenseMatrix, DenseMatrix>>>();
    auto factor_level = [&a, factors, symmetric](int level) -> const std::pair<DenseMatrix, DenseMatrix>& {
        auto it = factors->find(level);
        if (it != factors->end()) return it->second;
        DenseMatrix w = materialize(a, level);
        DenseMatrix lower(w.field(), 0, 0), rest(w.field(), 0, 0);
        if (symmetric) {
            LdltFactors ld = symmetric_ldlt(w);
            int n = w.rows();
            DenseMatrix d(w.field(), n, n);
            for (int i = 0; i < n; ++i) d.at(i, i) = ld.diag[i];
            lower = std::move(ld.lower);
            rest = std::move(d);
        } else {
            auto [l, u] = lu_unipotent(w);
            lower = std::move(l);
            rest = std::move(u);
        }
        return factors->emplace(level, std::make_pair(std::move(lower), std::move(rest)))
            .first->second;
    };
    TruncationProvider lower_provider = [factor_level](int level) {
        return factor_level(level).first;
    };
    TruncationProvider rest_provider = [factor_level](int level) {
        return factor_level(level).second;
    };
    int start = 1;
    while (start <= caps.max_level) {
        InferredPresentation lo = infer(lower_provider, f, caps, start);
        InferredPresentation re = infer(rest_provider, f, caps, start);
        Presentation rebuilt = symmetric
                                   ? mul(lo.pres, mul(re.pres, transpose(lo.pres)))
                                   : mul(lo.pres, re.pres);
        ZeroCertificate cert = is_zero(add(a, scale(rebuilt, -Scalar::one(f))));
        if (cert.zero) return LuResult{lo.pres, re.pres, cert, symmetric};
        start = std::max(lo.stabilized_level, re.stabilized_level) + 1;
    }
    throw CapExceededError("no certified factorization within caps");
}

}  // namespace recmat::solve
