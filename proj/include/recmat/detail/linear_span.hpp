#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "recmat/dense_matrix.hpp"

namespace recmat::detail {

inline Scalar dot(const Field& f, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v) {
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) acc = acc + u[i] * v[i];
    return acc;
}

inline std::vector<Scalar> matvec(const DenseMatrix& m, const std::vector<Scalar>& v) {
    const Field& f = m.field();
    std::vector<Scalar> out(m.rows(), Scalar::zero(f));
    for (int j = 0; j < m.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (int k = 0; k < m.rows(); ++k) {
            const Scalar& c = m.at(k, j);
            if (c.is_zero()) continue;
            out[k] = out[k] + c * v[j];
        }
    }
    return out;
}

/// Exact incremental row reduction with coordinate tracking: each reduced row
/// carries its expression in the stored original vectors, so membership tests
/// double as coordinate read-off. First-nonzero pivots keep every derived
/// basis deterministic regardless of numeric luck.
class SpanBasis {
  public:
    SpanBasis(Field f, std::size_t n) : field_(f), n_(n) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Scalar>& original(int i) const { return originals_[i]; }

    /// Adds vec if independent of the current span; returns true exactly then.
    bool try_add(const std::vector<Scalar>& vec) {
        auto [residual, combo] = reduce(vec);
        int piv = first_nonzero(residual);
        if (piv < 0) return false;
        std::vector<Scalar> aug(originals_.size() + 1, Scalar::zero(field_));
        for (std::size_t i = 0; i < combo.size(); ++i) aug[i] = -combo[i];
        aug.back() = Scalar::one(field_);
        originals_.push_back(vec);
        rows_.push_back(std::move(residual));
        pivots_.push_back(piv);
        augs_.push_back(std::move(aug));
        return true;
    }

    /// Coordinates of vec in the original vectors, or nullopt outside the span.
    std::optional<std::vector<Scalar>> coords(const std::vector<Scalar>& vec) const {
        auto [residual, combo] = reduce(vec);
        if (first_nonzero(residual) >= 0) return std::nullopt;
        combo.resize(originals_.size(), Scalar::zero(field_));
        return combo;
    }

  private:
    std::pair<std::vector<Scalar>, std::vector<Scalar>> reduce(
        const std::vector<Scalar>& vec) const {
        std::vector<Scalar> v = vec;
        std::vector<Scalar> combo(originals_.size(), Scalar::zero(field_));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& lead = v[pivots_[r]];
            if (lead.is_zero()) continue;
            Scalar fct = lead / rows_[r][pivots_[r]];
            const auto& row = rows_[r];
            for (std::size_t k = 0; k < n_; ++k)
                if (!row[k].is_zero()) v[k] = v[k] - fct * row[k];
            const auto& aug = augs_[r];
            for (std::size_t k = 0; k < aug.size(); ++k)
                if (!aug[k].is_zero()) combo[k] = combo[k] + fct * aug[k];
        }
        return {std::move(v), std::move(combo)};
    }

    static int first_nonzero(const std::vector<Scalar>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    Field field_;
    std::size_t n_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
    std::vector<std::vector<Scalar>> augs_;  // rows_[i] in terms of originals_
    std::vector<std::vector<Scalar>> originals_;
};

}  // namespace recmat::detail
