#pragma once

// Embedding math. Embeddings are dense Eigen vectors, stored unnormalized;
// cosine computations normalize internally and treat zero-norm input as an
// error rather than producing NaN.

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "cfkit/core/errors.hpp"

namespace cfkit {

template <typename Scalar>
using EmbeddingT = Eigen::Vector<Scalar, Eigen::Dynamic>;

using Embedding = EmbeddingT<double>;

namespace detail {
inline void check_same_dim(Eigen::Index a, Eigen::Index b, const char* where) {
    if (a != b) {
        throw DimMismatchError(std::string(where) + ": dimension mismatch (" +
                               std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}
} // namespace detail

/// Cosine similarity of two dense vectors in [-1, 1].
/// Throws ZeroNormError when either vector has zero Euclidean norm.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine_similarity(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    detail::check_same_dim(a.size(), b.size(), "cosine_similarity");
    const Scalar na = a.norm();
    const Scalar nb = b.norm();
    if (na == Scalar(0) || nb == Scalar(0)) {
        throw ZeroNormError("cosine_similarity: zero-norm vector");
    }
    Scalar c = a.dot(b) / (na * nb);
    if (c > Scalar(1)) c = Scalar(1);
    if (c < Scalar(-1)) c = Scalar(-1);
    return c;
}

/// Directional similarity between a text edit and an image edit: the cosine
/// of (text_c - text_o) against (image_c - image_o).
///
/// Invariant under translation of both text embeddings by a common vector and
/// under positive rescaling of either difference vector. Throws
/// DegenerateDirectionError when either difference has norm <= 1e-12, where
/// the direction carries no signal.
template <typename D1, typename D2, typename D3, typename D4>
typename D1::Scalar directional_similarity(const Eigen::MatrixBase<D1>& text_o,
                                           const Eigen::MatrixBase<D2>& text_c,
                                           const Eigen::MatrixBase<D3>& image_o,
                                           const Eigen::MatrixBase<D4>& image_c) {
    using Scalar = typename D1::Scalar;
    detail::check_same_dim(text_o.size(), text_c.size(), "directional_similarity");
    detail::check_same_dim(image_o.size(), image_c.size(), "directional_similarity");
    detail::check_same_dim(text_o.size(), image_o.size(), "directional_similarity");
    const EmbeddingT<Scalar> dt = text_c - text_o;
    const EmbeddingT<Scalar> di = image_c - image_o;
    constexpr Scalar tiny = Scalar(1e-12);
    if (dt.norm() <= tiny) {
        throw DegenerateDirectionError("directional_similarity: text difference is degenerate");
    }
    if (di.norm() <= tiny) {
        throw DegenerateDirectionError("directional_similarity: image difference is degenerate");
    }
    Scalar c = dt.dot(di) / (dt.norm() * di.norm());
    if (c > Scalar(1)) c = Scalar(1);
    if (c < Scalar(-1)) c = Scalar(-1);
    return c;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& v) {
    return v.allFinite();
}

} // namespace cfkit
