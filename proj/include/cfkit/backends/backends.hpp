#pragma once

// Model-backend interfaces the pipeline depends on: masked-LM filling,
// sentence similarity, perplexity, dual-encoder embedding, attention-shared
// paired image generation, and image-text matching. Every stage talks to
// these interfaces only; deterministic mock implementations live in
// backends/mock.hpp so the whole pipeline runs without GPU inference.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cfkit/core/errors.hpp"
#include "cfkit/core/image.hpp"
#include "cfkit/core/similarity.hpp"

namespace cfkit::backends {

struct MaskFill {
    std::string token;
    double score = 0.0; // higher = more probable; non-increasing by rank
};

/// Common base: a stable descriptor for provenance and a concurrency
/// capability flag. Handles reporting thread_safe() == false are serialized
/// by the orchestrator; all mocks are concurrency-safe.
class Backend {
public:
    virtual ~Backend() = default;
    virtual std::string descriptor() const = 0;
    virtual bool thread_safe() const { return true; }
};

class MaskedLm : public Backend {
public:
    /// Top-k fills for the single mask placeholder, sorted by descending
    /// score. Callers validate placeholder count via mlm_top_k below.
    virtual std::vector<MaskFill> top_k(const std::string& masked_text, int k) = 0;
    virtual const std::string& mask_placeholder() const = 0;
};

class SentenceSimilarity : public Backend {
public:
    virtual double similarity(const std::string& a, const std::string& b) = 0;
};

class PerplexityModel : public Backend {
public:
    virtual double perplexity(const std::string& text) = 0;
};

class TextEncoder : public Backend {
public:
    virtual Embedding encode(const std::string& text) = 0;
    virtual int dim() const = 0;
};

class ImageEncoder : public Backend {
public:
    virtual Embedding encode(const ImageRef& image) = 0;
    virtual int dim() const = 0;
};

class PairGenerator : public Backend {
public:
    /// Generate two images from the same seed, sharing attention for a
    /// fraction p of the denoising schedule so the outputs differ only per
    /// the prompt difference.
    virtual std::pair<ImageRef, ImageRef> generate(const std::string& prompt_o,
                                                   const std::string& prompt_c, double p,
                                                   std::uint64_t seed) = 0;
};

class ItmScorer : public Backend {
public:
    /// Scalar compatibility of a caption-image pair; higher = better match.
    virtual double score(const std::string& caption, const ImageRef& image) = 0;
};

/// One handle per backend role. All handles must be non-null and the two
/// encoders must agree on embedding dimension.
struct BackendSuite {
    std::shared_ptr<MaskedLm> mlm;
    std::shared_ptr<SentenceSimilarity> sent_sim;
    std::shared_ptr<PerplexityModel> ppl;
    std::shared_ptr<TextEncoder> text_encoder;
    std::shared_ptr<ImageEncoder> image_encoder;
    std::shared_ptr<PairGenerator> pair_generator;
    std::shared_ptr<ItmScorer> itm_scorer;
    std::string descriptor;

    void validate() const;
};

// --- validated operations ------------------------------------------------
// Free functions enforcing each operation's preconditions uniformly across
// backend implementations.

/// Throws MaskCountError unless masked_text contains exactly one occurrence
/// of the backend's mask placeholder.
std::vector<MaskFill> mlm_top_k(MaskedLm& mlm, const std::string& masked_text, int k);

/// Symmetric similarity in [-1, 1]; both inputs must be non-empty.
double sentence_similarity(SentenceSimilarity& backend, const std::string& a,
                           const std::string& b);

/// Finite positive perplexity of non-empty text.
double perplexity(PerplexityModel& backend, const std::string& text);

Embedding encode_text(TextEncoder& backend, const std::string& text);
Embedding encode_image(ImageEncoder& backend, const ImageRef& image);

std::pair<ImageRef, ImageRef> generate_pair(PairGenerator& backend, const std::string& prompt_o,
                                            const std::string& prompt_c, double p,
                                            std::uint64_t seed);

double itm_score(ItmScorer& scorer, const std::string& caption, const ImageRef& image);

/// Default scorer: cosine of the text and image encoder outputs.
class EmbeddingItmScorer : public ItmScorer {
public:
    EmbeddingItmScorer(std::shared_ptr<TextEncoder> text, std::shared_ptr<ImageEncoder> image)
        : text_(std::move(text)), image_(std::move(image)) {}

    double score(const std::string& caption, const ImageRef& image) override {
        return cosine_similarity(text_->encode(caption), image_->encode(image));
    }

    std::string descriptor() const override { return "embedding-cosine(" + text_->descriptor() + ")"; }
    bool thread_safe() const override { return text_->thread_safe() && image_->thread_safe(); }

private:
    std::shared_ptr<TextEncoder> text_;
    std::shared_ptr<ImageEncoder> image_;
};

/// Build a suite from a descriptor such as "mock:16:1" (dim 16, seed 1).
BackendSuite suite_from_descriptor(const std::string& descriptor);

} // namespace cfkit::backends
