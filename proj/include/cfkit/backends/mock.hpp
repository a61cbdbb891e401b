#pragma once

// Deterministic mock backends. Every output is a pure function of the inputs
// and the backend seed, computed through 64-bit hashing (FNV-1a + SplitMix64),
// so similarity math, filter thresholds, and selection rules are exercised
// with real floating-point behavior at desk scale.
//
// Conventions shared by the mock encoders:
//   - text embeds as the sum of per-token hash vectors (tokens case-folded),
//     so captions sharing most tokens land close in cosine;
//   - an image ref whose id is "txt:<text>" embeds exactly like that text,
//     which makes aligned caption-image fixtures trivial to construct;
//   - generated refs carry a structured "p2p:<seed>:<p>:<side>:<prompt>" id
//     and embed as prompt base + seeded noise, with the cross-image noise
//     component scaled by (1 - p) to mirror shared-attention behavior;
//   - refs with pixels (and no recognized id scheme) embed via per-cell pixel
//     statistics under a fixed seeded projection, path refs are decoded first.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/backends/backends.hpp"
#include "cfkit/core/rng.hpp"

namespace cfkit::backends {

struct MockParams {
    int dim = 16;
    std::uint64_t seed = 0;
    std::string mask_placeholder = "<mask>";
    double caption_noise = 60.0; // max amplitude of the shared image-noise term
    double pair_noise = 24.0;    // max amplitude of the per-side term at p = 0
    int image_size = 48;         // procedural render edge length, multiple of 8
    std::optional<std::vector<std::string>> vocabulary; // mask-fill vocabulary override
};

/// Seeded token-hash embedder backing all mock similarity math.
class HashEmbedder {
public:
    HashEmbedder(int dim, std::uint64_t seed);

    Embedding token_vector(std::string_view token) const;
    /// Sum of token vectors over case-folded word tokens; a text with no word
    /// tokens falls back to a whole-string hash vector.
    Embedding embed_text(std::string_view text) const;
    /// Single hash vector of the raw string (no tokenization).
    Embedding embed_id(std::string_view id) const;

    int dim() const { return dim_; }
    std::uint64_t seed() const { return seed_; }

private:
    Embedding from_stream(std::uint64_t key) const;

    int dim_;
    std::uint64_t seed_;
};

class MockMaskedLm : public MaskedLm {
public:
    explicit MockMaskedLm(const MockParams& params);

    std::vector<MaskFill> top_k(const std::string& masked_text, int k) override;
    const std::string& mask_placeholder() const override { return mask_; }
    std::string descriptor() const override;

private:
    std::string mask_;
    std::uint64_t seed_;
    std::vector<std::string> vocabulary_;
};

class MockSentenceSimilarity : public SentenceSimilarity {
public:
    explicit MockSentenceSimilarity(const MockParams& params) : embedder_(params.dim, params.seed) {}

    double similarity(const std::string& a, const std::string& b) override;
    std::string descriptor() const override;

    const HashEmbedder& embedder() const { return embedder_; }

private:
    HashEmbedder embedder_;
};

/// Perplexity as 2^(mean per-token surprisal) over a fixed unigram table of
/// power-of-two probabilities; tokens are case-folded, unknown tokens carry
/// probability 2^-12.
class MockPerplexity : public PerplexityModel {
public:
    explicit MockPerplexity(const MockParams& params);

    double perplexity(const std::string& text) override;
    std::string descriptor() const override;

    /// Per-token surprisal in bits (the table exponent).
    double surprisal_bits(const std::string& token) const;

private:
    std::uint64_t seed_;
    std::map<std::string, double> bits_; // token -> -log2(probability)
};

class MockTextEncoder : public TextEncoder {
public:
    explicit MockTextEncoder(const MockParams& params) : embedder_(params.dim, params.seed) {}

    Embedding encode(const std::string& text) override { return embedder_.embed_text(text); }
    int dim() const override { return embedder_.dim(); }
    std::string descriptor() const override;

private:
    HashEmbedder embedder_;
};

class MockImageEncoder : public ImageEncoder {
public:
    explicit MockImageEncoder(const MockParams& params);

    Embedding encode(const ImageRef& image) override;
    int dim() const override { return embedder_.dim(); }
    std::string descriptor() const override;

private:
    Embedding embed_pixels(const ImageBuffer& pixels) const;
    Embedding embed_generated(std::uint64_t seed, double p, char side,
                              const std::string& prompt) const;

    HashEmbedder embedder_;
    double caption_noise_;
    double pair_noise_;
};

/// Structured id carried by mock-generated images.
struct GeneratedId {
    std::uint64_t seed = 0;
    double p = 0.0;
    char side = 'o';
    std::string prompt;
};

std::string format_generated_id(const GeneratedId& id);
std::optional<GeneratedId> parse_generated_id(const std::string& id);

/// Renders deterministic procedural image pairs. Tokens map to fixed pixel
/// cells; cells of tokens shared between the two prompts render identically
/// in both outputs, and differing tokens perturb a neighborhood whose radius
/// shrinks as p grows, so higher p yields a larger pixel-identical region.
class MockPairGenerator : public PairGenerator {
public:
    explicit MockPairGenerator(const MockParams& params);

    std::pair<ImageRef, ImageRef> generate(const std::string& prompt_o,
                                           const std::string& prompt_c, double p,
                                           std::uint64_t seed) override;
    std::string descriptor() const override;

private:
    ImageBuffer render(const std::vector<std::string>& own,
                       const std::vector<std::string>& other, double p,
                       std::uint64_t seed) const;

    std::uint64_t seed_;
    int size_;
};

/// Full mock suite; the ITM scorer is the embedding-backed default.
BackendSuite make_mock_suite(const MockParams& params = {});

} // namespace cfkit::backends
