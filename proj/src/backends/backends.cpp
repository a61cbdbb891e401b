#include "cfkit/backends/backends.hpp"

#include "cfkit/backends/mock.hpp"

namespace cfkit::backends {

void BackendSuite::validate() const {
    if (!mlm || !sent_sim || !ppl || !text_encoder || !image_encoder || !pair_generator ||
        !itm_scorer) {
        throw ConfigError("backend suite has null handles");
    }
    if (text_encoder->dim() != image_encoder->dim()) {
        throw ConfigError("text and image encoders disagree on embedding dim: " +
                          std::to_string(text_encoder->dim()) + " vs " +
                          std::to_string(image_encoder->dim()));
    }
}

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    if (needle.empty()) return 0;
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

std::vector<MaskFill> mlm_top_k(MaskedLm& mlm, const std::string& masked_text, int k) {
    if (k < 1) throw UsageError("mlm_top_k: k must be positive");
    const std::size_t masks = count_occurrences(masked_text, mlm.mask_placeholder());
    if (masks != 1) {
        throw MaskCountError("mlm_top_k: expected exactly one '" + mlm.mask_placeholder() +
                             "' placeholder, found " + std::to_string(masks));
    }
    return mlm.top_k(masked_text, k);
}

double sentence_similarity(SentenceSimilarity& backend, const std::string& a,
                           const std::string& b) {
    if (a.empty() || b.empty()) {
        throw UsageError("sentence_similarity: inputs must be non-empty");
    }
    return backend.similarity(a, b);
}

double perplexity(PerplexityModel& backend, const std::string& text) {
    if (text.empty()) throw UsageError("perplexity: text must be non-empty");
    return backend.perplexity(text);
}

Embedding encode_text(TextEncoder& backend, const std::string& text) {
    if (text.empty()) throw UsageError("encode_text: text must be non-empty");
    return backend.encode(text);
}

Embedding encode_image(ImageEncoder& backend, const ImageRef& image) {
    if (image.id.empty() && !image.pixels && !image.path) {
        throw UsageError("encode_image: empty image ref");
    }
    return backend.encode(image);
}

std::pair<ImageRef, ImageRef> generate_pair(PairGenerator& backend, const std::string& prompt_o,
                                            const std::string& prompt_c, double p,
                                            std::uint64_t seed) {
    if (prompt_o.empty() || prompt_c.empty()) {
        throw UsageError("generate_pair: prompts must be non-empty");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("generate_pair: p must lie in [0, 1]");
    }
    return backend.generate(prompt_o, prompt_c, p, seed);
}

double itm_score(ItmScorer& scorer, const std::string& caption, const ImageRef& image) {
    if (caption.empty()) throw UsageError("itm_score: caption must be non-empty");
    return scorer.score(caption, image);
}

BackendSuite suite_from_descriptor(const std::string& descriptor) {
    if (descriptor.rfind("mock:", 0) == 0) {
        const std::string rest = descriptor.substr(5);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("mock descriptor must be mock:<dim>:<seed>, got " + descriptor);
        }
        MockParams params;
        try {
            params.dim = std::stoi(rest.substr(0, colon));
            params.seed = std::stoull(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("cannot parse mock descriptor: " + descriptor);
        }
        if (params.dim < 2) throw ConfigError("mock embedding dim must be >= 2");
        return make_mock_suite(params);
    }
    throw ConfigError("unknown backend descriptor: " + descriptor);
}

} // namespace cfkit::backends
