#include "cfkit/backends/mock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "cfkit/core/tokenize.hpp"

namespace cfkit::backends {

namespace {

std::uint64_t mix_key(std::uint64_t seed, std::string_view salt, std::uint64_t extra = 0) {
    return fnv1a64(extra, fnv1a64(salt, fnv1a64(seed)));
}

const std::vector<std::string>& default_vocabulary() {
    static const std::vector<std::string> vocab = {
        // nouns
        "cat", "dog", "man", "woman", "boy", "girl", "kid", "child", "person", "house",
        "building", "car", "bus", "train", "bike", "horse", "bird", "fish", "table", "chair",
        "kitchen", "field", "park", "street", "road", "city", "tree", "flower", "beach", "river",
        "mat", "hat", "ball", "toy", "remote", "couch", "bench", "fence", "plate", "bowl",
        "cup", "bottle", "phone", "computer", "lamp", "window", "door", "wall", "truck", "boat",
        // verbs
        "ran", "run", "runs", "jumped", "walked", "ate", "sat", "stood", "slept", "played",
        // adjectives
        "red", "blue", "small", "big", "old", "young", "dirty", "clean", "tall", "bright",
    };
    return vocab;
}

// Fixed unigram table: token -> surprisal in bits (probability 2^-bits).
// Power-of-two probabilities keep hand computation exact.
const std::map<std::string, double>& unigram_bits() {
    static const std::map<std::string, double> bits = {
        {"the", 3}, {"a", 3}, {"an", 4}, {"of", 4}, {"on", 4}, {"in", 4}, {"at", 5},
        {"by", 5}, {"with", 5}, {"and", 4}, {"is", 3}, {"are", 4}, {"was", 4}, {"were", 5},
        {"to", 3}, {"under", 7}, {"over", 7}, {"near", 8}, {"two", 5}, {"his", 4}, {"her", 4},
        {"sat", 7}, {"sits", 8}, {"stands", 8}, {"walks", 8}, {"sleeps", 9}, {"eats", 8},
        {"plays", 8}, {"holds", 9}, {"rides", 9}, {"lies", 9}, {"stood", 8}, {"walked", 8},
        {"cat", 6}, {"dog", 6}, {"man", 5}, {"woman", 6}, {"boy", 6}, {"girl", 6},
        {"kid", 7}, {"child", 7}, {"person", 6}, {"people", 5}, {"house", 6}, {"building", 7},
        {"car", 6}, {"bus", 7}, {"train", 7}, {"bike", 8}, {"horse", 7}, {"bird", 7},
        {"fish", 8}, {"table", 7}, {"chair", 7}, {"kitchen", 8}, {"field", 8}, {"park", 7},
        {"street", 6}, {"road", 7}, {"city", 6}, {"tree", 7}, {"flower", 8}, {"beach", 8},
        {"mountain", 8}, {"river", 8}, {"mat", 9}, {"hat", 8}, {"ball", 7}, {"toy", 8},
        {"remote", 9}, {"couch", 8}, {"bench", 9}, {"fence", 9}, {"plate", 8}, {"bowl", 9},
        {"cup", 8}, {"bottle", 9}, {"phone", 8}, {"computer", 9}, {"lamp", 9}, {"window", 7},
        {"door", 6}, {"wall", 7}, {"floor", 7}, {"truck", 7}, {"boat", 8},
    };
    return bits;
}

constexpr double kUnknownBits = 12.0;

} // namespace

// --- HashEmbedder ----------------------------------------------------------

HashEmbedder::HashEmbedder(int dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
    if (dim_ < 2) throw ConfigError("HashEmbedder: dim must be >= 2");
}

Embedding HashEmbedder::from_stream(std::uint64_t key) const {
    SplitMix64 rng(key);
    Embedding v(dim_);
    for (int d = 0; d < dim_; ++d) v[d] = rng.normal();
    return v;
}

Embedding HashEmbedder::token_vector(std::string_view token) const {
    return from_stream(mix_key(seed_, "token", fnv1a64(to_lower(token))));
}

Embedding HashEmbedder::embed_text(std::string_view text) const {
    Embedding sum = Embedding::Zero(dim_);
    bool any = false;
    for (const Token& t : tokenize(text)) {
        if (!t.is_word) continue;
        sum += token_vector(t.text);
        any = true;
    }
    if (!any) return embed_id(text);
    return sum;
}

Embedding HashEmbedder::embed_id(std::string_view id) const {
    return from_stream(mix_key(seed_, "id", fnv1a64(id)));
}

// --- MockMaskedLm -----------------------------------------------------------

MockMaskedLm::MockMaskedLm(const MockParams& params)
    : mask_(params.mask_placeholder), seed_(params.seed),
      vocabulary_(params.vocabulary.value_or(default_vocabulary())) {
    if (mask_.empty()) throw ConfigError("mask placeholder must be non-empty");
}

std::vector<MaskFill> MockMaskedLm::top_k(const std::string& masked_text, int k) {
    const std::uint64_t context = fnv1a64(masked_text);
    std::vector<MaskFill> fills;
    fills.reserve(vocabulary_.size());
    for (const std::string& word : vocabulary_) {
        SplitMix64 rng(mix_key(seed_, "mlm", fnv1a64(word, context)));
        fills.push_back({word, -10.0 * rng.uniform01()});
    }
    std::sort(fills.begin(), fills.end(), [](const MaskFill& a, const MaskFill& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.token < b.token;
    });
    if (fills.size() > static_cast<std::size_t>(k)) fills.resize(static_cast<std::size_t>(k));
    return fills;
}

std::string MockMaskedLm::descriptor() const {
    return "mock-mlm:" + std::to_string(vocabulary_.size()) + ":" + std::to_string(seed_);
}

// --- MockSentenceSimilarity --------------------------------------------------

double MockSentenceSimilarity::similarity(const std::string& a, const std::string& b) {
    return cosine_similarity(embedder_.embed_text(a), embedder_.embed_text(b));
}

std::string MockSentenceSimilarity::descriptor() const {
    return "mock-sentsim:" + std::to_string(embedder_.dim()) + ":" +
           std::to_string(embedder_.seed());
}

// --- MockPerplexity ----------------------------------------------------------

MockPerplexity::MockPerplexity(const MockParams& params)
    : seed_(params.seed), bits_(unigram_bits()) {}

double MockPerplexity::surprisal_bits(const std::string& token) const {
    auto it = bits_.find(to_lower(token));
    return it == bits_.end() ? kUnknownBits : it->second;
}

double MockPerplexity::perplexity(const std::string& text) {
    double total = 0.0;
    std::size_t count = 0;
    for (const Token& t : tokenize(text)) {
        if (!t.is_word) continue;
        total += surprisal_bits(t.text);
        ++count;
    }
    if (count == 0) return std::exp2(kUnknownBits);
    return std::exp2(total / static_cast<double>(count));
}

std::string MockPerplexity::descriptor() const {
    return "mock-ppl:unigram:" + std::to_string(seed_);
}

// --- MockTextEncoder ----------------------------------------------------------

std::string MockTextEncoder::descriptor() const {
    return "mock-text-encoder:" + std::to_string(embedder_.dim()) + ":" +
           std::to_string(embedder_.seed());
}

// --- generated-image ids -------------------------------------------------------

std::string format_generated_id(const GeneratedId& id) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "p2p:%llu:%a:%c:", static_cast<unsigned long long>(id.seed),
                  id.p, id.side);
    return std::string(buf) + id.prompt;
}

std::optional<GeneratedId> parse_generated_id(const std::string& id) {
    if (id.rfind("p2p:", 0) != 0) return std::nullopt;
    const std::size_t a = id.find(':', 4);
    if (a == std::string::npos) return std::nullopt;
    const std::size_t b = id.find(':', a + 1);
    if (b == std::string::npos) return std::nullopt;
    const std::size_t c = id.find(':', b + 1);
    if (c == std::string::npos || c != b + 2) return std::nullopt;
    GeneratedId out;
    try {
        out.seed = std::stoull(id.substr(4, a - 4));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    out.p = std::strtod(id.c_str() + a + 1, nullptr);
    out.side = id[b + 1];
    if (out.side != 'o' && out.side != 'c') return std::nullopt;
    out.prompt = id.substr(c + 1);
    return out;
}

// --- MockImageEncoder -----------------------------------------------------------

MockImageEncoder::MockImageEncoder(const MockParams& params)
    : embedder_(params.dim, params.seed), caption_noise_(params.caption_noise),
      pair_noise_(params.pair_noise) {}

Embedding MockImageEncoder::embed_generated(std::uint64_t seed, double p, char side,
                                            const std::string& prompt) const {
    Embedding v = embedder_.embed_text(prompt);

    // Noise shared by both images of the pair: hurts caption-image fidelity
    // without separating the pair.
    SplitMix64 common(mix_key(embedder_.seed(), "p2p-common", seed));
    const double a = caption_noise_ * common.uniform01();
    Embedding dir_common(embedder_.dim());
    for (int d = 0; d < embedder_.dim(); ++d) dir_common[d] = common.normal();
    dir_common.normalize();

    // Per-side noise, scaled down as the shared-attention fraction grows.
    SplitMix64 per_side(mix_key(embedder_.seed(), side == 'o' ? "p2p-o" : "p2p-c", seed));
    const double b = pair_noise_ * (1.0 - p) * per_side.uniform01();
    Embedding dir_side(embedder_.dim());
    for (int d = 0; d < embedder_.dim(); ++d) dir_side[d] = per_side.normal();
    dir_side.normalize();

    return v + a * dir_common + b * dir_side;
}

Embedding MockImageEncoder::embed_pixels(const ImageBuffer& pixels) const {
    // 4x4 grid of per-cell mean RGB -> fixed seeded projection to dim.
    constexpr int grid = 4;
    Eigen::VectorXd stats = Eigen::VectorXd::Zero(grid * grid * 3);
    for (int gy = 0; gy < grid; ++gy) {
        for (int gx = 0; gx < grid; ++gx) {
            const int y0 = gy * pixels.height / grid;
            const int y1 = (gy + 1) * pixels.height / grid;
            const int x0 = gx * pixels.width / grid;
            const int x1 = (gx + 1) * pixels.width / grid;
            double acc[3] = {0, 0, 0};
            int n = 0;
            for (int y = y0; y < y1; ++y) {
                for (int x = x0; x < x1; ++x) {
                    const std::uint8_t* px = pixels.pixel(y, x);
                    acc[0] += px[0];
                    acc[1] += px[1];
                    acc[2] += px[2];
                    ++n;
                }
            }
            const int base = (gy * grid + gx) * 3;
            for (int ch = 0; ch < 3; ++ch) {
                stats[base + ch] = n > 0 ? acc[ch] / (255.0 * n) : 0.0;
            }
        }
    }
    SplitMix64 rng(mix_key(embedder_.seed(), "pixel-projection"));
    Eigen::MatrixXd projection(embedder_.dim(), stats.size());
    for (Eigen::Index r = 0; r < projection.rows(); ++r) {
        for (Eigen::Index col = 0; col < projection.cols(); ++col) {
            projection(r, col) = rng.normal();
        }
    }
    return projection * stats;
}

Embedding MockImageEncoder::encode(const ImageRef& image) {
    if (image.id.rfind("txt:", 0) == 0) {
        return embedder_.embed_text(image.id.substr(4));
    }
    if (auto gen = parse_generated_id(image.id)) {
        return embed_generated(gen->seed, gen->p, gen->side, gen->prompt);
    }
    if (image.pixels) {
        if (!image.pixels->valid()) throw DecodeError("encode: invalid in-memory image");
        return embed_pixels(*image.pixels);
    }
    if (image.path) {
        return embed_pixels(read_ppm(*image.path));
    }
    return embedder_.embed_id(image.id);
}

std::string MockImageEncoder::descriptor() const {
    return "mock-image-encoder:" + std::to_string(embedder_.dim()) + ":" +
           std::to_string(embedder_.seed());
}

// --- MockPairGenerator ------------------------------------------------------------

MockPairGenerator::MockPairGenerator(const MockParams& params)
    : seed_(params.seed), size_(params.image_size) {
    if (size_ < 8 || size_ % 8 != 0) {
        throw ConfigError("mock image size must be a positive multiple of 8");
    }
}

ImageBuffer MockPairGenerator::render(const std::vector<std::string>& own,
                                      const std::vector<std::string>& other, double p,
                                      std::uint64_t seed) const {
    const int cell = 8;
    const int grid = size_ / cell;
    const int ncells = grid * grid;

    auto fold_tokens = [&](const std::vector<std::string>& tokens) {
        std::vector<std::uint64_t> keys(static_cast<std::size_t>(ncells));
        for (int i = 0; i < ncells; ++i) {
            keys[static_cast<std::size_t>(i)] =
                mix_key(seed_, "cell", fnv1a64(static_cast<std::uint64_t>(i), fnv1a64(seed)));
        }
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            auto& k = keys[i % static_cast<std::size_t>(ncells)];
            k = fnv1a64(tokens[i], k);
        }
        return keys;
    };

    const std::vector<std::uint64_t> own_keys = fold_tokens(own);
    const std::vector<std::uint64_t> other_keys = fold_tokens(other);

    std::vector<int> diff_cells;
    for (int i = 0; i < ncells; ++i) {
        if (own_keys[static_cast<std::size_t>(i)] != other_keys[static_cast<std::size_t>(i)]) {
            diff_cells.push_back(i);
        }
    }

    std::uint64_t own_fold = fnv1a64(seed);
    for (const std::string& t : own) own_fold = fnv1a64(t, own_fold);

    const int bleed = static_cast<int>(std::lround((1.0 - p) * size_ * 0.75));

    ImageBuffer img;
    img.width = size_;
    img.height = size_;
    img.rgb.resize(static_cast<std::size_t>(size_) * size_ * 3);

    for (int y = 0; y < size_; ++y) {
        for (int x = 0; x < size_; ++x) {
            const int c = (y / cell) * grid + (x / cell);
            std::uint64_t h = SplitMix64(fnv1a64(
                                             static_cast<std::uint64_t>(y) << 32 |
                                                 static_cast<std::uint64_t>(x),
                                             own_keys[static_cast<std::size_t>(c)]))
                                  .next();

            if (!diff_cells.empty()) {
                int dist = size_;
                for (int dc : diff_cells) {
                    const int cx0 = (dc % grid) * cell, cx1 = cx0 + cell - 1;
                    const int cy0 = (dc / grid) * cell, cy1 = cy0 + cell - 1;
                    const int dx = std::max({cx0 - x, 0, x - cx1});
                    const int dy = std::max({cy0 - y, 0, y - cy1});
                    dist = std::min(dist, std::max(dx, dy));
                    if (dist == 0) break;
                }
                if (dist <= bleed) {
                    h = SplitMix64(fnv1a64(static_cast<std::uint64_t>(y) << 32 |
                                               static_cast<std::uint64_t>(x),
                                           fnv1a64("bleed", own_fold)))
                            .next();
                }
            }

            std::uint8_t* px = img.pixel(y, x);
            px[0] = static_cast<std::uint8_t>(h & 0xff);
            px[1] = static_cast<std::uint8_t>((h >> 8) & 0xff);
            px[2] = static_cast<std::uint8_t>((h >> 16) & 0xff);
        }
    }
    return img;
}

std::pair<ImageRef, ImageRef> MockPairGenerator::generate(const std::string& prompt_o,
                                                          const std::string& prompt_c, double p,
                                                          std::uint64_t seed) {
    std::vector<std::string> tokens_o, tokens_c;
    for (const std::string& w : word_tokens(prompt_o)) tokens_o.push_back(to_lower(w));
    for (const std::string& w : word_tokens(prompt_c)) tokens_c.push_back(to_lower(w));

    ImageRef img_o;
    img_o.id = format_generated_id({seed, p, 'o', prompt_o});
    img_o.pixels = render(tokens_o, tokens_c, p, seed);
    img_o.source = ImageSource::generated;

    ImageRef img_c;
    img_c.id = format_generated_id({seed, p, 'c', prompt_c});
    img_c.pixels = render(tokens_c, tokens_o, p, seed);
    img_c.source = ImageSource::generated;

    return {std::move(img_o), std::move(img_c)};
}

std::string MockPairGenerator::descriptor() const {
    return "mock-p2p:" + std::to_string(size_) + ":" + std::to_string(seed_);
}

// --- suite ---------------------------------------------------------------------

BackendSuite make_mock_suite(const MockParams& params) {
    BackendSuite suite;
    suite.mlm = std::make_shared<MockMaskedLm>(params);
    suite.sent_sim = std::make_shared<MockSentenceSimilarity>(params);
    suite.ppl = std::make_shared<MockPerplexity>(params);
    suite.text_encoder = std::make_shared<MockTextEncoder>(params);
    suite.image_encoder = std::make_shared<MockImageEncoder>(params);
    suite.pair_generator = std::make_shared<MockPairGenerator>(params);
    suite.itm_scorer =
        std::make_shared<EmbeddingItmScorer>(suite.text_encoder, suite.image_encoder);
    suite.descriptor = "mock:" + std::to_string(params.dim) + ":" + std::to_string(params.seed);
    suite.validate();
    return suite;
}

} // namespace cfkit::backends
