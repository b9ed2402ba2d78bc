#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "qeval/corpus.hpp"

namespace qeval {

// Per-language-pair extremes of the raw mean z-scores; the anchors of the
// min-max rescale onto [1,100].
struct NormalizationParams {
    LanguagePair pair;
    double z_min = 0.0;
    double z_max = 0.0;

    bool operator==(const NormalizationParams&) const = default;
};

// Extremes over the union of all samples in the given corpora (train, dev, or
// both, caller's choice). All corpora must share one language pair.
inline NormalizationParams compute_params(std::span<const Corpus> corpora) {
    if (corpora.empty()) {
        throw std::invalid_argument("compute_params: no corpora given");
    }
    const LanguagePair& pair = corpora.front().pair;
    bool any = false;
    double lo = 0.0, hi = 0.0;
    for (const auto& corpus : corpora) {
        if (!(corpus.pair == pair)) {
            throw std::invalid_argument("compute_params: mixed language pairs (" +
                                        pair_label(pair) + " vs " + pair_label(corpus.pair) + ")");
        }
        for (const auto& s : corpus.samples) {
            if (!std::isfinite(s.human_raw)) {
                throw std::invalid_argument("compute_params: non-finite human_raw for sample \"" +
                                            s.id + "\"");
            }
            if (!any) {
                lo = hi = s.human_raw;
                any = true;
            } else {
                lo = std::min(lo, s.human_raw);
                hi = std::max(hi, s.human_raw);
            }
        }
    }
    if (!any) {
        throw std::invalid_argument("compute_params: corpora contain no samples");
    }
    return {pair, lo, hi};
}

// Unrounded affine map onto [1,100]. Out-of-range z is clamped so evaluation
// runs stay total; a degenerate corpus (z_min == z_max) maps to the midpoint.
inline double rescale_real(double z, const NormalizationParams& params) {
    if (!std::isfinite(z)) {
        throw std::invalid_argument("rescale: non-finite z");
    }
    if (!(params.z_max > params.z_min)) {
        return 50.0;
    }
    double clamped = std::clamp(z, params.z_min, params.z_max);
    return 1.0 + 99.0 * (clamped - params.z_min) / (params.z_max - params.z_min);
}

// Integer DA label: round half-up, so 50.5 -> 51.
inline int rescale(double z, const NormalizationParams& params) {
    return static_cast<int>(std::floor(rescale_real(z, params) + 0.5));
}

inline Corpus normalize_corpus(const Corpus& corpus, const NormalizationParams& params) {
    if (!(corpus.pair == params.pair)) {
        throw std::invalid_argument("normalize_corpus: params are for " + pair_label(params.pair) +
                                    ", corpus is " + pair_label(corpus.pair));
    }
    Corpus out = corpus;
    for (auto& s : out.samples) {
        s.human_da = rescale(s.human_raw, params);
    }
    return out;
}

}  // namespace qeval
