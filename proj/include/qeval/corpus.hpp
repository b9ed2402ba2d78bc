#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "qeval/io.hpp"

namespace qeval {

enum class Split { train, dev };

inline const char* to_string(Split s) {
    return s == Split::train ? "train" : "dev";
}

inline Split split_from_string(std::string_view s) {
    if (s == "train") return Split::train;
    if (s == "dev") return Split::dev;
    throw std::invalid_argument("unknown split: " + std::string(s));
}

struct LanguagePair {
    std::string source_lang;
    std::string target_lang;

    bool operator==(const LanguagePair&) const = default;
};

// "English-Hindi"; used in file names and table headers.
inline std::string pair_label(const LanguagePair& pair) {
    return pair.source_lang + "-" + pair.target_lang;
}

namespace detail {

inline std::string_view trim_view(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

inline std::optional<double> parse_double(std::string_view s) {
    // from_chars for doubles is incomplete in some libstdc++ versions; strtod
    // on a zero-copy buffer is the portable full-consumption parse.
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || errno == ERANGE) return std::nullopt;
    return v;
}

inline std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Shortest decimal string that parses back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace detail

inline void validate_pair(const LanguagePair& pair) {
    auto src = detail::trim_view(pair.source_lang);
    auto tgt = detail::trim_view(pair.target_lang);
    if (src.empty() || tgt.empty()) {
        throw std::invalid_argument("language pair has an empty side");
    }
    if (src == tgt) {
        throw std::invalid_argument("source and target language must differ: " + std::string(src));
    }
}

struct Sample {
    std::string id;
    std::string source_text;
    std::string translation_text;
    double human_raw = 0.0;           // mean z-score as distributed
    std::optional<int> human_da;      // 1-100 direct-assessment label, set by normalization

    bool operator==(const Sample&) const = default;
};

struct Corpus {
    LanguagePair pair;
    Split split = Split::train;
    std::vector<Sample> samples;

    bool operator==(const Corpus&) const = default;
};

inline constexpr std::string_view kCorpusHeader = "id\tsource\ttranslation\tscore";
inline constexpr std::string_view kCorpusHeaderDa = "id\tsource\ttranslation\tscore\tda";

// Strict canonical-format parse. Lines are LF-delimited; fields are stored
// verbatim (no trimming, no unicode normalization). Row numbers in errors are
// physical line numbers, header = row 1.
inline Corpus corpus_from_tsv(std::string_view content, const LanguagePair& pair, Split split) {
    validate_pair(pair);
    if (content.empty()) {
        throw std::runtime_error("empty corpus file");
    }
    auto lines = detail::split_on(content, '\n');
    // A trailing LF yields one empty final piece; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) {
        throw std::runtime_error("empty corpus file");
    }
    bool has_da = false;
    if (lines[0] == kCorpusHeaderDa) {
        has_da = true;
    } else if (lines[0] != kCorpusHeader) {
        throw std::runtime_error("bad header: expected \"id<TAB>source<TAB>translation<TAB>score\"");
    }
    const std::size_t ncols = has_da ? 5 : 4;

    Corpus corpus{pair, split, {}};
    corpus.samples.reserve(lines.size() - 1);
    std::unordered_set<std::string_view> seen_ids;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t row = i + 1;  // 1-based physical line number
        auto fields = detail::split_on(lines[i], '\t');
        if (fields.size() != ncols) {
            throw std::runtime_error("row " + std::to_string(row) + ": expected " +
                                     std::to_string(ncols) + " columns, got " +
                                     std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            throw std::runtime_error("row " + std::to_string(row) + ": empty id");
        }
        if (fields[1].empty()) {
            throw std::runtime_error("row " + std::to_string(row) + ": empty source_text");
        }
        if (fields[2].empty()) {
            throw std::runtime_error("row " + std::to_string(row) + ": empty translation_text");
        }
        auto score = detail::parse_double(fields[3]);
        if (!score) {
            throw std::runtime_error("row " + std::to_string(row) + ": non-numeric score \"" +
                                     std::string(fields[3]) + "\"");
        }
        if (!std::isfinite(*score)) {
            throw std::runtime_error("row " + std::to_string(row) + ": non-finite score");
        }
        if (!seen_ids.insert(fields[0]).second) {
            throw std::runtime_error("duplicate id \"" + std::string(fields[0]) + "\" at row " +
                                     std::to_string(row));
        }

        Sample s;
        s.id = std::string(fields[0]);
        s.source_text = std::string(fields[1]);
        s.translation_text = std::string(fields[2]);
        s.human_raw = *score;
        if (has_da && !fields[4].empty()) {
            auto da = detail::parse_int(fields[4]);
            if (!da || *da < 1 || *da > 100) {
                throw std::runtime_error("row " + std::to_string(row) + ": da outside [1,100]");
            }
            s.human_da = *da;
        }
        corpus.samples.push_back(std::move(s));
    }
    return corpus;
}

inline Corpus load_corpus(const std::filesystem::path& path, const LanguagePair& pair, Split split) {
    return corpus_from_tsv(read_file(path), pair, split);
}

// Inverse of corpus_from_tsv: the `da` column appears iff any sample carries
// a label, so normalized corpora round-trip losslessly.
inline std::string corpus_to_tsv(const Corpus& corpus) {
    bool any_da = false;
    for (const auto& s : corpus.samples) {
        if (s.human_da) {
            any_da = true;
            break;
        }
    }
    std::string out;
    out += any_da ? kCorpusHeaderDa : kCorpusHeader;
    out += '\n';
    for (const auto& s : corpus.samples) {
        if (s.id.find('\t') != std::string::npos || s.id.find('\n') != std::string::npos ||
            s.source_text.find('\t') != std::string::npos ||
            s.source_text.find('\n') != std::string::npos ||
            s.translation_text.find('\t') != std::string::npos ||
            s.translation_text.find('\n') != std::string::npos) {
            throw std::runtime_error("sample \"" + s.id +
                                     "\": tabs and newlines cannot be represented in the TSV format");
        }
        out += s.id;
        out += '\t';
        out += s.source_text;
        out += '\t';
        out += s.translation_text;
        out += '\t';
        out += detail::format_double(s.human_raw);
        if (any_da) {
            out += '\t';
            if (s.human_da) out += std::to_string(*s.human_da);
        }
        out += '\n';
    }
    return out;
}

inline void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    write_file_atomic(path, corpus_to_tsv(corpus));
}

struct Finding {
    std::string sample_id;  // empty for corpus-level findings
    std::string message;

    bool operator==(const Finding&) const = default;
};

// Invariant audit; returns one finding per violation instead of failing.
inline std::vector<Finding> validate_corpus(const Corpus& corpus) {
    std::vector<Finding> findings;
    auto src = detail::trim_view(corpus.pair.source_lang);
    auto tgt = detail::trim_view(corpus.pair.target_lang);
    if (src.empty() || tgt.empty()) {
        findings.push_back({"", "language pair has an empty side"});
    } else if (src == tgt) {
        findings.push_back({"", "source and target language are identical"});
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& s : corpus.samples) {
        if (s.id.empty()) {
            findings.push_back({s.id, "empty id"});
        } else if (!seen.insert(s.id).second) {
            findings.push_back({s.id, "duplicate id \"" + s.id + "\""});
        }
        if (s.source_text.empty()) {
            findings.push_back({s.id, "empty source_text"});
        }
        if (s.translation_text.empty()) {
            findings.push_back({s.id, "empty translation_text"});
        }
        if (!std::isfinite(s.human_raw)) {
            findings.push_back({s.id, "non-finite human_raw"});
        }
        if (s.human_da && (*s.human_da < 1 || *s.human_da > 100)) {
            findings.push_back({s.id, "human_da " + std::to_string(*s.human_da) + " outside [1,100]"});
        }
    }
    return findings;
}

// Tolerant reader used by the ingest command: accepts CRLF line endings and
// a missing header, producing a corpus ready for canonical serialization.
inline Corpus ingest_corpus(const std::filesystem::path& path, const LanguagePair& pair, Split split) {
    std::string content = read_file(path);
    if (content.empty()) {
        throw std::runtime_error("empty corpus file");
    }
    auto lines = detail::split_on(content, '\n');
    std::string canonical;
    bool saw_header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        if (line.ends_with('\r')) line.remove_suffix(1);
        if (i == 0) {
            saw_header = (line == kCorpusHeader || line == kCorpusHeaderDa);
            if (!saw_header) {
                canonical += kCorpusHeader;
                canonical += '\n';
            }
        }
        if (i + 1 == lines.size() && line.empty()) continue;
        canonical += line;
        canonical += '\n';
    }
    return corpus_from_tsv(canonical, pair, split);
}

}  // namespace qeval
