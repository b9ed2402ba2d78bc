#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeval/corpus.hpp"
#include "qeval/io.hpp"

namespace qeval {

enum class PromptKind { zero_shot, icl, finetune_eval, finetune_translate };

inline const char* to_string(PromptKind k) {
    switch (k) {
        case PromptKind::zero_shot: return "zero_shot";
        case PromptKind::icl: return "icl";
        case PromptKind::finetune_eval: return "finetune_eval";
        case PromptKind::finetune_translate: return "finetune_translate";
    }
    return "zero_shot";
}

// One solved scoring example prepended to an ICL prompt.
struct IclExemplar {
    std::string source_text;
    std::string translation_text;
    int human_score = 0;  // 1-100
};

struct RenderedPrompt {
    PromptKind kind = PromptKind::zero_shot;
    std::string text;
    std::string sample_id;
};

enum class FineTuneTask { evaluation, translation };

inline const char* to_string(FineTuneTask t) {
    return t == FineTuneTask::evaluation ? "evaluation" : "translation";
}

struct FineTuneRecord {
    std::string prompt;
    std::string completion;
    FineTuneTask task = FineTuneTask::evaluation;

    bool operator==(const FineTuneRecord&) const = default;
};

// Every evaluation prompt ends with this stem, no trailing whitespace, so a
// greedy continuation begins with the score token.
inline constexpr std::string_view kScoreStem = "The evaluation score out of 100 is";

namespace detail {

inline void require_sample_texts(const Sample& sample) {
    if (sample.source_text.empty()) {
        throw std::invalid_argument("render: empty source_text for sample \"" + sample.id + "\"");
    }
    if (sample.translation_text.empty()) {
        throw std::invalid_argument("render: empty translation_text for sample \"" + sample.id + "\"");
    }
}

// Shared body: source block, translation block, scoring stem. Segments are
// joined by exactly two LFs.
inline std::string evaluation_body(const LanguagePair& pair, const Sample& sample) {
    std::string text;
    text += "\n\n";
    text += pair.source_lang;
    text += ": ";
    text += sample.source_text;
    text += "\n\n";
    text += pair.target_lang;
    text += ": ";
    text += sample.translation_text;
    text += "\n\n";
    text += kScoreStem;
    return text;
}

}  // namespace detail

inline RenderedPrompt render_zero_shot(const LanguagePair& pair, const Sample& sample) {
    validate_pair(pair);
    detail::require_sample_texts(sample);
    std::string text = "You are an experienced translation evaluator and you need to evaluate a "
                       "translation for ";
    text += pair.source_lang;
    text += " language to ";
    text += pair.target_lang;
    text += " language.";
    text += detail::evaluation_body(pair, sample);
    return {PromptKind::zero_shot, std::move(text), sample.id};
}

inline RenderedPrompt render_icl(const LanguagePair& pair, const IclExemplar& exemplar,
                                 const Sample& sample) {
    validate_pair(pair);
    detail::require_sample_texts(sample);
    if (exemplar.source_text.empty() || exemplar.translation_text.empty()) {
        throw std::invalid_argument("render_icl: exemplar text is empty");
    }
    if (exemplar.human_score < 1 || exemplar.human_score > 100) {
        throw std::invalid_argument("render_icl: exemplar score outside [1,100]");
    }
    // Exemplar texts are inserted verbatim between single quotes, no escaping.
    std::string text = "If the ";
    text += pair.source_lang;
    text += " to ";
    text += pair.target_lang;
    text += " translation score by human for '";
    text += exemplar.source_text;
    text += "' to '";
    text += exemplar.translation_text;
    text += "' is ";
    text += std::to_string(exemplar.human_score);
    text += " from 100 then following that, if you are an experienced translation evaluator and "
            "you need to evaluate a translation for ";
    text += pair.source_lang;
    text += " language to ";
    text += pair.target_lang;
    text += " language.";
    text += detail::evaluation_body(pair, sample);
    return {PromptKind::icl, std::move(text), sample.id};
}

// Evaluation training record: zero-shot prompt, integer DA label as the
// completion. Keeps the reply parser's strongest path the trained behavior.
inline FineTuneRecord render_finetune_record(const LanguagePair& pair, const Sample& sample) {
    if (!sample.human_da) {
        throw std::invalid_argument("render_finetune_record: sample \"" + sample.id +
                                    "\" has no human_da; normalize the corpus first");
    }
    FineTuneRecord record;
    record.prompt = render_zero_shot(pair, sample).text;
    record.completion = std::to_string(*sample.human_da);
    record.task = FineTuneTask::evaluation;
    return record;
}

// Translation training record: single-line JSON instruction object as the
// prompt, target sentence as the completion.
inline FineTuneRecord render_translation_record(const LanguagePair& pair,
                                                const std::string& source_text,
                                                const std::string& target_text) {
    validate_pair(pair);
    if (source_text.empty() || target_text.empty()) {
        throw std::invalid_argument("render_translation_record: empty text");
    }
    nlohmann::json prompt{
        {"instruction",
         "Translate the given sentence from " + pair.source_lang + " to " + pair.target_lang + "."},
        {"source_language", pair.source_lang},
        {"target_language", pair.target_lang},
        {"text", source_text},
    };
    FineTuneRecord record;
    record.prompt = prompt.dump();
    record.completion = target_text;
    record.task = FineTuneTask::translation;
    return record;
}

inline std::string finetune_record_to_json_line(const FineTuneRecord& record) {
    nlohmann::json j{
        {"prompt", record.prompt},
        {"completion", record.completion},
        {"task", to_string(record.task)},
    };
    return j.dump();
}

inline FineTuneRecord finetune_record_from_json_line(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    FineTuneRecord record;
    record.prompt = j.at("prompt").get<std::string>();
    record.completion = j.at("completion").get<std::string>();
    std::string task = j.at("task").get<std::string>();
    if (task == "evaluation") {
        record.task = FineTuneTask::evaluation;
    } else if (task == "translation") {
        record.task = FineTuneTask::translation;
    } else {
        throw std::runtime_error("unknown fine-tune task: " + task);
    }
    return record;
}

// One record per line, UTF-8, LF-terminated.
inline void write_finetune_records(const std::vector<FineTuneRecord>& records,
                                   const std::filesystem::path& path) {
    std::string out;
    for (const auto& r : records) {
        out += finetune_record_to_json_line(r);
        out += '\n';
    }
    write_file_atomic(path, out);
}

inline std::vector<FineTuneRecord> read_finetune_records(const std::filesystem::path& path) {
    std::vector<FineTuneRecord> records;
    for (auto line : detail::split_on(read_file(path), '\n')) {
        if (line.empty()) continue;
        records.push_back(finetune_record_from_json_line(std::string(line)));
    }
    return records;
}

// FNV-1a 64 over the prompt bytes, 16 lowercase hex chars. Keys prediction
// records and the mock's oracle sidecar.
inline std::string prompt_hash(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf, 16);
}

}  // namespace qeval
