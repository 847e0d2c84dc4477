#include "smartvector/config.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "smartvector/store_io.hpp"

namespace smartvector {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

void RunConfig::apply_file(const std::string& path) { apply_text(read_text_file(path)); }

void RunConfig::apply_text(const std::string& text) {
    std::map<std::string, std::string> kv;

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const auto j = nlohmann::json::parse(text);
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_string())
                kv[it.key()] = it.value().get<std::string>();
            else
                kv[it.key()] = it.value().dump();
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string::npos) eol = text.size();
            std::string line = trim(text.substr(pos, eol - pos));
            pos = eol + 1;
            if (line.empty() || line[0] == '#') continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ValidationError("config line missing '=': " + line);
            kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
    }

    const auto as_double = [](const std::string& v) { return std::stod(v); };
    const auto as_int = [](const std::string& v) { return std::stoi(v); };

    for (const auto& [key, value] : kv) {
        ConfidenceParams& conf = eval.retrieval.confidence;
        if (key == "half_life_days") {
            conf.half_life_days = as_double(value);
            eval.consolidation.confidence.half_life_days = conf.half_life_days;
        } else if (key == "alpha_pos") {
            conf.alpha_pos = as_double(value);
            eval.consolidation.confidence.alpha_pos = conf.alpha_pos;
        } else if (key == "alpha_neg") {
            conf.alpha_neg = as_double(value);
            eval.consolidation.confidence.alpha_neg = conf.alpha_neg;
        } else if (key == "beta") {
            conf.beta = as_double(value);
            eval.consolidation.confidence.beta = conf.beta;
        } else if (key == "dormant_threshold") {
            conf.dormant_threshold = as_double(value);
            eval.consolidation.confidence.dormant_threshold = conf.dormant_threshold;
        } else if (key == "validity_floor") {
            conf.validity_floor = as_double(value);
            eval.consolidation.confidence.validity_floor = conf.validity_floor;
        } else if (key == "w_sim") {
            weights.similarity = as_double(value);
        } else if (key == "w_time") {
            weights.temporal = as_double(value);
        } else if (key == "w_conf") {
            weights.confidence = as_double(value);
        } else if (key == "w_rel") {
            weights.relational = as_double(value);
        } else if (key == "gamma") {
            eval.consolidation.ripple.gamma = as_double(value);
        } else if (key == "d_max") {
            eval.consolidation.ripple.d_max = as_int(value);
        } else if (key == "candidate_pool") {
            eval.retrieval.candidate_pool = as_int(value);
        } else if (key == "conflict_jaccard") {
            eval.consolidation.conflict.min_topic_jaccard = as_double(value);
        } else if (key == "conflict_cosine") {
            eval.consolidation.conflict.max_content_cosine = as_double(value);
        } else if (key == "semantic_sim_threshold") {
            eval.consolidation.relationship.sim_threshold = as_double(value);
        } else if (key == "semantic_newer_depends_on_older") {
            eval.consolidation.relationship.newer_depends_on_older =
                value == "true" || value == "1";
        } else if (key == "seed") {
            bench.seed = static_cast<std::uint64_t>(std::stoull(value));
        } else if (key == "rumor_rate") {
            bench.rumor_rate = as_double(value);
        } else if (key == "n_topics") {
            bench.n_topics = as_int(value);
        } else if (key == "now") {
            auto t = parse_rfc3339(value);
            if (!t) throw ValidationError("bad 'now' timestamp in config");
            bench.now = *t;
        } else {
            throw ValidationError("unknown config key: " + key);
        }
    }

    const ConfidenceParams& conf = eval.retrieval.confidence;
    if (conf.alpha_neg <= conf.alpha_pos)
        throw ValidationError("alpha_neg must exceed alpha_pos (the asymmetry is load-bearing)");
    if (conf.half_life_days <= 0 || conf.alpha_pos <= 0 || conf.beta <= 0 ||
        conf.validity_floor <= 0)
        throw ValidationError("confidence parameters must be positive");
    if (conf.dormant_threshold <= 0 || conf.dormant_threshold >= 1)
        throw ValidationError("dormant_threshold must lie in (0, 1)");
    const RippleParams& ripple = eval.consolidation.ripple;
    if (ripple.gamma <= 0 || ripple.gamma >= 1)
        throw ValidationError("gamma must lie in (0, 1)");
    if (ripple.d_max < 1) throw ValidationError("d_max must be at least 1");
    if (bench.rumor_rate < 0 || bench.rumor_rate > 1)
        throw ValidationError("rumor_rate must lie in [0, 1]");
    if (weights.similarity < 0 || weights.temporal < 0 || weights.confidence < 0 ||
        weights.relational < 0 || weights.sum() <= 0)
        throw ValidationError("score weights must be non-negative with a positive sum");
}

}  // namespace smartvector
