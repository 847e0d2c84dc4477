#include "smartvector/bench.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "smartvector/rng.hpp"

namespace smartvector {

namespace {

// Hash tags for the stateless per-topic draws.
enum : std::uint64_t {
    TAG_WINDOW = 1,
    TAG_GAP2 = 2,
    TAG_GAP3 = 3,
    TAG_LATEST_AGE = 4,
    TAG_RUMOR_AGE = 5,
    TAG_RUMOR_SELECT = 6,
    TAG_NPOS = 7,
    TAG_ACCESS = 8,
    TAG_RUMOR_ACCESS = 9,
    TAG_TP_VERSION = 10,
    TAG_TP_OFFSET = 11,
};

struct TemplateSpec {
    const char* nouns;  // three-token noun phrase
    const char* unit;
};

// clang-format off
constexpr TemplateSpec kTemplates[20] = {
    {"parental leave allowance", "days"},
    {"vpn session timeout", "minutes"},
    {"travel reimbursement ceiling", "dollars"},
    {"incident response deadline", "minutes"},
    {"backup retention period", "days"},
    {"release freeze window", "days"},
    {"password rotation interval", "days"},
    {"room reservation horizon", "days"},
    {"purchase approval threshold", "dollars"},
    {"probation review span", "days"},
    {"training stipend cap", "dollars"},
    {"code review turnaround", "hours"},
    {"audit log retention", "months"},
    {"visitor badge validity", "hours"},
    {"remote work quota", "days"},
    {"security patch deadline", "hours"},
    {"booking lead margin", "days"},
    {"hardware refresh cycle", "months"},
    {"escalation response delay", "minutes"},
    {"contract notice period", "days"},
};

constexpr const char* kCode1[60] = {
    "alder", "aspen", "birch", "bramble", "briar", "cedar", "clover", "cypress",
    "elder", "elm", "fennel", "fern", "hawthorn", "hazel", "heather", "hickory",
    "holly", "ivy", "juniper", "larch", "laurel", "lichen", "lilac", "linden",
    "magnolia", "mallow", "maple", "marigold", "moss", "mulberry", "myrtle",
    "nettle", "nutmeg", "oak", "olive", "orchid", "osier", "palm", "pine",
    "poplar", "primrose", "quince", "rowan", "saffron", "sage", "sequoia",
    "sorrel", "spruce", "sycamore", "tamarind", "tansy", "teak", "thistle",
    "thyme", "tulip", "walnut", "willow", "wisteria", "yarrow", "yew",
};

constexpr const char* kCode2[60] = {
    "agate", "alabaster", "amber", "amethyst", "basalt", "beryl", "bronze",
    "chalk", "charcoal", "cinnabar", "citrine", "cobalt", "copper", "coral",
    "crimson", "crystal", "ebony", "emerald", "feldspar", "flint", "garnet",
    "gypsum", "indigo", "iron", "jade", "jasper", "jet", "lapis", "magnetite",
    "malachite", "marble", "mercury", "mica", "nickel", "obsidian", "ochre",
    "onyx", "opal", "pearl", "pewter", "platinum", "pumice", "pyrite", "quartz",
    "ruby", "russet", "sapphire", "scarlet", "shale", "silver", "slate",
    "sulfur", "talc", "topaz", "tourmaline", "turquoise", "umber", "vermilion",
    "zircon", "cinder",
};

constexpr const char* kOrgName[60] = {
    "altair", "antares", "aquila", "arcturus", "auriga", "bellatrix",
    "betelgeuse", "canopus", "capella", "carina", "cassiopeia", "castor",
    "cepheus", "cetus", "columba", "corvus", "cygnus", "deneb", "dorado",
    "draco", "electra", "fomalhaut", "gemini", "hercules", "hydra", "izar",
    "lacerta", "leo", "lepus", "libra", "lyra", "maia", "markab", "megrez",
    "merak", "mintaka", "mira", "mirach", "mizar", "nashira", "nihal", "orion",
    "pavo", "pegasus", "perseus", "phoenix", "pictor", "polaris", "pollux",
    "procyon", "pyxis", "regulus", "rigel", "sirius", "spica", "taygeta",
    "thuban", "vega", "vela", "volans",
};

constexpr const char* kOrgNoun[10] = {
    "team", "group", "unit", "division", "desk", "crew", "cohort", "guild",
    "squad", "chapter",
};
constexpr const char* kJoiner[4] = {"under", "per", "within", "following"};
constexpr const char* kDocNoun1[8] = {
    "charter", "handbook", "bulletin", "framework", "memo", "addendum",
    "playbook", "directive",
};
constexpr const char* kDocNoun2[8] = {
    "annex", "appendix", "register", "digest", "ledger", "compendium",
    "dossier", "gazette",
};
constexpr const char* kRevWord[8] = {
    "revision", "reissue", "update", "rewrite", "amendment", "edition",
    "restatement", "errata",
};
constexpr const char* kDocNoun3[8] = {
    "supplement", "circular", "briefing", "primer", "synopsis", "outline",
    "summary", "capsule",
};
// clang-format on

constexpr SourceAuthority kCanonicalAuthorities[4] = {
    SourceAuthority::OfficialDB,
    SourceAuthority::Policy,
    SourceAuthority::TechDoc,
    SourceAuthority::Wiki,
};

struct TopicVocab {
    std::string nouns;
    std::string unit;
    std::string filler;      // "{c1} {c2} {orgnoun}"
    std::string phrase;      // "{nouns} for the {filler}"
    std::string decoration;  // "{orgname} {dn1} {dn2}"
    std::string joiner;
    std::string rev_word;
    std::string trail_word;  // extra old-version boilerplate token
    std::string doc_id;
    std::string rumor_doc_id;
    int within = 0;  // index among the template's topics
};

TopicVocab topic_vocab(int t, int n_templates) {
    const int tmpl = t % n_templates;
    const int within = t / n_templates;
    const TemplateSpec& spec = kTemplates[tmpl % 20];
    TopicVocab v;
    v.within = within;
    v.nouns = spec.nouns;
    v.unit = spec.unit;
    v.filler = std::string(kCode1[t % 60]) + " " + kCode2[t % 60] + " " +
               kOrgNoun[(tmpl + within * 3) % 10];
    v.phrase = v.nouns + " for the " + v.filler;
    // Decoration-word indices use mixed strides so no two topics share more
    // than two of the four boilerplate words; aligned cycles would push
    // cross-topic token overlap over the conflict-detection floor.
    v.decoration = std::string(kOrgName[t % 60]) + " " +
                   kDocNoun1[(37 * t + 13 * within) % 8] + " " +
                   kDocNoun2[(t / 8 + 3 * within) % 8];
    v.joiner = kJoiner[(tmpl + within) % 4];
    v.rev_word = kRevWord[(21 * t + 9 * within + 5) % 8];
    v.trail_word = kDocNoun3[(5 * t + t / 8 + 7 * within) % 8];
    char num[8];
    std::snprintf(num, sizeof(num), "%02d", t);
    v.doc_id = std::string("topic") + num + "-" + kCode1[t % 60];
    v.rumor_doc_id = v.doc_id + "-rumor";
    return v;
}

// Strictly ascending per-topic value ladder. Values are deterministic and
// mostly unique across topics so numeric-token document frequencies stay
// low.
int topic_value(int t, int version_index) {
    const int base = 15 + 5 * t;
    const int step = 5 * (1 + t % 4);
    return base + step * version_index;
}

// Version phrasing mirrors how policy documents age: the founding version
// is terse, mid-cycle amendments accrete boilerplate, and the latest
// revision is stamped "as of ..." and speaks of the current value.
std::string version_text(const TopicVocab& v, int value, int version, int latest) {
    const std::string val = std::to_string(value);
    if (version == latest) {
        return "As of the " + v.decoration + " " + v.rev_word + " " + v.trail_word +
               ", the current " + v.phrase + " is " + val + " " + v.unit + ".";
    }
    if (version == 1) {
        return "The " + v.phrase + " is " + val + " " + v.unit + ", " + v.joiner + " the " +
               v.decoration + ".";
    }
    return "The " + v.phrase + " is " + val + " " + v.unit + ", " + v.joiner + " the " +
           v.decoration + " " + v.rev_word + " " + v.trail_word + ".";
}

std::string rumor_text(const TopicVocab& v, int value) {
    switch (v.within % 3) {
        case 0:
            return "what is the current " + v.phrase + "? heard " + std::to_string(value) + " " +
                   v.unit;
        case 1:
            return "word is the current " + v.phrase + " is " + std::to_string(value) + " " +
                   v.unit + " now";
        default:
            return "apparently the current " + v.phrase + " is just " + std::to_string(value) +
                   " " + v.unit;
    }
}

std::vector<int> pick_rumor_topics(const BenchConfig& c) {
    const int count = static_cast<int>(std::lround(c.rumor_rate * c.n_topics));
    std::vector<int> order(c.n_topics);
    for (int i = 0; i < c.n_topics; ++i) order[i] = i;
    Rng rng(mix(c.seed, TAG_RUMOR_SELECT, 0));
    rng.shuffle(order);
    order.resize(static_cast<std::size_t>(std::min(count, c.n_topics)));
    std::sort(order.begin(), order.end());
    return order;
}

}  // namespace

const char* to_string(QueryKind k) {
    switch (k) {
        case QueryKind::Current: return "current";
        case QueryKind::TimePoint: return "time_point";
        case QueryKind::Conflict: return "conflict";
    }
    return "current";
}

std::pair<VectorStore, GroundTruth> generate_corpus(const BenchConfig& config) {
    if (config.n_topics < 1 || config.n_templates < 1 || config.versions_per_topic < 1)
        throw ValidationError("benchmark counts must be positive");
    if (config.rumor_rate < 0.0 || config.rumor_rate > 1.0)
        throw ValidationError("rumor_rate must lie in [0, 1]");
    if (config.window_days_min > config.window_days_max ||
        config.interval_days_min > config.interval_days_max ||
        config.rumor_age_days_min > config.rumor_age_days_max ||
        config.latest_age_days_min > config.latest_age_days_max)
        throw ValidationError("benchmark ranges must be non-empty");

    VectorStore store;
    GroundTruth truth;
    truth.topics.reserve(static_cast<std::size_t>(config.n_topics));

    const auto rumor_topics = pick_rumor_topics(config);

    for (int t = 0; t < config.n_topics; ++t) {
        const TopicVocab vocab = topic_vocab(t, config.n_templates);
        TopicInfo info;
        info.index = t;
        info.doc_id = vocab.doc_id;
        info.query_phrase = vocab.phrase;

        // Version schedule: the span back to `now` honours window_days,
        // the later gaps honour interval_days, and the latest version
        // stays recent; the first gap absorbs whatever is left.
        const int versions = config.versions_per_topic;
        const std::int64_t window =
            mix_int(config.seed, TAG_WINDOW, t, config.window_days_min, config.window_days_max);
        const std::int64_t latest_age = mix_int(config.seed, TAG_LATEST_AGE, t,
                                                config.latest_age_days_min,
                                                config.latest_age_days_max);
        std::vector<std::int64_t> ages(versions);  // days before now, ascending versions
        ages[versions - 1] = latest_age;
        std::int64_t cursor = latest_age;
        for (int k = versions - 2; k >= 1; --k) {
            cursor += mix_int(config.seed, k == versions - 2 ? TAG_GAP3 : TAG_GAP2, t,
                              config.interval_days_min, config.interval_days_max);
            ages[k] = cursor;
        }
        ages[0] = std::max(window, cursor + config.interval_days_min);

        std::vector<Timestamp> created(versions);
        for (int k = 0; k < versions; ++k) {
            created[k] = config.now.plus_days(-ages[k]).plus_seconds(8 * 3600 + t * 60 + k * 11);
        }

        const SourceAuthority authority = kCanonicalAuthorities[t % 4];
        for (int k = 0; k < versions; ++k) {
            const int value = topic_value(t, k);
            const std::string text = version_text(vocab, value, k + 1, versions);
            const std::optional<Timestamp> validity_end =
                k + 1 < versions ? std::optional<Timestamp>(created[k + 1]) : std::nullopt;
            store.ingest_document(vocab.doc_id, k + 1, text, authority, created[k], created[k],
                                  validity_end, "policy_bot");
            info.versions.push_back({value, created[k]});
        }

        // Latest canonical version is consolidated knowledge.
        const std::string latest_id = make_vector_id(vocab.doc_id, versions, 0);
        store.transition(latest_id, VectorStatus::Active, config.now);

        // Static feedback/access priors: canonical policy answers have been
        // served and accepted before; the stream itself is not simulated.
        for (int k = 0; k < versions; ++k) {
            SmartVector& v = store.get_mutable(make_vector_id(vocab.doc_id, k + 1, 0));
            v.positive_feedback =
                mix_int(config.seed, TAG_NPOS, static_cast<std::uint64_t>(t) * 16 + k, 4, 8);
            v.access_count =
                mix_int(config.seed, TAG_ACCESS, static_cast<std::uint64_t>(t) * 16 + k, 10, 40);
        }

        truth.topics.push_back(std::move(info));
    }

    // Rumors: recent, low-authority, wrong-value contradiction candidates.
    for (int t : rumor_topics) {
        const TopicVocab vocab = topic_vocab(t, config.n_templates);
        TopicInfo& info = truth.topics[static_cast<std::size_t>(t)];
        const std::int64_t age = mix_int(config.seed, TAG_RUMOR_AGE, t, config.rumor_age_days_min,
                                         config.rumor_age_days_max);
        const Timestamp created =
            config.now.plus_days(-age).plus_seconds(14 * 3600 + t * 60);
        const int value = topic_value(t, config.versions_per_topic);
        store.ingest_document(vocab.rumor_doc_id, 1, rumor_text(vocab, value),
                              config.rumor_authority, created, created, std::nullopt,
                              "intern_" + std::string(kCode1[t % 60]));
        const std::string rumor_id = make_vector_id(vocab.rumor_doc_id, 1, 0);
        store.get_mutable(rumor_id).access_count =
            mix_int(config.seed, TAG_RUMOR_ACCESS, t, 0, 5);
        info.has_rumor = true;
        info.rumor_value = value;
        info.rumor_doc_id = vocab.rumor_doc_id;
        info.rumor_vector_id = rumor_id;
        truth.rumor_vector_ids.push_back(rumor_id);
    }

    // Sparse dependency graph: every dependency_stride-th topic's latest
    // vector depends on the previous topic's latest vector.
    for (int t = config.dependency_stride; t < config.n_topics; t += config.dependency_stride) {
        const std::string from =
            make_vector_id(truth.topics[static_cast<std::size_t>(t)].doc_id,
                           config.versions_per_topic, 0);
        const std::string to =
            make_vector_id(truth.topics[static_cast<std::size_t>(t - 1)].doc_id,
                           config.versions_per_topic, 0);
        store.add_edge(from, to, EdgeKind::DependsOn);
        truth.dependency_edges.emplace_back(from, to);
    }

    // The generator emits a settled corpus: historical supersession ripples
    // are considered already played out.
    store.clear_recent_changes();
    return {std::move(store), std::move(truth)};
}

std::vector<Query> generate_queries(const GroundTruth& truth, const BenchConfig& config) {
    std::vector<Query> queries;
    const int latest = config.versions_per_topic;

    for (const TopicInfo& topic : truth.topics) {
        Query q;
        q.text = "What is the current " + topic.query_phrase + "?";
        q.kind = QueryKind::Current;
        q.reference_time = config.now;
        q.gold_topic = topic.doc_id;
        q.gold_version = latest;
        queries.push_back(std::move(q));
    }

    for (const TopicInfo& topic : truth.topics) {
        // Gold versions come from the mid-cycle amendments; the founding
        // version's text dominates similarity ties among old versions, so
        // asking about it would give pure-cosine retrieval a free ride.
        const int lo = std::min(2, latest - 1);
        const int gold =
            static_cast<int>(mix_int(config.seed, TAG_TP_VERSION, topic.index, lo, latest - 1));
        const Timestamp start = topic.versions[static_cast<std::size_t>(gold - 1)].created_at;
        const Timestamp end = topic.versions[static_cast<std::size_t>(gold)].created_at;
        const std::int64_t window_days = whole_days_between(start, end);
        const std::int64_t max_offset =
            std::min<std::int64_t>(config.time_point_max_offset_days,
                                   window_days > 0 ? window_days - 1 : 0);
        const std::int64_t offset =
            mix_int(config.seed, TAG_TP_OFFSET, topic.index, 0, max_offset);
        const Timestamp ref = start.plus_days(offset).plus_seconds(2 * 3600);

        const CivilDate date = civil_from_timestamp(ref);
        char day[8];
        std::snprintf(day, sizeof(day), "%02d", date.day);
        Query q;
        q.text = "What was the " + topic.query_phrase + " as of " + day + " " +
                 month_name(date.month) + " " + std::to_string(date.year) + "?";
        q.kind = QueryKind::TimePoint;
        q.reference_time = ref;
        q.gold_topic = topic.doc_id;
        q.gold_version = gold;
        queries.push_back(std::move(q));
    }

    for (const TopicInfo& topic : truth.topics) {
        if (!topic.has_rumor) continue;
        Query q;
        q.text = "What is the current " + topic.query_phrase + "?";
        q.kind = QueryKind::Conflict;
        q.reference_time = config.now;
        q.gold_topic = topic.doc_id;
        q.gold_version = latest;
        queries.push_back(std::move(q));
    }
    return queries;
}

std::string queries_to_json(const std::vector<Query>& queries) {
    nlohmann::ordered_json j;
    j["queries"] = nlohmann::ordered_json::array();
    for (const Query& q : queries) {
        nlohmann::ordered_json jq;
        jq["text"] = q.text;
        jq["kind"] = to_string(q.kind);
        jq["reference_time"] = format_rfc3339(q.reference_time);
        jq["gold_topic"] = q.gold_topic;
        jq["gold_version"] = q.gold_version;
        j["queries"].push_back(std::move(jq));
    }
    return j.dump(2) + "\n";
}

std::vector<Query> queries_from_json(const std::string& json_text) {
    const auto j = nlohmann::ordered_json::parse(json_text);
    std::vector<Query> out;
    for (const auto& jq : j.at("queries")) {
        Query q;
        q.text = jq.at("text").get<std::string>();
        const std::string kind = jq.at("kind").get<std::string>();
        if (kind == "current")
            q.kind = QueryKind::Current;
        else if (kind == "time_point")
            q.kind = QueryKind::TimePoint;
        else if (kind == "conflict")
            q.kind = QueryKind::Conflict;
        else
            throw ValidationError("bad query kind: " + kind);
        auto ref = parse_rfc3339(jq.at("reference_time").get<std::string>());
        if (!ref) throw ValidationError("bad reference_time");
        q.reference_time = *ref;
        q.gold_topic = jq.at("gold_topic").get<std::string>();
        q.gold_version = jq.at("gold_version").get<int>();
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace smartvector
