// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/story_parser.hpp"

#include <fstream>

#include "sparc/errors.hpp"

namespace sparc {

namespace {

std::string strip_sentence(const std::string& s) {
    std::string out = s;
    while (!out.empty() && (out.back() == ' ' || out.back() == '.')) out.pop_back();
    std::size_t start = 0;
    while (start < out.size() && out[start] == ' ') ++start;
    return out.substr(start);
}

// Entity ids never carry articles; "The tiny white rectangle" and "a
// tiny white rectangle" name the same thing.
std::string strip_entity_article(std::string s) {
    for (const char* article : {"the ", "The ", "a ", "A ", "an ", "An "}) {
        std::size_t len = std::string(article).size();
        if (s.size() > len && s.compare(0, len, article) == 0) return s.substr(len);
    }
    return s;
}

int parse_slot_index(const std::string& value, const std::string& where) {
    try {
        int idx = std::stoi(value);
        if (idx <= 0) throw std::invalid_argument("non-positive");
        return idx;
    } catch (const std::exception&) {
        throw SchemaError(where + ": slot value must be a positive group index, got \"" + value + "\"");
    }
}

Relation clock_relation(int hour) {
    if (hour < 1 || hour > 12) throw UnknownLabelError(std::to_string(hour) + " o'clock");
    return static_cast<Relation>(static_cast<int>(Relation::CLOCK_1) + hour - 1);
}

}  // namespace

PatternTable PatternTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingAssetError(path);
    PatternTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::string where = path + ":" + std::to_string(lineno);
        auto tab1 = line.find('\t');
        auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos) throw SchemaError(where + ": expected name<TAB>regex<TAB>slots");
        SentencePattern p;
        p.name = line.substr(0, tab1);
        std::string expr = line.substr(tab1 + 1, tab2 - tab1 - 1);
        try {
            p.regex = std::regex(expr, std::regex::ECMAScript);
        } catch (const std::regex_error& e) {
            throw SchemaError(where + ": bad regex: " + e.what());
        }
        std::string slots = line.substr(tab2 + 1);
        std::size_t pos = 0;
        while (pos < slots.size()) {
            auto comma = slots.find(',', pos);
            std::string item = slots.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            pos = comma == std::string::npos ? slots.size() : comma + 1;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw SchemaError(where + ": slot item \"" + item + "\" lacks '='");
            std::string key = item.substr(0, eq);
            std::string value = item.substr(eq + 1);
            bool literal = !value.empty() && value[0] == '!';
            if (key == "head") p.head = parse_slot_index(value, where);
            else if (key == "tail") p.tail = parse_slot_index(value, where);
            else if (key == "rel" && literal) p.rel_literal = value.substr(1);
            else if (key == "rel") p.rel = parse_slot_index(value, where);
            else if (key == "rel2" && literal) p.rel2_literal = value.substr(1);
            else if (key == "rel2") p.rel2 = parse_slot_index(value, where);
            else if (key == "mag") p.mag = parse_slot_index(value, where);
            else if (key == "mag2") p.mag2 = parse_slot_index(value, where);
            else if (key == "clock") p.clock = parse_slot_index(value, where);
            else throw SchemaError(where + ": unknown slot \"" + key + "\"");
        }
        if (p.head == 0 || p.tail == 0) throw SchemaError(where + ": head and tail slots are required");
        if (p.rel == 0 && p.rel_literal.empty() && p.clock == 0) {
            throw SchemaError(where + ": pattern carries no relation slot");
        }
        table.patterns_.push_back(std::move(p));
    }
    return table;
}

namespace {

struct SlotResult {
    std::string head;
    std::string tail;
    RelationSet relations;
};

bool apply_pattern(const SentencePattern& p, const std::string& sentence, const PropertySet& ps,
                   const SynonymTable* synonyms, SlotResult& out) {
    std::smatch m;
    if (!std::regex_match(sentence, m, p.regex)) return false;

    auto group = [&](int idx) -> std::string {
        if (idx <= 0 || idx >= static_cast<int>(m.size()) || !m[static_cast<std::size_t>(idx)].matched) {
            return {};
        }
        return m[static_cast<std::size_t>(idx)].str();
    };

    out.head = strip_entity_article(group(p.head));
    out.tail = strip_entity_article(group(p.tail));
    if (out.head.empty() || out.tail.empty()) return false;

    RelationSet rels;
    Magnitudes mags;
    auto add_relation = [&](const std::string& token, int mag_group) {
        if (token.empty()) return;
        Relation r = parse_label(token, synonyms);
        const auto& labels = canonical_labels(r);
        for (Label l : labels) rels.insert(l);
        if (!ps.quantitative()) return;
        // A stated count applies to the stated axis; unstated counts
        // default to one unit per directional label.
        std::string mag_text = group(mag_group);
        int units = mag_text.empty() ? 1 : std::stoi(mag_text);
        for (Label l : labels) {
            if (is_horizontal(l)) mags.x = units;
            if (is_vertical(l)) mags.y = units;
        }
    };

    if (p.clock > 0) {
        std::string hour_text = group(p.clock);
        if (!hour_text.empty()) {
            Relation r = clock_relation(std::stoi(hour_text));
            for (Label l : canonical_labels(r)) {
                rels.insert(l);
                if (ps.quantitative()) {
                    if (is_horizontal(l)) mags.x = 1;
                    if (is_vertical(l)) mags.y = 1;
                }
            }
        }
    }
    add_relation(p.rel_literal.empty() ? group(p.rel) : p.rel_literal, p.mag);
    add_relation(p.rel2_literal.empty() ? group(p.rel2) : p.rel2_literal, p.mag2);

    if (rels.empty()) return false;
    rels.set_magnitudes(mags);
    out.relations = rels;
    return true;
}

}  // namespace

SymbolicContext parse_story(const std::vector<std::string>& sentences, const PropertySet& ps,
                            const PatternTable& patterns, const SynonymTable* synonyms) {
    SymbolicContext ctx;
    ctx.property_set = &ps;
    ctx.text = sentences;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        std::string sentence = strip_sentence(sentences[i]);
        bool matched = false;
        for (const auto& p : patterns.patterns()) {
            SlotResult slots;
            bool ok = false;
            try {
                ok = apply_pattern(p, sentence, ps, synonyms, slots);
            } catch (const UnknownLabelError&) {
                ok = false;  // catch-all pattern grabbed a non-relation word; try the next
            }
            if (!ok) continue;
            ContextTriple t;
            t.head = slots.head;
            t.tail = slots.tail;
            t.relations = slots.relations;
            t.sentence_index = static_cast<int>(i);
            add_triple(ctx, std::move(t));
            matched = true;
            break;
        }
        if (!matched) throw UnparseableSentenceError(i, sentences[i]);
    }
    return ctx;
}

}  // namespace sparc
