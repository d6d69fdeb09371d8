// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/verbalize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <sstream>

#include "sparc/errors.hpp"
#include "sparc/inequality.hpp"
#include "sparc/offsets.hpp"
#include "sparc/spartun.hpp"

namespace sparc {

namespace {

struct PhraseForm {
    Label label;
    std::string_view surface;    // how the label is spoken inside a clause
    std::string_view connector;  // word linking the last phrase to the tail
};

// Ordered by surface length so a scan can always take the longest match.
constexpr std::array<PhraseForm, 16> kPhrases = {{
    {Label::ContainsTouches, "containing and touching", ""},
    {Label::PartiallyOverlapping, "partially overlapping", ""},
    {Label::OutsideTouching, "outside and touching", ""},
    {Label::InsideTouching, "inside and touching", ""},
    {Label::Overlapping, "overlapping", ""},
    {Label::Contains, "containing", ""},
    {Label::Front, "in front", "of"},
    {Label::Outside, "outside", ""},
    {Label::Behind, "behind", ""},
    {Label::Inside, "inside", ""},
    {Label::Above, "above", ""},
    {Label::Below, "below", ""},
    {Label::Right, "right", "of"},
    {Label::Left, "left", "of"},
    {Label::Near, "near", ""},
    {Label::Far, "far", "from"},
}};

const PhraseForm& phrase_of(Label l) {
    for (const auto& p : kPhrases)
        if (p.label == l) return p;
    return kPhrases.front();  // unreachable; table is total
}

std::optional<int> phrase_magnitude(Label l, const Magnitudes& m) {
    if (is_horizontal(l)) return m.x;
    if (is_vertical(l)) return m.y;
    return std::nullopt;
}

std::string strip_article(std::string s) {
    if (s.rfind("the ", 0) == 0) s.erase(0, 4);
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool word_boundary(const std::string& text, std::size_t pos, std::size_t len) {
    auto alnum = [&](std::size_t i) { return std::isalnum(static_cast<unsigned char>(text[i])) != 0; };
    if (pos > 0 && alnum(pos - 1)) return false;
    if (pos + len < text.size() && alnum(pos + len)) return false;
    return true;
}

std::string premise_list(const std::vector<int>& premises) {
    std::string out;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (i > 0) out += (i + 1 == premises.size()) ? " and " : ", ";
        out += std::to_string(premises[i]);
    }
    return out;
}

}  // namespace

RelationSet spoken_form(const RelationSet& relations) {
    RelationSet out = RelationSet::unchecked(relations.labels());
    const Magnitudes& m = relations.magnitudes();
    Magnitudes kept;
    if ((out.contains(Label::Left) || out.contains(Label::Right)) && m.x && *m.x >= 2) kept.x = m.x;
    if ((out.contains(Label::Above) || out.contains(Label::Below)) && m.y && *m.y >= 2) kept.y = m.y;
    out.set_magnitudes(kept);
    return out;
}

RelationSet replay_merge(const std::vector<StepStatement>& premises, const std::string& head,
                         const std::string& tail, const PropertySet& ps, DeductionMode mode) {
    if (premises.empty()) return {};
    // Entity names go through lowercase so surface case never breaks a chain.
    auto low = [](const std::string& s) { return lowercase(s); };

    // A pair stated in both directions arrives as two premises over one
    // hop; fold them into one statement so the chain walk sees each hop
    // exactly once. A genuine conflict surfaces as a label contradiction.
    std::vector<StepStatement> fused;
    for (const StepStatement& p : premises) {
        bool folded = false;
        for (StepStatement& f : fused) {
            bool same = low(f.head) == low(p.head) && low(f.tail) == low(p.tail);
            bool flipped = low(f.head) == low(p.tail) && low(f.tail) == low(p.head);
            if (!same && !flipped) continue;
            f.relations = f.relations.union_with(same ? p.relations : p.relations.inverted());
            folded = true;
            break;
        }
        if (!folded) fused.push_back(p);
    }

    if (ps.objects == ObjectKind::Point) {
        bool quantitative = ps.quantitative();
        OffsetVector acc = relations_to_offset(fused[0].relations, low(fused[0].head), low(fused[0].tail));
        for (std::size_t i = 1; i < fused.size(); ++i) {
            OffsetVector next = relations_to_offset(fused[i].relations, low(fused[i].head), low(fused[i].tail));
            acc = compose_offsets(acc, next, quantitative);
        }
        return offset_to_relations(acc, quantitative);
    }

    if (ps.dimensions == 3) {
        FactSet facts;
        for (const StepStatement& s : fused) {
            for (Label l : s.relations.labels()) facts.push_back({low(s.head), relation_of(l), low(s.tail)});
        }
        FactSet closed = spartun_closure(normalize_facts(std::move(facts)));
        RelationSet out;
        std::string h = low(head), t = low(tail);
        for (const RuleFact& f : closed) {
            if (f.head != h || f.tail != t) continue;
            for (Label l : canonical_labels(f.relation)) out.insert_unchecked(l);
        }
        return out;
    }

    // A merged premise carries only what its labels say, so it contributes
    // primary inequalities alone; stated premises keep their full reading.
    InequalityStore store;
    for (const StepStatement& s : fused) {
        store.register_entity(low(s.head));
        store.register_entity(low(s.tail));
    }
    for (const StepStatement& s : fused) {
        Completeness completeness = s.kind == StepKind::Inferred ? Completeness::Incomplete : ps.completeness;
        assert_context_inequalities(low(s.head), s.relations, low(s.tail), store, completeness);
    }
    RelationSet span = deduce_directions(low(fused[0].head), low(fused[0].tail), store, mode);
    EntityPair acc{low(fused[0].head), low(fused[0].tail)};
    for (std::size_t i = 1; i < fused.size(); ++i) {
        span = compose_inequalities(acc, {low(fused[i].head), low(fused[i].tail)}, store, mode);
        acc.tail = low(fused[i].tail);
    }
    return span;
}

std::string render_clause(const std::string& head, const RelationSet& relations, const std::string& tail) {
    std::vector<Label> ls = relations.labels();
    std::string out = head + " is ";
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i > 0) out += " and ";
        if (auto mag = phrase_magnitude(ls[i], relations.magnitudes()); mag && *mag >= 2) {
            out += std::to_string(*mag) + " unit ";
        }
        out += phrase_of(ls[i]).surface;
    }
    const auto& connector = phrase_of(ls.back()).connector;
    out += " ";
    if (!connector.empty()) {
        out += connector;
        out += " ";
    }
    out += tail;
    return out;
}

std::optional<ParsedClause> parse_clause(const std::string& clause) {
    std::size_t is_pos = clause.find(" is ");
    if (is_pos == std::string::npos || is_pos == 0) return std::nullopt;
    ParsedClause parsed;
    parsed.head = strip_article(trim(clause.substr(0, is_pos)));
    std::string rest = clause.substr(is_pos + 4);
    std::string rest_lower = lowercase(rest);

    Magnitudes mags;
    std::size_t pos = 0;
    bool any = false;
    std::string_view last_connector;
    while (true) {
        std::size_t probe = pos;
        std::optional<int> mag;
        static const std::regex kMag(R"(^(\d+) units? )");
        std::smatch mm;
        std::string ahead = rest_lower.substr(probe);
        if (std::regex_search(ahead, mm, kMag)) {
            mag = std::stoi(mm[1].str());
            probe += static_cast<std::size_t>(mm[0].length());
        }
        const PhraseForm* hit = nullptr;
        for (const auto& p : kPhrases) {
            if (rest_lower.compare(probe, p.surface.size(), p.surface) == 0 &&
                word_boundary(rest_lower, probe, p.surface.size())) {
                hit = &p;
                break;
            }
        }
        if (!hit) {
            if (!any) return std::nullopt;
            break;
        }
        any = true;
        parsed.relations.insert_unchecked(hit->label);
        if (mag) {
            if (is_horizontal(hit->label)) mags.x = mag;
            if (is_vertical(hit->label)) mags.y = mag;
        }
        last_connector = hit->connector;
        pos = probe + hit->surface.size();
        // Another phrase only continues after a free-standing " and ".
        if (rest_lower.compare(pos, 5, " and ") == 0) {
            std::size_t after = pos + 5;
            std::size_t probe2 = after;
            std::string ahead2 = rest_lower.substr(probe2);
            std::smatch m2;
            if (std::regex_search(ahead2, m2, kMag)) probe2 += static_cast<std::size_t>(m2[0].length());
            bool next_is_phrase = false;
            for (const auto& p : kPhrases) {
                if (rest_lower.compare(probe2, p.surface.size(), p.surface) == 0 &&
                    word_boundary(rest_lower, probe2, p.surface.size())) {
                    next_is_phrase = true;
                    break;
                }
            }
            if (!next_is_phrase) break;
            pos = after;
            continue;
        }
        break;
    }

    std::string tail = trim(rest.substr(std::min(pos, rest.size())));
    if (!last_connector.empty()) {
        std::string con = std::string(last_connector) + " ";
        if (lowercase(tail).rfind(con, 0) == 0) tail = tail.substr(con.size());
    }
    while (!tail.empty() && (tail.back() == '.' || tail.back() == ',')) tail.pop_back();
    tail = strip_article(trim(tail));
    if (tail.empty() || parsed.head.empty()) return std::nullopt;
    parsed.tail = tail;
    parsed.relations.set_magnitudes(mags);
    return parsed;
}

std::string render_step(const StepStatement& step) {
    switch (step.kind) {
        case StepKind::FromContext:
            return "Step " + std::to_string(step.index) + ": From the context, " +
                   render_clause(step.head, step.relations, step.tail) + ".";
        case StepKind::Inverted:
        case StepKind::Inferred:
            return "Step " + std::to_string(step.index) + ": From step " + premise_list(step.premises) +
                   ", we can infer that " + render_clause(step.head, step.relations, step.tail) + ".";
        case StepKind::Answer:
            return "Hence, the answer is " + step.relations.answer_text() + ".";
    }
    return "";
}

std::vector<StepStatement> verbalize_steps(const ReasoningPath& path, const PropertySet& ps, DeductionMode mode) {
    DerivationTrace trace = derive_trace(path, ps, mode);
    if (trace.answer.empty()) throw Error("cannot verbalize a path whose answer is empty");

    std::vector<StepStatement> steps;
    auto emit = [&](StepKind kind, std::vector<int> premises, const std::string& head, const RelationSet& rels,
                    const std::string& tail) {
        StepStatement s;
        s.index = static_cast<int>(steps.size()) + 1;
        s.kind = kind;
        s.premises = std::move(premises);
        s.head = head;
        s.tail = tail;
        s.relations = spoken_form(rels);
        steps.push_back(std::move(s));
        return steps.back().index;
    };

    // A derivation can reach back past the running span: the rule engine's
    // sandwich rule consumes old containment statements, an unquantified
    // offset keeps a cancelled axis the span's labels cannot encode, and an
    // inequality chain routes through projection overlaps a deduced label
    // does not carry. So a merge cites the span only when replaying the
    // citation re-derives the claim, and falls back to citing every
    // statement so far otherwise.
    auto premises_support = [&](const std::vector<int>& premises, const std::string& head,
                                const RelationSet& claim, const std::string& tail) {
        std::vector<StepStatement> chain;
        chain.reserve(premises.size());
        for (int idx : premises) chain.push_back(steps[static_cast<std::size_t>(idx) - 1]);
        return spoken_form(replay_merge(chain, head, tail, ps, mode)) == spoken_form(claim);
    };

    // Steps that currently establish the span from the question head, and
    // the providers of links folded in since the last merge.
    std::vector<int> span_steps;
    std::vector<int> pending;
    std::vector<int> all_providers;
    for (std::size_t i = 0; i < path.links.size(); ++i) {
        const ReasoningLink& link = path.links[i];
        std::vector<int> providers;
        if (!link.r_c.empty()) {
            providers.push_back(emit(StepKind::FromContext, {}, link.head, link.r_c, link.tail));
        }
        if (!link.r_ic.empty()) {
            int stated = emit(StepKind::FromContext, {}, link.tail, link.r_ic, link.head);
            providers.push_back(emit(StepKind::Inverted, {stated}, link.head, link.r_d, link.tail));
        }
        all_providers.insert(all_providers.end(), providers.begin(), providers.end());
        if (i == 0) {
            span_steps = providers;
            continue;
        }
        pending.insert(pending.end(), providers.begin(), providers.end());
        if (!trace.spans[i].empty()) {
            std::vector<int> premises = span_steps;
            premises.insert(premises.end(), pending.begin(), pending.end());
            if (!premises_support(premises, path.links.front().head, trace.spans[i], link.tail)) {
                premises = all_providers;
            }
            if (premises.size() >= 2) {
                int merged = emit(StepKind::Inferred, std::move(premises), path.links.front().head,
                                  trace.spans[i], link.tail);
                span_steps = {merged};
            }
            pending.clear();
        }
    }

    // The answer sentence names labels only, so the statement carries no
    // entities; the instance's question supplies them.
    StepStatement answer;
    answer.index = static_cast<int>(steps.size()) + 1;
    answer.kind = StepKind::Answer;
    answer.relations = RelationSet::unchecked(trace.answer.labels());
    steps.push_back(std::move(answer));
    return steps;
}

std::vector<std::string> render_steps(const std::vector<StepStatement>& steps) {
    std::vector<std::string> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(render_step(s));
    return out;
}

std::string verbalize_path(const ReasoningPath& path, const PropertySet& ps, DeductionMode mode) {
    std::string out;
    for (const auto& line : render_steps(verbalize_steps(path, ps, mode))) {
        if (!out.empty()) out += "\n";
        out += line;
    }
    return out;
}

ParsedReasoning parse_reasoning_text(const std::string& text) {
    ParsedReasoning parsed;
    static const std::regex kStep(R"(Step\s+(\d+)\s*:\s*([^.\n]+))");
    static const std::regex kPremises(
        R"(^From steps?\s+(\d+(?:\s*,\s*\d+)*(?:\s*,?\s*and\s+\d+)?)\s*,?\s*we can (?:infer|say) that\s+(.+)$)");
    static const std::regex kNumber(R"(\d+)");

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        bool line_had_step = false;
        for (auto it = std::sregex_iterator(line.begin(), line.end(), kStep); it != std::sregex_iterator(); ++it) {
            line_had_step = true;
            StepStatement step;
            step.index = std::stoi((*it)[1].str());
            std::string body = trim((*it)[2].str());

            std::optional<std::string> clause;
            if (body.rfind("From the context,", 0) == 0) {
                step.kind = StepKind::FromContext;
                clause = trim(body.substr(17));
            } else if (body.rfind("It is given that", 0) == 0) {
                step.kind = StepKind::FromContext;
                clause = trim(body.substr(16));
            } else if (std::smatch pm; std::regex_match(body, pm, kPremises)) {
                std::string nums = pm[1].str();
                for (auto nit = std::sregex_iterator(nums.begin(), nums.end(), kNumber); nit != std::sregex_iterator();
                     ++nit) {
                    step.premises.push_back(std::stoi(nit->str()));
                }
                step.kind = step.premises.size() == 1 ? StepKind::Inverted : StepKind::Inferred;
                clause = trim(pm[2].str());
            }

            if (!clause) {
                ++parsed.skipped_lines;
                continue;
            }
            auto pc = parse_clause(*clause);
            if (!pc) {
                ++parsed.skipped_lines;
                continue;
            }
            step.head = pc->head;
            step.tail = pc->tail;
            step.relations = pc->relations;
            parsed.steps.push_back(std::move(step));
        }
        if (!line_had_step && !trim(line).empty() &&
            lowercase(line).find("the answer is") == std::string::npos) {
            ++parsed.skipped_lines;
        }
    }

    if (auto answer = extract_final_answer(text)) {
        StepStatement step;
        step.index = parsed.steps.empty() ? 1 : parsed.steps.back().index + 1;
        step.kind = StepKind::Answer;
        step.relations = *answer;
        parsed.steps.push_back(std::move(step));
    }
    return parsed;
}

std::optional<RelationSet> extract_final_answer(const std::string& text) {
    std::string low = lowercase(text);
    static const std::string kMarker = "the answer is";
    std::size_t pos = low.rfind(kMarker);
    if (pos == std::string::npos) return std::nullopt;
    std::size_t begin = pos + kMarker.size();
    std::size_t end = low.find_first_of(".\n", begin);
    if (end == std::string::npos) end = low.size();
    std::string tail = low.substr(begin, end - begin);

    RelationSet answer;
    std::size_t i = 0;
    while (i < tail.size()) {
        bool matched = false;
        for (const auto& p : kPhrases) {
            // Answers speak canonical label text, so "contains", not the
            // in-clause participle; try both spellings.
            for (std::string_view surface : {std::string_view(label_text(p.label)), p.surface}) {
                if (tail.compare(i, surface.size(), surface) == 0 && word_boundary(tail, i, surface.size())) {
                    answer.insert_unchecked(p.label);
                    i += surface.size();
                    matched = true;
                    break;
                }
            }
            if (matched) break;
        }
        if (!matched) ++i;
    }
    if (answer.empty()) return std::nullopt;
    return answer;
}

}  // namespace sparc
