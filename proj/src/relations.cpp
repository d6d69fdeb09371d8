// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/relations.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "sparc/errors.hpp"

namespace sparc {

namespace {

constexpr std::size_t idx(Relation r) { return static_cast<std::size_t>(r); }

const std::array<std::string, kRelationCount> kRelationNames = {
    "DC",        "EC",        "PO",        "EQ",        "TPP",       "NTPP",
    "TPPI",      "NTPPI",     "left",      "right",     "above",     "below",
    "front",     "behind",    "north",     "south",     "east",      "west",
    "1 o'clock", "2 o'clock", "3 o'clock", "4 o'clock", "5 o'clock", "6 o'clock",
    "7 o'clock", "8 o'clock", "9 o'clock", "10 o'clock", "11 o'clock", "12 o'clock",
    "near",      "far",
};

const std::array<std::string, kLabelCount> kLabelTexts = {
    "above",
    "below",
    "front",
    "behind",
    "left",
    "right",
    "outside",
    "outside and touching",
    "partially overlapping",
    "overlapping",
    "inside",
    "inside and touching",
    "contains",
    "contains and touches",
    "near",
    "far",
};

const std::array<Relation, kRelationCount> kInverse = [] {
    std::array<Relation, kRelationCount> inv{};
    auto set = [&](Relation a, Relation b) {
        inv[idx(a)] = b;
        inv[idx(b)] = a;
    };
    set(Relation::DC, Relation::DC);
    set(Relation::EC, Relation::EC);
    set(Relation::PO, Relation::PO);
    set(Relation::EQ, Relation::EQ);
    set(Relation::TPP, Relation::TPPI);
    set(Relation::NTPP, Relation::NTPPI);
    set(Relation::LEFT, Relation::RIGHT);
    set(Relation::ABOVE, Relation::BELOW);
    set(Relation::FRONT, Relation::BEHIND);
    set(Relation::NORTH, Relation::SOUTH);
    set(Relation::EAST, Relation::WEST);
    set(Relation::NEAR, Relation::NEAR);
    set(Relation::FAR, Relation::FAR);
    // Clock positions reverse to the opposite side of the dial.
    for (int k = 1; k <= 6; ++k) {
        auto a = static_cast<Relation>(idx(Relation::CLOCK_1) + k - 1);
        auto b = static_cast<Relation>(idx(Relation::CLOCK_1) + k + 5);
        set(a, b);
    }
    return inv;
}();

const std::array<std::vector<Label>, kRelationCount> kCanonical = [] {
    std::array<std::vector<Label>, kRelationCount> table{};
    auto set = [&](Relation r, std::vector<Label> ls) { table[idx(r)] = std::move(ls); };
    set(Relation::DC, {Label::Outside});
    set(Relation::EC, {Label::OutsideTouching});
    set(Relation::PO, {Label::PartiallyOverlapping});
    set(Relation::EQ, {Label::Overlapping});
    set(Relation::TPP, {Label::InsideTouching});
    set(Relation::NTPP, {Label::Inside});
    set(Relation::TPPI, {Label::ContainsTouches});
    set(Relation::NTPPI, {Label::Contains});
    set(Relation::LEFT, {Label::Left});
    set(Relation::RIGHT, {Label::Right});
    set(Relation::ABOVE, {Label::Above});
    set(Relation::BELOW, {Label::Below});
    set(Relation::FRONT, {Label::Front});
    set(Relation::BEHIND, {Label::Behind});
    set(Relation::NORTH, {Label::Above});
    set(Relation::SOUTH, {Label::Below});
    set(Relation::EAST, {Label::Right});
    set(Relation::WEST, {Label::Left});
    set(Relation::NEAR, {Label::Near});
    set(Relation::FAR, {Label::Far});
    // The dial, quadrant by quadrant. Off-axis hours combine the two
    // adjacent axis labels; vertical label listed first.
    set(Relation::CLOCK_12, {Label::Above});
    set(Relation::CLOCK_1, {Label::Above, Label::Right});
    set(Relation::CLOCK_2, {Label::Above, Label::Right});
    set(Relation::CLOCK_3, {Label::Right});
    set(Relation::CLOCK_4, {Label::Below, Label::Right});
    set(Relation::CLOCK_5, {Label::Below, Label::Right});
    set(Relation::CLOCK_6, {Label::Below});
    set(Relation::CLOCK_7, {Label::Below, Label::Left});
    set(Relation::CLOCK_8, {Label::Below, Label::Left});
    set(Relation::CLOCK_9, {Label::Left});
    set(Relation::CLOCK_10, {Label::Above, Label::Left});
    set(Relation::CLOCK_11, {Label::Above, Label::Left});
    return table;
}();

// Label text -> the member whose canonical label it is. Directional
// labels resolve to the relative-direction member, never the cardinal
// or clock aliases.
const std::unordered_map<std::string, Relation> kLabelToRelation = [] {
    std::unordered_map<std::string, Relation> m;
    m[kLabelTexts[static_cast<std::size_t>(Label::Above)]] = Relation::ABOVE;
    m[kLabelTexts[static_cast<std::size_t>(Label::Below)]] = Relation::BELOW;
    m[kLabelTexts[static_cast<std::size_t>(Label::Front)]] = Relation::FRONT;
    m[kLabelTexts[static_cast<std::size_t>(Label::Behind)]] = Relation::BEHIND;
    m[kLabelTexts[static_cast<std::size_t>(Label::Left)]] = Relation::LEFT;
    m[kLabelTexts[static_cast<std::size_t>(Label::Right)]] = Relation::RIGHT;
    m[kLabelTexts[static_cast<std::size_t>(Label::Outside)]] = Relation::DC;
    m[kLabelTexts[static_cast<std::size_t>(Label::OutsideTouching)]] = Relation::EC;
    m[kLabelTexts[static_cast<std::size_t>(Label::PartiallyOverlapping)]] = Relation::PO;
    m[kLabelTexts[static_cast<std::size_t>(Label::Overlapping)]] = Relation::EQ;
    m[kLabelTexts[static_cast<std::size_t>(Label::Inside)]] = Relation::NTPP;
    m[kLabelTexts[static_cast<std::size_t>(Label::InsideTouching)]] = Relation::TPP;
    m[kLabelTexts[static_cast<std::size_t>(Label::Contains)]] = Relation::NTPPI;
    m[kLabelTexts[static_cast<std::size_t>(Label::ContainsTouches)]] = Relation::TPPI;
    m[kLabelTexts[static_cast<std::size_t>(Label::Near)]] = Relation::NEAR;
    m[kLabelTexts[static_cast<std::size_t>(Label::Far)]] = Relation::FAR;
    return m;
}();

const std::unordered_map<std::string, Relation> kNameToRelation = [] {
    std::unordered_map<std::string, Relation> m;
    for (std::size_t i = 0; i < kRelationCount; ++i) {
        m[normalize_token(kRelationNames[i])] = static_cast<Relation>(i);
    }
    return m;
}();

}  // namespace

const std::string& relation_name(Relation r) { return kRelationNames[idx(r)]; }

const std::string& label_text(Label l) { return kLabelTexts[static_cast<std::size_t>(l)]; }

Formalism formalism_of(Relation r) {
    auto i = idx(r);
    if (i <= idx(Relation::NTPPI)) return Formalism::Topological;
    if (i <= idx(Relation::BEHIND)) return Formalism::DirectionalRelative;
    if (i <= idx(Relation::WEST)) return Formalism::DirectionalCardinal;
    if (i <= idx(Relation::CLOCK_12)) return Formalism::DirectionalClock;
    return Formalism::Distance;
}

Relation inverse(Relation r) { return kInverse[idx(r)]; }

Label inverse(Label l) {
    switch (l) {
        case Label::Above: return Label::Below;
        case Label::Below: return Label::Above;
        case Label::Front: return Label::Behind;
        case Label::Behind: return Label::Front;
        case Label::Left: return Label::Right;
        case Label::Right: return Label::Left;
        case Label::Inside: return Label::Contains;
        case Label::Contains: return Label::Inside;
        case Label::InsideTouching: return Label::ContainsTouches;
        case Label::ContainsTouches: return Label::InsideTouching;
        default: return l;
    }
}

bool is_symmetric(Relation r) { return inverse(r) == r; }

bool is_rcc(Label l) {
    return l >= Label::Outside && l <= Label::ContainsTouches;
}

bool is_directional(Label l) { return l <= Label::Right; }

bool is_horizontal(Label l) { return l == Label::Left || l == Label::Right; }

bool is_vertical(Label l) { return l == Label::Above || l == Label::Below; }

const std::vector<Label>& canonical_labels(Relation r) { return kCanonical[idx(r)]; }

Relation relation_of(Label l) {
    switch (l) {
        case Label::Above: return Relation::ABOVE;
        case Label::Below: return Relation::BELOW;
        case Label::Front: return Relation::FRONT;
        case Label::Behind: return Relation::BEHIND;
        case Label::Left: return Relation::LEFT;
        case Label::Right: return Relation::RIGHT;
        case Label::Outside: return Relation::DC;
        case Label::OutsideTouching: return Relation::EC;
        case Label::PartiallyOverlapping: return Relation::PO;
        case Label::Overlapping: return Relation::EQ;
        case Label::Inside: return Relation::NTPP;
        case Label::InsideTouching: return Relation::TPP;
        case Label::Contains: return Relation::NTPPI;
        case Label::ContainsTouches: return Relation::TPPI;
        case Label::Near: return Relation::NEAR;
        case Label::Far: return Relation::FAR;
    }
    return Relation::DC;  // unreachable; labels are exhaustive
}

std::string normalize_token(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

SynonymTable SynonymTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingAssetError(path);
    SynonymTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw SchemaError(path + ":" + std::to_string(lineno) + ": expected surface<TAB>relation");
        }
        std::string surface = normalize_token(line.substr(0, tab));
        std::string name = normalize_token(line.substr(tab + 1));
        auto it = kNameToRelation.find(name);
        if (it == kNameToRelation.end()) {
            auto lt = kLabelToRelation.find(name);
            if (lt == kLabelToRelation.end()) throw UnknownLabelError(name);
            table.add(std::move(surface), lt->second);
            continue;
        }
        table.add(std::move(surface), it->second);
    }
    return table;
}

void SynonymTable::add(std::string surface, Relation r) { map_[std::move(surface)] = r; }

std::optional<Relation> SynonymTable::find(std::string_view normalized) const {
    auto it = map_.find(std::string(normalized));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

Relation parse_label(std::string_view text, const SynonymTable* synonyms) {
    std::string tok = normalize_token(text);
    if (auto it = kLabelToRelation.find(tok); it != kLabelToRelation.end()) return it->second;
    if (auto it = kNameToRelation.find(tok); it != kNameToRelation.end()) return it->second;
    // Bare hours ("10 oclock", "10") are not accepted; the clock alias
    // must spell o'clock, which the name map already covers.
    std::string apos = tok;
    auto pos = apos.find("oclock");
    if (pos != std::string::npos) {
        apos.replace(pos, 6, "o'clock");
        if (auto it = kNameToRelation.find(apos); it != kNameToRelation.end()) return it->second;
    }
    if (synonyms) {
        if (auto r = synonyms->find(tok)) return *r;
    }
    throw UnknownLabelError(std::string(text));
}

std::optional<Label> parse_label_text(std::string_view text) {
    std::string tok = normalize_token(text);
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        if (kLabelTexts[i] == tok) return static_cast<Label>(i);
    }
    return std::nullopt;
}

}  // namespace sparc
