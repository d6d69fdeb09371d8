// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/relation_set.hpp"

#include <bit>

#include "sparc/errors.hpp"

namespace sparc {

RelationSet::RelationSet(std::initializer_list<Label> labels) {
    for (Label l : labels) insert(l);
}

RelationSet RelationSet::checked(const std::vector<Label>& labels, Magnitudes mags) {
    RelationSet s;
    for (Label l : labels) s.insert(l);
    s.mags_ = mags;
    return s;
}

RelationSet RelationSet::unchecked(const std::vector<Label>& labels, Magnitudes mags) {
    RelationSet s;
    for (Label l : labels) s.insert_unchecked(l);
    s.mags_ = mags;
    return s;
}

void RelationSet::insert(Label l) {
    Label inv = inverse(l);
    if (inv != l && contains(inv)) {
        throw ContradictionError("relation set cannot hold \"" + label_text(l) + "\" and \"" +
                                 label_text(inv) + "\"");
    }
    if (is_rcc(l)) {
        for (std::size_t i = 0; i < kLabelCount; ++i) {
            Label other = static_cast<Label>(i);
            if (other != l && is_rcc(other) && contains(other)) {
                throw ContradictionError("relation set cannot hold two region-connection members (\"" +
                                         label_text(other) + "\" and \"" + label_text(l) + "\")");
            }
        }
    }
    mask_ |= bit(l);
}

void RelationSet::insert_unchecked(Label l) { mask_ |= bit(l); }

std::size_t RelationSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Label> RelationSet::labels() const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        Label l = static_cast<Label>(i);
        if (contains(l)) out.push_back(l);
    }
    return out;
}

std::vector<Label> RelationSet::directional_labels() const {
    std::vector<Label> out;
    for (Label l : labels()) {
        if (is_directional(l)) out.push_back(l);
    }
    return out;
}

RelationSet RelationSet::inverted() const {
    RelationSet out;
    for (Label l : labels()) out.insert_unchecked(inverse(l));
    out.mags_ = mags_;
    return out;
}

RelationSet RelationSet::union_with(const RelationSet& other) const {
    RelationSet out = *this;
    for (Label l : other.labels()) {
        if (!out.contains(l)) out.insert(l);
    }
    if (!out.mags_.x) out.mags_.x = other.mags_.x;
    if (!out.mags_.y) out.mags_.y = other.mags_.y;
    return out;
}

std::string RelationSet::answer_text() const {
    auto ls = labels();
    std::string out;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i > 0) out += ", ";
        if (i + 1 == ls.size() && ls.size() > 1) out += "and ";
        out += label_text(ls[i]);
    }
    return out;
}

}  // namespace sparc
