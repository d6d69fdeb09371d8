// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sparc/relations.hpp"

namespace sparc {

// Per-axis unit counts attached to directional labels. Counts are
// non-negative; direction lives in the labels, not here.
struct Magnitudes {
    std::optional<int> x;  // units along left/right
    std::optional<int> y;  // units along above/below

    bool operator==(const Magnitudes&) const = default;
    bool empty() const { return !x && !y; }
};

// A set of canonical labels plus optional magnitudes. Checked
// construction rejects a label together with its inverse and any two
// region-connection members; unchecked construction exists for model
// output, which may well be contradictory and still needs scoring.
class RelationSet {
  public:
    RelationSet() = default;
    RelationSet(std::initializer_list<Label> labels);  // checked

    static RelationSet checked(const std::vector<Label>& labels, Magnitudes mags = {});
    static RelationSet unchecked(const std::vector<Label>& labels, Magnitudes mags = {});

    // Throws ContradictionError on an inverse pair or a second RCC member.
    void insert(Label l);
    void insert_unchecked(Label l);

    bool contains(Label l) const { return mask_ & bit(l); }
    bool empty() const { return mask_ == 0; }
    std::size_t size() const;
    bool operator==(const RelationSet&) const = default;

    // Labels in canonical enum order (vertical before horizontal).
    std::vector<Label> labels() const;
    std::vector<Label> directional_labels() const;

    // Element-wise inverse; magnitudes ride along unchanged since the
    // axis of each label is preserved.
    RelationSet inverted() const;

    RelationSet union_with(const RelationSet& other) const;  // checked
    bool same_labels(const RelationSet& other) const { return mask_ == other.mask_; }

    const Magnitudes& magnitudes() const { return mags_; }
    void set_magnitudes(Magnitudes m) { mags_ = m; }

    // "above, and left" / "left" / oxford-comma list in canonical order.
    std::string answer_text() const;

    std::uint16_t mask() const { return mask_; }

  private:
    static std::uint16_t bit(Label l) { return static_cast<std::uint16_t>(1u << static_cast<unsigned>(l)); }
    std::uint16_t mask_ = 0;
    Magnitudes mags_;
};

}  // namespace sparc
