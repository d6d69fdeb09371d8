// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sparc {

// Relation vocabulary. Directional members carry a fixed observer
// orientation; clock positions are the full dial, not just the four
// axis-aligned ones.
enum class Relation : std::uint8_t {
    // Region connection (topology between extended objects).
    DC,
    EC,
    PO,
    EQ,
    TPP,
    NTPP,
    TPPI,
    NTPPI,
    // Relative directions, 3D.
    LEFT,
    RIGHT,
    ABOVE,
    BELOW,
    FRONT,
    BEHIND,
    // Cardinal directions (map onto the relative vocabulary).
    NORTH,
    SOUTH,
    EAST,
    WEST,
    // Clock-face positions.
    CLOCK_1,
    CLOCK_2,
    CLOCK_3,
    CLOCK_4,
    CLOCK_5,
    CLOCK_6,
    CLOCK_7,
    CLOCK_8,
    CLOCK_9,
    CLOCK_10,
    CLOCK_11,
    CLOCK_12,
    // Qualitative distance.
    NEAR,
    FAR,
};

inline constexpr std::size_t kRelationCount = 32;

// Canonical answer labels. Enum order is the canonical rendering order:
// vertical before horizontal, directions before topology before distance.
enum class Label : std::uint8_t {
    Above,
    Below,
    Front,
    Behind,
    Left,
    Right,
    Outside,
    OutsideTouching,
    PartiallyOverlapping,
    Overlapping,
    Inside,
    InsideTouching,
    Contains,
    ContainsTouches,
    Near,
    Far,
};

inline constexpr std::size_t kLabelCount = 16;

enum class Formalism : std::uint8_t {
    Topological,          // region connection set
    DirectionalRelative,  // left/right/above/below/front/behind
    DirectionalCardinal,  // north/south/east/west
    DirectionalClock,     // 1..12 o'clock
    Distance,             // near/far
};

const std::string& relation_name(Relation r);
const std::string& label_text(Label l);
Formalism formalism_of(Relation r);

// Reverse of a relation: LEFT<->RIGHT, clock k <-> k+6, TPP<->TPPI;
// symmetric members (DC, EC, PO, EQ, NEAR, FAR) map to themselves.
Relation inverse(Relation r);
Label inverse(Label l);

// True for DC/EC/PO/EQ/NEAR/FAR, where inverse(r) == r.
bool is_symmetric(Relation r);
bool is_rcc(Label l);
bool is_directional(Label l);
bool is_horizontal(Label l);  // Left or Right
bool is_vertical(Label l);    // Above or Below

// Table-driven mapping from a relation to its canonical label(s).
// Axis-aligned members map to one label; off-axis clock positions map to
// the two labels of their quadrant (e.g. 10 o'clock -> above, left).
const std::vector<Label>& canonical_labels(Relation r);

// The rule-engine member a canonical label denotes (left -> LEFT,
// inside -> NTPP, ...). Total: every label has exactly one.
Relation relation_of(Label l);

// Optional surface-form vocabulary loaded from a TSV asset
// ("surface<TAB>relation_name", '#' comments, blank lines ignored).
class SynonymTable {
  public:
    SynonymTable() = default;
    static SynonymTable load(const std::string& path);
    void add(std::string surface, Relation r);
    std::optional<Relation> find(std::string_view normalized) const;
    std::size_t size() const { return map_.size(); }

  private:
    std::unordered_map<std::string, Relation> map_;
};

// Lower-cased, trimmed, inner whitespace collapsed.
std::string normalize_token(std::string_view text);

// Resolves a surface token to a relation. Tries canonical label text
// first (labels resolve to the relative/topological/distance member),
// then relation names ("north", "ntpp", "3 o'clock"), then the synonym
// table. Throws UnknownLabelError otherwise.
Relation parse_label(std::string_view text, const SynonymTable* synonyms = nullptr);

// Label whose text equals the normalized token, if any.
std::optional<Label> parse_label_text(std::string_view text);

}  // namespace sparc
