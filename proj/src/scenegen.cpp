// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/scenegen.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "sparc/errors.hpp"
#include "sparc/verbalize.hpp"

namespace sparc {

namespace {

struct Statement {
    std::string sentence;
    ContextTriple triple;
};

std::vector<char> shuffled_alphabet(Rng& rng) {
    std::vector<char> letters;
    for (char c = 'A'; c <= 'Z'; ++c) letters.push_back(c);
    rng.shuffle(letters);
    return letters;
}

std::vector<std::string> letter_names(int n, Rng& rng) {
    auto letters = shuffled_alphabet(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, letters[static_cast<std::size_t>(i)]);
    return names;
}

std::vector<std::string> box_names(int n, Rng& rng) {
    auto letters = shuffled_alphabet(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("box " + std::string(3, letters[static_cast<std::size_t>(i)]));
    return names;
}

const char* cardinal_of(Label l) {
    switch (l) {
        case Label::Above: return "north";
        case Label::Below: return "south";
        case Label::Right: return "east";
        case Label::Left: return "west";
        default: return nullptr;
    }
}

int dial_for(int sx, int sy, Rng& rng) {
    if (sx == 0) return sy > 0 ? 12 : 6;
    if (sy == 0) return sx > 0 ? 3 : 9;
    if (sx > 0) return sy > 0 ? static_cast<int>(rng.range(1, 2)) : static_cast<int>(rng.range(4, 5));
    return sy > 0 ? static_cast<int>(rng.range(10, 11)) : static_cast<int>(rng.range(7, 8));
}

// One spoken sentence for a planar directional statement. Offsets of one
// unit per axis admit the whole phrasing zoo; anything larger is spelled
// with its counts.
std::string direction_sentence(const std::string& h, const RelationSet& rels, const std::string& t, int dx,
                               int dy, bool allow_clock, Rng& rng) {
    bool small = std::abs(dx) <= 1 && std::abs(dy) <= 1;
    if (!small) return render_clause(h, rels, t) + ".";

    auto sign = [](int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
    std::vector<Label> ls = rels.labels();
    bool diagonal = dx != 0 && dy != 0;

    if (allow_clock && rng.chance(diagonal ? 0.4 : 0.2)) {
        int dial = dial_for(sign(dx), sign(dy), rng);
        if (rng.chance(0.5)) {
            const std::string& flavor = label_text(ls.front());  // vertical label first in canonical order
            return h + " is " + flavor + " " + t + " at " + std::to_string(dial) + " o'clock.";
        }
        return h + " is at the " + std::to_string(dial) + " o'clock position relative to " + t + ".";
    }

    if (diagonal) {
        Label vert = dy > 0 ? Label::Above : Label::Below;
        Label horiz = dx > 0 ? Label::Right : Label::Left;
        if (rng.chance(0.3)) {
            return h + " is on the " + label_text(horiz) + " side of and " + label_text(vert) + " " + t + ".";
        }
        return render_clause(h, rels, t) + ".";
    }

    Label l = ls.front();
    if (is_vertical(l)) {
        switch (rng.below(3)) {
            case 0: return h + " is to the " + cardinal_of(l) + " of " + t + ".";
            case 1: return h + " and " + t + " are vertical and " + h + " is " + label_text(l) + " " + t + ".";
            default: return render_clause(h, rels, t) + ".";
        }
    }
    switch (rng.below(5)) {
        case 0: return h + " is to the " + label_text(l) + " of " + t + ".";
        case 1: return h + " is on the " + label_text(l) + " side of " + t + ".";
        case 2: return h + " is to the " + cardinal_of(l) + " of " + t + ".";
        case 3: return h + " and " + t + " are horizontal and " + h + " is to the " + label_text(l) + " of " + t + ".";
        default: return render_clause(h, rels, t) + ".";
    }
}

// Planar point chain: each consecutive pair gets one statement reading its
// exact offset, with counts kept only under a quantitative property set.
void point_scene(const PropertySet& ps, int n, Rng& rng, std::vector<Statement>& out,
                 std::vector<ScenePlacement>& placements) {
    std::vector<std::string> names = letter_names(n, rng);
    std::vector<std::pair<int, int>> pos;
    pos.emplace_back(0, 0);
    for (int i = 1; i < n; ++i) {
        while (true) {
            int dx = static_cast<int>(rng.range(-3, 3));
            int dy = static_cast<int>(rng.range(-3, 3));
            if (dx == 0 && dy == 0) continue;
            std::pair<int, int> cand{pos.back().first + dx, pos.back().second + dy};
            if (std::find(pos.begin(), pos.end(), cand) != pos.end()) continue;
            pos.push_back(cand);
            break;
        }
    }
    for (int i = 0; i < n; ++i) {
        placements.push_back({names[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i)].first,
                              pos[static_cast<std::size_t>(i)].second, 0, pos[static_cast<std::size_t>(i)].first,
                              pos[static_cast<std::size_t>(i)].second, 0});
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::size_t hi = static_cast<std::size_t>(i), ti = static_cast<std::size_t>(i + 1);
        if (rng.chance(0.5)) std::swap(hi, ti);
        int dx = pos[hi].first - pos[ti].first;
        int dy = pos[hi].second - pos[ti].second;
        RelationSet rels;
        Magnitudes mags;
        if (dx > 0) rels.insert(Label::Right);
        if (dx < 0) rels.insert(Label::Left);
        if (dy > 0) rels.insert(Label::Above);
        if (dy < 0) rels.insert(Label::Below);
        if (ps.quantitative()) {
            if (dx != 0) mags.x = std::abs(dx);
            if (dy != 0) mags.y = std::abs(dy);
        }
        rels.set_magnitudes(mags);
        ContextTriple tr;
        tr.head = names[hi];
        tr.tail = names[ti];
        tr.relations = rels;
        out.push_back({direction_sentence(names[hi], rels, names[ti], dx, dy, /*allow_clock=*/true, rng), tr});
    }
}

// Planar rectangle chain. A single-direction statement is only made when
// the orthogonal projections really overlap, since stating one label
// asserts exactly that; diagonal placements get the two-label statement.
void rect_scene(const PropertySet&, int n, Rng& rng, std::vector<Statement>& out,
                std::vector<ScenePlacement>& placements) {
    std::vector<std::string> names = letter_names(n, rng);
    placements.push_back({names[0], 0, 0, 0, static_cast<int>(rng.range(2, 4)), static_cast<int>(rng.range(2, 4)), 0});
    for (int i = 1; i < n; ++i) {
        const ScenePlacement& p = placements.back();
        int w = static_cast<int>(rng.range(2, 4));
        int h = static_cast<int>(rng.range(2, 4));
        int kind = static_cast<int>(rng.below(3));  // 0 horizontal, 1 vertical, 2 diagonal
        int sx = rng.chance(0.5) ? 1 : -1;
        int sy = rng.chance(0.5) ? 1 : -1;
        int gx = static_cast<int>(rng.range(0, 2));
        int gy = static_cast<int>(rng.range(0, 2));
        ScenePlacement b;
        b.id = names[static_cast<std::size_t>(i)];
        if (kind == 0) {
            b.x0 = sx > 0 ? p.x1 + gx : p.x0 - gx - w;
            b.y0 = static_cast<int>(rng.range(p.y0 - h, p.y1));  // keeps the y projections overlapping
        } else if (kind == 1) {
            b.y0 = sy > 0 ? p.y1 + gy : p.y0 - gy - h;
            b.x0 = static_cast<int>(rng.range(p.x0 - w, p.x1));
        } else {
            b.x0 = sx > 0 ? p.x1 + gx : p.x0 - gx - w;
            b.y0 = sy > 0 ? p.y1 + gy : p.y0 - gy - h;
        }
        b.x1 = b.x0 + w;
        b.y1 = b.y0 + h;
        placements.push_back(b);
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::size_t hi = static_cast<std::size_t>(i), ti = static_cast<std::size_t>(i + 1);
        if (rng.chance(0.5)) std::swap(hi, ti);
        const ScenePlacement& a = placements[hi];
        const ScenePlacement& b = placements[ti];
        RelationSet rels;
        if (a.x0 >= b.x1) rels.insert(Label::Right);
        if (a.x1 <= b.x0) rels.insert(Label::Left);
        if (a.y0 >= b.y1) rels.insert(Label::Above);
        if (a.y1 <= b.y0) rels.insert(Label::Below);
        int dx = rels.contains(Label::Right) ? 1 : rels.contains(Label::Left) ? -1 : 0;
        int dy = rels.contains(Label::Above) ? 1 : rels.contains(Label::Below) ? -1 : 0;
        ContextTriple tr;
        tr.head = a.id;
        tr.tail = b.id;
        tr.relations = rels;
        out.push_back({direction_sentence(a.id, rels, b.id, dx, dy, /*allow_clock=*/false, rng), tr});
    }
}

const std::vector<std::string>& described_lexicon() {
    static const std::vector<std::string> lex = {
        "tiny white rectangle",
        "small black square",
        "large yellow box",
        "little green rectangle",
    };
    return lex;
}

std::string containment_sentence(const std::string& child, const std::string& parent, bool touching,
                                 bool parent_oriented, bool child_described, Rng& rng) {
    std::string the_child = child_described ? "the " + child : child;
    std::string a_child = child_described ? "a " + child : child;
    if (parent_oriented) {
        return parent + (touching ? " contains and touches " : " contains ") + the_child + ".";
    }
    if (touching) {
        if (rng.chance(0.4)) return parent + " covers " + a_child + ".";
        std::string subject = child_described ? "The " + child : child;
        return subject + " is inside and touching " + parent + ".";
    }
    if (rng.chance(0.4)) return parent + " has " + a_child + ".";
    std::string subject = child_described ? "The " + child : child;
    return subject + " is inside " + parent + ".";
}

// Three-dimensional scene: rooms walk away from each other one axis at a
// time, each related to the previous room by a direction or a distance;
// the rest of the entities nest inside the rooms, shrinking one unit of
// margin per level (touching children keep one face flush).
void room_scene(const PropertySet& ps, int n, Rng& rng, std::vector<Statement>& out,
                std::vector<ScenePlacement>& placements) {
    (void)ps;
    std::vector<std::string> names = box_names(n, rng);
    int rooms = std::min(std::max(2, std::min(4, n / 3 + 1)), n);
    int per_room = (n - rooms + rooms - 1) / std::max(rooms, 1);
    int side = 2 * std::max(per_room, 1) + 4;

    struct Room {
        std::array<int, 3> at;  // origin corner
        int kind;               // 0 direction, 1 near, 2 far; edge to the previous room
        int axis = 0;
        int sign = 1;
    };
    std::vector<Room> layout;
    layout.push_back({{0, 0, 0}, 0});
    auto overlaps = [&](const std::array<int, 3>& at) {
        for (const Room& r : layout) {
            bool apart = false;
            for (int a = 0; a < 3; ++a) {
                if (at[a] >= r.at[a] + side || r.at[a] >= at[a] + side) apart = true;
            }
            if (!apart) return true;
        }
        return false;
    };
    for (int j = 1; j < rooms; ++j) {
        double kind_draw = rng.chance(0.7) ? 0 : rng.chance(0.5) ? 1 : 2;
        Room room;
        room.kind = static_cast<int>(kind_draw);
        for (int attempt = 0;; ++attempt) {
            room.axis = static_cast<int>(rng.below(3));
            room.sign = rng.chance(0.5) ? 1 : -1;
            int gap = room.kind == 1 ? 1 : room.kind == 2 ? 2 * side + 5 : static_cast<int>(rng.range(1, 3));
            room.at = layout.back().at;
            room.at[static_cast<std::size_t>(room.axis)] += room.sign * (side + gap);
            if (!overlaps(room.at)) break;
            if (attempt >= 20) {  // walk home again; stretch along x instead
                int max_x = 0;
                for (const Room& r : layout) max_x = std::max(max_x, r.at[0]);
                room.axis = 0;
                room.sign = 1;
                room.at = {max_x + side + gap, layout.back().at[1], layout.back().at[2]};
                break;
            }
        }
        layout.push_back(room);
    }

    for (int j = 0; j < rooms; ++j) {
        const Room& r = layout[static_cast<std::size_t>(j)];
        placements.push_back({names[static_cast<std::size_t>(j)], r.at[0], r.at[1], r.at[2], r.at[0] + side,
                              r.at[1] + side, r.at[2] + side});
    }

    static const Label axis_labels[3][2] = {{Label::Left, Label::Right},
                                            {Label::Below, Label::Above},
                                            {Label::Behind, Label::Front}};
    for (int j = 1; j < rooms; ++j) {
        const Room& r = layout[static_cast<std::size_t>(j)];
        const std::string& prev = names[static_cast<std::size_t>(j - 1)];
        const std::string& cur = names[static_cast<std::size_t>(j)];
        ContextTriple tr;
        std::string sentence;
        if (r.kind != 0) {
            bool flip = rng.chance(0.5);
            tr.head = flip ? prev : cur;
            tr.tail = flip ? cur : prev;
            if (r.kind == 1) {
                tr.relations = RelationSet{Label::Near};
                sentence = tr.head + (rng.chance(0.5) ? " is near to " : " is near ") + tr.tail + ".";
            } else {
                tr.relations = RelationSet{Label::Far};
                sentence = tr.head + " is far from " + tr.tail + ".";
            }
        } else {
            // cur sits at sign-side of prev along axis
            bool flip = rng.chance(0.5);
            int sign = flip ? -r.sign : r.sign;
            tr.head = flip ? prev : cur;
            tr.tail = flip ? cur : prev;
            Label l = axis_labels[r.axis][sign > 0 ? 1 : 0];
            tr.relations = RelationSet{l};
            switch (l) {
                case Label::Front: sentence = tr.head + " is in front of " + tr.tail + "."; break;
                case Label::Behind: sentence = tr.head + " is behind " + tr.tail + "."; break;
                case Label::Above:
                case Label::Below:
                    sentence = rng.chance(0.3)
                                   ? tr.head + " is to the " + cardinal_of(l) + " of " + tr.tail + "."
                                   : tr.head + " is " + label_text(l) + " " + tr.tail + ".";
                    break;
                default:
                    sentence = rng.chance(0.3)
                                   ? tr.head + " is to the " + cardinal_of(l) + " of " + tr.tail + "."
                                   : tr.head + " is to the " + label_text(l) + " of " + tr.tail + ".";
                    break;
            }
        }
        out.push_back({sentence, tr});
    }

    // Nesting chains, children dealt to rooms round-robin.
    std::vector<int> chain_tip(static_cast<std::size_t>(rooms));
    std::vector<int> room_leaf(static_cast<std::size_t>(rooms), -1);
    for (int j = 0; j < rooms; ++j) chain_tip[static_cast<std::size_t>(j)] = j;
    int described_at = -1;
    if (n > rooms && rng.chance(0.3)) described_at = rooms + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - rooms)));
    for (int i = rooms; i < n; ++i) {
        int j = (i - rooms) % rooms;
        int parent_idx = chain_tip[static_cast<std::size_t>(j)];
        if (i == described_at) names[static_cast<std::size_t>(i)] = rng.pick(described_lexicon());
        const ScenePlacement& parent = placements[static_cast<std::size_t>(parent_idx)];
        bool touching = rng.chance(0.4);
        ScenePlacement child;
        child.id = names[static_cast<std::size_t>(i)];
        child.x0 = parent.x0 + 1;
        child.y0 = parent.y0 + 1;
        child.z0 = parent.z0 + 1;
        child.x1 = parent.x1 - 1;
        child.y1 = parent.y1 - 1;
        child.z1 = parent.z1 - 1;
        if (touching) {
            switch (rng.below(3)) {  // one face flush with the parent
                case 0: child.x0 = parent.x0; break;
                case 1: child.y0 = parent.y0; break;
                default: child.z1 = parent.z1; break;
            }
        }
        placements.push_back(child);

        ContextTriple tr;
        bool parent_oriented = rng.chance(0.4);
        if (parent_oriented) {
            tr.head = parent.id;
            tr.tail = child.id;
            tr.relations = RelationSet{touching ? Label::ContainsTouches : Label::Contains};
        } else {
            tr.head = child.id;
            tr.tail = parent.id;
            tr.relations = RelationSet{touching ? Label::InsideTouching : Label::Inside};
        }
        bool described = i == described_at;
        out.push_back({containment_sentence(child.id, parent.id, touching, parent_oriented, described, rng), tr});
        chain_tip[static_cast<std::size_t>(j)] = i;
        room_leaf[static_cast<std::size_t>(j)] = i;
    }

    // Occasional disconnection statement between the innermost boxes of
    // adjacent rooms; true since rooms never overlap.
    for (int j = 1; j < rooms; ++j) {
        int a = room_leaf[static_cast<std::size_t>(j - 1)];
        int b = room_leaf[static_cast<std::size_t>(j)];
        if (a < 0 || b < 0 || !rng.chance(0.25)) continue;
        ContextTriple tr;
        tr.head = names[static_cast<std::size_t>(a)];
        tr.tail = names[static_cast<std::size_t>(b)];
        tr.relations = RelationSet{Label::Outside};
        std::string subject = a == described_at ? "The " + tr.head : tr.head;
        out.push_back({subject + " is outside " + (rng.chance(0.5) ? "of " : "") + tr.tail + ".", tr});
    }
}

}  // namespace

const ScenePlacement* Scene::find(const std::string& id) const {
    for (const ScenePlacement& p : placements) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

Scene gen_scene(const PropertySet& ps, int n_entities, Rng& rng) {
    if (n_entities < 2 || n_entities > 26) {
        throw Error("a scene wants between 2 and 26 entities, got " + std::to_string(n_entities));
    }
    std::vector<Statement> statements;
    Scene scene;
    if (ps.objects == ObjectKind::Point) {
        point_scene(ps, n_entities, rng, statements, scene.placements);
    } else if (ps.dimensions == 3) {
        room_scene(ps, n_entities, rng, statements, scene.placements);
    } else {
        rect_scene(ps, n_entities, rng, statements, scene.placements);
    }
    rng.shuffle(statements);
    scene.context.property_set = &ps;
    for (std::size_t i = 0; i < statements.size(); ++i) {
        scene.context.text.push_back(statements[i].sentence);
        ContextTriple t = statements[i].triple;
        t.sentence_index = static_cast<int>(i);
        add_triple(scene.context, std::move(t));
    }
    for (Entity& e : scene.context.entities) {
        e.described = e.id.find(' ') != std::string::npos && e.id.rfind("box ", 0) != 0;
    }
    return scene;
}

}  // namespace sparc
