// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "sparc/errors.hpp"
#include "sparc/relation_set.hpp"

using namespace sparc;

TEST_CASE("labels render in canonical order regardless of insertion") {
    RelationSet rs;
    rs.insert(Label::Right);
    rs.insert(Label::Above);
    CHECK(rs.labels() == std::vector<Label>{Label::Above, Label::Right});
    CHECK(rs.size() == 2);
    CHECK(rs.contains(Label::Right));
    CHECK_FALSE(rs.contains(Label::Left));
    CHECK_FALSE(rs.empty());
}

TEST_CASE("checked insertion rejects a label together with its inverse") {
    RelationSet rs{Label::Above};
    CHECK_THROWS_AS(rs.insert(Label::Below), ContradictionError);
    RelationSet lr{Label::Left};
    CHECK_THROWS_AS(lr.insert(Label::Right), ContradictionError);
}

TEST_CASE("checked insertion rejects a second region-connection member") {
    RelationSet rs{Label::Inside};
    CHECK_THROWS_AS(rs.insert(Label::Outside), ContradictionError);
    CHECK_THROWS_AS(rs.insert(Label::Overlapping), ContradictionError);
    // A direction can ride along with one connection member.
    RelationSet mixed{Label::Inside, Label::Left};
    CHECK(mixed.size() == 2);
}

TEST_CASE("unchecked construction tolerates model-style contradictions") {
    RelationSet rs = RelationSet::unchecked({Label::Above, Label::Below});
    CHECK(rs.size() == 2);
    rs.insert_unchecked(Label::Inside);
    rs.insert_unchecked(Label::Outside);
    CHECK(rs.size() == 4);
}

TEST_CASE("inversion flips labels and keeps magnitudes") {
    Magnitudes mags;
    mags.x = 2;
    mags.y = 3;
    RelationSet rs = RelationSet::checked({Label::Above, Label::Left}, mags);
    RelationSet inv = rs.inverted();
    CHECK(inv.labels() == std::vector<Label>{Label::Below, Label::Right});
    CHECK(inv.magnitudes() == mags);
    CHECK(inv.inverted() == rs);
    CHECK(RelationSet{Label::Near}.inverted() == RelationSet{Label::Near});
}

TEST_CASE("same_labels compares label sets only") {
    Magnitudes mags;
    mags.x = 4;
    RelationSet a = RelationSet::checked({Label::Right}, mags);
    RelationSet b{Label::Right};
    CHECK(a.same_labels(b));
    CHECK_FALSE(a == b);
    b.set_magnitudes(mags);
    CHECK(a == b);
}

TEST_CASE("union merges labels and rejects contradictions") {
    RelationSet a{Label::Above};
    RelationSet b{Label::Left};
    CHECK(a.union_with(b).labels() == std::vector<Label>{Label::Above, Label::Left});
    RelationSet below{Label::Below};
    CHECK_THROWS_AS(a.union_with(below), ContradictionError);
}

TEST_CASE("answer text lists labels with an oxford comma") {
    CHECK(RelationSet{Label::Above}.answer_text() == "above");
    CHECK(RelationSet{Label::Above, Label::Left}.answer_text() == "above, and left");
    RelationSet three{Label::Below, Label::Right, Label::Far};
    CHECK(three.answer_text() == "below, right, and far");
}

TEST_CASE("duplicate labels fold") {
    RelationSet rs = RelationSet::unchecked({Label::Near, Label::Near});
    CHECK(rs.size() == 1);
}
