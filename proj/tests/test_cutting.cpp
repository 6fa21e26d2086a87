#include "doctest.h"
#include "test_util.h"

#include "cutting/cutting.h"

#include <set>

using namespace srs;
using testutil::Rng;

namespace {

std::vector<Line> distinct_lines(Rng& rng, int n, long range = 2000) {
    std::vector<Line> lines;
    std::set<std::pair<std::string, std::string>> seen;
    while (static_cast<int>(lines.size()) < n) {
        Line l = testutil::rand_line(rng, range);
        if (seen.insert({l.slope.get_str(), l.intercept.get_str()}).second) lines.push_back(l);
    }
    return lines;
}

}  // namespace

TEST_CASE("cutting trivial cases") {
    Cutting empty = build_cutting({}, 1, 1);
    REQUIRE(empty.cells.size() == 1);
    CHECK(empty.cells[0].conflict.empty());
    CHECK(empty.locate(Point(scalar_of(3), scalar_of(-7))) == 0);

    Cutting one = build_cutting({Line(scalar_of(1), scalar_of(0))}, 1, 1);
    CHECK(one.cells.size() <= 8);
    for (const auto& c : one.cells)
        for (int32_t id : c.conflict) CHECK(id == 0);
}

TEST_CASE("build_cutting meets bounds and verifies") {
    Rng rng(71);
    auto lines = distinct_lines(rng, 64);
    Cutting c = build_cutting(lines, 8, 42);
    auto rep = verify_cutting(c, lines);
    CHECK(rep.conflict_bound_ok);
    CHECK(rep.count_bound_ok);
    CHECK(rep.partition_ok);
    CHECK(rep.coverage_ok);
    CHECK(rep.disjoint_ok);
    CHECK(rep.max_conflict * 8 <= 8 * 64);
}

TEST_CASE("locate returns a containing cell") {
    Rng rng(73);
    auto lines = distinct_lines(rng, 48);
    Cutting c = build_cutting(lines, 6, 9);
    long steps = 0;
    for (int i = 0; i < 10000; ++i) {
        Point p = testutil::rand_point(rng, 3000);
        int32_t cell = c.locate(p, Nudge::None, &steps);
        REQUIRE(cell >= 0);
        CHECK(c.cells[cell].contains(p));
    }
    CHECK(steps > 0);

    // A known fixture: the interior sample of each cell locates to a cell
    // containing it (ties may pick a lower id on shared boundaries).
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        int32_t got = c.locate(c.cells[i].interior);
        CHECK(c.cells[got].contains(c.cells[i].interior));
    }
}

TEST_CASE("nudged locate respects symbolic offsets") {
    Rng rng(79);
    auto lines = distinct_lines(rng, 24);
    Cutting c = build_cutting(lines, 4, 5);
    for (int i = 0; i < 300; ++i) {
        // Points exactly on input lines; the nudge must land in a cell whose
        // closed region contains the point.
        const Line& l = lines[static_cast<std::size_t>(testutil::rand_int(rng, 0, 23))];
        Scalar x = scalar_of(testutil::rand_int(rng, -50, 50), 7);
        Point p(x, l.value_at(x));
        for (Nudge n : {Nudge::Up, Nudge::Down}) {
            int32_t cell = c.locate(p, n);
            REQUIRE(cell >= 0);
            CHECK(c.cells[cell].contains(p, n));
        }
    }
}

TEST_CASE("verify_cutting flags hand-built examples") {
    Cutting good;
    good.lines = {};
    good.r = 1;
    TrapezoidCell left, right;
    left.xr = scalar_of(0);
    left.interior = Point(scalar_of(-1), scalar_of(0));
    right.xl = scalar_of(0);
    right.interior = Point(scalar_of(1), scalar_of(0));
    good.cells = {left, right};
    good.build_locator();
    auto rep = verify_cutting(good, good.lines);
    CHECK(rep.coverage_ok);
    CHECK(rep.disjoint_ok);
    CHECK(rep.partition_ok);

    Cutting bad = good;
    bad.cells[1].xl.reset();  // now overlaps the left cell
    bad.build_locator();
    auto rep2 = verify_cutting(bad, bad.lines);
    CHECK(!rep2.disjoint_ok);
}

TEST_CASE("hierarchical cutting tree") {
    Rng rng(83);
    auto lines = distinct_lines(rng, 64);

    CuttingTree flatish = build_hierarchical(lines, {1}, 3);
    CHECK(flatish.levels.size() == 1);
    CHECK(flatish.levels[0].cells.size() == 1);

    CuttingTree tree = build_hierarchical(lines, {2, 4, 8}, 17);
    REQUIRE(tree.levels.size() == 3);
    for (std::size_t d = 0; d < 3; ++d) {
        auto rep = verify_cutting(tree.levels[d], lines);
        CHECK(rep.conflict_bound_ok);
        CHECK(rep.count_bound_ok);
        CHECK(rep.coverage_ok);
        CHECK(rep.disjoint_ok);
    }

    // Child conflict lists are subsets of the parent's.
    for (std::size_t d = 1; d < 3; ++d) {
        for (std::size_t kid = 0; kid < tree.levels[d].cells.size(); ++kid) {
            const auto& child = tree.levels[d].cells[kid];
            const auto& par = tree.levels[d - 1].cells[tree.parent[d][kid]];
            std::set<int32_t> pc(par.conflict.begin(), par.conflict.end());
            for (int32_t id : child.conflict) CHECK(pc.count(id) == 1);
        }
    }

    // Containment along located paths.
    for (int i = 0; i < 1000; ++i) {
        Point p = testutil::rand_point(rng, 2500);
        auto path = tree.locate_path(p);
        REQUIRE(path.size() == 3);
        for (std::size_t d = 0; d < 3; ++d) CHECK(tree.levels[d].cells[path[d]].contains(p));
    }
}

TEST_CASE("hierarchical rejects bad sequences") {
    Rng rng(89);
    auto lines = distinct_lines(rng, 16);
    CHECK_THROWS_AS(build_hierarchical(lines, {4, 2}, 1), CuttingError);
    CHECK_THROWS_AS(build_hierarchical(lines, {2, 64}, 1), CuttingError);
}
