#include "doctest.h"
#include "test_util.h"

#include "arrangement/links.h"

#include <set>

using namespace srs;
using testutil::Rng;

namespace {

Line ln(long slope, long intercept) { return Line(scalar_of(slope), scalar_of(intercept)); }

std::vector<Line> random_lines(Rng& rng, int n, long range = 500) {
    std::vector<Line> lines;
    std::set<std::pair<std::string, std::string>> seen;
    while (static_cast<int>(lines.size()) < n) {
        Line l = testutil::rand_line(rng, range);
        auto key = std::make_pair(l.slope.get_str(), l.intercept.get_str());
        if (seen.insert(key).second) lines.push_back(l);
    }
    return lines;
}

// Independent oracle: identify p's face from its sidedness signs alone.
FaceRef oracle_locate(const Arrangement& arr, const Point& p, Nudge nudge = Nudge::None) {
    std::vector<int> on_lines;
    for (std::size_t l = 0; l < arr.lines().size(); ++l)
        if (side_of_line(arr.lines()[l], p, nudge) == 0) on_lines.push_back(static_cast<int>(l));

    if (on_lines.size() >= 2) {
        for (std::size_t v = 0; v < arr.vertices().size(); ++v)
            if (arr.vertices()[v] == p) return {0, static_cast<int32_t>(v)};
        REQUIRE(false);
    }
    if (on_lines.size() == 1) {
        int l = on_lines[0];
        const auto& lv = arr.line_vertices(l);
        std::size_t e = 0;
        while (e < lv.size() && cmp3(arr.vertices()[lv[e]].x, p.x) < 0) ++e;
        // p is not a vertex here, so it falls strictly inside edge e.
        int32_t edge_id = -1;
        int count = 0;
        for (std::size_t i = 0; i < arr.edges().size(); ++i) {
            if (arr.edges()[i].line != l) continue;
            if (count == static_cast<int>(e)) edge_id = static_cast<int32_t>(i);
            ++count;
        }
        return {1, edge_id};
    }
    for (std::size_t f = 0; f < arr.two_faces().size(); ++f) {
        const Point& rep = arr.two_faces()[f].rep;
        bool same = true;
        for (const Line& l : arr.lines())
            if (side_of_line(l, rep) != side_of_line(l, p, nudge)) {
                same = false;
                break;
            }
        if (same) return {2, static_cast<int32_t>(f)};
    }
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("arrangement face counts") {
    Arrangement a0({});
    CHECK(a0.two_faces().size() == 1);

    Arrangement a2({ln(1, 0), ln(-1, 0)});
    CHECK(a2.two_faces().size() == 4);
    CHECK(a2.vertices().size() == 1);
    CHECK(a2.edges().size() == 4);

    Arrangement a3({ln(1, 0), ln(-1, 0), ln(0, -2)});
    CHECK(a3.two_faces().size() == 7);
    CHECK(a3.general_position());
}

TEST_CASE("arrangement face-count formula on random general-position builds") {
    Rng rng(41);
    for (int n : {4, 9, 17}) {
        auto lines = random_lines(rng, n);
        Arrangement arr(lines);
        if (!arr.general_position()) continue;
        std::size_t nn = static_cast<std::size_t>(n);
        CHECK(arr.two_faces().size() == 1 + nn + nn * (nn - 1) / 2);
        CHECK(arr.vertices().size() == nn * (nn - 1) / 2);
        // n^2 edges: each line is cut into n pieces by the other n-1 lines.
        CHECK(arr.edges().size() == nn * nn);
    }
}

TEST_CASE("every edge borders exactly two 2-faces") {
    Rng rng(43);
    auto lines = random_lines(rng, 12);
    Arrangement arr(lines);
    for (const auto& e : arr.edges()) {
        CHECK(e.face_above >= 0);
        CHECK(e.face_below >= 0);
        CHECK(e.face_above != e.face_below);
    }
}

TEST_CASE("locate_face fixtures") {
    Arrangement one({ln(0, 0)});  // the x-axis
    FaceRef above = one.locate_face(Point(scalar_of(0), scalar_of(5)));
    CHECK(above.dim == 2);
    CHECK(side_of_line(one.lines()[0], one.two_faces()[above.idx].rep) > 0);

    Arrangement two({ln(1, 0), ln(-1, 0)});
    FaceRef at_origin = two.locate_face(Point(scalar_of(0), scalar_of(0)));
    CHECK(at_origin.dim == 0);
}

TEST_CASE("locate_face agrees with the sign-vector oracle") {
    Rng rng(47);
    for (int n : {1, 2, 7, 15}) {
        auto lines = random_lines(rng, n, 60);
        Arrangement arr(lines);
        long steps = 0;
        for (int i = 0; i < 800; ++i) {
            Point p = testutil::rand_point(rng, 80);
            CHECK(arr.locate_face(p, Nudge::None, &steps) == oracle_locate(arr, p));
        }
        CHECK(steps > 0);
    }
}

TEST_CASE("locate_face resolves on-line and nudged points") {
    Rng rng(53);
    auto lines = random_lines(rng, 9, 40);
    Arrangement arr(lines);

    // Points on edges and vertices, exact and nudged.
    for (std::size_t e = 0; e < arr.edges().size(); ++e) {
        Point p = arr.representative({1, static_cast<int32_t>(e)});
        CHECK(arr.locate_face(p) == FaceRef{1, static_cast<int32_t>(e)});
        FaceRef up = arr.locate_face(p, Nudge::Up);
        CHECK(up.dim == 2);
        CHECK(up == oracle_locate(arr, p, Nudge::Up));
    }
    for (std::size_t v = 0; v < arr.vertices().size(); ++v) {
        Point p = arr.vertices()[v];
        CHECK(arr.locate_face(p) == FaceRef{0, static_cast<int32_t>(v)});
        CHECK(arr.locate_face(p, Nudge::Up) == oracle_locate(arr, p, Nudge::Up));
        CHECK(arr.locate_face(p, Nudge::Down) == oracle_locate(arr, p, Nudge::Down));
    }
}

TEST_CASE("batch_locate matches locate_face") {
    Rng rng(59);
    auto lines = random_lines(rng, 11, 50);
    Arrangement arr(lines);
    std::vector<Point> pts;
    for (int i = 0; i < 500; ++i) pts.push_back(testutil::rand_point(rng, 70));
    for (std::size_t e = 0; e < arr.edges().size(); e += 3)
        pts.push_back(arr.representative({1, static_cast<int32_t>(e)}));
    for (std::size_t v = 0; v < arr.vertices().size(); v += 2) pts.push_back(arr.vertices()[v]);

    auto got = arr.batch_locate(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(got[i] == arr.locate_face(pts[i]));
}

TEST_CASE("subarrangement links: identity, empty, and two-to-one") {
    Rng rng(61);
    auto lines = random_lines(rng, 2, 30);
    Arrangement parent(lines);

    SubarrLinkTable ident(parent, parent, {0, 1});
    for (std::size_t f = 0; f < parent.two_faces().size(); ++f)
        CHECK(ident.subarr_locate({2, static_cast<int32_t>(f)}) == FaceRef{2, static_cast<int32_t>(f)});

    Arrangement empty_child({});
    SubarrLinkTable to_empty(parent, empty_child, {});
    for (std::size_t f = 0; f < parent.two_faces().size(); ++f)
        CHECK(to_empty.subarr_locate({2, static_cast<int32_t>(f)}) == FaceRef{2, 0});

    Arrangement child({lines[0]});
    SubarrLinkTable half(parent, child, {0});
    for (std::size_t f = 0; f < parent.two_faces().size(); ++f) {
        Point rep = parent.two_faces()[f].rep;
        FaceRef cf = half.subarr_locate({2, static_cast<int32_t>(f)});
        REQUIRE(cf.dim == 2);
        CHECK(side_of_line(lines[0], child.two_faces()[cf.idx].rep) == side_of_line(lines[0], rep));
    }

    CHECK_THROWS(half.subarr_locate({2, 999999}));
}

TEST_CASE("subarrangement link soundness and composition on nested triples") {
    Rng rng(67);
    auto lines = random_lines(rng, 10, 40);
    Arrangement big(lines);

    std::vector<int32_t> mid_ids = {0, 2, 3, 5, 7, 9};
    std::vector<Line> mid_lines;
    for (int32_t i : mid_ids) mid_lines.push_back(lines[i]);
    Arrangement mid(mid_lines);

    std::vector<int32_t> small_in_mid = {1, 3, 4};  // lines 2, 5, 7
    std::vector<Line> small_lines;
    for (int32_t i : small_in_mid) small_lines.push_back(mid_lines[i]);
    Arrangement small(small_lines);

    SubarrLinkTable big_mid(big, mid, mid_ids);
    SubarrLinkTable mid_small(mid, small, small_in_mid);
    SubarrLinkTable big_small(big, small, {2, 5, 7});

    auto each_face = [&](auto&& fn) {
        for (std::size_t v = 0; v < big.vertices().size(); ++v) fn(FaceRef{0, static_cast<int32_t>(v)});
        for (std::size_t e = 0; e < big.edges().size(); ++e) fn(FaceRef{1, static_cast<int32_t>(e)});
        for (std::size_t f = 0; f < big.two_faces().size(); ++f) fn(FaceRef{2, static_cast<int32_t>(f)});
    };

    each_face([&](FaceRef f) {
        // Soundness: the face's sample point lies in the mapped child face.
        Point rep = big.representative(f);
        FaceRef mf = big_mid.subarr_locate(f);
        CHECK(mf == mid.locate_face(rep));
        // Composition: big->mid->small equals big->small.
        CHECK(mid_small.subarr_locate(mf) == big_small.subarr_locate(f));
    });
}
