#include "arrangement/arrangement.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace srs {

namespace {

// Gap g lies between order[g-1] and order[g]; gap 0 is below everything.
struct SweepOrder {
    std::vector<int32_t> order;  // line ids, bottom to top
    std::vector<int32_t> pos;    // inverse permutation

    void init(const std::vector<Line>& lines, const Scalar& x0) {
        order.resize(lines.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cmp3(lines[a].value_at(x0), lines[b].value_at(x0)) < 0;
        });
        pos.resize(lines.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int32_t>(i);
    }

    // Contiguous position run of the lines through one vertex.
    std::pair<int, int> run_of(const std::vector<int32_t>& through) const {
        int lo = pos[through[0]], hi = lo;
        for (int32_t l : through) {
            lo = std::min(lo, static_cast<int>(pos[l]));
            hi = std::max(hi, static_cast<int>(pos[l]));
        }
        assert(hi - lo + 1 == static_cast<int>(through.size()));
        return {lo, hi};
    }

    void reverse_run(int lo, int hi) {
        std::reverse(order.begin() + lo, order.begin() + hi + 1);
        for (int g = lo; g <= hi; ++g) pos[order[g]] = g;
    }
};

}  // namespace

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
    {
        std::vector<int> ids(lines_.size());
        std::iota(ids.begin(), ids.end(), 0);
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            int c = cmp3(lines_[a].slope, lines_[b].slope);
            return c != 0 ? c < 0 : cmp3(lines_[a].intercept, lines_[b].intercept) < 0;
        });
        for (std::size_t i = 1; i < ids.size(); ++i) {
            if (lines_[ids[i - 1]] == lines_[ids[i]])
                throw std::invalid_argument("Arrangement: duplicate line");
            if (lines_[ids[i - 1]].slope == lines_[ids[i]].slope) general_position_ = false;
        }
    }

    const int k = static_cast<int>(lines_.size());

    // Pairwise intersections, deduplicated into vertices.
    struct Hit {
        Point p;
        int32_t a, b;
    };
    std::vector<Hit> hits;
    hits.reserve(static_cast<std::size_t>(k) * (k > 1 ? k - 1 : 0) / 2);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (lines_[i].slope == lines_[j].slope) continue;
            Scalar x = (lines_[i].intercept - lines_[j].intercept) / (lines_[i].slope - lines_[j].slope);
            hits.push_back({Point(x, lines_[i].value_at(x)), i, j});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& u, const Hit& v) {
        int c = cmp3(u.p.x, v.p.x);
        return c != 0 ? c < 0 : cmp3(u.p.y, v.p.y) < 0;
    });
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        std::vector<int32_t> through;
        while (j < hits.size() && hits[j].p == hits[i].p) {
            through.push_back(hits[j].a);
            through.push_back(hits[j].b);
            ++j;
        }
        std::sort(through.begin(), through.end());
        through.erase(std::unique(through.begin(), through.end()), through.end());
        if (through.size() > 2) general_position_ = false;
        verts_.push_back(hits[i].p);
        vert_lines_.push_back(std::move(through));
        i = j;
    }

    line_verts_.resize(k);
    for (std::size_t v = 0; v < verts_.size(); ++v)
        for (int32_t l : vert_lines_[v]) line_verts_[l].push_back(static_cast<int32_t>(v));

    line_edges_.resize(k);
    for (int l = 0; l < k; ++l) {
        const auto& lv = line_verts_[l];
        for (std::size_t j = 0; j <= lv.size(); ++j) {
            Edge e;
            e.line = l;
            e.v0 = j > 0 ? lv[j - 1] : -1;
            e.v1 = j < lv.size() ? lv[j] : -1;
            line_edges_[l].push_back(static_cast<int32_t>(edges_.size()));
            edges_.push_back(e);
        }
    }

    // Wall grouping (vertices are sorted by (x, y)).
    for (std::size_t v = 0; v < verts_.size();) {
        std::size_t j = v;
        wall_verts_.emplace_back();
        while (j < verts_.size() && verts_[j].x == verts_[v].x)
            wall_verts_.back().push_back(static_cast<int32_t>(j++));
        wall_xs_.push_back(verts_[v].x);
        v = j;
    }

    sweep_faces();
    assign_edge_faces();
}

void Arrangement::sweep_faces() {
    const int k = static_cast<int>(lines_.size());
    const std::size_t walls = wall_xs_.size();

    auto slab_sample = [&](std::size_t s) -> Scalar {
        if (walls == 0) return Scalar(0);
        if (s == 0) return wall_xs_.front() - 1;
        if (s == walls) return wall_xs_.back() + 1;
        return (wall_xs_[s - 1] + wall_xs_[s]) / 2;
    };

    if (k == 0) {
        TwoFace plane;
        plane.left_open = plane.right_open = true;
        plane.rep = Point(Scalar(0), Scalar(0));
        faces_.push_back(std::move(plane));
        return;
    }

    SweepOrder sw;
    sw.init(lines_, slab_sample(0));

    auto face_rep = [&](std::size_t slab, int gap) -> Point {
        Scalar x = slab_sample(slab);
        if (gap == 0 && k == 0) return Point(x, Scalar(0));
        if (gap == 0) return Point(x, lines_[sw.order[0]].value_at(x) - 1);
        if (gap == k) return Point(x, lines_[sw.order[k - 1]].value_at(x) + 1);
        return Point(x, (lines_[sw.order[gap - 1]].value_at(x) + lines_[sw.order[gap]].value_at(x)) / 2);
    };

    std::vector<int32_t> gap_face(k + 1, -1);
    auto open_face = [&](std::size_t slab, int gap, int32_t left_vertex) {
        TwoFace f;
        f.left_vertex = left_vertex;
        f.left_open = left_vertex < 0;
        if (gap > 0) f.lower_lines.push_back(sw.order[gap - 1]);
        if (gap < k) f.upper_lines.push_back(sw.order[gap]);
        f.rep = face_rep(slab, gap);
        gap_face[gap] = static_cast<int32_t>(faces_.size());
        faces_.push_back(std::move(f));
    };

    for (int g = 0; g <= k; ++g) open_face(0, g, -1);

    for (std::size_t w = 0; w < walls; ++w) {
        // Runs are disjoint and, since wall vertices come in ascending y,
        // already sorted by position.
        struct Run {
            int lo, hi;
            int32_t vertex;
        };
        std::vector<Run> runs;
        runs.reserve(wall_verts_[w].size());
        for (int32_t v : wall_verts_[w]) {
            auto [lo, hi] = sw.run_of(vert_lines_[v]);
            runs.push_back({lo, hi, v});
        }

        for (const Run& r : runs)
            for (int g = r.lo + 1; g <= r.hi; ++g) {
                faces_[gap_face[g]].right_vertex = r.vertex;
                gap_face[g] = -1;
            }
        for (const Run& r : runs) sw.reverse_run(r.lo, r.hi);
        for (const Run& r : runs) {
            for (int g = r.lo + 1; g <= r.hi; ++g) open_face(w + 1, g, r.vertex);
            TwoFace& below = faces_[gap_face[r.lo]];
            below.upper_verts.push_back(r.vertex);
            below.upper_lines.push_back(sw.order[r.lo]);
            TwoFace& above = faces_[gap_face[r.hi + 1]];
            above.lower_verts.push_back(r.vertex);
            above.lower_lines.push_back(sw.order[r.hi]);
        }
    }

    for (int g = 0; g <= k; ++g)
        if (gap_face[g] >= 0) faces_[gap_face[g]].right_open = true;
}

void Arrangement::assign_edge_faces() {
    auto pos_on_line = [&](int line, int32_t v) -> std::size_t {
        const auto& lv = line_verts_[line];
        auto it = std::lower_bound(lv.begin(), lv.end(), v, [&](int32_t a, int32_t b) {
            return cmp3(verts_[a].x, verts_[b].x) < 0;
        });
        assert(it != lv.end() && *it == v);
        return static_cast<std::size_t>(it - lv.begin());
    };

    auto mark = [&](int line, int32_t from, int32_t to, int32_t face, bool above) {
        std::size_t first = from < 0 ? 0 : pos_on_line(line, from) + 1;
        std::size_t last = to < 0 ? line_verts_[line].size() : pos_on_line(line, to);
        for (std::size_t e = first; e <= last; ++e) {
            Edge& edge = edges_[line_edges_[line][e]];
            (above ? edge.face_above : edge.face_below) = face;
        }
    };

    for (std::size_t fid = 0; fid < faces_.size(); ++fid) {
        const TwoFace& f = faces_[fid];
        for (std::size_t j = 0; j < f.lower_lines.size(); ++j) {
            int32_t from = j == 0 ? f.left_vertex : f.lower_verts[j - 1];
            int32_t to = j + 1 == f.lower_lines.size() ? f.right_vertex : f.lower_verts[j];
            mark(f.lower_lines[j], from, to, static_cast<int32_t>(fid), true);
        }
        for (std::size_t j = 0; j < f.upper_lines.size(); ++j) {
            int32_t from = j == 0 ? f.left_vertex : f.upper_verts[j - 1];
            int32_t to = j + 1 == f.upper_lines.size() ? f.right_vertex : f.upper_verts[j];
            mark(f.upper_lines[j], from, to, static_cast<int32_t>(fid), false);
        }
    }
}

int32_t Arrangement::flat_id(FaceRef f) const {
    if (f.dim == 0) return f.idx;
    if (f.dim == 1) return static_cast<int32_t>(verts_.size()) + f.idx;
    return static_cast<int32_t>(verts_.size() + edges_.size()) + f.idx;
}

FaceRef Arrangement::from_flat(int32_t id) const {
    if (id < static_cast<int32_t>(verts_.size())) return {0, id};
    id -= static_cast<int32_t>(verts_.size());
    if (id < static_cast<int32_t>(edges_.size())) return {1, id};
    return {2, id - static_cast<int32_t>(edges_.size())};
}

int Arrangement::wall_index(const Scalar& x) const {
    auto it = std::lower_bound(wall_xs_.begin(), wall_xs_.end(), x,
                               [](const Scalar& a, const Scalar& b) { return cmp3(a, b) < 0; });
    if (it != wall_xs_.end() && *it == x) return static_cast<int>(it - wall_xs_.begin());
    return -1;
}

Point Arrangement::representative(FaceRef f) const {
    if (f.dim == 0) return verts_[f.idx];
    if (f.dim == 1) {
        const Edge& e = edges_[f.idx];
        Scalar x;
        if (e.v0 >= 0 && e.v1 >= 0) x = (verts_[e.v0].x + verts_[e.v1].x) / 2;
        else if (e.v1 >= 0) x = verts_[e.v1].x - 1;
        else if (e.v0 >= 0) x = verts_[e.v0].x + 1;
        else x = 0;
        return Point(x, lines_[e.line].value_at(x));
    }
    return faces_[f.idx].rep;
}

void Arrangement::build_locator() const {
    if (locator_built_) return;
    const std::size_t walls = wall_xs_.size();
    const std::size_t positions = 2 * walls + 1;

    position_samples_.clear();
    position_samples_.reserve(positions);
    for (std::size_t p = 0; p < positions; ++p) {
        if (p % 2 == 1) {
            position_samples_.push_back(wall_xs_[p / 2]);
        } else {
            std::size_t s = p / 2;
            if (walls == 0) position_samples_.push_back(Scalar(0));
            else if (s == 0) position_samples_.push_back(wall_xs_.front() - 1);
            else if (s == walls) position_samples_.push_back(wall_xs_.back() + 1);
            else position_samples_.push_back((wall_xs_[s - 1] + wall_xs_[s]) / 2);
        }
    }

    locator_.assign(4 * positions, {});
    struct Inserter {
        std::vector<LocatorNode>& nodes;
        std::size_t positions;
        void insert(std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi,
                    int32_t edge) {
            if (hi < nl || nr < lo) return;
            if (lo <= nl && nr <= hi) {
                nodes[node].edges.push_back(edge);
                return;
            }
            std::size_t mid = (nl + nr) / 2;
            insert(2 * node, nl, mid, lo, hi, edge);
            insert(2 * node + 1, mid + 1, nr, lo, hi, edge);
        }
    } ins{locator_, positions};

    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        std::size_t lo = edge.v0 < 0 ? 0 : 2 * static_cast<std::size_t>(wall_index(verts_[edge.v0].x)) + 2;
        std::size_t hi = edge.v1 < 0 ? positions - 1 : 2 * static_cast<std::size_t>(wall_index(verts_[edge.v1].x));
        if (lo <= hi) ins.insert(1, 0, positions - 1, lo, hi, static_cast<int32_t>(e));
    }

    // Within one node every covering edge spans the whole node range, so any
    // sample inside the range induces the same strict order.
    struct Sorter {
        const Arrangement& arr;
        void sort(std::size_t node, std::size_t nl, std::size_t nr) {
            auto& list = arr.locator_[node].edges;
            const Scalar& x = arr.position_samples_[nl];
            std::sort(list.begin(), list.end(), [&](int32_t a, int32_t b) {
                return cmp3(arr.lines_[arr.edges_[a].line].value_at(x),
                            arr.lines_[arr.edges_[b].line].value_at(x)) < 0;
            });
            if (nl == nr) return;
            std::size_t mid = (nl + nr) / 2;
            sort(2 * node, nl, mid);
            sort(2 * node + 1, mid + 1, nr);
        }
    } sorter{*this};
    if (positions > 0) sorter.sort(1, 0, positions - 1);
    locator_built_ = true;
}

FaceRef Arrangement::locate_in_position(std::size_t pos, const Scalar& x_eval, const Scalar& y,
                                        Nudge nudge, long* steps) const {
    const std::size_t positions = 2 * wall_xs_.size() + 1;
    int32_t best_below = -1, best_above = -1;
    Scalar below_val, above_val;
    int32_t exact_edge = -1;

    // Candidates from different nodes can tie at x_eval when they meet at a
    // vertex on this wall; the order at the queried slab's own sample breaks
    // the tie exactly.
    const Scalar& slab_x = position_samples_[pos];
    auto edge_val = [&](int32_t e, const Scalar& x) { return Scalar(lines_[edges_[e].line].value_at(x)); };

    std::size_t node = 1, nl = 0, nr = positions - 1;
    while (true) {
        const auto& list = locator_[node].edges;
        if (!list.empty()) {
            // Lowest edge with value >= y (delta-aware).
            std::size_t lo = 0, hi = list.size();
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (steps) ++*steps;
                int c = cmp3(edge_val(list[mid], x_eval), y);
                if (c == 0) c = -nudge_sign(nudge);
                if (c < 0) lo = mid + 1;
                else hi = mid;
            }
            if (lo < list.size()) {
                Scalar v = edge_val(list[lo], x_eval);
                if (v == y && nudge == Nudge::None) exact_edge = list[lo];
                int c = best_above < 0 ? -1 : cmp3(v, above_val);
                if (c == 0) c = cmp3(edge_val(list[lo], slab_x), edge_val(best_above, slab_x));
                if (c < 0) {
                    best_above = list[lo];
                    above_val = v;
                }
            }
            if (lo > 0) {
                Scalar v = edge_val(list[lo - 1], x_eval);
                int c = best_below < 0 ? 1 : cmp3(v, below_val);
                if (c == 0) c = cmp3(edge_val(list[lo - 1], slab_x), edge_val(best_below, slab_x));
                if (c > 0) {
                    best_below = list[lo - 1];
                    below_val = v;
                }
            }
        }
        if (nl == nr) break;
        std::size_t mid = (nl + nr) / 2;
        if (steps) ++*steps;
        if (pos <= mid) {
            node = 2 * node;
            nr = mid;
        } else {
            node = 2 * node + 1;
            nl = mid + 1;
        }
    }

    if (exact_edge >= 0) return {1, exact_edge};
    if (best_below >= 0) return {2, edges_[best_below].face_above};
    if (best_above >= 0) return {2, edges_[best_above].face_below};
    return {2, 0};  // no lines at all
}

FaceRef Arrangement::locate_face(const Point& p, Nudge nudge, long* steps) const {
    build_locator();
    if (lines_.empty()) return {2, 0};

    auto it = std::lower_bound(wall_xs_.begin(), wall_xs_.end(), p.x,
                               [&](const Scalar& a, const Scalar& b) {
                                   if (steps) ++*steps;
                                   return cmp3(a, b) < 0;
                               });
    std::size_t idx = static_cast<std::size_t>(it - wall_xs_.begin());
    bool on_wall = it != wall_xs_.end() && *it == p.x;

    if (on_wall) {
        if (nudge == Nudge::None) {
            const auto& wv = wall_verts_[idx];
            auto vit = std::lower_bound(wv.begin(), wv.end(), p.y, [&](int32_t v, const Scalar& y) {
                if (steps) ++*steps;
                return cmp3(verts_[v].y, y) < 0;
            });
            if (vit != wv.end() && verts_[*vit].y == p.y) return {0, *vit};
        }
        // Search the slab just right of the wall; comparisons stay at the
        // wall's own x, so edges ending here are still ranked correctly.
        return locate_in_position(2 * idx + 2, p.x, p.y, nudge, steps);
    }
    return locate_in_position(2 * idx, p.x, p.y, nudge, steps);
}

std::vector<FaceRef> Arrangement::batch_locate(const std::vector<Point>& pts) const {
    std::vector<FaceRef> out(pts.size());
    if (lines_.empty()) {
        std::fill(out.begin(), out.end(), FaceRef{2, 0});
        return out;
    }

    std::vector<int32_t> by_x(pts.size());
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](int32_t a, int32_t b) {
        return cmp3(pts[a].x, pts[b].x) < 0;
    });

    // Replay the sweep; face ids are reproduced from the recorded birth
    // order, which is deterministic.
    const int k = static_cast<int>(lines_.size());
    SweepOrder sw;
    Scalar x0 = wall_xs_.empty() ? Scalar(0) : Scalar(wall_xs_.front() - 1);
    sw.init(lines_, x0);
    std::vector<int32_t> gap_face(k + 1);
    std::iota(gap_face.begin(), gap_face.end(), 0);
    int32_t next_face = k + 1;

    auto resolve = [&](const Point& p) -> FaceRef {
        // Rank p among the current order at x = p.x.
        std::size_t lo = 0, hi = sw.order.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cmp3(lines_[sw.order[mid]].value_at(p.x), p.y) < 0) lo = mid + 1;
            else hi = mid;
        }
        if (lo < sw.order.size()) {
            int line = sw.order[lo];
            if (lines_[line].value_at(p.x) == p.y) {
                // On this line: find the edge it falls into.
                const auto& lv = line_verts_[line];
                auto eit = std::lower_bound(lv.begin(), lv.end(), p.x, [&](int32_t v, const Scalar& x) {
                    return cmp3(verts_[v].x, x) < 0;
                });
                return {1, line_edges_[line][static_cast<std::size_t>(eit - lv.begin())]};
            }
        }
        return {2, gap_face[lo]};
    };

    std::size_t qi = 0;
    auto flush_until = [&](const Scalar* wall_x, std::size_t wall_idx) {
        // Points strictly before the wall (or all remaining when null).
        while (qi < by_x.size() && (!wall_x || cmp3(pts[by_x[qi]].x, *wall_x) < 0)) {
            out[by_x[qi]] = resolve(pts[by_x[qi]]);
            ++qi;
        }
        if (!wall_x) return;
        // Points exactly on the wall are resolved after the wall's
        // reversals, against vertices first.
        std::size_t start = qi;
        while (qi < by_x.size() && pts[by_x[qi]].x == *wall_x) ++qi;
        if (start == qi) return;
        for (std::size_t i = start; i < qi; ++i) {
            const Point& p = pts[by_x[i]];
            const auto& wv = wall_verts_[wall_idx];
            auto vit = std::lower_bound(wv.begin(), wv.end(), p.y, [&](int32_t v, const Scalar& y) {
                return cmp3(verts_[v].y, y) < 0;
            });
            if (vit != wv.end() && verts_[*vit].y == p.y) out[by_x[i]] = {0, *vit};
            else out[by_x[i]] = resolve(p);  // uses post-wall order; values at the wall agree
        }
    };

    for (std::size_t w = 0; w < wall_xs_.size(); ++w) {
        flush_until(&wall_xs_[w], w);
        struct Run {
            int lo, hi;
        };
        std::vector<Run> runs;
        for (int32_t v : wall_verts_[w]) {
            auto [lo, hi] = sw.run_of(vert_lines_[v]);
            runs.push_back({lo, hi});
        }
        for (const Run& r : runs)
            for (int g = r.lo + 1; g <= r.hi; ++g) gap_face[g] = -1;
        for (const Run& r : runs) sw.reverse_run(r.lo, r.hi);
        for (const Run& r : runs)
            for (int g = r.lo + 1; g <= r.hi; ++g) gap_face[g] = next_face++;
    }
    flush_until(nullptr, 0);
    return out;
}

}  // namespace srs
