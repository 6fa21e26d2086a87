#include "cutting/cutting.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

namespace srs {

bool TrapezoidCell::contains_x(const Scalar& x) const {
    if (xl && cmp3(x, *xl) < 0) return false;
    if (xr && cmp3(x, *xr) >= 0) return false;  // half-open on the right
    return true;
}

bool TrapezoidCell::contains(const Point& p, Nudge nudge) const {
    if (!contains_x(p.x)) return false;
    if (top && side_of_line(*top, p, nudge) > 0) return false;
    if (bottom && side_of_line(*bottom, p, nudge) < 0) return false;
    return true;
}

bool line_crosses_open_trapezoid(const std::optional<Line>& top, const std::optional<Line>& bottom,
                                 const std::optional<Scalar>& xl, const std::optional<Scalar>& xr,
                                 const Line& l) {
    // Open x-interval where l runs strictly inside the region.
    std::optional<Scalar> lo = xl, hi = xr;
    bool empty = false;
    auto raise_lo = [&](const Scalar& v) {
        if (!lo || cmp3(v, *lo) > 0) lo = v;
    };
    auto cap_hi = [&](const Scalar& v) {
        if (!hi || cmp3(v, *hi) < 0) hi = v;
    };
    // want_below: require l(x) - o(x) < 0 (else > 0) on the interval.
    auto add = [&](const Line& o, bool want_below) {
        if (empty) return;
        Scalar da = l.slope - o.slope;
        Scalar db = l.intercept - o.intercept;  // l(x) - o(x) = da*x - db
        int sa = sign(da);
        if (sa == 0) {
            int sv = sign(-db);
            if (want_below ? sv >= 0 : sv <= 0) empty = true;
            return;
        }
        Scalar root = db / da;
        bool increasing = sa > 0;
        if (want_below == increasing) cap_hi(root);
        else raise_lo(root);
    };
    if (top) add(*top, true);
    if (bottom) add(*bottom, false);
    if (!empty && lo && hi && cmp3(*lo, *hi) >= 0) empty = true;
    return !empty;
}

LineCellRel line_vs_cell(const TrapezoidCell& c, const Line& l) {
    if (line_crosses_open_trapezoid(c.top, c.bottom, c.xl, c.xr, l)) return LineCellRel::Crosses;
    int s = side_of_line(l, c.interior);
    assert(s != 0);
    return s < 0 ? LineCellRel::Above : LineCellRel::Below;
}

namespace {

// Vertical-trapezoid decomposition of the arrangement of `cut`, optionally
// restricted to a region cell whose top/bottom lines must be members of
// `cut` (pieces then never straddle them; walls are clipped directly).
std::vector<TrapezoidCell> trapezoid_decomposition(const std::vector<Line>& cut,
                                                   const TrapezoidCell* region) {
    Arrangement arr(cut);
    std::vector<TrapezoidCell> out;

    for (const auto& f : arr.two_faces()) {
        std::vector<Scalar> walls;
        auto add_wall = [&](int32_t v) {
            if (v >= 0) walls.push_back(arr.vertices()[v].x);
        };
        add_wall(f.left_vertex);
        for (int32_t v : f.lower_verts) add_wall(v);
        for (int32_t v : f.upper_verts) add_wall(v);
        add_wall(f.right_vertex);
        std::sort(walls.begin(), walls.end(), [](const Scalar& a, const Scalar& b) { return cmp3(a, b) < 0; });
        walls.erase(std::unique(walls.begin(), walls.end()), walls.end());

        std::vector<std::pair<std::optional<Scalar>, std::optional<Scalar>>> segs;
        if (walls.empty()) {
            segs.emplace_back(std::nullopt, std::nullopt);
        } else {
            if (f.left_open) segs.emplace_back(std::nullopt, walls.front());
            for (std::size_t i = 0; i + 1 < walls.size(); ++i) segs.emplace_back(walls[i], walls[i + 1]);
            if (f.right_open) segs.emplace_back(walls.back(), std::nullopt);
        }

        // Span endpoints of the j-th boundary line along each chain.
        auto span_end = [&](const std::vector<int32_t>& chain_verts, int32_t right_vertex,
                            std::size_t j, std::size_t total) -> int32_t {
            return j + 1 == total ? right_vertex : chain_verts[j];
        };

        std::size_t jl = 0, ju = 0;
        for (auto& [a, b] : segs) {
            if (a) {
                while (jl + 1 < f.lower_lines.size()) {
                    int32_t end = span_end(f.lower_verts, f.right_vertex, jl, f.lower_lines.size());
                    if (end >= 0 && cmp3(arr.vertices()[end].x, *a) <= 0) ++jl;
                    else break;
                }
                while (ju + 1 < f.upper_lines.size()) {
                    int32_t end = span_end(f.upper_verts, f.right_vertex, ju, f.upper_lines.size());
                    if (end >= 0 && cmp3(arr.vertices()[end].x, *a) <= 0) ++ju;
                    else break;
                }
            }
            TrapezoidCell cell;
            if (!f.lower_lines.empty()) cell.bottom = arr.lines()[f.lower_lines[jl]];
            if (!f.upper_lines.empty()) cell.top = arr.lines()[f.upper_lines[ju]];
            cell.xl = a;
            cell.xr = b;

            if (region) {
                if (region->xl && (!cell.xl || cmp3(*region->xl, *cell.xl) > 0)) cell.xl = region->xl;
                if (region->xr && (!cell.xr || cmp3(*region->xr, *cell.xr) < 0)) cell.xr = region->xr;
                if (cell.xl && cell.xr && cmp3(*cell.xl, *cell.xr) >= 0) continue;
            }

            Scalar sx;
            if (cell.xl && cell.xr) sx = (*cell.xl + *cell.xr) / 2;
            else if (cell.xl) sx = *cell.xl + 1;
            else if (cell.xr) sx = *cell.xr - 1;
            else sx = 0;
            Scalar sy;
            if (cell.top && cell.bottom) sy = (cell.top->value_at(sx) + cell.bottom->value_at(sx)) / 2;
            else if (cell.top) sy = cell.top->value_at(sx) - 1;
            else if (cell.bottom) sy = cell.bottom->value_at(sx) + 1;
            else sy = 0;
            cell.interior = Point(sx, sy);

            if (region) {
                if (region->top && side_of_line(*region->top, cell.interior) >= 0) continue;
                if (region->bottom && side_of_line(*region->bottom, cell.interior) <= 0) continue;
            }
            out.push_back(std::move(cell));
        }
    }
    return out;
}

// Children of `cell`, classified against its conflict list.  Every child's
// conflict is a strict subset, so the refinement terminates.
std::vector<TrapezoidCell> split_cell(const TrapezoidCell& cell, const std::vector<Line>& lines,
                                      long target, double sampling_factor, std::mt19937_64& rng) {
    std::size_t want = static_cast<std::size_t>(
        std::max(2.0, std::ceil(sampling_factor * static_cast<double>(cell.conflict.size()) /
                                static_cast<double>(target))));
    std::vector<int32_t> sample;
    std::sample(cell.conflict.begin(), cell.conflict.end(), std::back_inserter(sample),
                std::min(want, cell.conflict.size()), rng);

    std::vector<Line> cut;
    auto add_line = [&](const Line& l) {
        for (const Line& have : cut)
            if (have == l) return;
        cut.push_back(l);
    };
    for (int32_t id : sample) add_line(lines[id]);
    if (cell.top) add_line(*cell.top);
    if (cell.bottom) add_line(*cell.bottom);

    auto kids = trapezoid_decomposition(cut, &cell);
    for (auto& kid : kids) {
        // A line above the parent's interior stays above every child, so the
        // canonical sets accumulate down the refinement.
        kid.above_set = cell.above_set;
        kid.below_set = cell.below_set;
        for (int32_t id : cell.conflict) {
            switch (line_vs_cell(kid, lines[id])) {
                case LineCellRel::Crosses: kid.conflict.push_back(id); break;
                case LineCellRel::Above: kid.above_set.push_back(id); break;
                case LineCellRel::Below: kid.below_set.push_back(id); break;
            }
        }
    }
    return kids;
}

TrapezoidCell whole_plane_cell(std::size_t n_lines) {
    TrapezoidCell root;
    root.interior = Point(Scalar(0), Scalar(0));
    root.conflict.resize(n_lines);
    std::iota(root.conflict.begin(), root.conflict.end(), 0);
    return root;
}

}  // namespace

void Cutting::build_locator() {
    xs_.clear();
    slabs_.clear();
    if (cells.size() <= 1) return;
    for (const auto& c : cells) {
        if (c.xl) xs_.push_back(*c.xl);
        if (c.xr) xs_.push_back(*c.xr);
    }
    std::sort(xs_.begin(), xs_.end(), [](const Scalar& a, const Scalar& b) { return cmp3(a, b) < 0; });
    xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());

    slabs_.resize(xs_.size() + 1);
    for (std::size_t s = 0; s < slabs_.size(); ++s) {
        Scalar sx;
        if (xs_.empty()) sx = 0;
        else if (s == 0) sx = xs_.front() - 1;
        else if (s == xs_.size()) sx = xs_.back() + 1;
        else sx = (xs_[s - 1] + xs_[s]) / 2;

        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].contains_x(sx)) slabs_[s].push_back(static_cast<int32_t>(i));
        std::sort(slabs_[s].begin(), slabs_[s].end(), [&](int32_t a, int32_t b) {
            const auto& ca = cells[a];
            const auto& cb = cells[b];
            if (!ca.bottom) return static_cast<bool>(cb.bottom);
            if (!cb.bottom) return false;
            return cmp3(ca.bottom->value_at(sx), cb.bottom->value_at(sx)) < 0;
        });
    }
}

int32_t Cutting::locate(const Point& p, Nudge nudge, long* steps) const {
    if (cells.size() <= 1) return cells.empty() ? -1 : 0;

    // Slab by binary search (cells are half-open on the right).
    std::size_t slab = std::upper_bound(xs_.begin(), xs_.end(), p.x,
                                        [&](const Scalar& x, const Scalar& b) {
                                            if (steps) ++*steps;
                                            return cmp3(x, b) < 0;
                                        }) -
                       xs_.begin();
    const auto& stack = slabs_[slab];

    // Topmost cell whose bottom lies (delta-)below p.
    std::size_t lo = 0, hi = stack.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (steps) ++*steps;
        const auto& c = cells[stack[mid]];
        int below;
        if (!c.bottom) below = 1;
        else {
            int s = side_of_line(*c.bottom, p, nudge);
            below = s >= 0 ? 1 : 0;
        }
        if (below) lo = mid + 1;
        else hi = mid;
    }
    // Candidate is stack[lo-1]; boundary ties resolve to the lowest cell id.
    int32_t best = -1;
    for (std::size_t probe = lo > 0 ? lo - 1 : 0; probe < std::min(lo + 1, stack.size()); ++probe) {
        if (steps) ++*steps;
        if (cells[stack[probe]].contains(p, nudge))
            if (best < 0 || stack[probe] < best) best = stack[probe];
    }
    return best;
}

Cutting build_cutting(std::vector<Line> lines, long r, std::uint64_t seed, const CuttingConfig& cfg) {
    const std::size_t n = lines.size();
    Cutting out;
    out.lines = std::move(lines);
    out.r = std::max(1L, r);

    if (n == 0 || out.r <= 1) {
        out.cells.push_back(whole_plane_cell(n));
        out.build_locator();
        return out;
    }

    double sampling = cfg.sampling_factor;
    const double cell_budget = cfg.cutting_constant * static_cast<double>(out.r) * static_cast<double>(out.r);
    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1));
        long target = std::max(1L, static_cast<long>(std::floor(
                                       cfg.cutting_constant * cfg.target_fraction *
                                       static_cast<double>(n) / static_cast<double>(out.r))));
        std::deque<TrapezoidCell> queue;
        queue.push_back(whole_plane_cell(n));
        std::vector<TrapezoidCell> done;
        bool aborted = false;
        while (!queue.empty()) {
            TrapezoidCell cell = std::move(queue.front());
            queue.pop_front();
            if (static_cast<long>(cell.conflict.size()) <= target) {
                done.push_back(std::move(cell));
                if (static_cast<double>(done.size() + queue.size()) > 1.1 * cell_budget) {
                    aborted = true;
                    break;
                }
                continue;
            }
            auto kids = split_cell(cell, out.lines, target, sampling, rng);
            for (auto& kid : kids) queue.push_back(std::move(kid));
            if (static_cast<double>(done.size() + queue.size()) > 1.1 * cell_budget) {
                aborted = true;
                break;
            }
        }
        if (!aborted && static_cast<double>(done.size()) <= cell_budget) {
            out.cells = std::move(done);
            out.build_locator();
            return out;
        }
        sampling *= 0.85;  // too many cells: sample leaner and retry
    }
    throw CuttingError("build_cutting: exceeded retry limit");
}

CuttingVerifyReport verify_cutting(const Cutting& c, const std::vector<Line>& lines,
                                   double cutting_constant) {
    CuttingVerifyReport rep;
    rep.cell_count = c.cells.size();
    const long n = static_cast<long>(lines.size());

    rep.partition_ok = true;
    for (const auto& cell : c.cells) {
        rep.max_conflict = std::max(rep.max_conflict, static_cast<long>(cell.conflict.size()));
        std::vector<int32_t> conflict, above, below;
        for (int32_t id = 0; id < n; ++id) {
            switch (line_vs_cell(cell, lines[id])) {
                case LineCellRel::Crosses: conflict.push_back(id); break;
                case LineCellRel::Above: above.push_back(id); break;
                case LineCellRel::Below: below.push_back(id); break;
            }
        }
        auto sorted = [](std::vector<int32_t> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(cell.conflict) != conflict || sorted(cell.above_set) != above ||
            sorted(cell.below_set) != below)
            rep.partition_ok = false;
    }

    rep.conflict_bound_ok = static_cast<double>(rep.max_conflict) * static_cast<double>(c.r) <=
                            cutting_constant * static_cast<double>(n);
    rep.count_bound_ok = static_cast<double>(rep.cell_count) <=
                         cutting_constant * static_cast<double>(c.r) * static_cast<double>(c.r);

    // Per-slab stack audit: the cells crossing each slab must chain exactly
    // from the bottom face to the top face.
    std::vector<Scalar> xs;
    for (const auto& cell : c.cells) {
        if (cell.xl) xs.push_back(*cell.xl);
        if (cell.xr) xs.push_back(*cell.xr);
    }
    std::sort(xs.begin(), xs.end(), [](const Scalar& a, const Scalar& b) { return cmp3(a, b) < 0; });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    rep.coverage_ok = rep.disjoint_ok = true;
    for (std::size_t s = 0; s <= xs.size(); ++s) {
        Scalar sx;
        if (xs.empty()) sx = 0;
        else if (s == 0) sx = xs.front() - 1;
        else if (s == xs.size()) sx = xs.back() + 1;
        else sx = (xs[s - 1] + xs[s]) / 2;

        std::vector<int32_t> stack;
        for (std::size_t i = 0; i < c.cells.size(); ++i)
            if (c.cells[i].contains_x(sx)) stack.push_back(static_cast<int32_t>(i));
        std::sort(stack.begin(), stack.end(), [&](int32_t a, int32_t b) {
            const auto& ca = c.cells[a];
            const auto& cb = c.cells[b];
            if (!ca.bottom) return static_cast<bool>(cb.bottom);
            if (!cb.bottom) return false;
            return cmp3(ca.bottom->value_at(sx), cb.bottom->value_at(sx)) < 0;
        });
        if (stack.empty()) {
            rep.coverage_ok = false;
            continue;
        }
        if (c.cells[stack.front()].bottom || c.cells[stack.back()].top) rep.coverage_ok = false;
        for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
            const auto& below = c.cells[stack[i]];
            const auto& above = c.cells[stack[i + 1]];
            if (!below.top || !above.bottom || !(*below.top == *above.bottom)) {
                // Either a gap (coverage) or an overlap (disjointness).
                if (!below.top || !above.bottom) {
                    rep.disjoint_ok = false;
                } else {
                    int cmp_at = cmp3(below.top->value_at(sx), above.bottom->value_at(sx));
                    (cmp_at < 0 ? rep.coverage_ok : rep.disjoint_ok) = false;
                }
            }
        }
    }
    return rep;
}

CuttingTree build_hierarchical(std::vector<Line> lines, std::vector<long> r_sequence,
                               std::uint64_t seed, const CuttingConfig& cfg) {
    for (std::size_t i = 1; i < r_sequence.size(); ++i)
        if (r_sequence[i] <= r_sequence[i - 1])
            throw CuttingError("build_hierarchical: rSequence must be strictly increasing");
    if (!r_sequence.empty() && r_sequence.back() > std::max<long>(1, static_cast<long>(lines.size())))
        throw CuttingError("build_hierarchical: rSequence exceeds n");

    CuttingTree tree;
    tree.lines = std::move(lines);
    tree.r_sequence = r_sequence;
    const std::size_t n = tree.lines.size();
    if (r_sequence.empty()) r_sequence.push_back(1);

    std::mt19937_64 rng(seed);
    tree.levels.push_back(build_cutting(tree.lines, r_sequence[0], rng(), cfg));
    tree.parent.emplace_back();  // level 0 has no parents
    tree.children.emplace_back();

    for (std::size_t depth = 1; depth < r_sequence.size(); ++depth) {
        const Cutting& prev = tree.levels.back();
        long target = std::max(1L, static_cast<long>(std::floor(
                                       cfg.cutting_constant * cfg.target_fraction *
                                       static_cast<double>(n) / static_cast<double>(r_sequence[depth]))));
        Cutting next;
        next.lines = tree.lines;
        next.r = r_sequence[depth];
        std::vector<int32_t> parent_of;
        std::vector<std::vector<int32_t>> kids_of(prev.cells.size());

        for (std::size_t ci = 0; ci < prev.cells.size(); ++ci) {
            const TrapezoidCell& cell = prev.cells[ci];
            std::vector<TrapezoidCell> kids;
            if (static_cast<long>(cell.conflict.size()) <= target) {
                TrapezoidCell copy = cell;
                copy.above_set.clear();
                copy.below_set.clear();  // canonical subsets are relative to the parent conflict
                kids.push_back(std::move(copy));
            } else {
                // Canonical subsets accumulate relative to this level-parent.
                TrapezoidCell seed_cell = cell;
                seed_cell.above_set.clear();
                seed_cell.below_set.clear();
                std::deque<TrapezoidCell> queue;
                queue.push_back(std::move(seed_cell));
                while (!queue.empty()) {
                    TrapezoidCell cur = std::move(queue.front());
                    queue.pop_front();
                    if (static_cast<long>(cur.conflict.size()) <= target) {
                        kids.push_back(std::move(cur));
                        continue;
                    }
                    for (auto& kid : split_cell(cur, tree.lines, target, cfg.sampling_factor, rng))
                        queue.push_back(std::move(kid));
                }
            }
            for (auto& kid : kids) {
                parent_of.push_back(static_cast<int32_t>(ci));
                kids_of[ci].push_back(static_cast<int32_t>(next.cells.size()));
                next.cells.push_back(std::move(kid));
            }
        }
        tree.children.back() = std::move(kids_of);
        tree.levels.push_back(std::move(next));
        tree.parent.push_back(std::move(parent_of));
        tree.children.emplace_back();

        if (static_cast<double>(tree.levels.back().cells.size()) >
            cfg.cutting_constant * static_cast<double>(r_sequence[depth]) *
                static_cast<double>(r_sequence[depth]))
            throw CuttingError("build_hierarchical: level exceeded cell budget");
    }
    tree.levels.front().build_locator();
    return tree;
}

std::vector<int32_t> CuttingTree::locate_path(const Point& p, Nudge nudge, long* steps) const {
    std::vector<int32_t> path;
    if (levels.empty()) return path;
    int32_t cur = levels[0].locate(p, nudge, steps);
    path.push_back(cur);
    for (std::size_t depth = 1; depth < levels.size(); ++depth) {
        int32_t found = -1;
        for (int32_t kid : children[depth - 1][cur]) {
            if (steps) ++*steps;
            if (levels[depth].cells[kid].contains(p, nudge)) {
                if (found < 0 || kid < found) found = kid;
            }
        }
        assert(found >= 0);
        path.push_back(found);
        cur = found;
    }
    return path;
}

}  // namespace srs
