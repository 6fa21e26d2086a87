#pragma once

#include "arrangement/arrangement.h"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace srs {

// One cell of a cutting: a vertical trapezoid, possibly unbounded on any
// side.  x-extent is half-open ([xl, xr)), y-boundaries are closed, so the
// cells of one cutting tile the plane exactly.
struct TrapezoidCell {
    std::optional<Line> top, bottom;
    std::optional<Scalar> xl, xr;
    Point interior;

    std::vector<int32_t> conflict;    // lines crossing the open interior
    std::vector<int32_t> above_set;   // lines strictly above the interior
    std::vector<int32_t> below_set;   // lines strictly below the interior

    bool contains(const Point& p, Nudge nudge = Nudge::None) const;
    bool contains_x(const Scalar& x) const;
};

enum class LineCellRel { Crosses, Above, Below };
LineCellRel line_vs_cell(const TrapezoidCell& c, const Line& l);

// Does l pass strictly inside the open region bounded by the given lines and
// walls?  Shared by cuttings and simplicial partitions.
bool line_crosses_open_trapezoid(const std::optional<Line>& top, const std::optional<Line>& bottom,
                                 const std::optional<Scalar>& xl, const std::optional<Scalar>& xr,
                                 const Line& l);

struct CuttingConfig {
    double cutting_constant = 8.0;   // verified bounds: conflict <= c*n/r, cells <= c*r^2
    double target_fraction = 0.5;    // construction aims at this fraction of the conflict bound
    double sampling_factor = 1.4;
    int retry_limit = 20;
};

struct CuttingVerifyReport {
    long max_conflict = 0;
    std::size_t cell_count = 0;
    bool conflict_bound_ok = false;
    bool count_bound_ok = false;
    bool partition_ok = false;   // {above, below, conflict} partitions the line set per cell
    bool coverage_ok = false;    // per-slab stacks chain from -inf to +inf
    bool disjoint_ok = false;    // no two cells share interior points

    bool ok() const {
        return conflict_bound_ok && count_bound_ok && partition_ok && coverage_ok && disjoint_ok;
    }
};

class CuttingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Triangulated-decomposition (1/r)-cutting with conflict lists and
// above/below canonical subsets, built by randomized sampling with local
// refinement of overfull cells, then verified.
class Cutting {
  public:
    std::vector<Line> lines;
    long r = 1;
    std::vector<TrapezoidCell> cells;

    // Slab locator: binary search on x breakpoints, then on the stacked
    // cells within the slab.
    void build_locator();
    int32_t locate(const Point& p, Nudge nudge = Nudge::None, long* steps = nullptr) const;
    bool has_locator() const { return !slabs_.empty() || cells.size() <= 1; }

  private:
    std::vector<Scalar> xs_;
    std::vector<std::vector<int32_t>> slabs_;  // per slab, cells sorted bottom to top
};

Cutting build_cutting(std::vector<Line> lines, long r, std::uint64_t seed,
                      const CuttingConfig& cfg = {});

CuttingVerifyReport verify_cutting(const Cutting& c, const std::vector<Line>& lines,
                                   double cutting_constant = 8.0);

// Hierarchical cutting tree: level i is a (1/r_i)-cutting of the root set;
// each child cell refines its parent's region and conflict list.
struct CuttingTree {
    std::vector<Line> lines;
    std::vector<long> r_sequence;
    std::vector<Cutting> levels;                 // levels[i]: the (1/r_i)-cutting
    std::vector<std::vector<int32_t>> parent;    // per level i>0: cell -> parent cell at level i-1
    std::vector<std::vector<std::vector<int32_t>>> children;  // per level i: cell -> level-i+1 cells

    // Cell path from level 0 down to the last level, by containment.
    std::vector<int32_t> locate_path(const Point& p, Nudge nudge = Nudge::None,
                                     long* steps = nullptr) const;
};

CuttingTree build_hierarchical(std::vector<Line> lines, std::vector<long> r_sequence,
                               std::uint64_t seed, const CuttingConfig& cfg = {});

}  // namespace srs
