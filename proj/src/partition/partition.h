#pragma once

#include "cutting/cutting.h"

namespace srs {

// Closed, possibly unbounded trapezoidal cell enclosing one partition class.
struct PartitionCellShape {
    std::optional<Line> top, bottom;
    std::optional<Scalar> xl, xr;

    bool contains(const Point& p) const;
    bool crossed_by(const Line& l) const {
        return line_crosses_open_trapezoid(top, bottom, xl, xr, l);
    }
};

struct PartitionClass {
    std::vector<int32_t> point_ids;
    PartitionCellShape cell;
};

struct SimplicialPartition {
    std::vector<PartitionClass> classes;
    long t = 1;
    long measured_max_crossing = 0;  // over the verification line sample
};

struct PartitionConfig {
    double partition_constant = 8.0;
    int sample_lines = 200;
    int retry_limit = 20;
    long tree_t1_floor = 4;  // stand-in for the theorem's t_1 lower bound
};

class PartitionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

SimplicialPartition build_partition(const std::vector<Point>& points, long t, std::uint64_t seed,
                                    const PartitionConfig& cfg = {});

// Number of classes whose cell interior the line meets.
long crossing_number(const SimplicialPartition& p, const Line& l);

// Hierarchical partition: the depth-i family is a simplicial partition of
// the whole set with parameter t_i; the point order is permuted so every
// class, and in particular every leaf, is a contiguous run.
struct PartitionTree {
    struct Node {
        PartitionCellShape cell;
        int32_t lo = 0, hi = 0;  // run [lo, hi) in `order`
        int32_t first_child = -1;
        int32_t child_count = 0;
        int32_t depth = 0;
    };

    std::vector<int32_t> order;  // permuted point ids
    std::vector<Node> nodes;     // node 0 is the root (depth 0, whole set)
    std::vector<long> t_sequence;
    std::vector<long> measured_max_crossing;  // per depth

    std::vector<int32_t> nodes_at_depth(int32_t depth) const;
};

PartitionTree build_partition_tree(const std::vector<Point>& points, std::vector<long> t_sequence,
                                   std::uint64_t seed, const PartitionConfig& cfg = {});

}  // namespace srs
