#pragma once

#include "arrangement/arrangement.h"

#include <memory>

namespace srs {

// Constant-time subarrangement point location: one table entry per parent
// face, pointing at the unique child face that contains it.
class SubarrLinkTable {
  public:
    SubarrLinkTable(const Arrangement& parent, const Arrangement& child,
                    const std::vector<int32_t>& child_line_ids);

    // One table read.
    FaceRef subarr_locate(FaceRef parent_face, long* table_reads = nullptr) const;

    std::size_t size() const { return map_.size(); }

  private:
    const Arrangement* parent_;
    std::vector<FaceRef> map_;  // indexed by parent flat id
};

// One overlapping cutting-cell id per face; built from any cell locator.
struct CellLinkTable {
    std::vector<int32_t> map;  // indexed by parent flat id

    int32_t cell_of(const Arrangement& arr, FaceRef f, long* table_reads = nullptr) const {
        if (table_reads) ++*table_reads;
        return map[arr.flat_id(f)];
    }
};

}  // namespace srs
