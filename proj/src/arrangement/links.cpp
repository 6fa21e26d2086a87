#include "arrangement/links.h"

#include <stdexcept>

namespace srs {

SubarrLinkTable::SubarrLinkTable(const Arrangement& parent, const Arrangement& child,
                                 const std::vector<int32_t>& child_line_ids)
    : parent_(&parent) {
    if (child_line_ids.size() != child.lines().size())
        throw std::invalid_argument("SubarrLinkTable: id list does not match child");
    for (std::size_t i = 0; i < child_line_ids.size(); ++i) {
        int32_t id = child_line_ids[i];
        if (id < 0 || id >= static_cast<int32_t>(parent.lines().size()) ||
            !(parent.lines()[id] == child.lines()[i]))
            throw std::invalid_argument("SubarrLinkTable: child lines are not a subset of parent");
    }

    // Every parent face sits inside exactly one child face; locating one
    // interior sample per parent face determines the whole table.
    std::vector<Point> reps;
    reps.reserve(parent.face_count());
    for (std::size_t v = 0; v < parent.vertices().size(); ++v)
        reps.push_back(parent.representative({0, static_cast<int32_t>(v)}));
    for (std::size_t e = 0; e < parent.edges().size(); ++e)
        reps.push_back(parent.representative({1, static_cast<int32_t>(e)}));
    for (std::size_t f = 0; f < parent.two_faces().size(); ++f)
        reps.push_back(parent.representative({2, static_cast<int32_t>(f)}));
    map_ = child.batch_locate(reps);
}

FaceRef SubarrLinkTable::subarr_locate(FaceRef parent_face, long* table_reads) const {
    int32_t id = parent_->flat_id(parent_face);
    if (id < 0 || id >= static_cast<int32_t>(map_.size()))
        throw std::out_of_range("subarr_locate: unknown parent face label");
    if (table_reads) ++*table_reads;
    return map_[id];
}

}  // namespace srs
