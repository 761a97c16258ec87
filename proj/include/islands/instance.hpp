#pragma once

#include <string>
#include <vector>

#include "islands/polygon.hpp"

namespace islands {

// Indexed colored points. Indices are stable; colors are 0..color_count-1.
struct Instance {
    std::vector<Point> pts;
    std::vector<int> colors;
    int color_count = 0;

    size_t size() const { return pts.size(); }
};

inline void validate_instance(const Instance& inst) {
    if (inst.pts.size() != inst.colors.size()) throw invalid_input_error("point/color count mismatch");
    if (inst.color_count < 1) throw invalid_input_error("color count must be at least 1");
    for (int c : inst.colors)
        if (c < 0 || c >= inst.color_count) throw invalid_input_error("color id out of range");
    for (size_t i = 0; i < inst.pts.size(); ++i)
        for (size_t j = i + 1; j < inst.pts.size(); ++j)
            if (inst.pts[i] == inst.pts[j])
                throw invalid_input_error("duplicate point at indices " + std::to_string(i) + "," + std::to_string(j));
}

}  // namespace islands
