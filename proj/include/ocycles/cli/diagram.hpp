#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ocycles/word.hpp"

namespace ocycles::cli {

/// A throw from beat `from` landing at beat `to` = from + height.
struct Arc {
    std::size_t from;
    std::size_t to;
    bool clipped;  // lands after the last drawn beat

    bool operator==(const Arc&) const = default;
};

/// A beat where more than one landing happens when the pattern repeats
/// forever. `arrivals` counts balls thrown with nonzero height; a 0 throw at
/// the beat itself counts as a landing but not as a ball.
struct Collision {
    std::size_t beat;
    std::size_t arrivals;
    bool on_zero_throw;
};

struct JugglingDiagram {
    Word sequence;
    std::size_t periods;
    std::size_t beats;
    bool valid;
    std::vector<Arc> arcs;
    std::vector<Collision> collisions;
};

/// Beats 0 .. periods*n - 1, one arc per nonzero throw.
JugglingDiagram layout_diagram(const Word& t, std::size_t periods);

std::string render_ascii(const JugglingDiagram& d);
std::string render_svg(const JugglingDiagram& d);

}  // namespace ocycles::cli
