#include "ocycles/cli/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "ocycles/error.hpp"
#include "ocycles/juggling.hpp"

namespace ocycles::cli {

JugglingDiagram layout_diagram(const Word& t, std::size_t periods) {
    if (periods < 1) throw ParameterError("periods must be >= 1");
    const std::size_t n = t.size();
    const std::size_t beats = periods * n;
    JugglingDiagram d{t, periods, beats, validate_juggling(t), {}, {}};
    for (std::size_t i = 0; i < beats; ++i) {
        const Symbol height = t[i % n];
        if (height == 0) continue;
        d.arcs.push_back(Arc{i, i + height, i + height >= beats});
    }

    // Landings at beat j come from throws at beats j - height for every
    // height in the pattern, including throws before the window.
    const Symbol max_height = *std::max_element(t.symbols().begin(), t.symbols().end());
    for (std::size_t j = 0; j < beats; ++j) {
        std::size_t arrivals = 0;
        for (long long i = static_cast<long long>(j) - max_height; i < static_cast<long long>(j); ++i) {
            const auto slot = static_cast<std::size_t>(((i % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                                       static_cast<long long>(n));
            if (i + static_cast<long long>(t[slot]) == static_cast<long long>(j)) ++arrivals;
        }
        const bool zero_here = t[j % n] == 0;
        if (arrivals + (zero_here ? 1 : 0) >= 2) d.collisions.push_back(Collision{j, arrivals, zero_here});
    }
    return d;
}

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string collision_note(const Collision& c) {
    std::string note = "collision at beat " + std::to_string(c.beat) + ": " + std::to_string(c.arrivals) +
                       (c.arrivals == 1 ? " ball lands" : " balls land");
    if (c.on_zero_throw) note += " on a 0 throw";
    return note;
}

}  // namespace

std::string render_ascii(const JugglingDiagram& d) {
    const std::size_t n = d.sequence.size();
    std::size_t width = 3;
    width = std::max(width, std::to_string(d.beats - 1).size() + 1);
    for (Symbol x : d.sequence.symbols()) width = std::max(width, std::to_string(x).size() + 1);
    const std::size_t label = 6;
    const std::size_t span = label + d.beats * width;
    auto column = [&](std::size_t beat) { return label + beat * width + width - 1; };

    std::ostringstream os;
    os << "juggling diagram " << d.sequence.str() << ", " << d.periods << (d.periods == 1 ? " period" : " periods")
       << " (" << (d.valid ? "valid" : "invalid") << ")\n";
    os << "beat  ";
    for (std::size_t i = 0; i < d.beats; ++i) os << pad_left(std::to_string(i), width);
    os << "\n      ";
    for (std::size_t i = 0; i < d.beats; ++i) os << pad_left("o", width);
    os << "\nthrow ";
    for (std::size_t i = 0; i < d.beats; ++i) os << pad_left(std::to_string(d.sequence[i % n]), width);
    os << '\n';
    for (const Arc& a : d.arcs) {
        std::string row(span + 1, ' ');
        const std::size_t start = column(a.from);
        const std::size_t end = a.clipped ? span : column(a.to);
        row[start] = '+';
        for (std::size_t c = start + 1; c < end; ++c) row[c] = '-';
        row[end] = a.clipped ? '>' : '+';
        os << row << "  " << a.from << " -> " << a.to << (a.clipped ? " (clipped)" : "") << '\n';
    }
    for (const Collision& c : d.collisions) os << collision_note(c) << '\n';
    return os.str();
}

std::string render_svg(const JugglingDiagram& d) {
    constexpr int kSpacing = 40;
    constexpr int kMargin = 30;
    constexpr int kRise = 14;  // control-point height per unit of throw height
    const std::size_t n = d.sequence.size();
    Symbol max_height = 1;
    for (Symbol x : d.sequence.symbols()) max_height = std::max(max_height, x);
    const int width = 2 * kMargin + static_cast<int>(d.beats - 1) * kSpacing;
    const int baseline = kMargin + static_cast<int>(max_height) * kRise / 2 + 10;
    const int height = baseline + 40 + 14 * static_cast<int>(d.collisions.size());
    auto x_of = [&](std::size_t beat) { return kMargin + static_cast<int>(beat) * kSpacing; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <title>juggling diagram " << d.sequence.str() << "</title>\n";
    os << "  <defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"" << x_of(d.beats - 1) + 5
       << "\" height=\"" << height << "\"/></clipPath></defs>\n";
    os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" clip-path=\"url(#window)\">\n";
    for (const Arc& a : d.arcs) {
        const int x1 = x_of(a.from);
        const int x2 = x_of(a.to);
        const int lift = static_cast<int>(a.to - a.from) * kRise;
        os << "    <path d=\"M " << x1 << ' ' << baseline - 5 << " Q " << (x1 + x2) / 2 << ' '
           << baseline - 5 - lift << ' ' << x2 << ' ' << baseline - 5 << "\"";
        if (a.clipped) os << " stroke-dasharray=\"4 3\"";
        os << "/>\n";
    }
    os << "  </g>\n";
    os << "  <g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < d.beats; ++i) {
        const bool collides = std::any_of(d.collisions.begin(), d.collisions.end(),
                                          [i](const Collision& c) { return c.beat == i; });
        os << "    <circle cx=\"" << x_of(i) << "\" cy=\"" << baseline << "\" r=\"4\" fill=\""
           << (collides ? "red" : "white") << "\" stroke=\"black\"/>\n";
        os << "    <text x=\"" << x_of(i) << "\" y=\"" << baseline + 22 << "\">" << d.sequence[i % n] << "</text>\n";
    }
    os << "  </g>\n";
    std::size_t line = 0;
    for (const Collision& c : d.collisions) {
        os << "  <text x=\"" << kMargin << "\" y=\"" << baseline + 36 + 14 * static_cast<int>(line++)
           << "\" font-family=\"monospace\" font-size=\"11\" fill=\"red\">" << collision_note(c) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ocycles::cli
