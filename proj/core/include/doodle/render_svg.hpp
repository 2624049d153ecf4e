#pragma once

#include <string>

#include "doodle/arrow_diagram.hpp"

namespace doodle {

/// SVG 1.1 picture of the diagram: endpoints equally spaced on a circle,
/// chords drawn as straight arrows tail -> head, labelled by chord id.
/// Byte-identical output for equal diagrams.
std::string render_svg(const ArrowDiagram& d);

}  // namespace doodle
