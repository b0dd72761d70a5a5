#pragma once

#include <string>

#include "legcob/front.hpp"

namespace legcob {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
  RenderFormat format = RenderFormat::Ascii;
  int width = 640;
  int height = 480;
  bool show_orientations = false;
};

// Deterministic drawing of a front word: strand rows as horizontal lanes,
// cusps as turns, crossings with the descending strand on top.  Identical
// inputs give byte-identical documents.
std::string render_front(const FrontWord& w, const RenderSpec& spec = {});

}  // namespace legcob
