// render.hpp: deterministic SVG / DOT / TikZ emitters for plabic diagrams
// (with soap-film region labels and optional film overlay) and quivers.
#pragma once

#include <optional>
#include <string>

#include "braidseed/braid.hpp"

namespace braidseed {

enum class RenderFormat { Svg, Dot, Tikz };
enum class RenderTarget { Plabic, Quiver };

RenderFormat parse_render_format(const std::string& text);
RenderTarget parse_render_target(const std::string& text);

struct RenderOptions {
  RenderFormat format = RenderFormat::Svg;
  RenderTarget target = RenderTarget::Plabic;
  std::optional<int> film;  // highlight this film's regions (plabic only)
};

// Byte-identical output for identical inputs. Unsupported combinations
// (dot + plabic) and unknown film ids throw InvalidInput.
std::string render(const Permutation& u, const BraidWord& beta, const RenderOptions& options);

}  // namespace braidseed
