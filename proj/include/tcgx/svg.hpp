#pragma once

#include <tcgx/model.hpp>
#include <tcgx/registry.hpp>

#include <string>

namespace tcgx {

/// The element's geometry in paper millimetres (Natura coordinates scaled;
/// font sizes are always paper millimetres and stay as they are).
Element to_paper(const Element& e, const Scale& scale);

/// One SVG document for the whole sheet, 1 user unit = 1 mm, y axis up inside
/// the drawing group. Magistrals are rendered through their tessellation.
/// Output depends only on the drawing and the standards tables.
std::string render_svg(const Drawing& d, const Standards& st = Standards::bundled());

} // namespace tcgx
