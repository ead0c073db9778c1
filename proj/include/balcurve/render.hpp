#pragma once

// Deterministic SVG output. The unit square is drawn with y pointing up; faces
// carry their exact areas as p/q labels and bigons are shaded.

#include "balcurve/arrangement.hpp"
#include "balcurve/certificate.hpp"
#include "balcurve/witness.hpp"

#include <string>
#include <vector>

namespace bc {

// One closed curve: its two complementary regions. Two pieces: their arrangement.
std::string render_pieces_svg(const std::vector<Piece>& pieces);
std::string render_arrangement_svg(const Arrangement& arr);
// Tree nodes sit at their faces; arrows point along directed edges and the
// central vertex gets a double ring.
std::string render_dual_tree_svg(const DualTree& t, const Arrangement& arr);
std::string render_witness_svg(const Witness& w, const std::vector<PolyCurve>& curves = {});
// Every vertex of the justification chain overlaid, with the step list below.
std::string render_certificate_svg(const Certificate& c);

// A point in the interior of the face, used for labels and tree nodes.
RatPoint face_label_point(const Arrangement& arr, int face);

}  // namespace bc
