#pragma once

#include "lec/colouring.hpp"

namespace lec {

/// Proper edge colouring with colours 1..Delta+1 (fan rotation plus
/// alternating-path inversion).
FullColouring vizing_edge_colour(const Graph& g);

/// Colours G - E(H) with a Vizing colouring on colours disjoint from the
/// precolouring's palette; precoloured edges keep their colours.
FullColouring extend_fresh_palette(const Graph& g, const Precolouring& precol);

}  // namespace lec
