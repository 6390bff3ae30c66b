#pragma once

#include <string>

#include "permpat/antichain.hpp"

namespace permpat::antichain {

/// Permutation-matrix diagram of an element as text: a mark in column c,
/// row v for every entry v at position c, with the prefix, middle, and
/// suffix columns drawn with distinct mark characters. Byte-deterministic.
std::string diagram_ascii(const AntichainElement& e);

/// The same diagram as a minimal SVG: one dot per entry over three tinted
/// column regions. Byte-deterministic for a fixed element.
std::string diagram_svg(const AntichainElement& e);

}  // namespace permpat::antichain
