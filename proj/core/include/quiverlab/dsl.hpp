#ifndef QUIVERLAB_DSL_HPP
#define QUIVERLAB_DSL_HPP

#include <string_view>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

// Text format, whitespace-separated tokens, '#' comments to end of line:
//
//   file     := "quiver" "{" "vertices" vid+ arrow* "}" block*
//   arrow    := "arrow" aid vid vid          # arrow aid: tail -> head
//   block    := "lambda" (vid "=" rational)+ | "alpha" (vid "=" integer)+
//   rational := integer | integer "/" positive-integer
//
// '{', '}' and '=' also delimit tokens on their own, so "v0=1" works.

/// Parses a full input file (quiver plus optional alpha/lambda blocks).
QuiverFile parse_quiver_file(std::string_view text);

/// Parses just the quiver; alpha/lambda blocks are still validated.
Quiver parse_quiver(std::string_view text);

}  // namespace quiverlab

#endif
