#pragma once

#include <string_view>

#include "hlgf/complex.hpp"
#include "hlgf/globe_word.hpp"

namespace hlgf {

// Grammar:
//   word    := primary ("o" LEVEL primary)*        left-associative
//   primary := "v" INT | "G" DIGITS | "G[" INT ("," INT)* "]"
//            | "inv" LEVEL "(" word ")" | "s" DIGIT DIGIT "(" word ")" | "(" word ")"
// Generators and vertices must belong to c. Throws ParseError with a byte offset.
GlobeWord parse_word(std::string_view text, const SkeletalComplex& c);

}  // namespace hlgf
