#pragma once

#include <string>
#include <string_view>

#include "ncalg/morphisms.hpp"

namespace ncalg {

/// Text form of an algebra map:
///
///     # comment
///     map theta : racah -> bi (homo)
///     A := 1/16*(2*X - 3)*(2*X + 1)
///     B := ...
///
/// Algebras are built-in names or system file paths (see load_presentation).
/// Every source generator needs exactly one image. The result is unsealed.
/// Errors are ParseError with the line of the offending input.
AlgebraMap parse_map(std::string_view text);

std::string map_to_text(const AlgebraMap& map);

}  // namespace ncalg
