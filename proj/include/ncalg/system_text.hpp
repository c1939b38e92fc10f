#pragma once

#include <string>
#include <string_view>

#include "ncalg/rewrite.hpp"

namespace ncalg {

/// Text form of a reduction system:
///
///     # comment
///     alphabet A B C D alpha=α beta=β
///     weights 1 1 1 1 1 1
///     chain A B C D
///     B*A -> A*B - 2*D
///
/// `alphabet` comes first; `weights` (default all 1) and `chain` (default
/// empty) are optional. Every other nonblank line is a rule `LHS -> expr`
/// whose LHS is a product of generators. Errors are ParseError with the
/// line of the offending input.
ReductionSystem parse_system(std::string_view text);

std::string system_to_text(const ReductionSystem& sys);

}  // namespace ncalg
