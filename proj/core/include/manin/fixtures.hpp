#pragma once

// Presentations of classical operads shipped with the library. Two-operation
// fixtures use e_1 = x1 x2 and e_2 = e_1^(12) = x2 x1 (the convention of the
// `as` file), so their action matrix is the swap matrix.

#include <span>
#include <string_view>

#include "manin/operad.hpp"

namespace manin::fixtures {

/// as, com, lie, perm, prelie, leib, zinb
std::span<const std::string_view> names();

/// Raw file text; throws manin::Error for an unknown name.
std::string_view text(std::string_view name);

OperadPresentation load(std::string_view name);

}  // namespace manin::fixtures
