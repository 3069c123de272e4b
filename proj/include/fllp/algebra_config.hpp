#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fllp/algebra.hpp"

namespace fllp {

/// Parses the line-oriented algebra description:
///
///     primary: false, true
///     hedge: very class=+ rank=2 symbol=v
///     positive: very -> very, more, little
///     negative: very -> probably
///     limit: 2
///     inverse: probably very probably true -> very probably true
///
/// `%` starts a comment. Syntax problems are collected and thrown together
/// as an AlgebraError; semantic checks happen in HedgeAlgebra::build.
HedgeAlgebraSpec parse_algebra_config(std::string_view text);

HedgeAlgebraSpec load_algebra_config(const std::filesystem::path& path);

/// The built-in Very/More/Probably/Little algebra with limit 2.
std::string_view default_algebra_config();

}  // namespace fllp
