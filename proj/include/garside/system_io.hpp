#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "garside/system.hpp"

namespace garside {

using TemplateParams = std::map<std::string, long>;

/// Parses the line-oriented system format:
///
///     # comment
///     name: t23
///     atoms: a b
///     delta: a a | b b b
///     rep a: 0, -t ; -t^2, 0
///
/// General fixtures use `relation: u = v` lines plus `delta-word: w`.
/// A `template: <kind> key=value ...` line instantiates a built-in family;
/// `overrides` replace the file's parameter values.
SystemDef parse_system_def(std::string_view text, const TemplateParams& overrides = {});
SystemDef load_system_def(const std::filesystem::path& path, const TemplateParams& overrides = {});

/// Renders a definition back into the file format.
std::string format_system_def(const SystemDef& def);

}  // namespace garside
