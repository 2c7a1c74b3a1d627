#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "dendric/language_window.hpp"

namespace dendric {

/// Window from a source descriptor:
///   periodic:<u>[.<v>]            ^ω u · v^ω (v defaults to u)
///   substitutive:<rules>@<seed>   fixed point language of an endomorphism
///   iet:<exchange text>           natural coding of the point (default 0)
///   file:<path>                   window dump, cut down to max_len
/// A missing max_len keeps a file's own depth and is an error otherwise.
/// Throws ParseError or PreconditionError.
LanguageWindow window_from_source(std::string_view descriptor,
                                  std::optional<std::size_t> max_len);

/// The window restricted to factors of length <= max_len.
LanguageWindow truncate(const LanguageWindow& win, std::size_t max_len);

}  // namespace dendric
