#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wzsum/hyperterm.hpp"
#include "wzsum/wz.hpp"

namespace wzsum {

/// Reads a WZ certificate fixture. Line-oriented, '#' starts a comment:
///
///   name:        thm1
///   params:      alpha beta          (free rational parameters, optional)
///   indices:     j                   (extra integer indices in 0..n, optional)
///   term:        sign(n + k) * 1 * prod binom(beta + k, k)^1 binom(k, j)^1 ...
///   certificate: (j - k)*(alpha + k - n)/((k - n - 1)*(alpha - beta - n - 1))
///   orientation: -1
///
/// A term is `sign(<affine>) * <rational> * prod binom(<affine>, <affine>)^<+-1> ...`
/// where factors are separated by whitespace or '*' and `* prod ...` may be
/// omitted for a factor-free term. Affine arguments and the certificate use
/// the expression grammar of parse_expr. Errors are ParseError with 1-based
/// line and column.
WZPair parse_certificate(std::string_view text);
WZPair load_certificate(const std::filesystem::path& path);

/// The HyperTerm part of the syntax on its own (column offsets are 0-based
/// byte offsets into `text`).
HyperTerm parse_hyperterm(std::string_view text);

/// Round-trippable text form of a pair.
std::string format_certificate(const WZPair& pair);

}  // namespace wzsum
