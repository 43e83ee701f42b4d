#pragma once

#include <iosfwd>
#include <string>

#include "bic/scheme.hpp"

namespace bic {

/// Deterministic plain-text scheme format: header lines with the channel
/// parameters and dimensions, then one `gen <subcarrier> <class>` block per
/// nonempty generator with q*T rows of fixed-width hex entries. Asymmetric
/// schemes carry matching `othergen` blocks.
std::string serialize_scheme(const LinearScheme& s);

/// Inverse of serialize_scheme; throws std::invalid_argument on malformed
/// input and validates the resulting shapes.
LinearScheme parse_scheme(std::istream& in);
LinearScheme parse_scheme(const std::string& text);

}  // namespace bic
