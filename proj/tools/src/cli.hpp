#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pascalpell/exactnum.hpp"

namespace pascalpell::cli {

/// Exit statuses.
constexpr int kOk = 0;
constexpr int kBadConfig = 1;
constexpr int kInternal = 2;

/// Default bound and precision, overridable by PASCALPELL_BOUND / PASCALPELL_PRECISION.
constexpr long kDefaultBound = 1'000'000;
constexpr unsigned kDefaultPrecision = 128;
/// Bounds above this need --allow-large.
constexpr long kDeskBound = 100'000'000;

/// "12000000", "12e6", "10^8", "12*10^6". Throws std::invalid_argument.
Integer parse_bound(const std::string& text);

/// Runs one command line. Diagnostics go to err; the result to out.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pascalpell::cli
