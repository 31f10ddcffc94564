#pragma once

#include "report_json.hpp"

namespace pascalpell::cli {

struct ReproduceOptions {
  unsigned workers = 1;
  /// Searches that would list more solutions than this keep only the first ten.
  std::size_t listing_limit = 50;
};

/// The whole reproduction suite. No timing or worker fields, so the output is
/// byte-identical across runs and worker counts.
Json reproduce(const ReproduceOptions& options);

}  // namespace pascalpell::cli
