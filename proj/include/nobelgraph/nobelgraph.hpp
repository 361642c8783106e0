#pragma once
// Umbrella header for the nobelgraph library.

#include "nobelgraph/community.hpp"  // IWYU pragma: export
#include "nobelgraph/errors.hpp"     // IWYU pragma: export
#include "nobelgraph/graph.hpp"      // IWYU pragma: export
#include "nobelgraph/ingest.hpp"     // IWYU pragma: export
#include "nobelgraph/metrics.hpp"    // IWYU pragma: export
#include "nobelgraph/normalize.hpp"  // IWYU pragma: export
#include "nobelgraph/projection.hpp" // IWYU pragma: export
#include "nobelgraph/query/ast.hpp"     // IWYU pragma: export
#include "nobelgraph/query/execute.hpp" // IWYU pragma: export
#include "nobelgraph/query/parse.hpp"   // IWYU pragma: export
#include "nobelgraph/reports.hpp"    // IWYU pragma: export
#include "nobelgraph/rng.hpp"        // IWYU pragma: export
#include "nobelgraph/schema.hpp"     // IWYU pragma: export
#include "nobelgraph/snapshot.hpp"   // IWYU pragma: export
#include "nobelgraph/strings.hpp"    // IWYU pragma: export
#include "nobelgraph/unicode.hpp"    // IWYU pragma: export
