// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

// Subcommand dispatch. A request is a JSON object whose keys mirror the CLI
// flags (ring, n, a, b, point, matrix, algebra, ideal, bound, seed, verify,
// quaternion, level, samples); the response is the envelope
//   {"ok": true, "result": ..., "verification": [...]}
//   {"ok": false, "error": Code, "detail": ...}

#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace brauer::commands {

using json_io::json;

const std::vector<std::string>& subcommand_names();

/// "Mk", "Dk" or "Q(a,b)" over the given ring.
StructureAlgebra make_builtin_algebra(const Ring& ring, const std::string& name);

/// Never throws for domain or usage errors; they become error envelopes.
json run(const std::string& subcommand, const json& request);

/// 0 for success, 64 for UsageError, 2 for any other error.
int exit_code(const json& envelope);

}  // namespace brauer::commands
