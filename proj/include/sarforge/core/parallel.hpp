// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>
#include <functional>

namespace sarforge {

/// Runs body(i) for i in [0, count) on up to `jobs` threads (0 means hardware concurrency).
/// Each index is processed exactly once; the first exception thrown is rethrown on the caller.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

unsigned resolve_jobs(unsigned jobs);

}  // namespace sarforge
