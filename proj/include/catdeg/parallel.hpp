#pragma once

namespace catdeg {

/// Applies the CATDEG_THREADS cap (if set to a positive integer) to the
/// OpenMP runtime. Returns the resulting maximum thread count.
int configure_threads_from_env();

int max_threads() noexcept;

}  // namespace catdeg
