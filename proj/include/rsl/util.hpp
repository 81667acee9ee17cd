#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace rsl {

// Fixed output formatting: 12 significant digits / 12 fixed decimals.
// All emitters go through these so repeated runs are byte-identical.
std::string fmt_sig12(double v);
std::string fmt_fixed12(double v);

// Worker count for parallel scans: explicit request wins, otherwise the
// RSL_THREADS environment variable, otherwise 1. 0 means "auto".
unsigned resolve_threads(unsigned requested);

// Run fn(chunk_index) for chunk_index in [0, n_chunks) on up to `threads`
// workers. Chunks are handed out in order; the caller owns per-chunk result
// slots, so the merged outcome is independent of scheduling.
void run_chunked(std::size_t n_chunks, unsigned threads,
                 const std::function<void(std::size_t)>& fn);

// Pearson correlation of two equal-length samples.
double correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace rsl
