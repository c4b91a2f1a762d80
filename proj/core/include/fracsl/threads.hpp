#pragma once

namespace fracsl {

/// Worker count used by row-parallel loops (weight tables, composition,
/// assembly, elimination updates). Resolution order: set_max_threads()
/// override, then the FRACSL_THREADS environment variable, then the
/// hardware default. Always ≥ 1. Results are bit-identical for any count:
/// parallel regions only ever write disjoint elements.
int max_threads();

/// Override the worker count; n ≤ 0 restores the default resolution.
void set_max_threads(int n);

}  // namespace fracsl
