#pragma once

#include <cstdint>

namespace rif {

// Materialization cap: constructions and searches refuse to enumerate more
// than this many sets. The CLI overrides it from RIF_SIZE_CAP.
std::int64_t size_cap();
void set_size_cap(std::int64_t cap);

} // namespace rif
