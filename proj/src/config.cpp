#include "rif/config.hpp"

#include <atomic>

namespace rif {

namespace {
std::atomic<std::int64_t> g_size_cap{1'000'000};
}

std::int64_t size_cap() { return g_size_cap.load(); }

void set_size_cap(std::int64_t cap) { g_size_cap.store(cap); }

} // namespace rif
