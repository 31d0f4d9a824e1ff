#include "kvcut/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "kvcut/error.hpp"

namespace kvcut {

namespace {

std::size_t from_env(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end)
        throw InputError(std::string(name) + " must be a non-negative integer, got '" + raw + "'");
    return value;
}

}  // namespace

std::size_t default_exhaustive_limit() { return from_env("KVCUT_EXHAUSTIVE_LIMIT", 24); }

std::size_t default_edge_limit() { return from_env("KVCUT_EDGE_LIMIT", 24); }

}  // namespace kvcut
