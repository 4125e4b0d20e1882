#include "ptycho/errors.hpp"

#include <atomic>

namespace ptycho {

namespace {
std::atomic<bool> g_quiet{false};
}

void set_quiet(bool quiet) { g_quiet.store(quiet); }
bool quiet() { return g_quiet.load(); }

void warn(const std::string& message) {
    if (!g_quiet.load()) {
        std::fprintf(stderr, "warning: %s\n", message.c_str());
    }
}

} // namespace ptycho
