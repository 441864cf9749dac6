#include "rbc/parallel.hpp"

#include "rbc/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>

namespace rbc {

unsigned default_workers() {
    if (const char* env = std::getenv("RIESZ_BC_WORKERS"); env != nullptr) {
        const std::string_view text(env);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
            throw InputError("RIESZ_BC_WORKERS must be a positive integer, got \"" + std::string(text) + "\"");
        }
        return value;
    }
#ifdef _OPENMP
    return static_cast<unsigned>(omp_get_max_threads());
#else
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
#endif
}

}  // namespace rbc
