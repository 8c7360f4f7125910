#include "abcdoo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace abcdoo {

std::size_t default_thread_count() {
    if (const char* env = std::getenv("ABCDOO_THREADS")) {
        try {
            const long long value = std::stoll(env);
            if (value > 0) return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace abcdoo
