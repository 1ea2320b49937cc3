#include "kop/parallel.hpp"

#include <cstdlib>
#include <string>

namespace kop {

int grid_thread_count() {
  static const int count = [] {
    const char* env = std::getenv("KOP_THREADS");
    if (!env) return 1;
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }();
  return count;
}

}  // namespace kop
