#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dmrep/kernels.hpp"

namespace dmrep::kernels {

#if defined(DMREP_HAVE_AVX2)
const Table* avx2_table_compiled();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(DMREP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table* initial_table() {
  const char* forced = std::getenv("DMREP_ISA");
  if (forced != nullptr && std::string(forced) == "scalar") {
    return &scalar_table();
  }
  if (const Table* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{initial_table()};
  return table;
}

}  // namespace

const Table* avx2_table() {
#if defined(DMREP_HAVE_AVX2)
  if (cpu_has_avx2()) return avx2_table_compiled();
#endif
  return nullptr;
}

std::vector<const Table*> available_tables() {
  std::vector<const Table*> out{&scalar_table()};
  if (const Table* t = avx2_table()) out.push_back(t);
  return out;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

Isa detected_isa() {
  return avx2_table() != nullptr ? Isa::kAvx2 : Isa::kScalar;
}

void select(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      current().store(&scalar_table());
      return;
    case Isa::kAvx2:
      if (const Table* t = avx2_table()) {
        current().store(t);
        return;
      }
      throw std::invalid_argument("AVX2 kernels are not available on this machine");
  }
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace dmrep::kernels
