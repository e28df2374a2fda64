#include <atomic>
#include <cstdlib>
#include <string>

#include "bctkit/kernels.hpp"

namespace bctkit::kernels {

namespace {

bool cpu_supports_avx2() noexcept {
#if defined(BCTKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* find(std::string_view name) {
  for (const KernelSet* k : available()) {
    if (name == k->name) return k;
  }
  return nullptr;
}

const KernelSet* initial_choice() {
  if (const char* env = std::getenv("BCTKIT_KERNELS"); env != nullptr) {
    if (const KernelSet* k = find(env)) return k;
  }
  return available().back();
}

std::atomic<const KernelSet*>& current() {
  static std::atomic<const KernelSet*> chosen{initial_choice()};
  return chosen;
}

}  // namespace

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&scalar::kernels()};
  if (const KernelSet* k = neon::kernels()) out.push_back(k);
  if (const KernelSet* k = avx2::kernels(); k != nullptr && cpu_supports_avx2()) out.push_back(k);
  return out;
}

const KernelSet& active() { return *current().load(std::memory_order_acquire); }

bool select(std::string_view name) {
  const KernelSet* k = find(name);
  if (k == nullptr) return false;
  current().store(k, std::memory_order_release);
  return true;
}

}  // namespace bctkit::kernels
