#include "edgereg/config.hpp"

#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

namespace edgereg {

namespace {

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0') return fallback;
  return parsed;
}

int env_int(const char* name, int fallback) {
  return static_cast<int>(env_long(name, fallback));
}

Budgets g_budgets = Budgets::from_env();
int g_threads = -1;
std::mutex g_mutex;

}  // namespace

Budgets Budgets::from_env() {
  Budgets b;
  b.max_vertices = env_int("EDGEREG_BUDGET_VERTICES", b.max_vertices);
  b.max_canonical_vertices =
      env_int("EDGEREG_BUDGET_CANONICAL_VERTICES", b.max_canonical_vertices);
  b.max_raw_generators = env_long("EDGEREG_BUDGET_RAW_GENS", b.max_raw_generators);
  b.max_ring_vars = env_int("EDGEREG_BUDGET_RING_VARS", b.max_ring_vars);
  b.max_polarized_vars = env_int("EDGEREG_BUDGET_POLY_VARS", b.max_polarized_vars);
  b.max_lcm_generators = env_int("EDGEREG_BUDGET_LCM_GENS", b.max_lcm_generators);
  b.max_homology_vertices =
      env_int("EDGEREG_BUDGET_HOMOLOGY_VERTS", b.max_homology_vertices);
  b.max_family_h = env_int("EDGEREG_BUDGET_FAMILY_H", b.max_family_h);
  b.max_lattice_size = env_long("EDGEREG_BUDGET_LATTICE", b.max_lattice_size);
  b.max_faces = env_long("EDGEREG_BUDGET_FACES", b.max_faces);
  b.max_walks = env_long("EDGEREG_BUDGET_WALKS", b.max_walks);
  return b;
}

const Budgets& budgets() { return g_budgets; }

void set_budgets(const Budgets& b) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_budgets = b;
}

int thread_count() {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_threads > 0) return g_threads;
  }
  int n = env_int("EDGEREG_THREADS", 0);
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return n;
}

void set_thread_count(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_threads = n;
}

}  // namespace edgereg
