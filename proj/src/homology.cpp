#include "edgereg/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgereg/errors.hpp"

namespace edgereg {

namespace {

using boost::multiprecision::cpp_int;

bool is_prime(int n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::gf(int prime) {
  if (prime < 2 || prime >= (1 << 20) || !is_prime(prime))
    throw ParseError("field modulus must be a prime below 2^20: " +
                     std::to_string(prime));
  return Field{false, prime};
}

std::string Field::to_string() const {
  if (rational) return "rationals";
  return "gf(" + std::to_string(p) + ")";
}

Field parse_field(const std::string& text) {
  if (text == "rationals") return Field::rationals();
  if (text.size() > 4 && text.compare(0, 3, "gf(") == 0 && text.back() == ')') {
    std::string num = text.substr(3, text.size() - 4);
    if (!num.empty() && num.size() <= 7 &&
        num.find_first_not_of("0123456789") == std::string::npos)
      return Field::gf(std::stoi(num));
  }
  throw ParseError("unknown field (want rationals or gf(p)): " + text);
}

namespace {

// Shared shape of the rank routines: reduce each column against previously
// settled columns keyed by their largest remaining row; surviving columns
// have distinct pivot rows, so their count is the rank.

long rank_gf2(const SparseColumns& cols) {
  std::vector<std::vector<int>> settled;
  std::unordered_map<int, int> pivot_of_low;
  long rank = 0;
  std::vector<int> cur, tmp;
  for (const auto& col : cols) {
    cur.clear();
    for (const auto& [r, v] : col)
      if (v % 2 != 0) cur.push_back(r);
    std::sort(cur.begin(), cur.end());
    // duplicate rows cancel in pairs
    tmp.clear();
    for (size_t i = 0; i < cur.size();) {
      size_t j = i;
      while (j < cur.size() && cur[j] == cur[i]) ++j;
      if ((j - i) % 2 == 1) tmp.push_back(cur[i]);
      i = j;
    }
    cur.swap(tmp);
    while (!cur.empty()) {
      auto it = pivot_of_low.find(cur.back());
      if (it == pivot_of_low.end()) break;
      const auto& piv = settled[static_cast<size_t>(it->second)];
      tmp.clear();
      std::set_symmetric_difference(cur.begin(), cur.end(), piv.begin(),
                                    piv.end(), std::back_inserter(tmp));
      cur.swap(tmp);
    }
    if (!cur.empty()) {
      pivot_of_low[cur.back()] = static_cast<int>(settled.size());
      settled.push_back(cur);
      ++rank;
    }
  }
  return rank;
}

long pow_mod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

long rank_gfp(const SparseColumns& cols, long p) {
  using Col = std::vector<std::pair<int, long>>;
  std::vector<Col> settled;
  std::unordered_map<int, int> pivot_of_low;
  long rank = 0;
  Col cur, tmp;
  for (const auto& col : cols) {
    cur.clear();
    for (const auto& [r, v] : col) {
      long m = ((v % p) + p) % p;
      if (m != 0) cur.emplace_back(r, m);
    }
    std::sort(cur.begin(), cur.end());
    tmp.clear();
    for (size_t i = 0; i < cur.size();) {
      size_t j = i;
      long sum = 0;
      while (j < cur.size() && cur[j].first == cur[i].first)
        sum = (sum + cur[j++].second) % p;
      if (sum != 0) tmp.emplace_back(cur[i].first, sum);
      i = j;
    }
    cur.swap(tmp);
    while (!cur.empty()) {
      auto it = pivot_of_low.find(cur.back().first);
      if (it == pivot_of_low.end()) break;
      const Col& piv = settled[static_cast<size_t>(it->second)];
      // cur -= factor * piv, killing the shared low row
      long factor = cur.back().second *
                    pow_mod(piv.back().second, p - 2, p) % p;
      tmp.clear();
      size_t a = 0, b = 0;
      while (a < cur.size() || b < piv.size()) {
        if (b == piv.size() ||
            (a < cur.size() && cur[a].first < piv[b].first)) {
          tmp.push_back(cur[a++]);
        } else if (a == cur.size() || piv[b].first < cur[a].first) {
          long m = (p - factor * piv[b].second % p) % p;
          if (m != 0) tmp.emplace_back(piv[b].first, m);
          ++b;
        } else {
          long m = ((cur[a].second - factor * piv[b].second) % p + p) % p;
          if (m != 0) tmp.emplace_back(cur[a].first, m);
          ++a, ++b;
        }
      }
      cur.swap(tmp);
    }
    if (!cur.empty()) {
      pivot_of_low[cur.back().first] = static_cast<int>(settled.size());
      settled.push_back(cur);
      ++rank;
    }
  }
  return rank;
}

struct overflow_tag {};

long num_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_tag{};
  return r;
}
long num_sub(long a, long b) {
  long r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_tag{};
  return r;
}
long num_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_tag{};
  return r;
}
long num_gcd(long a, long b) { return std::gcd(a, b); }
long num_abs(long a) { return a < 0 ? -a : a; }
bool num_is_one(const long& a) { return a == 1; }

cpp_int num_mul(const cpp_int& a, const cpp_int& b) { return a * b; }
cpp_int num_sub(const cpp_int& a, const cpp_int& b) { return a - b; }
cpp_int num_add(const cpp_int& a, const cpp_int& b) { return a + b; }
cpp_int num_gcd(const cpp_int& a, const cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}
cpp_int num_abs(const cpp_int& a) { return boost::multiprecision::abs(a); }
bool num_is_one(const cpp_int& a) { return a == 1; }

// Fraction-free rank over the integers (equals the rank over the rationals).
// The update (b/g)*cur - (a/g)*piv stays integral; columns are rescaled by
// their content to limit growth.
template <typename Num>
long rank_integer(const SparseColumns& cols) {
  using Col = std::vector<std::pair<int, Num>>;
  std::vector<Col> settled;
  std::unordered_map<int, int> pivot_of_low;
  long rank = 0;
  auto normalize = [](Col& c) {
    Num g = 0;
    for (const auto& [r, v] : c) {
      (void)r;
      g = num_gcd(g, v);
      if (num_is_one(g)) return;
    }
    if (!num_is_one(g))
      for (auto& [r, v] : c) {
        (void)r;
        v = v / g;
      }
  };
  Col cur, tmp;
  for (const auto& col : cols) {
    cur.clear();
    for (const auto& [r, v] : col)
      if (v != 0) cur.emplace_back(r, Num(v));
    std::sort(cur.begin(), cur.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    tmp.clear();
    for (size_t i = 0; i < cur.size();) {
      size_t j = i;
      Num sum = 0;
      while (j < cur.size() && cur[j].first == cur[i].first)
        sum = num_add(sum, cur[j++].second);
      if (sum != 0) tmp.emplace_back(cur[i].first, sum);
      i = j;
    }
    cur.swap(tmp);
    normalize(cur);
    while (!cur.empty()) {
      auto it = pivot_of_low.find(cur.back().first);
      if (it == pivot_of_low.end()) break;
      const Col& piv = settled[static_cast<size_t>(it->second)];
      Num a = cur.back().second, b = piv.back().second;
      Num g = num_gcd(num_abs(a), num_abs(b));
      Num ca = b / g, cb = a / g;  // cur' = ca*cur - cb*piv
      tmp.clear();
      size_t x = 0, y = 0;
      while (x < cur.size() || y < piv.size()) {
        if (y == piv.size() ||
            (x < cur.size() && cur[x].first < piv[y].first)) {
          tmp.emplace_back(cur[x].first, num_mul(ca, cur[x].second));
          ++x;
        } else if (x == cur.size() || piv[y].first < cur[x].first) {
          tmp.emplace_back(piv[y].first, num_sub(Num(0), num_mul(cb, piv[y].second)));
          ++y;
        } else {
          Num v = num_sub(num_mul(ca, cur[x].second), num_mul(cb, piv[y].second));
          if (v != 0) tmp.emplace_back(cur[x].first, v);
          ++x, ++y;
        }
      }
      cur.swap(tmp);
      normalize(cur);
    }
    if (!cur.empty()) {
      pivot_of_low[cur.back().first] = static_cast<int>(settled.size());
      settled.push_back(cur);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

long matrix_rank(const SparseColumns& cols, int nrows, const Field& f) {
  for (const auto& col : cols)
    for (const auto& [r, v] : col) {
      (void)v;
      if (r < 0 || r >= nrows) throw Error("matrix entry outside row range");
    }
  if (!f.rational) {
    if (f.p == 2) return rank_gf2(cols);
    return rank_gfp(cols, f.p);
  }
  try {
    return rank_integer<long>(cols);
  } catch (const overflow_tag&) {
    return rank_integer<cpp_int>(cols);
  }
}

SparseColumns boundary_matrix(const std::vector<uint64_t>& lower,
                              const std::vector<uint64_t>& upper) {
  std::unordered_map<uint64_t, int> index;
  index.reserve(lower.size() * 2);
  for (size_t i = 0; i < lower.size(); ++i)
    index[lower[i]] = static_cast<int>(i);
  SparseColumns cols;
  cols.reserve(upper.size());
  for (uint64_t m : upper) {
    std::vector<std::pair<int, long>> col;
    int sign = 1;
    uint64_t rest = m;
    while (rest) {
      uint64_t bit = rest & (~rest + 1);
      auto it = index.find(m ^ bit);
      if (it == index.end())
        throw Error("internal: boundary face missing from lower layer");
      col.emplace_back(it->second, sign);
      sign = -sign;
      rest ^= bit;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

void assert_boundary_squared(const SparseColumns& lower_map,
                             const SparseColumns& upper_map) {
  std::map<int, long> acc;
  for (const auto& col : upper_map) {
    acc.clear();
    for (const auto& [mid, v] : col)
      for (const auto& [row, w] : lower_map[static_cast<size_t>(mid)])
        acc[row] += v * w;
    for (const auto& [row, v] : acc) {
      (void)row;
      if (v != 0) throw Error("internal: boundary composition nonzero");
    }
  }
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> verts,
                                     std::vector<uint64_t> raw_facets)
    : vertices(std::move(verts)) {
  if (vertices.size() > 64)
    throw BudgetExceeded("complex vertex count exceeds the 64 bit mask limit");
  uint64_t universe = vertices.size() == 64
                          ? ~uint64_t{0}
                          : ((uint64_t{1} << vertices.size()) - 1);
  for (uint64_t f : raw_facets)
    if (f & ~universe) throw Error("facet names a vertex outside the ground set");
  std::sort(raw_facets.begin(), raw_facets.end());
  raw_facets.erase(std::unique(raw_facets.begin(), raw_facets.end()),
                   raw_facets.end());
  for (uint64_t f : raw_facets) {
    bool dominated = false;
    for (uint64_t g : raw_facets)
      if (g != f && (f & ~g) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) facets.push_back(f);
  }
}

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  int best = -1;
  for (uint64_t f : facets) best = std::max(best, std::popcount(f) - 1);
  return best;
}

bool SimplicialComplex::has_face(uint64_t sigma) const {
  for (uint64_t f : facets)
    if ((sigma & ~f) == 0) return true;
  return false;
}

SimplicialComplex SimplicialComplex::induced(uint64_t sigma) const {
  std::vector<uint64_t> raw;
  raw.reserve(facets.size());
  for (uint64_t f : facets) raw.push_back(f & sigma);
  return SimplicialComplex(vertices, raw);
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i,
                                          const Budgets& b) {
  if (i.is_unit()) throw UnitIdeal("stanley-reisner complex needs a proper ideal");
  if (!is_squarefree(i))
    throw NotSquarefree("stanley-reisner complex needs a squarefree ideal");
  int n = i.nvars();
  uint64_t universe = n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  // Berge multiplication: minimal transversals of the generator supports;
  // facets are their complements.
  std::vector<uint64_t> trans{0};
  for (const auto& gen : i.gens()) {
    uint64_t s = gen.support();
    std::vector<uint64_t> next;
    for (uint64_t t : trans) {
      if (t & s) {
        next.push_back(t);
        continue;
      }
      uint64_t rest = s;
      while (rest) {
        uint64_t bit = rest & (~rest + 1);
        next.push_back(t | bit);
        rest ^= bit;
      }
    }
    std::sort(next.begin(), next.end(), [](uint64_t x, uint64_t y) {
      int px = std::popcount(x), py = std::popcount(y);
      return px != py ? px < py : x < y;
    });
    std::vector<uint64_t> kept;
    for (uint64_t t : next) {
      bool redundant = false;
      for (uint64_t k : kept)
        if ((k & ~t) == 0) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(t);
    }
    if (static_cast<long>(kept.size()) > b.max_faces)
      throw BudgetExceeded("max_faces: transversal family exceeds " +
                           std::to_string(b.max_faces));
    trans.swap(kept);
  }
  std::vector<uint64_t> raw;
  raw.reserve(trans.size());
  for (uint64_t t : trans) raw.push_back(universe & ~t);
  return SimplicialComplex(i.ring_vars(), raw);
}

std::vector<long> reduced_homology_ranks(const SimplicialComplex& c,
                                         const Field& f, const Budgets& b) {
  if (c.is_void()) return {};
  if (static_cast<int>(c.vertices.size()) > b.max_homology_vertices)
    throw BudgetExceeded(
        "max_homology_vertices: complex has " +
        std::to_string(c.vertices.size()) + " vertices, cap " +
        std::to_string(b.max_homology_vertices));
  int n = static_cast<int>(c.vertices.size());
  std::vector<std::vector<uint64_t>> layers;
  layers.push_back({0});
  long total_faces = 1;
  while (true) {
    const auto& prev = layers.back();
    std::vector<uint64_t> next;
    for (uint64_t m : prev) {
      int start = m == 0 ? 0 : 64 - std::countl_zero(m);
      for (int v = start; v < n; ++v) {
        uint64_t cand = m | (uint64_t{1} << v);
        if (c.has_face(cand)) next.push_back(cand);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    total_faces += static_cast<long>(next.size());
    if (total_faces > b.max_faces)
      throw BudgetExceeded("max_faces: complex has more than " +
                           std::to_string(b.max_faces) + " faces");
    layers.push_back(std::move(next));
  }
  int dim = static_cast<int>(layers.size()) - 2;  // layer k holds size-k faces
  std::vector<SparseColumns> bd(layers.size());
  for (size_t k = 1; k < layers.size(); ++k)
    bd[k] = boundary_matrix(layers[k - 1], layers[k]);
  for (size_t k = 2; k < layers.size(); ++k)
    assert_boundary_squared(bd[k - 1], bd[k]);
  std::vector<long> rank(layers.size() + 1, 0);
  for (size_t k = 1; k < layers.size(); ++k)
    rank[k] = matrix_rank(bd[k], static_cast<int>(layers[k - 1].size()), f);
  std::vector<long> h(static_cast<size_t>(dim) + 2, 0);
  for (int d = -1; d <= dim; ++d) {
    long faces = static_cast<long>(layers[static_cast<size_t>(d + 1)].size());
    h[static_cast<size_t>(d + 1)] =
        faces - rank[static_cast<size_t>(d + 1)] - rank[static_cast<size_t>(d + 2)];
  }
  long euler_faces = 0, euler_ranks = 0;
  for (int d = -1; d <= dim; ++d) {
    long sgn = (d % 2 == 0) ? 1 : -1;
    euler_faces += sgn * static_cast<long>(layers[static_cast<size_t>(d + 1)].size());
    euler_ranks += sgn * h[static_cast<size_t>(d + 1)];
  }
  if (euler_faces != euler_ranks)
    throw Error("internal: euler characteristic mismatch");
  return h;
}

}  // namespace edgereg
