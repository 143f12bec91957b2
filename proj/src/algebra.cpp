#include "npc/algebra.hpp"

#include <algorithm>
#include <random>

namespace npc {

NSubset q_nsubsets(const NSubset& y0, const std::vector<NSubset>& ys) {
  const int n = y0.n();
  if (static_cast<int>(ys.size()) != n)
    throw dimension_mismatch("q_nsubsets: expected " + std::to_string(n) + " branch subsets");
  for (const NSubset& y : ys)
    if (y.n() != n || y.carrier_size != y0.carrier_size)
      throw dimension_mismatch("q_nsubsets: carrier or dimension mismatch");
  NSubset out;
  out.carrier_size = y0.carrier_size;
  out.blocks.assign(static_cast<size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    std::uint64_t block = 0;
    for (int i = 1; i <= n; ++i)
      block |= y0.blocks[static_cast<size_t>(i - 1)] & ys[static_cast<size_t>(i - 1)].blocks[static_cast<size_t>(j - 1)];
    out.blocks[static_cast<size_t>(j - 1)] = block;
  }
  return out;
}

bool is_npartition(const NSubset& s) {
  std::uint64_t seen = 0;
  for (std::uint64_t b : s.blocks) {
    if (b & seen) return false;  // overlap
    seen |= b;
  }
  return seen == s.full_mask();
}

NPartition::NPartition(NSubset s) : subset_(std::move(s)) {
  if (!is_npartition(subset_))
    throw std::invalid_argument("NPartition: blocks must be disjoint and covering");
}

int NPartition::block_of(int point) const {
  const std::uint64_t bit = std::uint64_t{1} << point;
  for (int k = 1; k <= subset_.n(); ++k)
    if (subset_.blocks[static_cast<size_t>(k - 1)] & bit) return k;
  throw std::invalid_argument("NPartition::block_of: point out of carrier");
}

long long FiniteAlgebra::q_index(int a, std::span<const int> bs) const {
  long long idx = a;
  for (int b : bs) idx = idx * size + b;
  return idx;
}

int FiniteAlgebra::q(int a, std::span<const int> bs) const {
  if (static_cast<int>(bs.size()) != n)
    throw dimension_mismatch("FiniteAlgebra::q: wrong arity");
  return q_table[static_cast<size_t>(q_index(a, bs))];
}

void FiniteAlgebra::validate_nch() const {
  std::vector<int> bs(static_cast<size_t>(n), 0);
  long long total = 1;
  for (int t = 0; t < n; ++t) total *= size;
  for (long long word = 0; word < total; ++word) {
    long long w = word;
    for (int t = n - 1; t >= 0; --t) {
      bs[static_cast<size_t>(t)] = static_cast<int>(w % size);
      w /= size;
    }
    for (int i = 1; i <= n; ++i)
      if (q(constants[static_cast<size_t>(i - 1)], bs) != bs[static_cast<size_t>(i - 1)])
        throw std::logic_error("algebra violates the nCH law q(e_i, b) = b_i");
  }
}

FiniteAlgebra algebra_n(int n) {
  if (n < 2) throw std::invalid_argument("algebra_n: n must be >= 2");
  FiniteAlgebra a;
  a.name = "n" + std::to_string(n);
  a.n = n;
  a.size = n;
  for (int k = 1; k <= n; ++k) {
    a.constants.push_back(k - 1);
    a.element_names.push_back("e" + std::to_string(k));
  }
  long long table = 1;
  for (int t = 0; t <= n; ++t) table *= n;
  a.q_table.resize(static_cast<size_t>(table));
  std::vector<int> bs(static_cast<size_t>(n));
  for (long long idx = 0; idx < table; ++idx) {
    long long w = idx;
    for (int t = n - 1; t >= 0; --t) {
      bs[static_cast<size_t>(t)] = static_cast<int>(w % n);
      w /= n;
    }
    int test = static_cast<int>(w);
    a.q_table[static_cast<size_t>(idx)] = bs[static_cast<size_t>(test)];
  }
  a.validate_nch();
  return a;
}

NPartition partition_of_code(int code, int carrier_size, int n) {
  NSubset s;
  s.carrier_size = carrier_size;
  s.blocks.assign(static_cast<size_t>(n), 0);
  int c = code;
  for (int t = carrier_size - 1; t >= 0; --t) {
    int digit = c % n;
    c /= n;
    s.blocks[static_cast<size_t>(digit)] |= std::uint64_t{1} << t;
  }
  return NPartition(std::move(s));
}

int code_of_partition(const NPartition& p) {
  const int n = p.subset().n();
  int code = 0;
  for (int t = 0; t < p.subset().carrier_size; ++t) code = code * n + (p.block_of(t) - 1);
  return code;
}

FiniteAlgebra partition_algebra(const std::vector<std::string>& carrier, int n) {
  if (n < 2) throw std::invalid_argument("partition_algebra: n must be >= 2");
  if (carrier.size() > 20)
    throw explosion_guard_error("partition_algebra: carrier too large");
  std::vector<std::string> points = carrier;
  std::sort(points.begin(), points.end());
  const int m = static_cast<int>(points.size());

  long long size = 1;
  for (int t = 0; t < m; ++t) {
    size *= n;
    if (size > 1'000'000) throw explosion_guard_error("partition_algebra: n^|X| exceeds 10^6");
  }
  long long table = size;
  for (int t = 0; t < n; ++t) {
    table *= size;
    if (table > FiniteAlgebra::kTableGuard)
      throw explosion_guard_error("partition_algebra: operation table exceeds guard");
  }

  FiniteAlgebra a;
  a.name = "Par({" + [&] {
    std::string s;
    for (size_t t = 0; t < points.size(); ++t) s += (t ? "," : "") + points[t];
    return s;
  }() + "}," + std::to_string(n) + ")";
  a.n = n;
  a.size = static_cast<int>(size);

  std::vector<NPartition> elems;
  elems.reserve(static_cast<size_t>(size));
  for (int code = 0; code < a.size; ++code) {
    elems.push_back(partition_of_code(code, m, n));
    std::string name = "(";
    for (int k = 1; k <= n; ++k) {
      if (k > 1) name += "|";
      bool first = true;
      for (int t = 0; t < m; ++t)
        if (elems.back().subset().blocks[static_cast<size_t>(k - 1)] & (std::uint64_t{1} << t)) {
          if (!first) name += " ";
          name += points[static_cast<size_t>(t)];
          first = false;
        }
    }
    name += ")";
    a.element_names.push_back(std::move(name));
  }

  for (int k = 1; k <= n; ++k) {
    NSubset s;
    s.carrier_size = m;
    s.blocks.assign(static_cast<size_t>(n), 0);
    s.blocks[static_cast<size_t>(k - 1)] = s.full_mask();
    a.constants.push_back(code_of_partition(NPartition(std::move(s))));
  }

  a.q_table.resize(static_cast<size_t>(table));
  std::vector<int> bs(static_cast<size_t>(n));
  std::vector<NSubset> branch_subsets(static_cast<size_t>(n));
  for (long long idx = 0; idx < table; ++idx) {
    long long w = idx;
    for (int t = n - 1; t >= 0; --t) {
      bs[static_cast<size_t>(t)] = static_cast<int>(w % size);
      w /= size;
    }
    int test = static_cast<int>(w);
    for (int t = 0; t < n; ++t)
      branch_subsets[static_cast<size_t>(t)] = elems[static_cast<size_t>(bs[static_cast<size_t>(t)])].subset();
    NSubset result = q_nsubsets(elems[static_cast<size_t>(test)].subset(), branch_subsets);
    if (!is_npartition(result))
      throw std::logic_error("partition_algebra: q left the set of n-partitions");
    a.q_table[static_cast<size_t>(idx)] = code_of_partition(NPartition(std::move(result)));
  }
  a.validate_nch();
  return a;
}

namespace {

std::string witness_tuple(const FiniteAlgebra& a, std::span<const int> elems) {
  std::string s = "(";
  for (size_t t = 0; t < elems.size(); ++t) {
    if (t) s += ", ";
    s += a.element_names.empty() ? std::to_string(elems[t])
                                 : a.element_names[static_cast<size_t>(elems[t])];
  }
  return s + ")";
}

/// Enumerates or samples words of `len` digits in [0, size): calls fn for
/// each word; returns {cases, exhaustive}.
template <typename Fn>
std::pair<long long, bool> for_words(int size, int len, long long threshold, std::uint64_t seed,
                                     Fn&& fn) {
  long long total = 1;
  bool overflow = false;
  for (int t = 0; t < len; ++t) {
    total *= size;
    if (total > threshold) {
      overflow = true;
      break;
    }
  }
  std::vector<int> word(static_cast<size_t>(len), 0);
  if (!overflow) {
    for (long long idx = 0; idx < total; ++idx) {
      long long w = idx;
      for (int t = len - 1; t >= 0; --t) {
        word[static_cast<size_t>(t)] = static_cast<int>(w % size);
        w /= size;
      }
      if (!fn(word)) return {idx + 1, true};
    }
    return {total, true};
  }
  std::mt19937_64 rng(seed);
  for (long long c = 0; c < threshold; ++c) {
    for (int t = 0; t < len; ++t)
      word[static_cast<size_t>(t)] = static_cast<int>(rng() % static_cast<std::uint64_t>(size));
    if (!fn(word)) return {c + 1, false};
  }
  return {threshold, false};
}

}  // namespace

IdentityReport check_identities(const FiniteAlgebra& a, std::uint64_t seed,
                                long long sample_threshold) {
  IdentityReport report;
  report.algebra = a.name;
  const int n = a.n;

  {  // B1: q(c, e_1..e_n) = c
    IdentityCheck c1{"B1", true, "", 0, true};
    for (int c = 0; c < a.size; ++c) {
      ++c1.cases;
      if (a.q(c, std::span<const int>(a.constants)) != c) {
        c1.pass = false;
        c1.witness = "c = " + witness_tuple(a, std::span<const int>(&c, 1));
        break;
      }
    }
    report.checks.push_back(std::move(c1));
  }

  {  // B2: q(c, x, ..., x) = x
    IdentityCheck c2{"B2", true, "", 0, true};
    std::vector<int> bs(static_cast<size_t>(n));
    for (int c = 0; c < a.size && c2.pass; ++c)
      for (int x = 0; x < a.size; ++x) {
        ++c2.cases;
        std::fill(bs.begin(), bs.end(), x);
        if (a.q(c, bs) != x) {
          c2.pass = false;
          int w[2] = {c, x};
          c2.witness = "(c, x) = " + witness_tuple(a, w);
          break;
        }
      }
    report.checks.push_back(std::move(c2));
  }

  {  // B3 with sigma = e_k: q(c, e_k, ..., e_k) = e_k
    IdentityCheck c3{"B3[sigma=e_k]", true, "", 0, true};
    std::vector<int> bs(static_cast<size_t>(n));
    for (int k = 1; k <= n && c3.pass; ++k)
      for (int c = 0; c < a.size; ++c) {
        ++c3.cases;
        std::fill(bs.begin(), bs.end(), a.constants[static_cast<size_t>(k - 1)]);
        if (a.q(c, bs) != a.constants[static_cast<size_t>(k - 1)]) {
          c3.pass = false;
          c3.witness = "k = " + std::to_string(k) + ", c = " + witness_tuple(a, std::span<const int>(&c, 1));
          break;
        }
      }
    report.checks.push_back(std::move(c3));
  }

  {  // B3 with sigma = q: c plus an n x (n+1) matrix
    IdentityCheck c3{"B3[sigma=q]", true, "", 0, true};
    const int len = 1 + n * (n + 1);
    std::vector<int> row(static_cast<size_t>(n + 1));
    std::vector<int> lhs_args(static_cast<size_t>(n));
    std::vector<int> col(static_cast<size_t>(n));
    std::vector<int> rhs_args(static_cast<size_t>(n + 1));
    auto [cases, exhaustive] = for_words(a.size, len, sample_threshold, seed, [&](const std::vector<int>& word) {
      const int c = word[0];
      // word[1 + (r-1)*(n+1) + t] = x_{r, t+1}, rows r = 1..n, columns 1..n+1
      for (int r = 0; r < n; ++r) {
        for (int t = 0; t <= n; ++t) row[static_cast<size_t>(t)] = word[static_cast<size_t>(1 + r * (n + 1) + t)];
        lhs_args[static_cast<size_t>(r)] = a.q(row[0], std::span<const int>(row).subspan(1));
      }
      const int lhs = a.q(c, lhs_args);
      for (int t = 0; t <= n; ++t) {
        for (int r = 0; r < n; ++r) col[static_cast<size_t>(r)] = word[static_cast<size_t>(1 + r * (n + 1) + t)];
        rhs_args[static_cast<size_t>(t)] = a.q(c, col);
      }
      const int rhs = a.q(rhs_args[0], std::span<const int>(rhs_args).subspan(1));
      if (lhs != rhs) {
        c3.pass = false;
        c3.witness = "c = " + witness_tuple(a, std::span<const int>(&c, 1)) + ", matrix word " +
                     witness_tuple(a, std::span<const int>(word).subspan(1));
        return false;
      }
      return true;
    });
    c3.cases = cases;
    c3.exhaustive = exhaustive;
    report.checks.push_back(std::move(c3));
  }

  {  // B4: q(c, q(c, row_1), ..., q(c, row_n)) = q(c, diagonal)
    IdentityCheck c4{"B4", true, "", 0, true};
    const int len = 1 + n * n;
    std::vector<int> row(static_cast<size_t>(n));
    std::vector<int> lhs_args(static_cast<size_t>(n));
    std::vector<int> diag(static_cast<size_t>(n));
    auto [cases, exhaustive] = for_words(a.size, len, sample_threshold, seed + 1, [&](const std::vector<int>& word) {
      const int c = word[0];
      for (int r = 0; r < n; ++r) {
        for (int t = 0; t < n; ++t) row[static_cast<size_t>(t)] = word[static_cast<size_t>(1 + r * n + t)];
        lhs_args[static_cast<size_t>(r)] = a.q(c, row);
      }
      for (int t = 0; t < n; ++t) diag[static_cast<size_t>(t)] = word[static_cast<size_t>(1 + t * n + t)];
      if (a.q(c, lhs_args) != a.q(c, diag)) {
        c4.pass = false;
        c4.witness = "c = " + witness_tuple(a, std::span<const int>(&c, 1)) + ", matrix word " +
                     witness_tuple(a, std::span<const int>(word).subspan(1));
        return false;
      }
      return true;
    });
    c4.cases = cases;
    c4.exhaustive = exhaustive;
    report.checks.push_back(std::move(c4));
  }

  return report;
}

namespace {

/// Membership map: block_of[code] in {0 = none, 1..n}.
std::vector<int> membership(const FiniteAlgebra& a, const Multideal& ideal) {
  std::vector<int> block_of(static_cast<size_t>(a.size), 0);
  for (int k = 1; k <= static_cast<int>(ideal.blocks.size()); ++k)
    for (int code : ideal.blocks[static_cast<size_t>(k - 1)]) {
      if (code < 0 || code >= a.size)
        throw std::invalid_argument("multideal block element out of carrier");
      if (block_of[static_cast<size_t>(code)] != 0) return {};  // overlap: signalled by empty
      block_of[static_cast<size_t>(code)] = k;
    }
  return block_of;
}

bool multideal_conditions(const FiniteAlgebra& a, const std::vector<int>& block_of) {
  const int n = a.n;
  // m1: e_k in I_k.
  for (int k = 1; k <= n; ++k)
    if (block_of[static_cast<size_t>(a.constants[static_cast<size_t>(k - 1)])] != k) return false;

  // m3: a in A, c_1..c_n in I_k imply q(a, c) in I_k.
  {
    std::vector<std::vector<int>> blocks(static_cast<size_t>(n));
    for (int code = 0; code < a.size; ++code)
      if (block_of[static_cast<size_t>(code)] != 0)
        blocks[static_cast<size_t>(block_of[static_cast<size_t>(code)] - 1)].push_back(code);
    std::vector<int> cs(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
      const auto& bk = blocks[static_cast<size_t>(k - 1)];
      const long long combos = [&] {
        long long c = 1;
        for (int t = 0; t < n; ++t) c *= static_cast<long long>(bk.size());
        return c;
      }();
      for (long long idx = 0; idx < combos; ++idx) {
        long long w = idx;
        for (int t = n - 1; t >= 0; --t) {
          cs[static_cast<size_t>(t)] = bk[static_cast<size_t>(w % bk.size())];
          w /= static_cast<long long>(bk.size());
        }
        for (int elem = 0; elem < a.size; ++elem)
          if (block_of[static_cast<size_t>(a.q(elem, cs))] != k) return false;
      }
    }
  }

  // m2: a in I_r, b in I_k imply q(a, c_1..c_{r-1}, b, c_{r+1}..c_n) in I_k
  // for all c.
  {
    std::vector<int> args(static_cast<size_t>(n));
    const long long fill_combos = [&] {
      long long c = 1;
      for (int t = 0; t < n - 1; ++t) c *= a.size;
      return c;
    }();
    for (int elem_a = 0; elem_a < a.size; ++elem_a) {
      const int r = block_of[static_cast<size_t>(elem_a)];
      if (r == 0) continue;
      for (int elem_b = 0; elem_b < a.size; ++elem_b) {
        const int k = block_of[static_cast<size_t>(elem_b)];
        if (k == 0) continue;
        for (long long idx = 0; idx < fill_combos; ++idx) {
          long long w = idx;
          for (int t = 0; t < n; ++t) {
            if (t == r - 1) {
              args[static_cast<size_t>(t)] = elem_b;
            } else {
              args[static_cast<size_t>(t)] = static_cast<int>(w % a.size);
              w /= a.size;
            }
          }
          if (block_of[static_cast<size_t>(a.q(elem_a, args))] != k) return false;
        }
      }
    }
  }
  return true;
}

Multideal from_membership(const FiniteAlgebra& a, const std::vector<int>& block_of) {
  Multideal m;
  m.blocks.assign(static_cast<size_t>(a.n), {});
  for (int code = 0; code < a.size; ++code)
    if (block_of[static_cast<size_t>(code)] != 0)
      m.blocks[static_cast<size_t>(block_of[static_cast<size_t>(code)] - 1)].push_back(code);
  return m;
}

std::vector<Multideal> enumerate_multideals(const FiniteAlgebra& a, bool ultra_only) {
  const int n = a.n;
  // Positions of the constants are forced by m1; remaining elements range
  // over none/I_1..I_n (or I_1..I_n only, for ultramultideals).
  std::vector<int> free_elems;
  std::vector<int> block_of(static_cast<size_t>(a.size), 0);
  for (int k = 1; k <= n; ++k) {
    int code = a.constants[static_cast<size_t>(k - 1)];
    if (block_of[static_cast<size_t>(code)] != 0) return {};  // constants coincide: m1 unsatisfiable
    block_of[static_cast<size_t>(code)] = k;
  }
  for (int code = 0; code < a.size; ++code)
    if (block_of[static_cast<size_t>(code)] == 0) free_elems.push_back(code);

  const int choices = ultra_only ? n : n + 1;
  long long total = 1;
  for (size_t t = 0; t < free_elems.size(); ++t) {
    total *= choices;
    if (total > 20'000'000)
      throw explosion_guard_error("multideal enumeration exceeds guard");
  }

  std::vector<Multideal> out;
  for (long long idx = 0; idx < total; ++idx) {
    long long w = idx;
    for (int code : free_elems) {
      int choice = static_cast<int>(w % choices);
      w /= choices;
      block_of[static_cast<size_t>(code)] = ultra_only ? choice + 1 : choice;
    }
    if (multideal_conditions(a, block_of)) out.push_back(from_membership(a, block_of));
  }
  return out;
}

bool contains_componentwise(const Multideal& big, const Multideal& small) {
  for (size_t k = 0; k < small.blocks.size(); ++k)
    for (int code : small.blocks[k])
      if (!std::binary_search(big.blocks[k].begin(), big.blocks[k].end(), code)) return false;
  return true;
}

}  // namespace

bool is_multideal(const FiniteAlgebra& a, const Multideal& ideal) {
  if (static_cast<int>(ideal.blocks.size()) != a.n) return false;
  std::vector<int> block_of = membership(a, ideal);
  if (block_of.empty()) return false;  // blocks overlap
  return multideal_conditions(a, block_of);
}

std::vector<Multideal> all_multideals(const FiniteAlgebra& a) {
  return enumerate_multideals(a, false);
}

std::vector<Multideal> ultramultideals(const FiniteAlgebra& a) {
  return enumerate_multideals(a, true);
}

bool intersection_property(const FiniteAlgebra& a, const Multideal& ideal) {
  std::vector<Multideal> ultras = ultramultideals(a);
  bool any = false;
  std::vector<std::vector<int>> inter;
  for (const Multideal& u : ultras) {
    if (!contains_componentwise(u, ideal)) continue;
    if (!any) {
      inter = u.blocks;
      any = true;
      continue;
    }
    for (size_t k = 0; k < inter.size(); ++k) {
      std::vector<int> merged;
      std::set_intersection(inter[k].begin(), inter[k].end(), u.blocks[k].begin(),
                            u.blocks[k].end(), std::back_inserter(merged));
      inter[k] = std::move(merged);
    }
  }
  if (!any) return false;
  return inter == ideal.blocks;
}

IsoReport iso_par_to_power(const std::vector<std::string>& carrier, int n) {
  FiniteAlgebra par = partition_algebra(carrier, n);
  const int m = static_cast<int>(carrier.size());
  IsoReport report;
  report.carrier_size = m;
  report.n = n;

  // The map p -> (x -> block of x), with functions coded as base-n words.
  std::vector<int> image(static_cast<size_t>(par.size));
  std::vector<bool> seen(static_cast<size_t>(par.size), false);
  report.bijective = true;
  for (int code = 0; code < par.size; ++code) {
    NPartition p = partition_of_code(code, m, n);
    int func = 0;
    for (int t = 0; t < m; ++t) func = func * n + (p.block_of(t) - 1);
    image[static_cast<size_t>(code)] = func;
    if (func < 0 || func >= par.size || seen[static_cast<size_t>(func)]) {
      report.bijective = false;
      report.detail = "not injective at element " + std::to_string(code);
      return report;
    }
    seen[static_cast<size_t>(func)] = true;
  }

  // Pointwise q on functions: digit t of the result is digit t of the branch
  // selected by digit t of the test.
  auto digit = [&](int func, int t) {
    for (int s = m - 1; s > t; --s) func /= n;
    return func % n;
  };
  auto pow_q = [&](int test, std::span<const int> bs) {
    int out = 0;
    for (int t = 0; t < m; ++t) out = out * n + digit(bs[static_cast<size_t>(digit(test, t))], t);
    return out;
  };

  report.preserves_constants = true;
  for (int k = 1; k <= n; ++k) {
    int func = 0;
    for (int t = 0; t < m; ++t) func = func * n + (k - 1);
    if (image[static_cast<size_t>(par.constants[static_cast<size_t>(k - 1)])] != func) {
      report.preserves_constants = false;
      report.detail = "constant e" + std::to_string(k) + " not preserved";
      return report;
    }
  }

  report.preserves_q = true;
  std::vector<int> bs(static_cast<size_t>(n));
  std::vector<int> mapped(static_cast<size_t>(n));
  long long table = 1;
  for (int t = 0; t <= n; ++t) table *= par.size;
  for (long long idx = 0; idx < table; ++idx) {
    long long w = idx;
    for (int t = n - 1; t >= 0; --t) {
      bs[static_cast<size_t>(t)] = static_cast<int>(w % par.size);
      w /= par.size;
    }
    int test = static_cast<int>(w);
    for (int t = 0; t < n; ++t) mapped[static_cast<size_t>(t)] = image[static_cast<size_t>(bs[static_cast<size_t>(t)])];
    ++report.q_cases;
    if (image[static_cast<size_t>(par.q(test, bs))] != pow_q(image[static_cast<size_t>(test)], mapped)) {
      report.preserves_q = false;
      report.detail = "q not preserved at table index " + std::to_string(idx);
      return report;
    }
  }
  return report;
}

NPartition eval_partition(const Formula& f, const std::map<std::string, NPartition>& assignment,
                          int carrier_size, int n) {
  switch (f.kind()) {
    case Formula::Kind::Const: {
      NSubset s;
      s.carrier_size = carrier_size;
      s.blocks.assign(static_cast<size_t>(n), 0);
      s.blocks[static_cast<size_t>(f.const_index() - 1)] = s.full_mask();
      return NPartition(std::move(s));
    }
    case Formula::Kind::Var: {
      auto it = assignment.find(f.var_name());
      if (it == assignment.end()) throw unbound_variable(f.var_name());
      // Block j of Y^pi is Y_{pi^-1(j)}, matching pi(v(X)) pointwise.
      const Perm& pi = f.var_decoration();
      NSubset s;
      s.carrier_size = carrier_size;
      s.blocks.resize(static_cast<size_t>(n));
      for (int j = 1; j <= n; ++j)
        s.blocks[static_cast<size_t>(j - 1)] =
            it->second.subset().blocks[static_cast<size_t>(pi.inverse_at(j) - 1)];
      return NPartition(std::move(s));
    }
    case Formula::Kind::Q: {
      NPartition test = eval_partition(f.test(), assignment, carrier_size, n);
      std::vector<NSubset> branches;
      branches.reserve(f.branches().size());
      for (const Formula& b : f.branches())
        branches.push_back(eval_partition(b, assignment, carrier_size, n).subset());
      return NPartition(q_nsubsets(test.subset(), branches));
    }
  }
  throw std::logic_error("eval_partition: unreachable");
}

ReadingReport sequent_partition_reading(const Sequent& s, int carrier_size) {
  ReadingReport report;
  report.oracle_valid = holds(s).valid;

  const int n = s.n;
  const std::set<std::string> var_set = s.vars();
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  long long per_var = 1;
  for (int t = 0; t < carrier_size; ++t) per_var *= n;
  long long total = 1;
  for (size_t t = 0; t < vars.size(); ++t) {
    total *= per_var;
    if (total > 10'000'000)
      throw explosion_guard_error("sequent_partition_reading: assignment space exceeds guard");
  }

  const std::uint64_t full =
      carrier_size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << carrier_size) - 1);

  report.partition_valid = true;
  for (long long idx = 0; idx < total; ++idx) {
    std::map<std::string, NPartition> assignment;
    long long w = idx;
    for (size_t t = 0; t < vars.size(); ++t) {
      assignment.emplace(vars[t], partition_of_code(static_cast<int>(w % per_var), carrier_size, n));
      w /= per_var;
    }
    ++report.assignments;
    std::uint64_t left_inter = full;
    for (const Formula& f : s.left)
      left_inter &= eval_partition(f, assignment, carrier_size, n)
                        .subset()
                        .blocks[static_cast<size_t>(s.turnstile - 1)];
    std::uint64_t right_union = 0;
    for (const Formula& f : s.right)
      right_union |= eval_partition(f, assignment, carrier_size, n)
                         .subset()
                         .blocks[static_cast<size_t>(s.turnstile - 1)];
    if ((left_inter & ~right_union) != 0) {
      report.partition_valid = false;
      break;
    }
  }
  return report;
}

}  // namespace npc
