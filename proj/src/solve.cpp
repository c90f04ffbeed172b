#include "symlex/solve.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "symlex/flatten.hpp"
#include "symlex/order.hpp"

namespace symlex {

namespace {

struct Found {
  Assignment asg;
  Value key; // tupled values, the sort key
};

/// Seeks the odometer to linear index pos. Cell order is declaration
/// order with the last cell fastest, each cell counting lo upward.
std::vector<std::int64_t> seek(const FlatSpace &fs, std::uint64_t pos) {
  std::vector<std::int64_t> flat(fs.cells.size(), 0);
  for (std::size_t i = fs.cells.size(); i-- > 0;) {
    const auto &c = fs.cells[i];
    std::uint64_t w = static_cast<std::uint64_t>(c.hi - c.lo + 1);
    flat[i] = c.lo + static_cast<std::int64_t>(pos % w);
    pos /= w;
  }
  return flat;
}

bool advance(const FlatSpace &fs, std::vector<std::int64_t> &flat) {
  for (std::size_t i = flat.size(); i-- > 0;) {
    if (flat[i] < fs.cells[i].hi) {
      ++flat[i];
      return true;
    }
    flat[i] = fs.cells[i].lo;
  }
  return false;
}

void scan_range(const Model &m, const FlatSpace &fs,
                const std::vector<LexConstraint> &lex, const SolveOptions &opts,
                const std::vector<std::pair<std::string, int>> &tags,
                std::uint64_t begin, std::uint64_t end, std::vector<Found> &out) {
  if (begin >= end)
    return;
  std::vector<std::int64_t> flat = seek(fs, begin);
  for (std::uint64_t pos = begin; pos < end; ++pos, advance(fs, flat)) {
    if (!fs.decode_valid(flat))
      continue;
    if (!opts.semanticFilter) {
      bool ok = true;
      for (const auto &c : lex)
        if (!lex_satisfied(c, flat)) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
    }
    Assignment asg = fs.decode(flat);
    Value key = asg.tuple();
    if (opts.semanticFilter && !semantic_lex_leader(opts.cfg, tags, key))
      continue;
    if (!eval_constraints(m, asg))
      continue;
    out.push_back({std::move(asg), std::move(key)});
  }
}

std::vector<Found> scan_all(const Model &m, const FlatSpace &fs,
                            const std::vector<LexConstraint> &lex,
                            const SolveOptions &opts) {
  auto tags = model_tags(m);
  std::uint64_t total = fs.assignment_count();
  int threads = opts.threads;
  if (threads < 2 || total < 2) {
    std::vector<Found> out;
    scan_range(m, fs, lex, opts, tags, 0, total, out);
    return out;
  }
  std::uint64_t nchunk = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
  std::uint64_t step = (total + nchunk - 1) / nchunk;
  std::vector<std::vector<Found>> parts(nchunk);
  std::vector<std::thread> pool;
  for (std::uint64_t t = 0; t < nchunk; ++t) {
    std::uint64_t begin = t * step;
    std::uint64_t end = std::min(total, begin + step);
    pool.emplace_back([&, t, begin, end] {
      scan_range(m, fs, lex, opts, tags, begin, end, parts[t]);
    });
  }
  for (auto &th : pool)
    th.join();
  std::vector<Found> out;
  for (auto &p : parts)
    for (auto &f : p)
      out.push_back(std::move(f));
  return out;
}

std::vector<Found> solve_found(const Model &m, const SolveOptions &opts,
                               std::size_t &constraintCount, std::uint64_t &checked) {
  FlatSpace fs = flatten(m, opts.cellBudget);
  std::uint64_t total = fs.assignment_count();
  if (total > opts.assignmentBudget)
    throw BudgetError("enumeration needs " + std::to_string(total) +
                      " assignments, over the budget of " +
                      std::to_string(opts.assignmentBudget));
  std::vector<LexConstraint> lex;
  if (!opts.semanticFilter)
    lex = compile_lex_leader(m, fs, opts.cfg);
  constraintCount = lex.size();
  checked = total;
  std::vector<Found> found = scan_all(m, fs, lex, opts);
  std::sort(found.begin(), found.end(), [](const Found &a, const Found &b) {
    return cmp(a.key, b.key) == Cmp::LT;
  });
  return found;
}

} // namespace

SolveResult enumerate_solutions(const Model &m, const SolveOptions &opts) {
  auto start = std::chrono::steady_clock::now();
  SolveResult r;
  std::vector<Found> found = solve_found(m, opts, r.constraintCount, r.checked);
  r.solutions.reserve(found.size());
  for (auto &f : found)
    r.solutions.push_back(std::move(f.asg));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

OrbitInfo orbit_oracle(const Model &m, const SolveOptions &opts) {
  SolveOptions base = opts;
  base.cfg = BreakConfig{BreakMode::NoBreaking, GeneratorFlag::AllPermutations};
  base.semanticFilter = false;
  std::size_t nlex = 0;
  std::uint64_t checked = 0;
  std::vector<Found> sols = solve_found(m, base, nlex, checked);

  auto lookup = [&](const Value &key) -> std::size_t {
    std::size_t lo = 0, hi = sols.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      Cmp c = cmp(sols[mid].key, key);
      if (c == Cmp::EQ)
        return mid;
      if (c == Cmp::LT)
        lo = mid + 1;
      else
        hi = mid;
    }
    throw Error("constraints are not symmetric in the unnamed atoms: "
                "the image of a solution is not a solution");
  };

  std::vector<std::size_t> parent(sols.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  };

  for (const auto &[tag, size] : model_tags(m))
    for (int a = 1; a < size; ++a)
      for (int b = a + 1; b <= size; ++b) {
        Permutation swap = parse_cycles("(" + std::to_string(a) + " " + std::to_string(b) + ")",
                                        tag, size);
        for (std::size_t i = 0; i < sols.size(); ++i)
          unite(i, lookup(transform(swap, sols[i].key)));
      }

  OrbitInfo info;
  info.solutionCount = sols.size();
  for (std::size_t i = 0; i < sols.size(); ++i)
    if (find(i) == i) {
      ++info.orbitCount;
      info.orbitReps.push_back(sols[i].asg);
    }
  return info;
}

} // namespace symlex
