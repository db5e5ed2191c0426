#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "set_family.hpp"

namespace vcdelta {

// The size bounds under test. Parameters d and r = d mod 2 are measured on
// the family as each statement prescribes:
//   dvir      |F| <= 2 sum_{i <= floor(d/2)} C(n,i),   d = vc_dim(F delta F)
//   kang      |F| <= 2^r sum_{i <= floor(d/2)} C(n-r,i), same d, 1 <= d < n
//   kleitman  same bound, d = max |A delta B| over the family, 1 <= d < n
//   main      |F| <= 2 C(n, floor(d/2)), F uniform, d = vc_dim(F delta F)
//   sauer     |F| <= sum_{i <= d} C(n,i), d = vc_dim(F)
enum class Theorem { dvir, kang, kleitman, main, sauer };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::dvir: return "dvir";
    case Theorem::kang: return "kang";
    case Theorem::kleitman: return "kleitman";
    case Theorem::main: return "main";
    case Theorem::sauer: return "sauer";
  }
  return "?";
}

inline std::optional<Theorem> theorem_from_name(std::string_view s) {
  if (s == "dvir") return Theorem::dvir;
  if (s == "kang") return Theorem::kang;
  if (s == "kleitman") return Theorem::kleitman;
  if (s == "main") return Theorem::main;
  if (s == "sauer") return Theorem::sauer;
  return std::nullopt;
}

// closed-form bound of each statement at parameters (n, d)
inline std::uint64_t theorem_bound(Theorem t, int n, int d) {
  if (d < 0) return 0;  // empty-family convention: empty sum
  const int half = d / 2;
  const int r = d % 2;
  switch (t) {
    case Theorem::dvir:
      return 2 * binomial_sum(n, half);
    case Theorem::kang:
    case Theorem::kleitman:
      return (std::uint64_t{1} << r) * binomial_sum(n - r, half);
    case Theorem::main:
      return 2 * binomial(n, half);
    case Theorem::sauer:
      return binomial_sum(n, d);
  }
  return 0;
}

struct BoundReport {
  Theorem theorem = Theorem::dvir;
  int n = 0;
  int d = 0;  // the parameter the family actually achieves
  int r = 0;
  std::size_t family_size = 0;
  std::uint64_t bound = 0;
  bool hypothesis_ok = false;  // the statement's domain conditions
  bool pass = false;           // family_size <= bound
  Mask witness = 0;  // max shattered set, or largest difference for kleitman
};

inline BoundReport check_bound(const SetFamily& f, Theorem t) {
  if (t == Theorem::main && !is_uniform(f))
    throw std::invalid_argument("check_bound: 'main' needs a uniform family");
  BoundReport rep;
  rep.theorem = t;
  rep.n = f.n;
  rep.family_size = f.size();
  if (f.empty()) {
    rep.d = -1;
    rep.hypothesis_ok = t == Theorem::dvir || t == Theorem::sauer;
    rep.bound = 0;
    rep.pass = true;
    return rep;
  }
  switch (t) {
    case Theorem::sauer: {
      const VcWitness w = vc_dim_witness(f);
      rep.d = w.dim;
      rep.witness = w.witness;
      rep.hypothesis_ok = true;
      break;
    }
    case Theorem::kleitman: {
      const SetFamily delta = sym_diff_family(f, f);
      for (Mask m : delta.members)
        if (set_size(m) > set_size(rep.witness)) rep.witness = m;
      rep.d = set_size(rep.witness);
      rep.hypothesis_ok = rep.d >= 1 && rep.d < f.n;
      break;
    }
    case Theorem::dvir:
    case Theorem::kang:
    case Theorem::main: {
      const SetFamily delta = sym_diff_family(f, f);
      const VcWitness w = vc_dim_witness(delta);
      rep.d = w.dim;
      rep.witness = w.witness;
      rep.hypothesis_ok =
          t == Theorem::kang ? (rep.d >= 1 && rep.d < f.n) : true;
      break;
    }
  }
  rep.r = rep.d >= 0 ? rep.d % 2 : 0;
  rep.bound = theorem_bound(t, f.n, rep.d);
  rep.pass = rep.family_size <= rep.bound;
  return rep;
}

// Every nonempty subfamily of the k-subsets of [n], checked against one
// statement. Violations (hypotheses hold, bound fails) would falsify the
// corresponding theorem; the summary also tracks how close the bound gets.
struct ExhaustiveSummary {
  Theorem theorem = Theorem::dvir;
  int n = 0, k = 0;
  std::uint64_t families_checked = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0.0;  // max family_size / bound over hypothesis-met runs
  SetFamily worst;         // a family attaining max_ratio
  std::vector<SetFamily> violating;
};

inline ExhaustiveSummary exhaustive_verify(int n, int k, Theorem t) {
  const std::uint64_t base_count = binomial(n, k);
  if (base_count > 20)
    throw std::invalid_argument(
        "exhaustive_verify: C(" + std::to_string(n) + "," + std::to_string(k) +
        ") = " + std::to_string(base_count) +
        " base sets means 2^" + std::to_string(base_count) +
        " families; refusing above 2^20");
  const std::vector<Mask> base = all_subsets_of_size(n, k);
  ExhaustiveSummary sum;
  sum.theorem = t;
  sum.n = n;
  sum.k = k;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << base_count); ++sel) {
    std::vector<Mask> mem;
    mem.reserve(static_cast<std::size_t>(std::popcount(sel)));
    for (std::uint64_t s = sel; s; s &= s - 1)
      mem.push_back(base[std::countr_zero(s)]);
    SetFamily fam(n, std::move(mem));
    const BoundReport rep = check_bound(fam, t);
    ++sum.families_checked;
    if (!rep.hypothesis_ok) continue;
    ++sum.hypothesis_met;
    const double ratio =
        rep.bound ? static_cast<double>(rep.family_size) / rep.bound : 0.0;
    if (ratio > sum.max_ratio) {
      sum.max_ratio = ratio;
      sum.worst = fam;
    }
    if (!rep.pass) {
      ++sum.violations;
      sum.violating.push_back(fam);
    }
  }
  return sum;
}

}  // namespace vcdelta
