// vcdelta: verification toolkit for VC-dimension size bounds of
// symmetric-difference set families over GF(2).
//
// Exit codes: 0 = success / all checks pass; 1 = a verified bound or
// hypothesis check failed (the report carries the offending data);
// 2 = usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <vcdelta/json_report.hpp>
#include <vcdelta/vcdelta.hpp>

namespace {

using namespace vcdelta;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

struct CommonOpts {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "write the report to a file instead of stdout");
}

int cmd_vcdim(const std::string& file, const CommonOpts& o) {
  const SetFamily f = load_family(file);
  const VcWitness w = vc_dim_witness(f);
  if (o.format == "json") {
    nlohmann::json res = {{"vc_dim", w.dim},
                          {"witness", format_set(w.witness)},
                          {"family", family_json(f)}};
    emit(report_envelope("vcdim", {{"input", file}}, res, true).dump(2), o.output);
  } else {
    emit(std::to_string(w.dim), o.output);
  }
  return 0;
}

int cmd_delta(const std::string& file, const std::string& file2,
              const CommonOpts& o) {
  const SetFamily f = load_family(file);
  const SetFamily g = file2.empty() ? f : load_family(file2);
  const SetFamily delta = sym_diff_family(f, g);
  if (o.format == "json") {
    nlohmann::json res = {{"delta", family_json(delta)}};
    nlohmann::json params = {{"input", file}};
    if (!file2.empty()) params["input2"] = file2;
    emit(report_envelope("delta", params, res, true).dump(2), o.output);
  } else {
    emit(format_family(delta), o.output);
  }
  return 0;
}

int cmd_sm(const std::string& file, int expect_d, const CommonOpts& o) {
  const SetFamily f = load_family(file);
  if (f.empty())
    throw std::invalid_argument("sm: the family has no sets, so there is no point set");
  const StandardBasis basis = standard_monomials(f.members, DeglexOrder{f.n});
  bool pass = true;
  std::string mismatch;
  if (expect_d >= 0) {
    const std::vector<Mask> expect = enumerate_D(f.n, expect_d);
    if (expect != basis.monomials()) {
      pass = false;
      mismatch = "standard monomials differ from D_{" +
                 std::to_string(expect_d) + "," + std::to_string(f.n) +
                 "}: got " + std::to_string(basis.monomials().size()) +
                 ", expected " + std::to_string(expect.size()) + " monomials";
      for (std::size_t i = 0;
           i < std::min(expect.size(), basis.monomials().size()); ++i)
        if (expect[i] != basis.monomials()[i]) {
          mismatch += "; first difference at position " + std::to_string(i) +
                      ": got " + format_monomial(basis.monomials()[i]) +
                      ", expected " + format_monomial(expect[i]);
          break;
        }
    }
  }
  if (o.format == "json") {
    nlohmann::json mons = nlohmann::json::array();
    for (Mask m : basis.monomials()) mons.push_back(format_monomial(m));
    nlohmann::json res = {{"count", basis.monomials().size()},
                          {"monomials", mons}};
    nlohmann::json params = {{"input", file}};
    if (expect_d >= 0) {
      params["expect_D"] = expect_d;
      res["matches_D"] = pass;
      if (!pass) res["mismatch"] = mismatch;
    }
    emit(report_envelope("sm", params, res, pass).dump(2), o.output);
  } else {
    std::string out;
    for (Mask m : basis.monomials()) {
      out += format_monomial(m);
      out += '\n';
    }
    if (expect_d >= 0)
      out += pass ? "matches D: yes\n" : "matches D: no (" + mismatch + ")\n";
    emit(out, o.output);
  }
  return pass ? 0 : 1;
}

int cmd_certify(const std::string& file, const std::string& cert_path,
                const CommonOpts& o) {
  const SetFamily f = load_family(file);
  const IndicatorResult ind = indicator_poly(f);
  const PairPoly lifted = substitute_sum(ind.g_prime);
  const UniClpReport rep = verify_uniclp(f, lifted, ind.d_bound);

  if (!cert_path.empty() && rep.certificate)
    emit(certificate_json(*rep.certificate).dump(2), cert_path);

  if (o.format == "json") {
    nlohmann::json res = uniclp_json(rep);
    res["g_prime"] = format_poly(ind.g_prime);
    res["g_prime_degree"] =
        ind.g_prime.degree() ? nlohmann::json(*ind.g_prime.degree())
                             : nlohmann::json();
    res["delta_size"] = ind.delta_family.size();
    nlohmann::json params = {{"input", file}};
    if (!cert_path.empty()) params["emit_certificate"] = cert_path;
    emit(report_envelope("certify", params, res, rep.pass()).dump(2), o.output);
  } else {
    std::ostringstream out;
    out << "n: " << rep.n << "\n"
        << "uniform k: " << (rep.k ? std::to_string(*rep.k) : "not uniform") << "\n"
        << "family size: " << rep.family_size << "\n"
        << "delta size: " << ind.delta_family.size() << "\n"
        << "d = vc_dim(F delta F): " << rep.d << "\n"
        << "deg(g'): "
        << (ind.g_prime.degree() ? std::to_string(*ind.g_prime.degree()) : "-inf")
        << "\n"
        << "bound 2 C(n, floor(d/2)): " << rep.bound << "\n"
        << "gram diagonal nonzero: " << yesno(rep.diagonal_nonzero) << "\n"
        << "gram offdiagonal zero: " << yesno(rep.offdiagonal_zero) << "\n"
        << "gram rank: " << rep.gram_rank << "\n"
        << "rank equals size: " << yesno(rep.rank_equals_size) << "\n";
    if (rep.certificate)
      out << "certificate groups: " << rep.certificate->group_count() << "\n"
          << "certificate replay ok: " << yesno(rep.certificate_replay_ok) << "\n"
          << "certificate keys ok: " << yesno(rep.certificate_keys_ok) << "\n"
          << "group count within bound: " << yesno(rep.group_count_ok) << "\n";
    else
      out << "certificate: skipped (family not uniform)\n";
    out << "size within bound: " << yesno(rep.size_within_bound) << "\n"
        << "pass: " << yesno(rep.pass()) << "\n";
    emit(out.str(), o.output);
  }
  return rep.pass() ? 0 : 1;
}

int cmd_verify_file(Theorem t, const std::string& file, const CommonOpts& o) {
  const SetFamily f = load_family(file);
  const BoundReport rep = check_bound(f, t);
  const bool ok = rep.pass || !rep.hypothesis_ok;
  if (o.format == "json") {
    nlohmann::json res = bound_report_json(rep);
    if (!ok) res["family"] = family_json(f);
    emit(report_envelope("verify",
                         {{"theorem", theorem_name(t)}, {"input", file}}, res, ok)
             .dump(2),
         o.output);
  } else {
    std::ostringstream out;
    out << "theorem: " << theorem_name(rep.theorem) << "\n"
        << "n: " << rep.n << "\n"
        << "family size: " << rep.family_size << "\n"
        << "d: " << rep.d << "  r: " << rep.r << "\n"
        << "bound: " << rep.bound << "\n"
        << "hypothesis ok: " << yesno(rep.hypothesis_ok) << "\n"
        << "witness: " << format_set(rep.witness) << "\n"
        << "pass: " << yesno(rep.pass) << "\n";
    if (!ok) out << "VIOLATION:\n" << format_family(f);
    emit(out.str(), o.output);
  }
  return ok ? 0 : 1;
}

int cmd_verify_exhaustive(Theorem t, int n, int k, const CommonOpts& o) {
  const ExhaustiveSummary sum = exhaustive_verify(n, k, t);
  const bool ok = sum.violations == 0;
  if (o.format == "json") {
    emit(report_envelope(
             "verify",
             {{"theorem", theorem_name(t)}, {"exhaustive", true}, {"n", n}, {"k", k}},
             exhaustive_json(sum), ok)
             .dump(2),
         o.output);
  } else {
    std::ostringstream out;
    out << "theorem: " << theorem_name(sum.theorem) << "\n"
        << "n: " << sum.n << "  k: " << sum.k << "\n"
        << "families checked: " << sum.families_checked << "\n"
        << "hypothesis met: " << sum.hypothesis_met << "\n"
        << "violations: " << sum.violations << "\n"
        << "max size/bound ratio: " << sum.max_ratio << "\n"
        << "tightest family:\n"
        << format_family(sum.worst);
    for (const SetFamily& bad : sum.violating)
      out << "VIOLATION:\n" << format_family(bad);
    emit(out.str(), o.output);
  }
  return ok ? 0 : 1;
}

int cmd_search(int n, int k, int d, std::uint64_t budget,
               std::optional<std::uint64_t> seed_opt, const std::string& strategy_name,
               const CommonOpts& o) {
  SearchStrategy strategy;
  if (strategy_name == "anneal") strategy.temperature = 0.02;
  // an unset seed is drawn once and recorded in the report
  const std::uint64_t seed =
      seed_opt ? *seed_opt : std::random_device{}();
  const SearchState st = search_extremal(n, k, d, strategy, budget, seed);
  const bool ok = st.main_bound_respected && st.records_verified;
  if (o.format == "json") {
    nlohmann::json params = {{"n", n},           {"k", k},
                             {"d", d},           {"budget", budget},
                             {"seed", seed},     {"strategy", strategy_name}};
    emit(report_envelope("search", params, search_json(st), ok).dump(2), o.output);
  } else {
    std::ostringstream out;
    out << "n: " << st.n << "  k: " << st.k << "  d: " << st.d << "\n"
        << "seed: " << st.seed << "  strategy: " << strategy_name << "\n"
        << "budget: " << st.budget << "  moves used: " << st.moves_used << "\n"
        << "best size: " << st.best_size << "\n"
        << "main bound 2 C(n, floor(d/2)): " << st.main_bound << "\n"
        << "conjecture bound 2^r C(n-r, floor(d/2)): " << st.conjecture_bound << "\n"
        << "main bound respected: " << yesno(st.main_bound_respected) << "\n"
        << "conjecture bound exceeded: " << yesno(st.conjecture_exceeded) << "\n"
        << "records re-verified: " << yesno(st.records_verified) << "\n"
        << "best family:\n"
        << format_family(st.best);
    emit(out.str(), o.output);
  }
  return ok ? 0 : 1;
}

int cmd_clp_check(const std::string& poly_file, const std::string& points_file,
                  int d, const CommonOpts& o) {
  const SetFamily a = load_family(points_file);
  const MlPoly p = load_ml_poly(poly_file, a.n);
  const ClpLemmaReport rep = clp_lemma_check(p, a, d);
  const bool ok = rep.consistent();
  if (o.format == "json") {
    nlohmann::json res = clp_lemma_json(rep);
    if (!ok) res["set"] = family_json(a);
    emit(report_envelope("clp-check",
                         {{"poly", poly_file}, {"points", points_file}, {"d", d}},
                         res, ok)
             .dump(2),
         o.output);
  } else {
    std::ostringstream out;
    out << "n: " << rep.n << "  d: " << rep.d << "\n"
        << "set size: " << rep.set_size << "\n"
        << "deg(P) <= d: " << yesno(rep.degree_ok) << "\n"
        << "P vanishes on pairwise differences: " << yesno(rep.hypothesis_holds) << "\n"
        << "P(0): " << rep.p_at_zero << "\n"
        << "bound 2 sum_(i<=floor(d/2)) C(n,i): " << rep.bound << "\n"
        << "size within bound: " << yesno(rep.size_within_bound) << "\n"
        << "consistent: " << yesno(ok) << "\n";
    if (!ok) out << "VIOLATION:\n" << format_family(a);
    emit(out.str(), o.output);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vcdelta: verification toolkit for VC-dimension size bounds of\n"
      "symmetric-difference set families over GF(2)"};
  app.set_version_flag("--version", std::string("vcdelta ") + kVersion);
  app.require_subcommand(1);
  std::function<int()> action;

  // vcdim
  {
    auto* cmd = app.add_subcommand("vcdim", "VC dimension of a family file");
    auto file = std::make_shared<std::string>();
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("file", *file, "family file")->required();
    add_common(cmd, *opts);
    cmd->callback([=, &action] { action = [=] { return cmd_vcdim(*file, *opts); }; });
  }
  // delta
  {
    auto* cmd = app.add_subcommand(
        "delta", "symmetric-difference family F delta G (G defaults to F)");
    auto file = std::make_shared<std::string>();
    auto file2 = std::make_shared<std::string>();
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("file", *file, "family file")->required();
    cmd->add_option("file2", *file2, "second family file");
    add_common(cmd, *opts);
    cmd->callback(
        [=, &action] { action = [=] { return cmd_delta(*file, *file2, *opts); }; });
  }
  // sm
  {
    auto* cmd = app.add_subcommand(
        "sm", "standard monomials of the family's point set, ascending deglex");
    auto file = std::make_shared<std::string>();
    auto expect_d = std::make_shared<int>(-1);
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("file", *file, "family file")->required();
    cmd->add_option("--expect-D", *expect_d,
                    "compare, as ordered lists, against D_{k,n} for this k");
    add_common(cmd, *opts);
    cmd->callback(
        [=, &action] { action = [=] { return cmd_sm(*file, *expect_d, *opts); }; });
  }
  // certify
  {
    auto* cmd = app.add_subcommand(
        "certify",
        "run the full rank-certificate pipeline on a family: indicator "
        "polynomial, lift, Gram identity, reduction, grouping");
    auto file = std::make_shared<std::string>();
    auto cert = std::make_shared<std::string>();
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("file", *file, "family file")->required();
    cmd->add_option("--emit-certificate", *cert,
                    "write the grouped certificate as JSON to this path");
    add_common(cmd, *opts);
    cmd->callback(
        [=, &action] { action = [=] { return cmd_certify(*file, *cert, *opts); }; });
  }
  // verify
  {
    auto* cmd = app.add_subcommand(
        "verify", "check one theorem bound on a family file or exhaustively");
    auto theorem = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto exhaustive = std::make_shared<bool>(false);
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("--theorem", *theorem, "dvir | kang | kleitman | main | sauer")
        ->required()
        ->check(CLI::IsMember({"dvir", "kang", "kleitman", "main", "sauer"}));
    auto* input_opt = cmd->add_option("--input", *file, "family file");
    auto* ex_flag = cmd->add_flag("--exhaustive", *exhaustive,
                                  "check every subfamily of the k-subsets of [n]");
    auto* n_opt = cmd->add_option("--n", *n, "ground set size");
    auto* k_opt = cmd->add_option("--k", *k, "subset size");
    input_opt->excludes(ex_flag);
    n_opt->needs(ex_flag);
    k_opt->needs(ex_flag);
    add_common(cmd, *opts);
    cmd->callback([=, &action] {
      action = [=] {
        const Theorem t = *theorem_from_name(*theorem);
        if (*exhaustive) {
          if (n_opt->count() == 0 || k_opt->count() == 0)
            throw CLI::RequiredError("--exhaustive needs --n and --k");
          return cmd_verify_exhaustive(t, *n, *k, *opts);
        }
        if (input_opt->count() == 0)
          throw CLI::RequiredError("verify needs --input or --exhaustive");
        return cmd_verify_file(t, *file, *opts);
      };
    });
  }
  // search
  {
    auto* cmd = app.add_subcommand(
        "search", "randomized search for large families with vc_dim(F delta F) <= d");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto d = std::make_shared<int>(0);
    auto budget = std::make_shared<std::uint64_t>(10000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto strategy = std::make_shared<std::string>("greedy");
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("--n", *n, "ground set size")->required();
    cmd->add_option("--k", *k, "subset size")->required();
    cmd->add_option("--d", *d, "VC budget for F delta F")->required();
    cmd->add_option("--budget", *budget, "attempted moves")->capture_default_str();
    auto* seed_opt = cmd->add_option("--seed", *seed, "RNG seed (drawn and recorded if omitted)");
    cmd->add_option("--strategy", *strategy, "greedy | anneal")
        ->check(CLI::IsMember({"greedy", "anneal"}))
        ->capture_default_str();
    add_common(cmd, *opts);
    cmd->callback([=, &action] {
      action = [=] {
        std::optional<std::uint64_t> s;
        if (seed_opt->count() > 0) s = *seed;
        return cmd_search(*n, *k, *d, *budget, s, *strategy, *opts);
      };
    });
  }
  // clp-check
  {
    auto* cmd = app.add_subcommand(
        "clp-check", "polynomial-method lemma consistency check on a point set");
    auto poly = std::make_shared<std::string>();
    auto points = std::make_shared<std::string>();
    auto d = std::make_shared<int>(0);
    auto opts = std::make_shared<CommonOpts>();
    cmd->add_option("--poly", *poly, "polynomial file (x-variables only)")->required();
    cmd->add_option("--points", *points, "family file giving the point set")->required();
    cmd->add_option("--d", *d, "degree budget")->required();
    add_common(cmd, *opts);
    cmd->callback([=, &action] {
      action = [=] { return cmd_clp_check(*poly, *points, *d, *opts); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }
  try {
    return action();
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FamilyParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PolyParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
