// hindman-lab: batch front end for the finite dense-Hindman toolkit.
//
// Exit status: 0 success, 1 definite negative, 2 surrogate breakdown,
// 3 usage / input error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hindman/axioms.hpp"
#include "hindman/error.hpp"
#include "hindman/fip.hpp"
#include "hindman/io.hpp"
#include "hindman/largeness.hpp"
#include "hindman/oracle.hpp"
#include "hindman/tree.hpp"

using namespace hindman;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBreakdown = 2;
constexpr int kUsage = 3;

constexpr std::uint64_t kDefaultSeed = 1;

int exit_code(ErrorKind kind) {
  if (is_surrogate_breakdown(kind)) return kBreakdown;
  if (kind == ErrorKind::NoTree) return kNegative;
  return kUsage;
}

// Arguments that look like JSON are taken literally, anything else is a path.
std::string load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HINDMAN_LAB_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto seed = std::stoull(env, &used);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, std::string("HINDMAN_LAB_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text << '\n';
  else
    write_file(out, text);
}

std::string set_text(const IntSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t m) {
    os << (first ? "" : ",") << m;
    first = false;
  });
  os << '}';
  return os.str();
}

LargenessConfig largeness_config(std::size_t depth, const std::string& pool, std::size_t budget) {
  LargenessConfig cfg;
  cfg.depth = depth;
  cfg.pool = adversary_pool_from_string(pool);
  cfg.budget = budget;
  return cfg;
}

struct PropsArgs {
  std::string prop;
  std::optional<std::size_t> n;
  std::size_t samples = 10000;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string out;
};

int props_check(const PropsArgs& a) {
  const DivProp p = prop_from_json(load(a.prop));
  std::size_t n = a.n.value_or(256);
  if (p.variant() == Variant::HitSet) {
    const std::size_t w_n = std::get<prop::HitSet>(p.params()).w.universe().size();
    if (a.n && *a.n != w_n) throw Error(ErrorKind::UniverseMismatch, "--n differs from the HITSET universe");
    n = w_n;
  }
  const AxiomReport r = axiom_report(p, Universe(n), a.samples, resolve_seed(a.seed));
  if (!a.out.empty()) write_file(a.out, to_json(r));
  if (a.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::printf("property %s  N=%zu  M=%zu  samples=%zu  seed=%llu\n", r.property.c_str(), r.universe, r.margin,
                r.samples, static_cast<unsigned long long>(r.seed));
    for (const auto& ax : r.axioms) {
      std::printf("  axiom %d %-48s %-14s %8llu checked %8llu failed  %s\n", ax.index, ax.name.c_str(),
                  to_string(ax.level).c_str(), static_cast<unsigned long long>(ax.checked),
                  static_cast<unsigned long long>(ax.failures), ax.passed() ? "PASS" : "FAIL");
    }
    std::printf("%s\n", r.all_passed() ? "all axioms pass" : "some axioms fail");
  }
  return r.all_passed() ? kOk : kNegative;
}

struct FipArgs {
  std::string family;
  std::string prop;
  std::string extend;
  std::string out;
};

int fip_check(const FipArgs& a) {
  const SetFamily u = family_from_json(load(a.family));
  const DivProp p = prop_from_json(load(a.prop));
  if (a.extend.empty()) {
    const bool ok = pfip(u, p);
    std::cout << "pfip " << (ok ? "true" : "false") << "  intersection " << set_text(intersect_all(u)) << '\n';
    return ok ? kOk : kNegative;
  }
  const IntSet ext = intset_from_json(load(a.extend));
  if (!pfip(u, p)) {
    std::cout << "pfip false  intersection " << set_text(intersect_all(u)) << '\n';
    return kNegative;
  }
  const SplitResult r = split_extend(u, ext, p);
  std::cerr << "extended with " << (r.sign == Sign::Plus ? "+1" : "-1") << " * A\n";
  emit(to_json(r.family), a.out);
  return kOk;
}

struct CloseArgs {
  std::string family;
  std::string prop;
  std::size_t budget = 256;
  std::string out;
};

int semigroup_close(const CloseArgs& a) {
  const SetFamily u = family_from_json(load(a.family));
  const DivProp p = prop_from_json(load(a.prop));
  const SetFamily v = semigroup_closure(u, p, a.budget);
  std::cerr << "closure has " << v.size() << " members (" << v.size() - u.size() << " added)\n";
  emit(to_json(v), a.out);
  return kOk;
}

struct SearchArgs {
  std::string coloring;
  std::string prop;
  std::size_t depth = 2;
  std::string mode = "exact";
  std::string pool = "shifts+pairs";
  std::size_t largeness_depth = 1;
  std::size_t budget = 256;
  std::string out;
};

int tree_search(const SearchArgs& a) {
  const Coloring c = coloring_from_json(load(a.coloring));
  const DivProp p = prop_from_json(load(a.prop));
  const SearchMode mode = search_mode_from_string(a.mode);
  const Certificate cert =
      build_tree(c, p, a.depth, mode, largeness_config(a.largeness_depth, a.pool, a.budget));
  std::cerr << "color " << cert.color << ", " << cert.tree.nodes.size() << " nodes, depth " << cert.depth << '\n';
  emit(to_json(cert), a.out);
  return kOk;
}

struct VerifyArgs {
  std::string cert;
  std::string coloring;
  std::string prop;
};

int tree_verify(const VerifyArgs& a) {
  const Certificate cert = certificate_from_json(load(a.cert));
  const Coloring c = coloring_from_json(load(a.coloring));
  const DivProp p = prop_from_json(load(a.prop));
  const bool ok = verify_tree(cert, c, p);
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kOk : kNegative;
}

struct ThresholdArgs {
  std::size_t colors = 2;
  std::size_t depth = 2;
  std::string prop;
  std::size_t max_n = 12;
  std::size_t jobs = 1;
};

int cmd_threshold(const ThresholdArgs& a) {
  const DivProp p = prop_from_json(load(a.prop));
  const ThresholdResult r = threshold(a.colors, a.depth, p, a.max_n, a.jobs);
  if (r.n)
    std::cout << "threshold " << *r.n << '\n';
  else
    std::cout << "threshold NotFound (n <= " << a.max_n << ")\n";
  std::cout << "colorings checked " << r.colorings_checked << '\n';
  if (r.hardest) std::cout << "hardest " << to_json(*r.hardest) << '\n';
  return r.n ? kOk : kNegative;
}

struct OracleArgs {
  std::string family;
  std::string coloring;
  std::string prop;
  std::size_t depth = 2;
  std::size_t n = 8;
  std::size_t colors = 2;
  bool prune = false;
  bool list = false;
};

int oracle_pfip(const OracleArgs& a) {
  const SetFamily u = family_from_json(load(a.family));
  const DivProp p = prop_from_json(load(a.prop));
  const bool slow = pfip_oracle(u, p);
  const bool fast = pfip(u, p);
  std::cout << "oracle " << (slow ? "true" : "false") << "  fast " << (fast ? "true" : "false") << '\n';
  return slow ? kOk : kNegative;
}

int oracle_tree(const OracleArgs& a) {
  const Coloring c = coloring_from_json(load(a.coloring));
  const DivProp p = prop_from_json(load(a.prop));
  const bool slow = tree_oracle(c, p, a.depth);
  const bool fast = tree_exists(c, p, a.depth);
  std::cout << "oracle " << (slow ? "tree" : "NoTree") << "  exact " << (fast ? "tree" : "NoTree") << '\n';
  return slow ? kOk : kNegative;
}

int oracle_colorings(const OracleArgs& a) {
  const auto count = enumerate_colorings(a.n, a.colors, a.prune, [&](const Coloring& c) {
    if (a.list) std::cout << to_json(c) << '\n';
    return true;
  });
  std::cout << "colorings " << count << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semantics toolkit for dense Hindman trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hindman-lab 0.1.0");

  PropsArgs props;
  auto* props_cmd = app.add_subcommand("props", "divisible property audits")->require_subcommand(1);
  auto* props_check_cmd = props_cmd->add_subcommand("check", "sample the five property axioms");
  props_check_cmd->add_option("--prop", props.prop, "property JSON (file or inline)")->required();
  props_check_cmd->add_option("--n", props.n, "universe size (default 256; HITSET uses its own)");
  props_check_cmd->add_option("--samples", props.samples, "samples per axiom")->check(CLI::PositiveNumber);
  props_check_cmd->add_option("--seed", props.seed, "RNG seed (default: $HINDMAN_LAB_SEED or 1)");
  props_check_cmd->add_flag("--json", props.json, "print the report as JSON");
  props_check_cmd->add_option("--out", props.out, "also write the JSON report here");

  FipArgs fip;
  auto* fip_cmd = app.add_subcommand("fip", "finite intersection property")->require_subcommand(1);
  auto* fip_check_cmd = fip_cmd->add_subcommand("check", "check P-fip, optionally extending by A or its complement");
  fip_check_cmd->add_option("--family", fip.family, "family JSON")->required();
  fip_check_cmd->add_option("--prop", fip.prop, "property JSON")->required();
  fip_check_cmd->add_option("--extend", fip.extend, "set A to split on");
  fip_check_cmd->add_option("--out", fip.out, "write the extended family here");

  CloseArgs close;
  auto* sg_cmd = app.add_subcommand("semigroup", "P-semigroups")->require_subcommand(1);
  auto* close_cmd = sg_cmd->add_subcommand("close", "close a P-fip family to a P-semigroup");
  close_cmd->add_option("--family", close.family, "family JSON")->required();
  close_cmd->add_option("--prop", close.prop, "property JSON")->required();
  close_cmd->add_option("--budget", close.budget, "maximum number of added members")->check(CLI::PositiveNumber);
  close_cmd->add_option("--out", close.out, "write the closed family here");

  SearchArgs search;
  VerifyArgs verify;
  auto* tree_cmd = app.add_subcommand("tree", "dense Hindman trees")->require_subcommand(1);
  auto* search_cmd = tree_cmd->add_subcommand("search", "build a tree certificate for a coloring");
  search_cmd->add_option("--coloring", search.coloring, "coloring JSON")->required();
  search_cmd->add_option("--prop", search.prop, "property JSON")->required();
  search_cmd->add_option("--depth", search.depth, "tree depth")->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", search.mode, "exact or guided")->check(CLI::IsMember({"exact", "guided"}));
  search_cmd->add_option("--pool", search.pool, "guided: adversary pool (shifts, pairs, shifts+pairs)")
      ->check(CLI::IsMember({"shifts", "pairs", "shifts+pairs"}));
  search_cmd->add_option("--large-depth", search.largeness_depth, "guided: largeness depth");
  search_cmd->add_option("--budget", search.budget, "guided: closure budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search.out, "write the certificate here");
  auto* verify_cmd = tree_cmd->add_subcommand("verify", "check a certificate against a coloring");
  verify_cmd->add_option("--cert", verify.cert, "certificate JSON")->required();
  verify_cmd->add_option("--coloring", verify.coloring, "coloring JSON")->required();
  verify_cmd->add_option("--prop", verify.prop, "property JSON")->required();

  ThresholdArgs thr;
  auto* thr_cmd = app.add_subcommand("threshold", "smallest n where every r-coloring of [1, n) has a tree");
  thr_cmd->add_option("--colors", thr.colors, "number of colors r")->check(CLI::PositiveNumber);
  thr_cmd->add_option("--depth", thr.depth, "tree depth")->check(CLI::PositiveNumber);
  thr_cmd->add_option("--prop", thr.prop, "property JSON")->required();
  thr_cmd->add_option("--max-n", thr.max_n, "largest n to try");
  thr_cmd->add_option("--jobs", thr.jobs, "worker threads")->check(CLI::PositiveNumber);

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference checks")->require_subcommand(1);
  auto* opfip = oracle_cmd->add_subcommand("pfip", "all-subfamilies P-fip check (at most 20 members)");
  opfip->add_option("--family", orc.family, "family JSON")->required();
  opfip->add_option("--prop", orc.prop, "property JSON")->required();
  auto* otree = oracle_cmd->add_subcommand("tree", "brute-force tree existence (n <= 12, depth <= 3)");
  otree->add_option("--coloring", orc.coloring, "coloring JSON")->required();
  otree->add_option("--prop", orc.prop, "property JSON")->required();
  otree->add_option("--depth", orc.depth, "tree depth")->check(CLI::PositiveNumber);
  auto* ocol = oracle_cmd->add_subcommand("colorings", "enumerate r-colorings of [1, n)");
  ocol->add_option("--n", orc.n, "universe size")->check(CLI::PositiveNumber);
  ocol->add_option("--colors", orc.colors, "number of colors")->check(CLI::PositiveNumber);
  ocol->add_flag("--prune", orc.prune, "fix the color of 1 (symmetry pruning)");
  ocol->add_flag("--list", orc.list, "print every coloring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (props_check_cmd->parsed()) return props_check(props);
    if (fip_check_cmd->parsed()) return fip_check(fip);
    if (close_cmd->parsed()) return semigroup_close(close);
    if (search_cmd->parsed()) return tree_search(search);
    if (verify_cmd->parsed()) return tree_verify(verify);
    if (thr_cmd->parsed()) return cmd_threshold(thr);
    if (opfip->parsed()) return oracle_pfip(orc);
    if (otree->parsed()) return oracle_tree(orc);
    if (ocol->parsed()) return oracle_colorings(orc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
