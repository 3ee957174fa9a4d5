// qmult: exact q-analog weight multiplicities, graded Euler characters and
// Hilbert series for homogeneous vector bundles on flag manifolds.
//
// Exit codes: 0 success, 1 invalid input, 2 computation limit exceeded,
// 3 internal identity violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmult/hilbert.hpp"
#include "qmult/report_io.hpp"
#include "qmult/verify.hpp"

namespace {

using namespace qmult;

std::vector<i64> parse_int_csv(const std::string& text) {
  std::vector<i64> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    i64 v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

Weight parse_weight(const std::string& text, const RootSystem& rs, const char* what) {
  auto coords = parse_int_csv(text);
  if (static_cast<int>(coords.size()) != rs.rank)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(rs.rank) +
                                " comma-separated coordinates for " +
                                type_name(rs.series, rs.rank) + ", got '" + text + "'");
  return Weight(std::move(coords));
}

std::vector<int> parse_levi(const std::string& text) {
  std::vector<int> out;
  for (i64 v : parse_int_csv(text)) out.push_back(static_cast<int>(v));
  return out;
}

// Optional partition-memo persistence, keyed by type and Levi set. Only used
// when QMULT_CACHE_DIR is set; otherwise the memo is in-memory only.
std::optional<std::filesystem::path> cache_path(const RootSystem& rs,
                                                const ParabolicSubset& p) {
  const char* dir = std::getenv("QMULT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::string name = type_name(rs.series, rs.rank) + "_levi";
  if (p.is_borel()) name += "none";
  for (std::size_t i = 0; i < p.levi_indices.size(); ++i) {
    if (i) name += "-";
    name += std::to_string(p.levi_indices[i]);
  }
  return std::filesystem::path(dir) / (name + ".json");
}

void load_cache_if_configured(PartitionFn& partition, const RootSystem& rs,
                              const ParabolicSubset& p) {
  if (auto path = cache_path(rs, p)) {
    std::ifstream in(*path);
    if (in) partition.load_cache(in);
  }
}

void save_cache_if_configured(const PartitionFn& partition, const RootSystem& rs,
                              const ParabolicSubset& p) {
  if (auto path = cache_path(rs, p)) {
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    std::ofstream out(*path, std::ios::trunc);
    if (out) partition.save_cache(out);
  }
}

struct CommonArgs {
  std::string type;
  std::string levi;
  std::string format = "text";
};

struct GlobalArgs {
  i64 weyl_cap = kDefaultWeylCap;
  int default_max_degree = -1;  // <0: unset
};

int run_roots(const CommonArgs& args) {
  const RootSystem rs = build_root_system(parse_type(args.type));
  if (args.format == "json")
    std::cout << root_datum_json(rs) << "\n";
  else
    std::cout << root_datum_text(rs);
  return 0;
}

int run_partition(const CommonArgs& args, const std::string& target, int max_degree) {
  const RootSystem rs = build_root_system(parse_type(args.type));
  const ParabolicSubset p = make_parabolic(rs, parse_levi(args.levi));
  const Weight nu = parse_weight(target, rs, "--target");
  PartitionFn partition(rs, nilradical_roots(rs, p));
  load_cache_if_configured(partition, rs, p);
  const std::optional<int> cap =
      max_degree >= 0 ? std::optional<int>(max_degree) : std::nullopt;
  const PartitionResult result = partition.eval(nu, cap);
  save_cache_if_configured(partition, rs, p);
  if (args.format == "json") {
    nlohmann::json doc = to_json(result.poly);
    if (cap) doc["truncated"] = result.truncated;
    std::cout << doc << "\n";
  } else {
    std::cout << result.poly.text() << (result.truncated ? " (truncated)" : "") << "\n";
  }
  return 0;
}

int run_lusztig(const GlobalArgs& global, const CommonArgs& args, const std::string& lambda_s,
                const std::string& mu_s) {
  const RootSystem rs = build_root_system(parse_type(args.type));
  const ParabolicSubset p = make_parabolic(rs, parse_levi(args.levi));
  const Weight lambda = parse_weight(lambda_s, rs, "--lambda");
  const Weight mu = parse_weight(mu_s, rs, "--mu");
  const auto weyl = enumerate_weyl(rs, global.weyl_cap);
  PartitionFn partition(rs, nilradical_roots(rs, p));
  load_cache_if_configured(partition, rs, p);
  const QPolynomial poly = lusztig_poly(rs, weyl, partition, lambda, mu);
  save_cache_if_configured(partition, rs, p);
  if (args.format == "json")
    std::cout << to_json(poly) << "\n";
  else
    std::cout << poly.text() << "\n";
  return 0;
}

int run_hilbert(const GlobalArgs& global, const CommonArgs& args, const std::string& mu_s,
                int max_degree, const std::string& check) {
  const RootSystem rs = build_root_system(parse_type(args.type));
  const ParabolicSubset p = make_parabolic(rs, parse_levi(args.levi));
  const Weight mu = parse_weight(mu_s, rs, "--mu");
  if (max_degree < 0) max_degree = global.default_max_degree;
  if (max_degree < 0)
    throw std::invalid_argument("--max-degree is required (or set a default in the config file)");
  const PathCheck mode = check == "sampled" ? PathCheck::Sampled : PathCheck::Always;
  const auto weyl = enumerate_weyl(rs, global.weyl_cap);
  PartitionFn partition(rs, nilradical_roots(rs, p));
  load_cache_if_configured(partition, rs, p);
  const HilbertReport report = hilbert_series(rs, p, weyl, partition, mu, max_degree, mode);
  save_cache_if_configured(partition, rs, p);
  if (args.format == "json")
    std::cout << report_json(rs, p, mu, report) << "\n";
  else if (args.format == "latex")
    std::cout << report_latex(rs, p, mu, report);
  else
    std::cout << report_text(rs, p, mu, report);
  return 0;
}

int run_character(const CommonArgs& args, const std::string& lambda_s) {
  const RootSystem rs = build_root_system(parse_type(args.type));
  const Weight lambda = parse_weight(lambda_s, rs, "--lambda");
  const WeightCharacter ch = freudenthal(rs, lambda);
  if (args.format == "json")
    std::cout << to_json(ch) << "\n";
  else
    std::cout << character_text(rs, lambda, ch);
  return 0;
}

int run_verify(const GlobalArgs& global, const std::string& types_s, int height,
               int max_degree) {
  VerifyOptions opt = VerifyOptions::defaults();
  opt.weyl_cap = global.weyl_cap;
  if (!types_s.empty()) {
    opt.types.clear();
    std::stringstream ss(types_s);
    std::string item;
    while (std::getline(ss, item, ',')) opt.types.push_back(parse_type(item));
    if (opt.types.empty()) throw std::invalid_argument("empty --types list");
  }
  opt.height_bound = height;
  opt.max_degree = max_degree;
  const auto results = run_verification(opt, std::cout);
  return all_passed(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-analog weight multiplicities and Hilbert series on flag manifolds"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file (weyl-cap, default-max-degree)");

  GlobalArgs global;
  app.add_option("--weyl-cap", global.weyl_cap, "refuse Weyl enumerations above this order")
      ->capture_default_str();
  app.add_option("--default-max-degree", global.default_max_degree,
                 "fallback truncation degree for subcommands that need one");

  CommonArgs roots_args, part_args, lus_args, hil_args, char_args;
  std::string part_target, lus_lambda, lus_mu, hil_mu, char_lambda;
  int part_max_degree = -1, hil_max_degree = -1;
  std::string hil_check = "always";
  std::string verify_types;
  int verify_height = 6, verify_max_degree = 3;

  auto add_type = [](CLI::App* cmd, CommonArgs& a, bool with_levi) {
    cmd->add_option("--type", a.type, "simple type, e.g. A2, B3, G2")->required();
    if (with_levi)
      cmd->add_option("--levi", a.levi,
                      "comma-separated 1-based simple-root indices of the Levi subset; empty "
                      "for the Borel");
  };

  CLI::App* roots = app.add_subcommand("roots", "print the root datum");
  add_type(roots, roots_args, false);
  roots->add_option("--format", roots_args.format, "text|json");

  CLI::App* part = app.add_subcommand("partition", "q-analog partition function value");
  add_type(part, part_args, true);
  part->add_option("--target", part_target, "weight in fundamental coordinates")->required();
  part->add_option("--max-degree", part_max_degree, "truncate above this degree");
  part->add_option("--format", part_args.format, "text|json");

  CLI::App* lus = app.add_subcommand("lusztig", "q-analog weight multiplicity polynomial");
  add_type(lus, lus_args, true);
  lus->add_option("--lambda", lus_lambda, "dominant highest weight")->required();
  lus->add_option("--mu", lus_mu, "weight")->required();
  lus->add_option("--format", lus_args.format, "text|json");

  CLI::App* hil = app.add_subcommand("hilbert", "graded Euler character / Hilbert series");
  add_type(hil, hil_args, true);
  hil->add_option("--mu", hil_mu, "P-dominant highest weight of the bundle fiber")->required();
  hil->add_option("--max-degree", hil_max_degree, "truncation degree M");
  hil->add_option("--check", hil_check, "route cross-check: always|sampled");
  hil->add_option("--format", hil_args.format, "text|json|latex");

  CLI::App* chr = app.add_subcommand("character", "full weight multiplicity table");
  add_type(chr, char_args, false);
  chr->add_option("--lambda", char_lambda, "dominant highest weight")->required();
  chr->add_option("--format", char_args.format, "text|json");

  CLI::App* ver = app.add_subcommand("verify", "run the self-verification suite");
  ver->add_option("--types", verify_types, "comma-separated grid types");
  ver->add_option("--height", verify_height, "height bound for criterion 1")
      ->capture_default_str();
  ver->add_option("--max-degree", verify_max_degree, "truncation bound for criteria 2 and 5")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (roots->parsed()) return run_roots(roots_args);
    if (part->parsed()) return run_partition(part_args, part_target, part_max_degree);
    if (lus->parsed()) return run_lusztig(global, lus_args, lus_lambda, lus_mu);
    if (hil->parsed()) return run_hilbert(global, hil_args, hil_mu, hil_max_degree, hil_check);
    if (chr->parsed()) return run_character(char_args, char_lambda);
    if (ver->parsed()) return run_verify(global, verify_types, verify_height, verify_max_degree);
  } catch (const IdentityViolationError& e) {
    std::cerr << "qmult: error: identity: " << e.what() << "\n";
    return 3;
  } catch (const CapExceededError& e) {
    std::cerr << "qmult: error: limit: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "qmult: error: limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qmult: error: invalid-input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qmult: error: internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
