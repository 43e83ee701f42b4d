// bic: compute rate regions, build and verify coding schemes, run the
// exhaustive two-subcarrier oracle, and sweep parameter grids.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bic/entropy.hpp"
#include "bic/oracle.hpp"
#include "bic/scheme_io.hpp"
#include "bic/schemes.hpp"
#include "json.hpp"
#include "report_io.hpp"

namespace {

using namespace bic;
using namespace bic::tool;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BIC_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      return 0;
    }
  }
  return 0;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << content;
  return out ? kExitOk : kExitIo;
}

struct CornerSpec {
  CornerId id;
  MsgClass default_payload;
  bool payload_selectable;
};

const std::map<std::string, CornerSpec>& corner_table(Setup setup) {
  static const std::map<std::string, CornerSpec> r0rl = {
      {"top", {CornerId::r0rl_top, MsgClass::w0, false}},
      {"private-split", {CornerId::r0rl_private_split, MsgClass::wl, false}},
      {"erasure-all", {CornerId::r0rl_erasure_all, MsgClass::wl, false}},
      {"alignment", {CornerId::r0rl_alignment, MsgClass::wl, false}},
      {"alignment-erasure", {CornerId::r0rl_alignment_erasure, MsgClass::wl, false}},
      {"han-kobayashi", {CornerId::r0rl_han_kobayashi, MsgClass::wl, false}},
      {"strong-align", {CornerId::r0rl_strong_align, MsgClass::wl, false}},
      {"strong-align-erasure", {CornerId::r0rl_strong_align_erasure, MsgClass::wl, false}},
      {"strong-orthogonal", {CornerId::r0rl_strong_orthogonal, MsgClass::wl, false}},
  };
  static const std::map<std::string, CornerSpec> rlrm = {
      {"m-split", {CornerId::rlrm_m_split, MsgClass::wm, false}},
      {"erasure-all", {CornerId::rlrm_erasure_all, MsgClass::wl, false}},
      {"alignment", {CornerId::rlrm_alignment, MsgClass::wm, false}},
      {"alignment-erasure", {CornerId::rlrm_alignment_erasure, MsgClass::wl, false}},
      {"han-kobayashi", {CornerId::rlrm_han_kobayashi, MsgClass::wm, true}},
      {"strong-align", {CornerId::rlrm_strong_align, MsgClass::wm, false}},
      {"strong-align-erasure", {CornerId::rlrm_strong_align_erasure, MsgClass::wl, false}},
      {"strong-orthogonal", {CornerId::rlrm_strong_orthogonal, MsgClass::wm, true}},
  };
  return setup == Setup::r0rl ? r0rl : rlrm;
}

std::vector<Rational> parse_alpha_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(Rational::parse(tok));
  }
  return out;
}

std::uint64_t mix_row_seed(std::uint64_t base, Setup setup, unsigned M, unsigned L,
                           const Rational& alpha) {
  std::uint64_t h = base ^ 0x9e3779b97f4a7c15ULL;
  auto fold = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  fold(setup == Setup::r0rl ? 1 : 2);
  fold(M);
  fold(L);
  fold(static_cast<std::uint64_t>(alpha.num()));
  fold(static_cast<std::uint64_t>(alpha.den()));
  return h;
}

int cmd_region(Setup setup, unsigned M, unsigned L, unsigned n, unsigned k,
               bool conjectured, const std::string& format, const std::string& out_path) {
  RegionReport rep;
  try {
    ChannelParams::make(n, k, M, L, 8);  // parameter validation
    rep = compute_region_report(setup, M, L, n, k, conjectured);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string body;
  if (format == "json") body = region_to_json(rep);
  else if (format == "csv") body = region_to_csv(rep);
  else if (format == "svg") body = region_to_svg(rep);
  else body = region_to_text(rep);
  return write_output(out_path, body);
}

int cmd_verify(Setup setup, const std::string& corner, const std::string& payload_str,
               const std::string& scheme_file, unsigned M, unsigned L, unsigned n,
               unsigned k, unsigned degree, std::uint64_t seed,
               const std::string& export_path) {
  LinearScheme scheme;
  try {
    if (!scheme_file.empty()) {
      std::ifstream in(scheme_file);
      if (!in) {
        std::cerr << "cannot open " << scheme_file << "\n";
        return kExitIo;
      }
      scheme = parse_scheme(in);
    } else if (corner == "split") {
      ChannelParams p = ChannelParams::make(n, k, M, L, degree);
      MsgClass payload = payload_str == "wm" ? MsgClass::wm : MsgClass::wl;
      scheme = split_scheme(p, payload);
    } else {
      const auto& table = corner_table(setup);
      auto it = table.find(corner);
      if (it == table.end()) {
        std::cerr << "unknown corner '" << corner << "' for setup " << setup_name(setup)
                  << "\n";
        return kExitUsage;
      }
      ChannelParams p = ChannelParams::make(n, k, M, L, degree);
      MsgClass payload = it->second.default_payload;
      if (!payload_str.empty()) {
        if (!it->second.payload_selectable &&
            payload_str != msg_class_name(payload)) {
          std::cerr << "corner '" << corner << "' has a fixed payload class\n";
          return kExitUsage;
        }
        payload = payload_str == "wm"   ? MsgClass::wm
                  : payload_str == "w0" ? MsgClass::w0
                                        : MsgClass::wl;
      }
      scheme = build_corner_scheme(p, setup, it->second.id, payload, seed);
    }
  } catch (const SchemeBuildError& e) {
    std::cerr << "scheme construction failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!export_path.empty()) {
    int rc = write_output(export_path, serialize_scheme(scheme));
    if (rc != kExitOk) return rc;
  }

  VerifyReport report = verify(scheme);
  std::cout << "scheme: M=" << scheme.params.M << " L=" << scheme.params.L
            << " n=" << scheme.params.n << " k=" << scheme.params.k
            << " m=" << scheme.params.degree << " T=" << scheme.T << " d=("
            << scheme.dims[0] << "," << scheme.dims[1] << "," << scheme.dims[2] << ")\n";
  for (MsgClass c : {MsgClass::w0, MsgClass::wl, MsgClass::wm}) {
    if (scheme.dim(c) == 0) continue;
    std::cout << "rate " << msg_class_name(c) << ": " << scheme.rate_symbols(c)
              << " symbols/use, per-n " << scheme.rate_per_n(c) << ", "
              << scheme.rate_bits(c) << " bits/use\n";
  }
  std::cout << report.to_text();
  return report.overall ? kExitOk : kExitVerification;
}

int cmd_oracle(unsigned max_t, const std::string& format, const std::string& out_path) {
  std::set<std::pair<Rational, Rational>> pairs;
  try {
    pairs = toy_oracle(max_t);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "oracle containment failure: " << e.what() << "\n";
    return kExitVerification;
  }
  std::string body;
  if (format == "json") {
    nlohmann::json j;
    j["max_T"] = max_t;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [r1, r0] : pairs) arr.push_back({r1.str(), r0.str()});
    j["pairs"] = arr;
    j["bound"] = "2*R1 + R0 <= 2";
    j["contained"] = true;
    body = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "achievable (R1, R0) pairs with T <= " << max_t << ":\n";
    for (const auto& [r1, r0] : pairs) os << "  (" << r1 << ", " << r0 << ")\n";
    os << "all pairs satisfy 2*R1 + R0 <= 2\n";
    body = os.str();
  }
  return write_output(out_path, body);
}

int cmd_entropy(const std::string& pmf_file, unsigned fuzz, const std::string& shape_csv,
                std::uint64_t seed) {
  auto print_chain = [](const SlidingWindowResult& r) {
    std::cout << "chain:";
    for (double v : r.chain) {
      std::ostringstream os;
      os.precision(12);
      os << " " << v;
      std::cout << os.str();
    }
    std::cout << "\n" << (r.holds ? "HOLDS" : "VIOLATED") << "\n";
  };
  try {
    if (!pmf_file.empty()) {
      std::ifstream in(pmf_file);
      if (!in) {
        std::cerr << "cannot open " << pmf_file << "\n";
        return kExitIo;
      }
      JointPMF pmf = parse_pmf_text(in);
      auto r = sliding_window_check(pmf);
      print_chain(r);
      return r.holds ? kExitOk : kExitVerification;
    }
    std::vector<unsigned> shape;
    for (const Rational& r : parse_alpha_list(shape_csv)) {
      if (!r.is_integer() || r.num() < 1) throw std::invalid_argument("bad shape");
      shape.push_back(static_cast<unsigned>(r.num()));
    }
    unsigned violations = 0;
    for (std::uint64_t i = 0; i < fuzz; ++i) {
      auto r = sliding_window_check(random_pmf(shape, seed + i));
      if (!r.holds) {
        ++violations;
        std::cout << "violation at seed " << (seed + i) << "\n";
        print_chain(r);
      }
    }
    std::cout << fuzz << " pmfs checked, " << violations << " violations\n";
    return violations == 0 ? kExitOk : kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_sweep(const std::string& setups, const std::string& m_list_csv,
              const std::string& alpha_csv, std::uint64_t seed,
              const std::string& out_path) {
  std::vector<Setup> setup_list;
  if (setups == "both" || setups == "r0rl") setup_list.push_back(Setup::r0rl);
  if (setups == "both" || setups == "rlrm") setup_list.push_back(Setup::rlrm);
  if (setup_list.empty()) {
    std::cerr << "unknown setup selection '" << setups << "'\n";
    return kExitUsage;
  }
  std::vector<unsigned> m_list;
  std::vector<Rational> alphas;
  try {
    for (const Rational& r : parse_alpha_list(m_list_csv)) {
      if (!r.is_integer() || r.num() < 1) throw std::invalid_argument("bad M list");
      m_list.push_back(static_cast<unsigned>(r.num()));
    }
    alphas = parse_alpha_list(alpha_csv);
    for (const Rational& a : alphas)
      if (a < Rational(0) || a > Rational(2))
        throw std::invalid_argument("alpha out of [0,2]: " + a.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  struct Cell {
    Setup setup;
    unsigned M, L;
    Rational alpha;
  };
  std::vector<Cell> cells;
  for (Setup s : setup_list)
    for (unsigned M : m_list)
      for (unsigned L = 1; L <= M; ++L)
        for (const Rational& a : alphas) cells.push_back({s, M, L, a});

  // Rows computed concurrently; the per-row seed depends only on the cell,
  // so the output is byte-identical regardless of scheduling.
  std::vector<std::future<SweepRow>> futures;
  futures.reserve(cells.size());
  for (const Cell& c : cells) {
    futures.push_back(std::async(std::launch::async, [c, seed] {
      return compute_sweep_row(c.setup, c.M, c.L, c.alpha,
                               mix_row_seed(seed, c.setup, c.M, c.L, c.alpha));
    }));
  }

  std::ostringstream os;
  os << sweep_csv_header();
  bool sound = true;
  std::string first_violation;
  for (auto& f : futures) {
    SweepRow row = f.get();
    os << sweep_row_to_csv(row);
    if (!row.sound && sound) {
      sound = false;
      first_violation = std::string(setup_name(row.setup)) + " M=" +
                        std::to_string(row.M) + " L=" + std::to_string(row.L) +
                        " alpha=" + row.alpha.str() + " vertex " + row.offending_vertex;
    }
  }
  int rc = write_output(out_path, os.str());
  if (rc != kExitOk) return rc;
  if (!sound) {
    std::cerr << "soundness violation: inner corner outside the proven outer region at "
              << first_violation << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bursty-interference multicarrier rate regions and scheme verification"};
  app.set_config("--config", "", "flat key=value file mirroring the flags");
  app.require_subcommand(1);

  std::string setup_str = "r0rl";
  unsigned M = 2, L = 1, n = 1, k = 1, degree = 8;
  std::uint64_t seed = default_seed();

  auto add_instance_flags = [&](CLI::App* cmd, bool with_field, bool required) {
    cmd->add_option("--setup", setup_str, "rate setup: r0rl or rlrm")
        ->check(CLI::IsMember({"r0rl", "rlrm"}));
    auto* om = cmd->add_option("-M,--subcarriers", M, "subcarriers per user");
    auto* ol = cmd->add_option("-L,--interfered", L, "interfered-subcarrier count");
    auto* on = cmd->add_option("-n,--direct", n, "direct link strength in levels");
    auto* ok = cmd->add_option("-k,--cross", k, "cross link strength in levels");
    if (required) {
      om->required();
      ol->required();
      on->required();
      ok->required();
    }
    if (with_field)
      cmd->add_option("-m,--field-degree", degree, "field extension degree (default 8)");
  };

  // region
  auto* region = app.add_subcommand("region", "corner points, bounds and tightness");
  bool conjectured = false;
  std::string format = "text", out_path;
  add_instance_flags(region, false, true);
  region->add_flag("--conjectured", conjectured, "include conjectured bounds");
  region->add_option("--format", format, "json, csv, svg or text")
      ->check(CLI::IsMember({"json", "csv", "svg", "text"}));
  region->add_option("-o,--output", out_path, "output file (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "build or load a scheme and verify it");
  std::string corner, payload_str, scheme_file, export_path;
  add_instance_flags(verify_cmd, true, false);
  verify_cmd->add_option("--corner", corner,
                         "corner name (or 'split' for the subcarrier split)");
  verify_cmd->add_option("--payload", payload_str, "payload class: w0, wl or wm");
  verify_cmd->add_option("--scheme-file", scheme_file, "verify a serialized scheme");
  verify_cmd->add_option("--export", export_path, "write the scheme serialization here");
  verify_cmd->add_option("--seed", seed, "seed for searched constructions");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive two-subcarrier search");
  unsigned max_t = 2;
  std::string oracle_format = "text", oracle_out;
  oracle_cmd->add_option("--max-T", max_t, "slots per block to search (1 or 2)");
  oracle_cmd->add_option("--format", oracle_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  oracle_cmd->add_option("-o,--output", oracle_out, "output file (default stdout)");

  // entropy
  auto* entropy_cmd =
      app.add_subcommand("entropy", "sliding-window entropy chain on a pmf");
  std::string pmf_file, shape = "2,2,2";
  unsigned fuzz = 1;
  entropy_cmd->add_option("--pmf-file", pmf_file,
                          "plain-text pmf: 'sizes ...' then index-tuple probability lines");
  entropy_cmd->add_option("--fuzz", fuzz, "number of seeded random pmfs to check");
  entropy_cmd->add_option("--shape", shape, "alphabet sizes for random pmfs, e.g. 2,3,2");
  entropy_cmd->add_option("--seed", seed, "base seed for random pmfs");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "batch tightness/soundness grid to CSV");
  std::string setups = "both", m_list = "2,3,4", alpha_list = "0,1/4,1/2,3/5,2/3,3/4,1,3/2,2";
  std::string sweep_out;
  sweep->add_option("--setups", setups, "both, r0rl or rlrm");
  sweep->add_option("--M-list", m_list, "comma-separated subcarrier counts");
  sweep->add_option("--alpha-list", alpha_list, "comma-separated rationals, e.g. 1/2,3/5");
  sweep->add_option("--seed", seed, "base seed for scheme searches");
  sweep->add_option("-o,--output", sweep_out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (region->parsed()) {
      auto s = setup_from_name(setup_str);
      return cmd_region(*s, M, L, n, k, conjectured, format, out_path);
    }
    if (verify_cmd->parsed()) {
      if (corner.empty() == scheme_file.empty()) {
        std::cerr << "verify needs exactly one of --corner or --scheme-file\n";
        return kExitUsage;
      }
      if (!corner.empty()) {
        for (const char* o : {"-M", "-L", "-n", "-k"}) {
          if (verify_cmd->count(o) == 0) {
            std::cerr << "verify --corner needs -M, -L, -n and -k\n";
            return kExitUsage;
          }
        }
      }
      auto s = setup_from_name(setup_str);
      return cmd_verify(*s, corner, payload_str, scheme_file, M, L, n, k, degree, seed,
                        export_path);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(max_t, oracle_format, oracle_out);
    if (entropy_cmd->parsed()) return cmd_entropy(pmf_file, fuzz, shape, seed);
    if (sweep->parsed()) return cmd_sweep(setups, m_list, alpha_list, seed, sweep_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
