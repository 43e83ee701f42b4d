// End-to-end checks of the bic command line interface. argv[1] is the
// binary path; everything runs through std::system into a scratch dir.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

int run(const std::string& args, const std::string& log_name = "out.log") {
  const std::string cmd = g_cli + " " + args + " > " + (g_dir / log_name).string() +
                          " 2>&1";
  int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("region json carries the documented keys") {
  const fs::path out = g_dir / "region.json";
  REQUIRE(run("region --setup r0rl -M 2 -L 1 -n 1 -k 1 --format json -o " + out.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  for (const char* key : {"regime", "corners", "bounds", "verdict", "gap_vertices"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "tight_proven");
  REQUIRE(j["corners"].size() == 2);
  bool saw_erasure_corner = false;
  for (const auto& c : j["corners"])
    if (c["x"] == "1" && c["y"] == "0") saw_erasure_corner = true;
  CHECK(saw_erasure_corner);
}

TEST_CASE("region json output is byte-identical across runs") {
  const fs::path a = g_dir / "det1.json", b = g_dir / "det2.json";
  REQUIRE(run("region --setup rlrm -M 4 -L 3 -n 2 -k 2 --conjectured --format json -o " +
              a.string()) == 0);
  REQUIRE(run("region --setup rlrm -M 4 -L 3 -n 2 -k 2 --conjectured --format json -o " +
              b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("svg output is self-contained and small") {
  const fs::path out = g_dir / "region.svg";
  REQUIRE(run("region --setup r0rl -M 4 -L 3 -n 1 -k 1 --conjectured --format svg -o " +
              out.string()) == 0);
  const std::string svg = slurp(out);
  CHECK(svg.size() < 64 * 1024);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);      // no external references
  CHECK(svg.find("http://") == svg.find("http://www.w3.org"));  // namespace only
  CHECK(svg.find("#d7191c") != std::string::npos);   // conjectured line drawn red
  CHECK(svg.find("#1a9641") != std::string::npos);   // proven lines green
}

TEST_CASE("oracle json encodes reduced fractions") {
  const fs::path out = g_dir / "oracle.json";
  REQUIRE(run("oracle --format json -o " + out.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["contained"] == true);
  bool found_half = false;
  for (const auto& pr : j["pairs"])
    if (pr[0] == "1/2" && pr[1] == "1") found_half = true;
  CHECK(found_half);
}

TEST_CASE("exit codes distinguish usage, io and verification failures") {
  CHECK(run("region --setup r0rl -M 0 -L 1 -n 1 -k 1") == 2);   // bad params
  CHECK(run("region --setup r0rl -M 2 -L 1 -n 1 -k 9") == 2);   // alpha > 2
  CHECK(run("verify -M 2 -L 1 -n 1 -k 1") == 2);                // neither corner nor file
  CHECK(run("region --setup r0rl -M 2 -L 1 -n 1 -k 1 -o /nonexistent-dir/x.json") == 1);
  CHECK(run("verify --scheme-file " + (g_dir / "missing.txt").string()) == 1);

  // a sabotaged scheme file fails verification with exit 3
  const fs::path good = g_dir / "good.txt";
  REQUIRE(run("verify --corner private-split -M 2 -L 1 -n 2 -k 1 --export " +
              good.string()) == 0);
  std::string text = slurp(good);
  // zero one generator column: replace the first '01' entry in a gen row
  auto pos = text.find("gen 1 wl");
  REQUIRE(pos != std::string::npos);
  pos = text.find("01", pos);
  REQUIRE(pos != std::string::npos);
  text[pos] = '0';
  text[pos + 1] = '0';
  const fs::path broken = g_dir / "broken.txt";
  std::ofstream(broken) << text;
  CHECK(run("verify --scheme-file " + broken.string(), "broken.log") == 3);
  const std::string log = slurp(g_dir / "broken.log");
  CHECK(log.find("FAIL") != std::string::npos);
  CHECK(log.find("rank_dec") != std::string::npos);
}

TEST_CASE("round trip: exported scheme file verifies clean") {
  const fs::path f = g_dir / "alignment.txt";
  REQUIRE(run("verify --corner alignment -M 3 -L 1 -n 5 -k 3 --export " + f.string()) == 0);
  CHECK(run("verify --scheme-file " + f.string()) == 0);
}

TEST_CASE("verify lists every mask of the middle decode class") {
  REQUIRE(run("verify --corner erasure-all -M 4 -L 2 -n 2 -k 1", "erasure.log") == 0);
  const std::string log = slurp(g_dir / "erasure.log");
  std::size_t masks = 0, pos = 0;
  while ((pos = log.find("exactly-l mask=", pos)) != std::string::npos) {
    ++masks;
    pos += 1;
  }
  CHECK(masks == 6);  // C(4,2) configurations
  CHECK(log.find("overall: PASS") != std::string::npos);
}

TEST_CASE("region csv format has corner, bound and verdict rows") {
  const fs::path out = g_dir / "region.csv";
  REQUIRE(run("region --setup r0rl -M 3 -L 1 -n 3 -k 1 --format csv -o " + out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("corner,erasure-all,wl,8/3,0") != std::string::npos);
  CHECK(csv.find("bound,weighted-sum,proven") != std::string::npos);
  CHECK(csv.find("verdict,tight_proven") != std::string::npos);
}

TEST_CASE("sweep row: gap closes only with the conjectured plane at M=L=4, alpha=1") {
  const fs::path out = g_dir / "gap.csv";
  REQUIRE(run("sweep --setups r0rl --M-list 4 --alpha-list 1 -o " + out.string()) == 0);
  std::istringstream lines(slurp(out));
  std::string line;
  bool found = false;
  while (std::getline(lines, line)) {
    if (line.rfind("r0rl,4,4,1,", 0) != 0) continue;
    found = true;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    REQUIRE(fields.size() >= 12);
    CHECK(fields[10] == "4");  // proven outer strictly exceeds the inner hull
    CHECK(fields[11] == "0");  // the conjectured plane closes it exactly
  }
  CHECK(found);
}

TEST_CASE("config file mirrors flags, flags win") {
  const fs::path cfg = g_dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "[region]\n"
           "setup=r0rl\n"
           "subcarriers=2\n"
           "interfered=1\n"
           "direct=1\n"
           "cross=1\n"
           "format=json\n";
  }
  const fs::path out1 = g_dir / "cfg1.json";
  REQUIRE(run("--config " + cfg.string() + " region -o " + out1.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out1));
  CHECK(j["M"] == 2);
  // explicit flag overrides the config value
  const fs::path out2 = g_dir / "cfg2.json";
  REQUIRE(run("--config " + cfg.string() + " region -M 3 -o " + out2.string()) == 0);
  auto j2 = nlohmann::json::parse(slurp(out2));
  CHECK(j2["M"] == 3);
}

TEST_CASE("entropy subcommand reads pmf tables and fuzzes") {
  const fs::path pmf = g_dir / "copies.pmf";
  {
    std::ofstream out(pmf);
    out << "sizes 2 2 2\n"
           "0 0 0 0.5\n"
           "1 1 1 0.5\n";
  }
  REQUIRE(run("entropy --pmf-file " + pmf.string(), "entropy.log") == 0);
  const std::string log = slurp(g_dir / "entropy.log");
  CHECK(log.find("HOLDS") != std::string::npos);
  CHECK(log.find("chain: 3 1.5 1") != std::string::npos);

  REQUIRE(run("entropy --fuzz 200 --shape 2,3 --seed 4", "entropy-fuzz.log") == 0);
  CHECK(slurp(g_dir / "entropy-fuzz.log").find("200 pmfs checked, 0 violations") !=
        std::string::npos);
}

TEST_CASE("BIC_SEED is picked up from the environment") {
  const fs::path a = g_dir / "seed-a.csv", b = g_dir / "seed-b.csv";
  const std::string tail = " sweep --setups r0rl --M-list 2 --alpha-list 3/4 -o ";
  int rc1 = std::system(("BIC_SEED=77 " + g_cli + tail + a.string() + " > /dev/null 2>&1").c_str());
  int rc2 = std::system(("BIC_SEED=77 " + g_cli + tail + b.string() + " > /dev/null 2>&1").c_str());
  REQUIRE(WEXITSTATUS(rc1) == 0);
  REQUIRE(WEXITSTATUS(rc2) == 0);
  CHECK(slurp(a) == slurp(b));
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-bic-cli> [doctest args]\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "bic-cli-test";
  fs::create_directories(g_dir);

  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
