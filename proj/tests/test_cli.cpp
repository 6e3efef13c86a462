#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "hindman/io.hpp"
#include "hindman/tree.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::string kData = HINDMAN_TEST_DATA;

std::string data(const std::string& name) { return kData + "/" + name; }

Run lab(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(HINDMAN_LAB_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hindman_cli_" + name)).string();
}

const std::string kInf5 = R"('{"variant":"INFINITE","k":5}')";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("props check exit codes") {
  CHECK(lab("props check --samples 2000 --prop " + data("hitset.json")).code == 0);
  CHECK(lab("props check --prop " + data("malformed.json")).code == 3);
  const Run big = lab("props check --samples 200 --prop " + data("infinite_k_gt_N.json"));
  CHECK(big.code == 1);
  CHECK(big.out.find("axiom 1 universe in P") != std::string::npos);
  CHECK(lab("props check --prop " + data("does_not_exist.json")).code == 3);
}

TEST_CASE("props check JSON is deterministic and honours the seed variable") {
  const std::string args = "props check --json --samples 500 --prop " + data("syndetic.json");
  const Run a = lab(args);
  const Run b = lab(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find(R"("seed":1)") != std::string::npos);
  const Run seeded = lab(args, "HINDMAN_LAB_SEED=77");
  CHECK(seeded.out.find(R"("seed":77)") != std::string::npos);
  CHECK(lab(args + " --seed 5", "HINDMAN_LAB_SEED=77").out.find(R"("seed":5)") != std::string::npos);
  CHECK(lab(args, "HINDMAN_LAB_SEED=abc").code == 3);
}

TEST_CASE("fip check") {
  CHECK(lab("fip check --family " + data("evens32.json") + " --prop " + kInf5).code == 0);
  CHECK(lab("fip check --family " + data("disjoint32.json") + " --prop " + kInf5).code == 1);
  CHECK(lab("fip check --family " + data("block32.json") + " --prop " + kInf5 + " --extend " + data("block_a32.json"))
            .code == 2);
  const Run ext = lab("fip check --family " + data("evens32.json") + " --prop " + kInf5 + " --extend " +
                      data("block_a32.json"));
  CHECK(ext.code == 0);
  CHECK(hindman::family_from_json(ext.out).size() == 2);
  CHECK(lab("fip check --family " + data("evens32.json") + " --prop " + data("hitset.json")).code == 3);
}

TEST_CASE("semigroup close") {
  const Run ok = lab("semigroup close --family " + data("evens32.json") + " --prop " + kInf5);
  CHECK(ok.code == 0);
  CHECK(hindman::family_from_json(ok.out) == hindman::family_from_json(hindman::read_file(data("evens32.json"))));
  CHECK(lab("semigroup close --family " + data("block32.json") + " --prop " + kInf5).code == 2);
}

TEST_CASE("tree search and verify") {
  const std::string cert = temp("cert.json");
  CHECK(lab("tree search --coloring " + data("mono16.json") + " --prop " + data("infinite2.json") + " --out " + cert)
            .code == 0);
  CHECK(lab("tree verify --cert " + cert + " --coloring " + data("mono16.json") + " --prop " + data("infinite2.json"))
            .code == 0);

  SUBCASE("tampered certificate") {
    auto c = hindman::certificate_from_json(hindman::read_file(cert));
    c.color = 1;
    const std::string bad = temp("tampered.json");
    hindman::write_file(bad, hindman::to_json(c));
    CHECK(lab("tree verify --cert " + bad + " --coloring " + data("mono16.json") + " --prop " +
              data("infinite2.json"))
              .code == 1);
  }
  SUBCASE("digest mismatch") {
    CHECK(lab("tree verify --cert " + cert + " --coloring " + data("refuted5.json") + " --prop " +
              data("infinite2.json"))
              .code == 3);
  }
  SUBCASE("refuted instance") {
    CHECK(lab("tree search --coloring " + data("refuted5.json") + " --prop " + data("infinite1.json")).code == 1);
    CHECK(lab("oracle tree --coloring " + data("refuted5.json") + " --prop " + data("infinite1.json")).code == 1);
  }
  SUBCASE("guided breakdown") {
    CHECK(lab("tree search --mode guided --coloring " + data("half64.json") + " --prop " + data("infinite2.json"))
              .code == 2);
  }
  SUBCASE("bad mode") {
    CHECK(lab("tree search --mode greedy --coloring " + data("mono16.json") + " --prop " + data("infinite2.json"))
              .code == 3);
  }
}

TEST_CASE("tree search output is byte-identical across runs") {
  for (const std::string mode : {"exact", "guided"}) {
    const std::string args =
        "tree search --mode " + mode + " --coloring " + data("mono16.json") + " --prop " + data("infinite2.json");
    const Run a = lab(args);
    const Run b = lab(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("threshold") {
  const Run r = lab("threshold --colors 2 --depth 2 --prop " + data("infinite1.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("threshold 10\n") != std::string::npos);
  CHECK(lab("threshold --colors 2 --depth 2 --jobs 3 --prop " + data("infinite1.json")).out == r.out);
  const Run one = lab("threshold --colors 1 --depth 1 --prop " + data("infinite1.json"));
  CHECK(one.code == 0);
  CHECK(one.out.find("threshold 2\n") != std::string::npos);
  const Run short_range = lab("threshold --colors 2 --depth 2 --max-n 9 --prop " + data("infinite1.json"));
  CHECK(short_range.code == 1);
  CHECK(short_range.out.find("NotFound") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
  CHECK(lab("oracle pfip --family " + data("evens32.json") + " --prop " + kInf5).code == 0);
  CHECK(lab("oracle pfip --family " + data("disjoint32.json") + " --prop " + kInf5).code == 1);
  const Run listed = lab("oracle colorings --n 3 --colors 2 --prune --list");
  CHECK(listed.code == 0);
  CHECK(listed.out == "{\"colors\":[0,0],\"n\":3,\"r\":2}\n{\"colors\":[0,1],\"n\":3,\"r\":2}\ncolorings 2\n");
  CHECK(lab("oracle colorings --n 40 --colors 3").code == 3);
  CHECK(lab("oracle tree --coloring " + data("half64.json") + " --prop " + data("infinite1.json")).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(lab("").code == 3);
  CHECK(lab("tree").code == 3);
  CHECK(lab("tree search --coloring " + data("mono16.json")).code == 3);
  CHECK(lab("--help").code == 0);
}

}
