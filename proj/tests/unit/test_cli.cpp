#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Output {
  int code = -1;
  std::string text;
};

Output run_cli(const std::string& args) {
  const std::string cmd = std::string(K3FOCK_CLI_PATH) + " " + args + " 2>/dev/null";
  Output out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (const std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.text.append(buf.data(), got);
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("verify --n 1 --suite diagonal").code == 0);
  CHECK(run_cli("verify --n 1 --suite ring --inject-fault flip-diagonal-divisor-sign").code == 1);
  CHECK(run_cli("verify --gram '0 1; 2 0'").code == 2);
  CHECK(run_cli("verify --suite nonsense").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("catalogue --bogus").code == 2);
}

TEST_CASE("cli json report") {
  const auto out = run_cli("verify --n 1 --suite diagonal --format json --no-timing");
  REQUIRE(out.code == 0);
  const auto json = nlohmann::json::parse(out.text);
  REQUIRE(json.is_array());
  REQUIRE_FALSE(json.empty());
  CHECK(json[0]["id"] == "diagonal.decomposition[n=0]");
  CHECK(json[0]["status"] == "pass");
  CHECK(json[0]["millis"] == 0);
  CHECK(run_cli("verify --n 1 --suite diagonal --format json --no-timing").text == out.text);
}

TEST_CASE("cli tables") {
  CHECK(run_cli("tables --n 1 --format json").text == "n,i,s,dim\n0,0,0,1\n1,0,0,1\n1,1,0,1\n1,2,0,1\n");
  const auto text = run_cli("tables --n 0");
  CHECK(text.code == 0);
  CHECK(text.text.find("dim") != std::string::npos);
}

TEST_CASE("cli catalogue") {
  const auto out = run_cli("catalogue");
  CHECK(out.code == 0);
  CHECK(out.text.rfind("# operators:", 0) == 0);
  CHECK(out.text.find("# checks:") != std::string::npos);
}
