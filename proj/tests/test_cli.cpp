#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to /dev/null
Run yfl(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " YFL_PATH " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return std::string(YF_BINARY_DIR) + "/" + name; }

}  // namespace

TEST_CASE("join, bij, order, meet") {
  CHECK(yfl("join 111 12").out == "221\n");
  CHECK(yfl("join eps 2").out == "2\n");
  CHECK(yfl("bij --from 9").out == "21\n");
  CHECK(yfl("bij --to 1111").out == "8\n");
  CHECK(yfl("bij --to eps").out == "0\n");
  CHECK(yfl("order 12 212").out == "12 < 212\n");
  CHECK(yfl("order 11 2").out == "11 || 2\n");
  CHECK(yfl("order '\"\"' 1").out == "eps < 1\n");
  CHECK(yfl("meet 12 21 --max-rank 4").out == "2\n");
}

TEST_CASE("enum and auto") {
  CHECK(yfl("enum --max-rank 4 --rank 4").out == "22\n112\n121\n211\n1111\n");
  const auto all = yfl("enum --max-rank 3");
  CHECK(all.out == "eps\n1\n2\n11\n12\n21\n111\n");
  const auto a = yfl("auto --max-rank 5");
  CHECK(a.code == 0);
  CHECK(a.out.find("2 automorphism(s)") != std::string::npos);
  CHECK(a.out.find("identity moves 0") != std::string::npos);
  CHECK(a.out.find("\na moves") != std::string::npos);
}

TEST_CASE("eval") {
  CHECK(yfl("eval --universe 12 --name phi_plus --args 11111,11,111").out == "true\n");
  CHECK(yfl("eval --universe 12 --name phi_plus --args 11111,11,11").out == "false\n");
  CHECK(yfl("eval --universe 6 --name id_eps --args eps").out == "true\n");
  CHECK(yfl("eval --universe 6 --name id_1").out == "1\n");
  CHECK(yfl("eval --universe 6 --name id_eps --args ,").code == 2);
  const std::string defs = tmp("cli_defs.yfl");
  std::ofstream(defs) << "(def top2 (u) (and (geq u w\"2\") (not (geq u w\"11\"))))\n";
  CHECK(yfl("eval --universe 4 --defs " + defs + " --name top2").out == "2\n12\n112\n");
  CHECK(yfl("eval --universe 4 --defs " + defs + " --name top2 --strategy naive --args 12").out == "true\n");
}

TEST_CASE("synth-id and classify") {
  const auto s = yfl("synth-id 21 --check 4");
  CHECK(s.code == 0);
  CHECK(s.out.find("(def id_w21 (v) (forall w (iff (call r v w) (or (call id_2 w) (call id_11 w)))))") !=
        std::string::npos);
  CHECK(s.out.find("defines {21} in U_4: yes") != std::string::npos);
  CHECK(yfl("classify --name id_eps").out == "id_eps: Pi_1 (within Pi_1)\n");
  CHECK(yfl("classify --name phi_ones").out == "phi_ones: quantifier-free (within Pi_0)\n");
}

TEST_CASE("verify writes a report and is deterministic") {
  const std::string a = tmp("cli_report_a.json"), b = tmp("cli_report_b.json");
  const auto r1 = yfl("verify --entry phi_plus --report " + a);
  CHECK(r1.code == 0);
  const auto j = nlohmann::json::parse(slurp(a));
  CHECK(j["schema"] == 1);
  REQUIRE(j["entries"].size() == 2);  // phi_plus1 and phi_plus
  for (const auto& e : j["entries"]) CHECK(e["mismatches"].empty());
  CHECK(yfl("verify --entry phi_plus --workers 3 --report " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  // flagged entries do not fail the run
  CHECK(yfl("verify --entry phi_e1 --report " + a).code == 0);
}

TEST_CASE("verify exits 1 on an expect-pass mismatch") {
  // phi_len at U_8 cannot see the witnesses for 1^5 and 1^6
  const std::string a = tmp("cli_report_c.json");
  const auto r = yfl("verify --entry phi_len --universe 8 --tuple-rank 6 --report " + a);
  CHECK(r.code == 1);
  CHECK(r.out.find("fail") != std::string::npos);
}

TEST_CASE("usage and capacity errors exit 2") {
  CHECK(yfl("").code == 2);
  CHECK(yfl("frobnicate").code == 2);
  CHECK(yfl("join 13 2").code == 2);
  CHECK(yfl("enum --max-rank 40").code == 2);
  CHECK(yfl("bij").code == 2);
  CHECK(yfl("bij --to 1 --from 2").code == 2);
  CHECK(yfl("eval --name nope --args 1").code == 2);
  CHECK(yfl("eval --defs /nonexistent/file --name x").code == 2);
  CHECK(yfl("verify --entry zzz --report /tmp/x.json").code == 2);
  CHECK(yfl("verify --entry phi_o").code == 2);  // --report is required
  CHECK(yfl("eval --universe 9 --name phi_o", "YF_MEMORY_BUDGET=1000").code == 2);
  CHECK(yfl("enum", "YF_DEFAULT_RANK=abc").code == 2);
  CHECK(yfl("enum", "YF_DEFAULT_RANK=2").out == "eps\n1\n2\n11\n");
}

TEST_CASE("help names the constructs") {
  const auto h = yfl("--help");
  CHECK(h.code == 0);
  for (const char* sub : {"enum", "order", "join", "meet", "auto", "eval", "verify", "bij", "synth-id", "classify"})
    CHECK_MESSAGE(h.out.find(sub) != std::string::npos, sub);
  CHECK(yfl("join --help").out.find("Least upper bound") != std::string::npos);
  CHECK(yfl("bij --help").out.find("prime-exponent coding") != std::string::npos);
  CHECK(yfl("synth-id --help").out.find("id_u") != std::string::npos);
}
