#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

const std::string kCli = CMSYZ_CLI_PATH;
const std::string kData = CMSYZ_DATA_DIR;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_CASE("validate reports structure and the dimer verdict") {
    RunResult r = run("validate " + data("q5w.qp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("vertices: 5") != std::string::npos);
    CHECK(r.out.find("dimer tree: yes") != std::string::npos);
    RunResult n = run("validate " + data("q6.qp"));
    CHECK(n.status == 0);
    CHECK(n.out.find("dimer tree: no") != std::string::npos);
    CHECK(n.out.find("dual_tree") != std::string::npos);
}

TEST_CASE("exit codes: domain errors return one, parse failures included") {
    CHECK(run("cmtype " + data("q6.qp")).status == 1);           // not a dimer tree
    CHECK(run("validate " + data("missing.qp")).status == 1);    // no such file
    CHECK(run("module " + data("q5.qp")).status == 1);           // --vertex required
    CHECK(run("module --vertex 9 " + data("q5.qp")).status == 1);
    CHECK(run("bogus-subcommand").status == 1);
    CHECK(run("reduce --vertex 5 --char 3 " + data("q5.qp")).status == 1);
}

TEST_CASE("cmtype prints the type line exactly and deterministically") {
    RunResult r = run("cmtype " + data("q6_no1.qp"));
    CHECK(r.status == 0);
    CHECK(r.out == "A_2 (total weight 8)\n");
    CHECK(run("cmtype " + data("q6_no1.qp")).out == r.out);
    CHECK(run("cmtype " + data("q7.qp")).out == "A_3 (total weight 10)\n");
    CHECK(run("cmtype " + data("q12.qp")).out == "A_7 (total weight 18)\n");
}

TEST_CASE("dims and basis") {
    RunResult r = run("dims " + data("q5.qp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("dim = 15") != std::string::npos);
    RunResult b = run("basis --vertex 5 " + data("q5.qp"));
    CHECK(b.status == 0);
    CHECK(b.out.find("e_5") != std::string::npos);
    CHECK(b.out.find("t") != std::string::npos);
}

TEST_CASE("equiv verdicts in both directions") {
    RunResult no = run("equiv --vertex 5 " + data("q5.qp"));
    CHECK(no.status == 0);
    CHECK(no.out.find("NO (witness: summand ") != std::string::npos);
    CHECK(no.out.find("S(5)") != std::string::npos);
    CHECK(no.out.find("non-projective") != std::string::npos);
    RunResult yes = run("equiv --vertex 1 " + data("q6.qp"));
    CHECK(yes.status == 0);
    CHECK(yes.out.find("YES (J = P(1)^2)") != std::string::npos);
}

TEST_CASE("reduce emits schema-tagged json") {
    RunResult r = run("reduce --vertex 5 --json " + data("q5.qp"));
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["vertex"] == "5");
    CHECK(j["dim_a"] == 15);
    CHECK(j["dim_j"] == 5);
    CHECK(j["dim_b"] == 10);
    CHECK(j["preserves"] == false);
    CHECK(j["quotient_relations"].size() == 5);
    CHECK(run("reduce --vertex 5 --json " + data("q5.qp")).out == r.out);
}

TEST_CASE("zigzag lines for a named arrow") {
    RunResult r = run("zigzag --arrow a73 " + data("q7.qp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("a73 a36 a65") != std::string::npos);
    CHECK(r.out.find("weight 1") != std::string::npos);
    RunResult all = run("zigzag " + data("q5w.qp"));
    CHECK(all.status == 0);
    CHECK(all.out.find("t b e g") != std::string::npos);
    CHECK(run("zigzag --arrow b " + data("q5w.qp")).status == 1);  // interior
}

TEST_CASE("minimal summarises the criterion per vertex") {
    RunResult r = run("minimal " + data("q7.qp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("CM-minimal: no") != std::string::npos);
    CHECK(r.out.find("7: yes") != std::string::npos);
    RunResult m = run("minimal " + data("q5w.qp"));
    CHECK(m.out.find("CM-minimal: yes") != std::string::npos);
}

TEST_CASE("skew and transfer-check on the glued input") {
    RunResult s = run("skew " + data("q12.qp"));
    CHECK(s.status == 0);
    CHECK(s.out.find("D_5") != std::string::npos);
    CHECK(s.out.find("n41+") != std::string::npos);
    RunResult t = run("transfer-check " + data("q12.qp"));
    CHECK(t.status == 0);
    CHECK(t.out.find("agreement: yes") != std::string::npos);
    CHECK(run("transfer-check " + data("q7.qp")).status == 1);  // no involution
}

TEST_CASE("functor-f names images of radicals and dim vectors") {
    RunResult r = run("functor-f --vertex 5 --module rad:4 " + data("q5.qp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("F(rad P(4)) = S(1)") != std::string::npos);
    RunResult d = run("functor-f --vertex 5 --module 1,1,0,0,1 " + data("q5.qp"));
    CHECK(d.status == 0);
    CHECK(d.out.find("= S(1)") != std::string::npos);
    CHECK(run("functor-f --vertex 5 --module 9,9,9,9,9 " + data("q5.qp")).status == 1);
}

TEST_CASE("enumerate lists the catalog") {
    RunResult r = run("enumerate " + data("q5.qp"));
    CHECK(r.status == 0);
    CHECK(r.out.find("13 entries") != std::string::npos);
    CHECK(r.out.find("8 non-projective") != std::string::npos);
    CHECK(r.out.find("M[1,1,0,0,1]") != std::string::npos);
    RunResult j = run("enumerate --json " + data("q5.qp"));
    CHECK(j.status == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["entries"] == 13);
    CHECK(doc["catalog"].size() == 13);
    CHECK(run("enumerate --json " + data("q5.qp")).out == j.out);
}

TEST_CASE("dot output goes to the requested file") {
    std::string path = "cli_test_tmp.dot";
    RunResult r = run("validate --dot " + path + " " + data("q5w.qp"));
    CHECK(r.status == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    size_t n = fread(buf, 1, sizeof(buf), f);
    fclose(f);
    std::string dot(buf, n);
    CHECK(dot.find("digraph") != std::string::npos);
    std::remove(path.c_str());
}
