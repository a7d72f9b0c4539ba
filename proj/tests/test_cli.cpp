#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "json.hpp"
#include "tourn/io.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(TOURN_BIN) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expect_code = 0) {
    CliRun r = run("--format json " + args);
    EXPECT_EQ(r.code, expect_code) << args << "\n" << r.out;
    return json::parse(r.out);
}

std::string data(const std::string& name) { return std::string(TOURN_DATA) + "/" + name; }

}  // namespace

TEST(Cli, TTransitiveTriangle) {
    json d = run_json("extremal t-transitive --n 3 --h-file " + data("c3.trn"));
    EXPECT_EQ(d["status"], "ok");
    EXPECT_EQ(d["result"]["value"], 2);
    EXPECT_EQ(d["result"]["complete"], true);
    CliRun h = run("extremal t-transitive --n 3 --h-file " + data("c3.trn"));
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("value: 2"), std::string::npos);
}

TEST(Cli, ConstructCirculant) {
    json d = run_json("construct circulant --n 5");
    EXPECT_EQ(d["result"]["text"], tourn::read_file(data("c5.trn")));
}

TEST(Cli, DocumentShape) {
    json d = run_json("classify --h-file " + data("c5.trn"));
    std::vector<std::string> keys;
    for (auto& [k, v] : d.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"status", "quantity", "config", "result", "witness"}));
    EXPECT_EQ(d["config"]["command"], "classify");
    EXPECT_TRUE(d["config"]["caps"].contains("chromatic"));
    EXPECT_EQ(d["result"]["n"], 5);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_json("extremal t-transitive --n 2 --h C3", 1)["status"], "domain_error");
    EXPECT_EQ(run_json("classify --h-file " + data("missing.trn"), 1)["status"], "domain_error");
    EXPECT_EQ(run_json("classify --h \"3;011;001;100\"", 1)["status"], "domain_error");
    EXPECT_EQ(run_json("extremal ex --n 9 --m M1", 2)["status"], "cap_exceeded");
    json inc = run_json("--max-nodes 3 extremal ex --n 6 --m M1", 2);
    EXPECT_EQ(inc["status"], "incomplete");
    EXPECT_LE(inc["result"]["value"].get<long long>(), inc["result"]["upper"].get<long long>());
    EXPECT_EQ(run("no-such-command").code, 1);
}

TEST(Cli, CapOverride) {
    EXPECT_EQ(run_json("--cap ex_n=3 extremal ex --n 4 --m M1", 2)["status"], "cap_exceeded");
    json d = run_json("--cap ex_n=8 extremal ex --n 3 --m M1");
    EXPECT_EQ(d["config"]["caps"]["ex_n"], 8);
}

TEST(Cli, SeedRequired) {
    EXPECT_EQ(run_json("sample orientation --f C5", 1)["status"], "domain_error");
    EXPECT_EQ(run("--seed 1 sample orientation --f C5").code, 0);
}

TEST(Cli, ReproducibleOutput) {
    const std::string args = "--seed 11 sample estimate --f \"4;0111;1011;1101;1110\" --event transitive --trials 300";
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    CliRun c = run("--format json " + args), d = run("--format json " + args);
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, EmitWitnessReparses) {
    const std::string path = testing::TempDir() + "tourn_witness.txt";
    EXPECT_EQ(run("--emit-witness " + path + " --seed 2 sample orientation --f \"4;0111;1011;1101;1110\"").code, 0);
    tourn::Tournament t = tourn::parse_tournament(tourn::read_file(path));
    EXPECT_EQ(t.size(), 4);
}

TEST(Cli, ContainmentCount) {
    json d = run_json("contain subdigraph --g-file " + data("c5.trn") + " --h C3 --count");
    EXPECT_EQ(d["result"]["contains"], true);
    EXPECT_EQ(d["result"]["copies"], 15);
}

TEST(Cli, VerifySubset) {
    CliRun r = run("verify --suite 3,11 --seed 7");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS  3"), std::string::npos);
    EXPECT_NE(r.out.find("PASS 11"), std::string::npos);
    EXPECT_EQ(run("verify --suite 3").code, 1);
}
